// Copyright 2026 The sqkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sq/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sq {

void CsrMatrix::multiply_serial(const double* x, double* y) const {
  for (std::size_t r = 0; r < dim; ++r) {
    double acc = 0.0;
    for (std::size_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p)
      acc += val[p] * x[col[p]];
    y[r] = acc;
  }
}

void CsrMatrix::multiply(const double* x, double* y) const {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    double acc = 0.0;
    for (std::size_t p = row_ptr[r]; p < row_ptr[r + 1]; ++p)
      acc += val[p] * x[col[p]];
    y[r] = acc;
  }
}

const Eigen::MatrixXd& HamiltonianMatrix::dense_real() const {
  if (sparse_storage_ || complex_)
    throw Error(ErrorCode::Capacity, "matrix is not dense real");
  return dense_r_;
}

const Eigen::MatrixXcd& HamiltonianMatrix::dense_complex() const {
  if (!complex_)
    throw Error(ErrorCode::Capacity, "matrix is not complex");
  return dense_c_;
}

const CsrMatrix& HamiltonianMatrix::sparse() const {
  if (!sparse_storage_)
    throw Error(ErrorCode::Capacity, "matrix is not sparse");
  return csr_;
}

void HamiltonianMatrix::apply(const double* x, double* y) const {
  if (complex_)
    throw Error(ErrorCode::Capacity, "real matvec on complex matrix");
  if (sparse_storage_) {
    csr_.multiply(x, y);
  } else {
    Eigen::Map<const Eigen::VectorXd> xv(x, static_cast<Eigen::Index>(dim_));
    Eigen::Map<Eigen::VectorXd> yv(y, static_cast<Eigen::Index>(dim_));
    yv.noalias() = dense_r_ * xv;
  }
}

double HamiltonianMatrix::norm_estimate() const {
  if (complex_) return dense_c_.cwiseAbs().rowwise().sum().maxCoeff();
  if (!sparse_storage_) return dense_r_.cwiseAbs().rowwise().sum().maxCoeff();
  double best = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    double acc = 0.0;
    for (std::size_t p = csr_.row_ptr[r]; p < csr_.row_ptr[r + 1]; ++p)
      acc += std::abs(csr_.val[p]);
    best = std::max(best, acc);
  }
  return best;
}

namespace {

void check_edges(const CouplingGraph& graph, const Basis& basis) {
  if (graph.n_sites() != basis.n_sites())
    throw Error(ErrorCode::IndexOutOfRange,
                "graph has " + std::to_string(graph.n_sites()) +
                    " sites, basis has " + std::to_string(basis.n_sites()));
}

}  // namespace

HamiltonianMatrix heisenberg_matrix(const CouplingGraph& graph,
                                    const Basis& basis, Storage storage) {
  check_edges(graph, basis);
  const std::size_t dim = basis.dim();
  bool use_sparse = storage == Storage::Sparse ||
                    (storage == Storage::Auto && dim > kDensePolicyLimit);

  HamiltonianMatrix m;
  m.dim_ = dim;
  m.basis_ = basis;
  m.complex_ = false;
  m.sparse_storage_ = use_sparse;

  if (!use_sparse) {
    m.dense_r_ = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const std::uint64_t s = basis.state(r);
      for (const auto& e : graph.edges()) {
        const int bi = (s >> e.id.a) & 1, bj = (s >> e.id.b) & 1;
        if (bi == bj) {
          m.dense_r_(r, r) += e.coupling / 4.0;
        } else {
          m.dense_r_(r, r) -= e.coupling / 4.0;
          const std::uint64_t f =
              s ^ ((std::uint64_t{1} << e.id.a) | (std::uint64_t{1} << e.id.b));
          m.dense_r_(r, basis.index(f)) += e.coupling / 2.0;
        }
      }
    }
    return m;
  }

  // Sparse path: one pass per row, diagonal first, off-diagonals sorted.
  m.csr_.dim = dim;
  m.csr_.row_ptr.assign(dim + 1, 0);
  std::vector<std::pair<std::size_t, double>> row;
  for (std::size_t r = 0; r < dim; ++r) {
    row.clear();
    double diag = 0.0;
    const std::uint64_t s = basis.state(r);
    for (const auto& e : graph.edges()) {
      const int bi = (s >> e.id.a) & 1, bj = (s >> e.id.b) & 1;
      if (bi == bj) {
        diag += e.coupling / 4.0;
      } else {
        diag -= e.coupling / 4.0;
        const std::uint64_t f =
            s ^ ((std::uint64_t{1} << e.id.a) | (std::uint64_t{1} << e.id.b));
        row.emplace_back(basis.index(f), e.coupling / 2.0);
      }
    }
    // distinct edges always flip to distinct states, so columns are unique
    std::sort(row.begin(), row.end());
    std::size_t count = 0;
    bool diag_done = false;
    auto push = [&](std::size_t c, double v) {
      m.csr_.col.push_back(c);
      m.csr_.val.push_back(v);
      ++count;
    };
    for (const auto& [c, v] : row) {
      if (!diag_done && c > r) {
        push(r, diag);
        diag_done = true;
      }
      push(c, v);
    }
    if (!diag_done) push(r, diag);
    m.csr_.row_ptr[r + 1] = m.csr_.row_ptr[r] + count;
  }
  return m;
}

HamiltonianMatrix zeeman_matrix(const FieldConfig& fields, const Basis& basis) {
  if (fields.n_sites() != basis.n_sites())
    throw Error(ErrorCode::IndexOutOfRange,
                "field config has " + std::to_string(fields.n_sites()) +
                    " sites, basis has " + std::to_string(basis.n_sites()));
  const bool transverse = fields.has_transverse();
  if (transverse && !basis.is_full())
    throw Error(ErrorCode::SectorViolation,
                "transverse field components require the full-space basis");

  const std::size_t dim = basis.dim();
  HamiltonianMatrix m;
  m.dim_ = dim;
  m.basis_ = basis;
  m.sparse_storage_ = false;
  m.complex_ = transverse;

  if (!transverse) {
    m.dense_r_ = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const std::uint64_t s = basis.state(r);
      double diag = 0.0;
      for (int i = 0; i < basis.n_sites(); ++i)
        diag += fields.fields[i][2] * (((s >> i) & 1) ? 0.5 : -0.5);
      m.dense_r_(r, r) = diag;
    }
    return m;
  }

  m.dense_c_ = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::uint64_t s = basis.state(r);
    for (int i = 0; i < basis.n_sites(); ++i) {
      const auto& h = fields.fields[i];
      const bool up = (s >> i) & 1;
      m.dense_c_(r, r) += h[2] * (up ? 0.5 : -0.5);
      const std::uint64_t f = s ^ (std::uint64_t{1} << i);
      // <f| hx Sx + hy Sy |s>: flipping down->up picks -i hy/2,
      // up->down picks +i hy/2.
      const std::complex<double> amp =
          up ? std::complex<double>(h[0] / 2.0, h[1] / 2.0)
             : std::complex<double>(h[0] / 2.0, -h[1] / 2.0);
      m.dense_c_(basis.index(f), r) += amp;
    }
  }
  return m;
}

HamiltonianMatrix add(const HamiltonianMatrix& a, const HamiltonianMatrix& b) {
  if (a.dim_ != b.dim_)
    throw Error(ErrorCode::Domain, "dimension mismatch in matrix sum");
  if (a.sparse_storage_ || b.sparse_storage_)
    throw Error(ErrorCode::Capacity, "matrix sum is dense-only");
  HamiltonianMatrix m;
  m.dim_ = a.dim_;
  m.basis_ = a.basis_;
  m.sparse_storage_ = false;
  m.complex_ = a.complex_ || b.complex_;
  auto as_complex = [](const HamiltonianMatrix& x) -> Eigen::MatrixXcd {
    return x.complex_ ? x.dense_c_
                      : x.dense_r_.cast<std::complex<double>>().eval();
  };
  if (m.complex_)
    m.dense_c_ = as_complex(a) + as_complex(b);
  else
    m.dense_r_ = a.dense_r_ + b.dense_r_;
  return m;
}

void apply_exchange(int site_i, int site_j, const Basis& basis,
                    const double* x, double* y) {
  const std::size_t dim = basis.dim();
  const std::uint64_t mask =
      (std::uint64_t{1} << site_i) | (std::uint64_t{1} << site_j);
  for (std::size_t r = 0; r < dim; ++r) y[r] = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    const std::uint64_t s = basis.state(r);
    const int bi = (s >> site_i) & 1, bj = (s >> site_j) & 1;
    if (bi == bj) {
      y[r] += 0.25 * x[r];
    } else {
      y[r] -= 0.25 * x[r];
      y[basis.index(s ^ mask)] += 0.5 * x[r];
    }
  }
}

double total_spin_squared_expectation(const Eigen::VectorXd& state,
                                      const Basis& basis) {
  const std::size_t dim = basis.dim();
  if (static_cast<std::size_t>(state.size()) != dim)
    throw Error(ErrorCode::Domain, "state size does not match basis");
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-10)
    throw Error(ErrorCode::Normalization,
                "state norm deviates from 1 by " + std::to_string(norm - 1.0));
  const int n = basis.n_sites();
  Eigen::VectorXd acc = Eigen::VectorXd::Constant(dim, 0.0);
  Eigen::VectorXd tmp(dim);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      apply_exchange(i, j, basis, state.data(), tmp.data());
      acc += tmp;
    }
  // S_tot^2 = 3N/4 + 2 sum_{i<j} S^i . S^j
  return 0.75 * n + 2.0 * state.dot(acc);
}

}  // namespace sq
