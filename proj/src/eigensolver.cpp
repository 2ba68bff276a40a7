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

#include "sq/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace sq {

std::vector<std::pair<double, int>> SpectrumResult::groups() const {
  std::vector<double> e(eigenvalues.data(),
                        eigenvalues.data() + eigenvalues.size());
  return degeneracy_groups(e, degeneracy_tol);
}

std::vector<std::pair<double, int>> degeneracy_groups(
    const std::vector<double>& eigenvalues, double tol) {
  for (std::size_t i = 1; i < eigenvalues.size(); ++i)
    if (eigenvalues[i] < eigenvalues[i - 1])
      throw Error(ErrorCode::Ordering, "eigenvalues not sorted ascending");
  std::vector<std::pair<double, int>> out;
  for (double e : eigenvalues) {
    if (!out.empty() &&
        std::abs(e - out.back().first) <= tol) {
      auto& [mean, count] = out.back();
      mean = (mean * count + e) / (count + 1);
      ++count;
    } else {
      out.emplace_back(e, 1);
    }
  }
  return out;
}

void fix_degenerate_gauge(const Eigen::VectorXd& eigenvalues,
                          Eigen::MatrixXd& vectors, double tol) {
  const Eigen::Index dim = vectors.rows();
  Eigen::Index lo = 0;
  while (lo < eigenvalues.size()) {
    Eigen::Index hi = lo + 1;
    while (hi < eigenvalues.size() &&
           eigenvalues(hi) - eigenvalues(hi - 1) <= tol)
      ++hi;
    const Eigen::Index m = hi - lo;
    if (m > 1) {
      // Re-span the block by projections of coordinate axes taken in
      // ascending index order (lowest basis-index support first).
      Eigen::MatrixXd block = vectors.middleCols(lo, m);
      Eigen::MatrixXd coeff(m, m);
      Eigen::Index chosen = 0;
      for (Eigen::Index r = 0; r < dim && chosen < m; ++r) {
        Eigen::VectorXd c = block.row(r).transpose();
        for (Eigen::Index q = 0; q < chosen; ++q)
          c -= coeff.col(q).dot(c) * coeff.col(q);
        const double nrm = c.norm();
        if (nrm > 1e-8) coeff.col(chosen++) = c / nrm;
      }
      if (chosen == m) vectors.middleCols(lo, m) = block * coeff;
    }
    for (Eigen::Index j = lo; j < hi; ++j) {
      for (Eigen::Index r = 0; r < dim; ++r) {
        if (std::abs(vectors(r, j)) > 1e-12) {
          if (vectors(r, j) < 0) vectors.col(j) = -vectors.col(j);
          break;
        }
      }
    }
    lo = hi;
  }
}

SpectrumResult full_spectrum(const HamiltonianMatrix& m, bool want_vectors,
                             bool allow_large) {
  if (m.dim() > kDensePolicyLimit && !allow_large)
    throw Error(ErrorCode::Capacity,
                "dimension " + std::to_string(m.dim()) +
                    " exceeds the dense policy limit");
  SpectrumResult res;
  res.complex = m.is_complex();
  const auto opt = want_vectors ? Eigen::ComputeEigenvectors
                                : Eigen::EigenvaluesOnly;
  if (m.is_complex()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.dense_complex(), opt);
    res.eigenvalues = es.eigenvalues();
    if (want_vectors) {
      res.has_vectors = true;
      res.vectors_c = es.eigenvectors();
    }
    return res;
  }
  Eigen::MatrixXd dense;
  if (m.is_sparse()) {
    const auto& csr = m.sparse();
    dense = Eigen::MatrixXd::Zero(m.dim(), m.dim());
    for (std::size_t r = 0; r < csr.dim; ++r)
      for (std::size_t p = csr.row_ptr[r]; p < csr.row_ptr[r + 1]; ++p)
        dense(r, csr.col[p]) = csr.val[p];
  } else {
    dense = m.dense_real();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, opt);
  res.eigenvalues = es.eigenvalues();
  if (want_vectors) {
    res.has_vectors = true;
    res.vectors = es.eigenvectors();
    fix_degenerate_gauge(res.eigenvalues, res.vectors, res.degeneracy_tol);
  }
  return res;
}

namespace {

// Orthogonalize v against the columns of Q (twice, classical GS).
void orthogonalize(const Eigen::MatrixXd& q, Eigen::Index cols,
                   Eigen::VectorXd& v) {
  if (cols == 0) return;
  for (int pass = 0; pass < 2; ++pass) {
    Eigen::VectorXd proj = q.leftCols(cols).transpose() * v;
    v.noalias() -= q.leftCols(cols) * proj;
  }
}

}  // namespace

SpectrumResult lowest_k(const HamiltonianMatrix& m, int k,
                        const LanczosOptions& opts) {
  if (m.is_complex())
    throw Error(ErrorCode::Capacity, "lowest_k supports real matrices only");
  const Eigen::Index n = static_cast<Eigen::Index>(m.dim());
  if (k < 1 || k >= n)
    throw Error(ErrorCode::Domain, "k must satisfy 1 <= k < dimension");

  const double scale = std::max(1.0, m.norm_estimate());
  const double tol = opts.residual_tol_rel * scale;
  const long budget =
      std::max<long>(20000, static_cast<long>(opts.matvec_cap_factor) * n);
  long matvecs = 0;

  Eigen::MatrixXd conv(n, k);  // deflation set
  Eigen::VectorXd values(k);
  int found = 0;
  double best_residual = std::numeric_limits<double>::infinity();

  const Eigen::Index msub =
      std::min<Eigen::Index>(n, static_cast<Eigen::Index>(opts.max_subspace));
  Eigen::MatrixXd q(n, msub + 1);
  Eigen::VectorXd alpha(msub), beta(msub);

  std::mt19937_64 rng(0x5d2e1f7aULL);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);

  while (found < k) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = unif(rng);
    orthogonalize(conv, found, v);
    v.normalize();

    bool accepted = false;
    while (!accepted) {
      if (matvecs > budget)
        throw Error(ErrorCode::Convergence,
                    "Lanczos exceeded the matrix-vector budget; best residual " +
                        std::to_string(best_residual));
      q.col(0) = v;
      Eigen::Index steps = 0;
      bool exhausted = false;
      for (Eigen::Index i = 0; i < msub; ++i) {
        Eigen::VectorXd w(n);
        m.apply(q.col(i).data(), w.data());
        ++matvecs;
        alpha(i) = q.col(i).dot(w);
        w.noalias() -= alpha(i) * q.col(i);
        if (i > 0) w.noalias() -= beta(i - 1) * q.col(i - 1);
        orthogonalize(q, i + 1, w);
        orthogonalize(conv, found, w);
        beta(i) = w.norm();
        steps = i + 1;
        if (beta(i) < 1e-13 * scale) {
          exhausted = true;
          break;
        }
        q.col(i + 1) = w / beta(i);
      }

      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(steps, steps);
      for (Eigen::Index i = 0; i < steps; ++i) {
        t(i, i) = alpha(i);
        if (i + 1 < steps) t(i, i + 1) = t(i + 1, i) = beta(i);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
      const double theta = es.eigenvalues()(0);
      Eigen::VectorXd ritz = q.leftCols(steps) * es.eigenvectors().col(0);
      orthogonalize(conv, found, ritz);
      ritz.normalize();

      Eigen::VectorXd hr(n);
      m.apply(ritz.data(), hr.data());
      ++matvecs;
      const double residual = (hr - theta * ritz).norm();
      best_residual = std::min(best_residual, residual);
      if (residual < tol || exhausted) {
        conv.col(found) = ritz;
        values(found) = theta;
        ++found;
        accepted = true;
      } else {
        v = ritz;
      }
    }
  }

  // Deflation finds eigenvalues in ascending order, but sort defensively.
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values(a) < values(b); });

  SpectrumResult res;
  res.eigenvalues.resize(k);
  res.vectors.resize(n, k);
  res.has_vectors = true;
  for (int i = 0; i < k; ++i) {
    res.eigenvalues(i) = values(order[i]);
    res.vectors.col(i) = conv.col(order[i]);
  }
  fix_degenerate_gauge(res.eigenvalues, res.vectors, res.degeneracy_tol);
  return res;
}

}  // namespace sq
