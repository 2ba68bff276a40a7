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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "sq/basis.hpp"
#include "sq/coupling_graph.hpp"

namespace sq {

/// Real symmetric matrix in compressed-row storage. The OpenMP matvec
/// parallelizes over rows, so it is bit-identical to the serial one.
struct CsrMatrix {
  std::size_t dim = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::size_t> col;
  std::vector<double> val;

  void multiply_serial(const double* x, double* y) const;
  void multiply(const double* x, double* y) const;  // OpenMP over rows
};

enum class Storage { Dense, Sparse, Auto };

/// Dimension above which Auto storage switches to sparse.
inline constexpr std::size_t kDensePolicyLimit = 4096;

class HamiltonianMatrix {
 public:
  std::size_t dim() const { return dim_; }
  const Basis& basis() const { return basis_; }
  bool is_complex() const { return complex_; }
  bool is_sparse() const { return sparse_storage_; }

  const Eigen::MatrixXd& dense_real() const;
  const Eigen::MatrixXcd& dense_complex() const;
  const CsrMatrix& sparse() const;

  /// y = M x for real matrices (dense or sparse).
  void apply(const double* x, double* y) const;

  /// Infinity-norm estimate (exact row-sum norm).
  double norm_estimate() const;

  friend HamiltonianMatrix heisenberg_matrix(const CouplingGraph&,
                                             const Basis&, Storage);
  friend HamiltonianMatrix zeeman_matrix(const FieldConfig&, const Basis&);
  friend HamiltonianMatrix add(const HamiltonianMatrix&,
                               const HamiltonianMatrix&);

 private:
  std::size_t dim_ = 0;
  Basis basis_ = Basis::full_space(1);
  bool complex_ = false;
  bool sparse_storage_ = false;
  Eigen::MatrixXd dense_r_;
  Eigen::MatrixXcd dense_c_;
  CsrMatrix csr_;
};

/// Matrix of H = sum_edges J_ij S^i . S^j in the given basis (S = sigma/2).
HamiltonianMatrix heisenberg_matrix(const CouplingGraph& graph,
                                    const Basis& basis,
                                    Storage storage = Storage::Auto);

/// Matrix of sum_i h_i . S^i. Transverse components require a full-space
/// basis (they break S_z conservation) and make the matrix complex.
HamiltonianMatrix zeeman_matrix(const FieldConfig& fields, const Basis& basis);

/// Dense sum of two Hamiltonians on the same basis.
HamiltonianMatrix add(const HamiltonianMatrix& a, const HamiltonianMatrix& b);

/// y = (S^i . S^j) x in the given basis; the workhorse for projected
/// exchange generators.
void apply_exchange(int site_i, int site_j, const Basis& basis,
                    const double* x, double* y);

/// <state| S_tot^2 |state> for a normalized real vector.
double total_spin_squared_expectation(const Eigen::VectorXd& state,
                                      const Basis& basis);

}  // namespace sq
