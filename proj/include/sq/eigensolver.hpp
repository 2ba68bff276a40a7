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
#include <utility>
#include <vector>

#include "sq/hamiltonian.hpp"

namespace sq {

inline constexpr double kDegeneracyTol = 1e-8;

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;  // ascending
  bool has_vectors = false;
  bool complex = false;
  Eigen::MatrixXd vectors;      // orthonormal columns (real case)
  Eigen::MatrixXcd vectors_c;   // complex case
  double degeneracy_tol = kDegeneracyTol;

  std::vector<std::pair<double, int>> groups() const;
};

/// Dense diagonalization of the whole spectrum. Dimensions above the
/// dense policy limit are rejected unless allow_large is set.
SpectrumResult full_spectrum(const HamiltonianMatrix& m,
                             bool want_vectors = false,
                             bool allow_large = false);

struct LanczosOptions {
  int max_subspace = 96;          // Krylov steps per restart
  double residual_tol_rel = 1e-10;  // scaled by max(1, |H|)
  int matvec_cap_factor = 10;     // cap = factor * dimension
};

/// k lowest eigenpairs via restarted Lanczos with full
/// reorthogonalization and deflation against converged vectors, so
/// degenerate multiplets are resolved. Real matrices only.
SpectrumResult lowest_k(const HamiltonianMatrix& m, int k,
                        const LanczosOptions& opts = {});

/// Greedy grouping of a sorted eigenvalue list: a value joins the
/// current group when it is within tol of the group's running mean.
std::vector<std::pair<double, int>> degeneracy_groups(
    const std::vector<double>& eigenvalues, double tol = kDegeneracyTol);

/// Deterministic gauge for degenerate eigenvector blocks: each block is
/// re-spanned by projections of coordinate axes in ascending index
/// order, with the leading nonzero amplitude made positive.
void fix_degenerate_gauge(const Eigen::VectorXd& eigenvalues,
                          Eigen::MatrixXd& vectors, double tol = kDegeneracyTol);

}  // namespace sq
