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
#include <vector>

#include "sq/sq_design.hpp"

namespace sq {

/// Two-dimensional logical subspace of a twofold-degenerate singlet
/// ground state. The basis is fixed by diagonalizing the z-edge
/// exchange generator; |0_L> is its lower eigenstate.
struct LogicalSubspace {
  CouplingGraph graph;
  EdgeId z_edge;
  Eigen::VectorXd zero;  // |0_L> in the full 2^n space
  Eigen::VectorXd one;   // |1_L>
  double gap = 0.0;      // E2 - E0

  int n_sites() const { return graph.n_sites(); }
};

/// Exchange operator of one edge projected onto the logical basis:
/// a 2x2 real symmetric matrix with its Pauli decomposition.
struct EffectiveGenerator {
  Eigen::Matrix2d matrix;
  double c0 = 0.0, cx = 0.0, cy = 0.0, cz = 0.0;
  EdgeId edge;
};

LogicalSubspace ground_subspace(const CouplingGraph& graph, EdgeId z_edge,
                                double degeneracy_tol = kDegeneracyTol);
LogicalSubspace ground_subspace(const SqLayout& layout);

EffectiveGenerator effective_generator(const LogicalSubspace& subspace,
                                       EdgeId edge);

/// Angle in degrees between the Bloch axes (traceless parts) of two
/// generators, in [0, 180].
double bloch_axis_angle(const EffectiveGenerator& g1,
                        const EffectiveGenerator& g2);

}  // namespace sq
