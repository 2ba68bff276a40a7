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

#include <array>
#include <utility>
#include <vector>

#include "sq/coupling_graph.hpp"
#include "sq/eigensolver.hpp"

namespace sq {

// Supercoherent-qubit geometry: a rhombus of four spins (internal
// sites 0..3, report labels 1..4) with all rhombus edges and the short
// diagonal at coupling 1, plus an even mediator chain bridging sites 0
// and 2 (labels 1 and 3). Mediators are sites 4.. internally; the
// chain path runs 0 - (last mediator) - ... - (first mediator) - 2, so
// for two mediators the labeled 1-6-5-3 path maps to 0-5-4-2.
struct SqLayout {
  CouplingGraph graph;
  int chain_len = 0;                    // number of mediator sites
  EdgeId short_diagonal{1, 3};          // report edge 2-4
  std::array<EdgeId, 2> attachment{};   // report edges 1-6 and 3-5
  std::vector<EdgeId> chain_edges;      // from the site-0 end inward
  EdgeId z_edge{4, 5};                  // logical-Z convention edge
  double j_attach = 0.0;

  int n_sites() const { return graph.n_sites(); }
};

SqLayout rhombus_layout(int chain_len, double j_attach,
                        const std::vector<double>& j_chain);

/// Mediator coupling giving the degenerate singlet ground state of the
/// two-mediator layout, as a closed form in the attachment coupling.
double j56_closed_form(double j16);

/// Two-mediator layout at the given attachment coupling with the chain
/// coupling from the closed form.
SqLayout standard_layout(double j16);

struct SolveOptions {
  double splitting_tol = 1e-9;
  double singlet_tol = 1e-8;   // relax to 1e-6 for perturbed layouts
  int grid_points = 200;
  double golden_tol = 1e-12;   // absolute bracket width at termination
};

/// Ground splitting E1 - E0 of the layout's full spectrum.
double ground_splitting(const SqLayout& layout);

/// Finds the coupling on free_edge minimizing the ground splitting,
/// verifies the twofold singlet degeneracy, and writes the solution
/// back into the layout.
double solve_mediator_coupling(SqLayout& layout, EdgeId free_edge,
                               std::pair<double, double> bracket,
                               const SolveOptions& opts = {});

/// Protection gap E2 - E0; requires a twofold-degenerate ground state.
double energy_gap(const SqLayout& layout, double degeneracy_tol = kDegeneracyTol);

/// Sets perturbed_edge to perturbed_value, then re-solves free_edge.
double correct_coupling(SqLayout layout, EdgeId perturbed_edge,
                        double perturbed_value, EdgeId free_edge,
                        const SolveOptions& opts = {});

/// Smallest feasible attachment coupling for the given chain length,
/// located by bisection on solver success to 1e-3.
double min_attachment(int chain_len, std::pair<double, double> search_range);

}  // namespace sq
