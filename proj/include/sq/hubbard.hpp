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

#include <utility>
#include <vector>

#include "sq/eigensolver.hpp"
#include "sq/sq_design.hpp"

namespace sq {

/// One-band Hubbard model H = sum t_ij c+_is c_js + U sum n_iu n_id
/// in a fixed (N_up, N_down) occupation sector.
struct HubbardModel {
  int n_sites = 0;
  std::vector<Edge> hoppings;  // t_ij on graph edges
  double u = 0.0;
  int n_up = 0, n_down = 0;
};

/// Strong-coupling map t = sqrt(U J / 4).
double hopping_from_exchange(double j, double u);

/// Hubbard model for a spin layout: every exchange coupling mapped
/// through hopping_from_exchange, at half filling in the S_z = 0 sector.
HubbardModel hubbard_from_layout(const SqLayout& layout, double u);

/// Lowest k eigenvalues (with vectors) of the sector Hamiltonian.
SpectrumResult half_filled_spectrum(const HubbardModel& model, int k);

/// Ground-manifold splitting E1 - E0 of the mapped Hubbard model, in
/// units of the layout's Heisenberg protection gap.
double heisenberg_limit_error(const SqLayout& layout, double u);

/// Minimizes the Hubbard ground splitting over one hopping (default
/// callers pass the mediator edge); returns the tuned value.
double tune_hoppings(const SqLayout& layout, double u, EdgeId free_hopping,
                     std::pair<double, double> bracket);

}  // namespace sq
