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

#include <cmath>

#include "doctest.h"
#include "sq/sq_design.hpp"

using namespace sq;

TEST_CASE("layout construction and validation") {
  const auto layout = rhombus_layout(2, 1.0, {0.6});
  CHECK(layout.n_sites() == 6);
  CHECK(layout.graph.coupling(EdgeId(0, 1)) == 1.0);
  CHECK(layout.graph.coupling(layout.short_diagonal) == 1.0);
  CHECK(layout.graph.coupling(layout.z_edge) == 0.6);
  CHECK(layout.graph.coupling(layout.attachment[0]) == 1.0);
  CHECK(layout.graph.coupling(layout.attachment[1]) == 1.0);
  CHECK(layout.graph.edges().size() == 8);

  CHECK_THROWS_AS(rhombus_layout(3, 1.0, {0.5, 0.5}), Error);  // odd chain
  CHECK_THROWS_AS(rhombus_layout(2, 1.0, {}), Error);          // missing J
}

TEST_CASE("closed form produces a twofold singlet degeneracy") {
  for (double j16 : {0.9, 1.0, 1.5, 2.3, 3.0}) {
    const auto layout = standard_layout(j16);
    CHECK(ground_splitting(layout) < 1e-10);
    CHECK(energy_gap(layout) > 0.0);
  }
}

TEST_CASE("solver reproduces the closed form") {
  for (double j16 : {1.0, 1.7}) {
    auto layout = rhombus_layout(2, j16, {1.0});
    const double j56 =
        solve_mediator_coupling(layout, layout.chain_edges.front(), {0.05, 8.0});
    CHECK(j56 == doctest::Approx(j56_closed_form(j16)).epsilon(1e-8));
    CHECK(layout.graph.coupling(layout.chain_edges.front()) == j56);
  }
}

TEST_CASE("solver input validation") {
  auto layout = rhombus_layout(2, 1.0, {1.0});
  const EdgeId edge = layout.chain_edges.front();
  CHECK_THROWS_AS(solve_mediator_coupling(layout, edge, {-1.0, 2.0}), Error);
  CHECK_THROWS_AS(solve_mediator_coupling(layout, edge, {2.0, 1.0}), Error);
  // far too small attachment: no crossing anywhere in the bracket
  auto weak = rhombus_layout(2, 0.3, {1.0});
  CHECK_THROWS_AS(
      solve_mediator_coupling(weak, weak.chain_edges.front(), {0.05, 8.0}),
      Error);
}

TEST_CASE("energy gap requires the degeneracy") {
  auto layout = rhombus_layout(2, 1.0, {0.9});  // detuned chain coupling
  CHECK_THROWS_AS((void)energy_gap(layout), Error);
}

TEST_CASE("correct_coupling responds linearly to small perturbations") {
  // independent oracle: near the solved point the corrected coupling is
  // an analytic function of the perturbation, so halving the
  // perturbation must halve the shift (Richardson check)
  const double base = j56_closed_form(1.0);
  SolveOptions opts;
  opts.singlet_tol = 1e-6;
  const auto layout = standard_layout(1.0);
  const EdgeId diag = layout.short_diagonal;   // report edge 2-4
  const EdgeId chain = layout.z_edge;          // report edge 5-6
  const double d1 =
      correct_coupling(layout, diag, 1.0 + 2e-3, chain, opts) - base;
  const double d2 =
      correct_coupling(layout, diag, 1.0 + 1e-3, chain, opts) - base;
  CHECK(d1 / d2 == doctest::Approx(2.0).epsilon(2e-2));
  // the slope itself, frozen from a degenerate-perturbation-theory
  // evaluation of the two crossing levels
  CHECK(d2 / 1e-3 == doctest::Approx(1.72).epsilon(0.05));
}

TEST_CASE("correct_coupling rejects the free edge as perturbed edge") {
  const auto layout = standard_layout(1.0);
  CHECK_THROWS_AS(
      correct_coupling(layout, layout.z_edge, 1.1, layout.z_edge), Error);
}

TEST_CASE("four-mediator chain is solvable") {
  auto layout = rhombus_layout(4, 1.0, {0.7, 0.5, 0.7});
  const EdgeId middle = layout.chain_edges[1];
  solve_mediator_coupling(layout, middle, {0.05, 12.0});
  CHECK(ground_splitting(layout) < 1e-9);
  CHECK(energy_gap(layout) > 0.0);
}
