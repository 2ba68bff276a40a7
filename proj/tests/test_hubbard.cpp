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
#include "sq/hubbard.hpp"

using namespace sq;

TEST_CASE("hopping map and validation") {
  CHECK(hopping_from_exchange(1.0, 4.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hopping_from_exchange(0.5, 8.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(hopping_from_exchange(-1.0, 4.0), Error);
  CHECK_THROWS_AS(hopping_from_exchange(1.0, 0.0), Error);
}

TEST_CASE("two-site half-filled spectrum in closed form") {
  // exact eigenvalues: (U - R)/2, 0, U, (U + R)/2 with R = sqrt(16t^2 + U^2)
  const double t = 0.7, u = 5.0;
  HubbardModel model;
  model.n_sites = 2;
  model.u = u;
  model.n_up = model.n_down = 1;
  model.hoppings = {{EdgeId(0, 1), t}};
  const auto spec = half_filled_spectrum(model, 4);
  const double r = std::sqrt(16.0 * t * t + u * u);
  CHECK(spec.eigenvalues(0) == doctest::Approx(0.5 * (u - r)).epsilon(1e-12));
  CHECK(spec.eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(spec.eigenvalues(2) == doctest::Approx(u).epsilon(1e-12));
  CHECK(spec.eigenvalues(3) == doctest::Approx(0.5 * (u + r)).epsilon(1e-12));
}

TEST_CASE("single-particle sector reproduces tight-binding bands") {
  // independent oracle for the hopping signs: one electron on a
  // 3-site ring has energies 2t cos(2 pi k / 3) = {2t, -t, -t}
  const double t = 0.9;
  HubbardModel model;
  model.n_sites = 3;
  model.u = 5.0;  // irrelevant with a single electron
  model.n_up = 1;
  model.n_down = 0;
  model.hoppings = {{EdgeId(0, 1), t}, {EdgeId(1, 2), t}, {EdgeId(0, 2), t}};
  const auto spec = half_filled_spectrum(model, 3);
  CHECK(spec.eigenvalues(0) == doctest::Approx(-t).epsilon(1e-12));
  CHECK(spec.eigenvalues(1) == doctest::Approx(-t).epsilon(1e-12));
  CHECK(spec.eigenvalues(2) == doctest::Approx(2.0 * t).epsilon(1e-12));
}

TEST_CASE("mapped layout approaches the spin model as U grows") {
  const auto layout = standard_layout(1.0);
  const double e_small = heisenberg_limit_error(layout, 20.0);
  const double e_mid = heisenberg_limit_error(layout, 100.0);
  const double e_large = heisenberg_limit_error(layout, 400.0);
  CHECK(e_small > e_mid);
  CHECK(e_mid > e_large);
  CHECK(e_large > 0.0);
}

TEST_CASE("hopping retuning restores the degeneracy at finite U") {
  const auto layout = standard_layout(1.0);
  const double u = 100.0;
  const EdgeId chain = layout.chain_edges.front();
  const double naive = hopping_from_exchange(layout.graph.coupling(chain), u);
  const double tuned =
      tune_hoppings(layout, u, chain, {0.5 * naive, 1.5 * naive});
  HubbardModel model = hubbard_from_layout(layout, u);
  for (auto& hop : model.hoppings)
    if (hop.id == chain) hop.coupling = tuned;
  const auto spec = half_filled_spectrum(model, 2);
  CHECK(spec.eigenvalues(1) - spec.eigenvalues(0) < 1e-9);
  CHECK(tuned != doctest::Approx(naive).epsilon(1e-4));  // a real correction
}

TEST_CASE("tuning reports failure on a hopeless bracket") {
  const auto layout = standard_layout(1.0);
  const EdgeId chain = layout.chain_edges.front();
  CHECK_THROWS_AS(tune_hoppings(layout, 100.0, chain, {0.01, 0.02}), Error);
  CHECK_THROWS_AS(tune_hoppings(layout, 100.0, chain, {2.0, 1.0}), Error);
}

TEST_CASE("layout mapping requires an even site count") {
  HubbardModel ok = hubbard_from_layout(standard_layout(1.0), 50.0);
  CHECK(ok.n_sites == 6);
  CHECK(ok.n_up == 3);
  CHECK(ok.hoppings.size() == 8);
}
