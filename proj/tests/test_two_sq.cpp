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
#include "sq/two_sq.hpp"

using namespace sq;

namespace {

TwoSqSystem make_system(const std::string& scheme) {
  const auto layout = standard_layout(1.17672);
  return couple_sqs(layout, layout, default_scheme_edges(scheme), scheme);
}

}  // namespace

TEST_CASE("combined graph wiring") {
  const auto sys = make_system("horizontal");
  CHECK(sys.n_sites() == 12);
  const auto g = sys.combined_graph(0.37);
  CHECK(g.n_sites() == 12);
  // both single-SQ edge sets present, B side offset by 6
  CHECK(g.coupling(EdgeId(0, 1)) == 1.0);
  CHECK(g.coupling(EdgeId(6, 7)) == 1.0);
  for (const auto& e : sys.inter_edges)
    CHECK(g.coupling(EdgeId(e.site_a, e.site_b + 6)) == 0.37);
}

TEST_CASE("scheme lookup") {
  CHECK(!default_scheme_edges("horizontal").empty());
  CHECK(!default_scheme_edges("vertical").empty());
  CHECK_THROWS_AS(default_scheme_edges("diagonal"), Error);
}

TEST_CASE("horizontal scheme keeps the off-diagonal pair degenerate") {
  const auto sweep = sweep_inter_coupling(make_system("horizontal"), {0.3});
  REQUIRE(sweep.points.size() == 1);
  const auto& p = sweep.points.front();
  CHECK(std::abs(p.lam01 - p.lam10) < 1e-10);
  CHECK(p.leakage_gap > 0.0);
  CHECK(p.min_overlap >= 0.5);
  // interaction present: the diagonal combination is nonzero
  CHECK(std::abs(p.lam00 + p.lam11 - p.lam01 - p.lam10) > 1e-8);
}

TEST_CASE("vertical scheme splits all four logical levels") {
  const auto sweep = sweep_inter_coupling(make_system("vertical"), {0.3});
  const auto& p = sweep.points.front();
  const double lams[4] = {p.lam00, p.lam01, p.lam10, p.lam11};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      CHECK(std::abs(lams[i] - lams[j]) > 1e-8);
  CHECK(p.min_overlap >= 0.5);
}

TEST_CASE("uncoupled limit: all four logical energies coincide") {
  const auto sweep = sweep_inter_coupling(make_system("horizontal"), {1e-9});
  const auto& p = sweep.points.front();
  CHECK(std::abs(p.lam00 - p.lam11) < 1e-6);
  CHECK(std::abs(p.lam01 - p.lam10) < 1e-6);
  CHECK(p.min_overlap > 0.99);
}

TEST_CASE("conditional-phase pulse hits the target gate") {
  const auto pulse = cphase_pulse(make_system("vertical"), 0.5);
  CHECK(pulse.fidelity >= 1.0 - 1e-6);
  CHECK(pulse.duration == doctest::Approx(M_PI / std::abs(pulse.omega)));
  CHECK(pulse.omega != 0.0);
}

TEST_CASE("pulse synthesis rejects a non-entangling spectrum") {
  // zero coupling: omega = 0, no conditional phase accumulates
  CHECK_THROWS_AS(cphase_pulse(make_system("horizontal"), 0.0), Error);
}
