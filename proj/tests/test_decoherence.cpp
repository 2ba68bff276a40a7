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
#include <numbers>

#include "doctest.h"
#include "sq/decoherence.hpp"

using namespace sq;

TEST_CASE("encoding labels round-trip") {
  for (const char* name : {"single", "triangle3", "sq4", "sq6"}) {
    const auto enc = Encoding::from_label(name);
    CHECK(std::string(enc.label()) == name);
    CHECK(enc.graph(12.0).n_sites() == enc.n_sites());
  }
  CHECK_THROWS_AS(Encoding::from_label("pentagon"), Error);
  CHECK(Encoding::from_label("triangle3").manifold_dim() == 4);
  CHECK(Encoding::from_label("sq6").manifold_dim() == 2);
}

TEST_CASE("field samples have the requested magnitude and are seeded") {
  const auto a = sample_nuclear_fields(6, 0.06, 42);
  const auto b = sample_nuclear_fields(6, 0.06, 42);
  const auto c = sample_nuclear_fields(6, 0.06, 43);
  REQUIRE(a.n_sites() == 6);
  double diff = 0.0;
  for (int i = 0; i < 6; ++i) {
    CHECK(std::hypot(a.fields[i][0], a.fields[i][1], a.fields[i][2]) ==
          doctest::Approx(0.06).epsilon(1e-12));
    for (int k = 0; k < 3; ++k) {
      CHECK(a.fields[i][k] == b.fields[i][k]);
      diff += std::abs(a.fields[i][k] - c.fields[i][k]);
    }
  }
  CHECK(diff > 1e-3);
  CHECK_THROWS_AS(sample_nuclear_fields(2, -0.1, 1), Error);
}

TEST_CASE("sample seeds separate encodings and samples but not J") {
  CHECK(derive_sample_seed(7, EncodingKind::Sq4, 0) !=
        derive_sample_seed(7, EncodingKind::Sq6, 0));
  CHECK(derive_sample_seed(7, EncodingKind::Sq4, 0) !=
        derive_sample_seed(7, EncodingKind::Sq4, 1));
  CHECK(derive_sample_seed(7, EncodingKind::Sq4, 3) ==
        derive_sample_seed(7, EncodingKind::Sq4, 3));
}

TEST_CASE("bare spin splits by exactly the field magnitude") {
  // independent oracle: a spin-1/2 in field h has levels +-|h|/2
  const auto enc = Encoding::from_label("single");
  const auto fields = sample_nuclear_fields(1, 0.06, 5);
  CHECK(logical_splitting(enc, 10.0, fields) ==
        doctest::Approx(0.06).epsilon(1e-12));
}

TEST_CASE("uniform field leaves the singlet pair untouched") {
  // S_tot = 0 states carry no magnetic moment: first-order immunity is
  // exact for a uniform field, which commutes with the exchange terms
  const auto enc = Encoding::from_label("sq4");
  FieldConfig uniform;
  uniform.fields.assign(4, {0.01, 0.02, 0.015});
  CHECK(logical_splitting(enc, 12.0, uniform) < 1e-12);
}

TEST_CASE("uniform field splits the triangle doublets by its magnitude") {
  const auto enc = Encoding::from_label("triangle3");
  FieldConfig uniform;
  uniform.fields.assign(3, {0.0, 0.0, 0.05});
  // manifold spread: m = -1/2 to +1/2 across the two S = 1/2 doublets
  CHECK(logical_splitting(enc, 12.0, uniform) ==
        doctest::Approx(0.05).epsilon(1e-10));
}

TEST_CASE("splitting is second order for the protected encodings") {
  // Richardson oracle: halving the random field should quarter the
  // splitting for singlet-pair encodings but only halve it for the
  // unprotected ones
  for (const char* name : {"sq4", "sq6"}) {
    const auto enc = Encoding::from_label(name);
    const auto f1 = sample_nuclear_fields(enc.n_sites(), 0.02, 9);
    auto f2 = f1;
    for (auto& h : f2.fields)
      for (auto& v : h) v *= 0.5;
    const double r =
        logical_splitting(enc, 12.0, f1) / logical_splitting(enc, 12.0, f2);
    CHECK(r == doctest::Approx(4.0).epsilon(0.05));
  }
  const auto enc = Encoding::from_label("triangle3");
  const auto f1 = sample_nuclear_fields(3, 0.02, 9);
  auto f2 = f1;
  for (auto& h : f2.fields)
    for (auto& v : h) v *= 0.5;
  const double r =
      logical_splitting(enc, 12.0, f1) / logical_splitting(enc, 12.0, f2);
  CHECK(r == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("precession time conversion") {
  CHECK(precession_time(kHbarUevNs / (2.0 * std::numbers::pi)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(precession_time(0.0), Error);
  CHECK_THROWS_AS(precession_time(-1.0), Error);
}

TEST_CASE("sweep statistics are deterministic and ordered") {
  const std::vector<Encoding> encs = {Encoding::from_label("single"),
                                      Encoding::from_label("sq4")};
  const auto a = precession_sweep(encs, {12.0, 24.0}, 0.06, 16, 77);
  const auto b = precession_sweep(encs, {12.0, 24.0}, 0.06, 16, 77);
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].dt_median == b[i].dt_median);
    CHECK(a[i].dt_mean == b[i].dt_mean);
    CHECK(a[i].excluded == b[i].excluded);
    CHECK(a[i].dt_q1 <= a[i].dt_median);
    CHECK(a[i].dt_median <= a[i].dt_q3);
    CHECK(a[i].n_samples == 16);
  }
  // common random numbers: the bare spin ignores J entirely
  CHECK(a[0].dt_median == a[1].dt_median);
}
