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
#include <vector>

#include "doctest.h"
#include "sq/basis.hpp"
#include "sq/eigensolver.hpp"
#include "sq/hamiltonian.hpp"

using namespace sq;

TEST_CASE("basis dimensions and indexing") {
  CHECK(Basis::full_space(6).dim() == 64);
  // binomial(n, n_up) sector sizes
  CHECK(Basis::sector(6, 0).dim() == 20);
  CHECK(Basis::sector(12, 0).dim() == 924);
  CHECK(Basis::sector(5, 1).dim() == 10);
  CHECK(Basis::sector(4, 4).dim() == 1);

  const auto b = Basis::sector(6, 0);
  for (std::size_t i = 0; i < b.dim(); ++i)
    CHECK(b.index(b.state(i)) == i);
  CHECK_THROWS_AS((void)b.index(0ULL), Error);  // wrong S_z
}

TEST_CASE("two-spin exchange has singlet at -3J/4 and triplet at J/4") {
  for (double j : {1.0, 2.5, -0.7}) {
    CouplingGraph g(2);
    g.add_edge(0, 1, j);
    const auto spec =
        full_spectrum(heisenberg_matrix(g, Basis::full_space(2)));
    std::vector<double> ev(spec.eigenvalues.begin(), spec.eigenvalues.end());
    std::sort(ev.begin(), ev.end());
    const double singlet = -0.75 * j, triplet = 0.25 * j;
    const double lo = std::min(singlet, triplet);
    const double hi = std::max(singlet, triplet);
    CHECK(ev[0] == doctest::Approx(lo).epsilon(1e-12));
    for (int k = 1; k < 4; ++k)
      CHECK(ev[k] == doctest::Approx(j > 0 ? hi : (k == 3 ? hi : lo))
                         .epsilon(1e-12));
  }
}

TEST_CASE("equilateral triangle spectrum from total-spin algebra") {
  // H = J sum_pairs S_i.S_j = J/2 (S_tot^2 - 9/4); S_tot in {1/2, 3/2}
  const auto spec = full_spectrum(
      heisenberg_matrix(CouplingGraph::complete(3, 1.0), Basis::full_space(3)));
  for (int i = 0; i < 4; ++i)
    CHECK(spec.eigenvalues(i) == doctest::Approx(-0.75).epsilon(1e-12));
  for (int i = 4; i < 8; ++i)
    CHECK(spec.eigenvalues(i) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("exchange application matches the assembled matrix") {
  const auto basis = Basis::sector(6, 0);
  CouplingGraph g(6);
  g.add_edge(1, 4, 1.0);
  const auto h = heisenberg_matrix(g, basis, Storage::Dense);
  std::vector<double> x(basis.dim(), 0.0), y(basis.dim());
  x[3] = 0.6;
  x[17] = -0.8;
  apply_exchange(1, 4, basis, x.data(), y.data());
  Eigen::Map<const Eigen::VectorXd> xv(x.data(), x.size());
  const Eigen::VectorXd ref = h.dense_real() * xv;
  for (std::size_t i = 0; i < basis.dim(); ++i)
    CHECK(y[i] == doctest::Approx(ref(i)).epsilon(1e-13));
}

TEST_CASE("zeeman term: longitudinal is diagonal, transverse needs full space") {
  FieldConfig f;
  f.fields = {{0.0, 0.0, 0.3}, {0.0, 0.0, -0.1}};
  const auto hz = zeeman_matrix(f, Basis::full_space(2));
  // |dd>, |ud>, |du>, |uu> with bit k = site k, set = up
  CHECK(hz.dense_real()(0, 0) == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(hz.dense_real()(3, 3) == doctest::Approx(0.1).epsilon(1e-12));

  FieldConfig ft;
  ft.fields = {{0.2, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(zeeman_matrix(ft, Basis::sector(2, 0)), Error);
  CHECK(zeeman_matrix(ft, Basis::full_space(2)).is_complex());
}

TEST_CASE("serial and OpenMP sparse matvec agree bit for bit") {
  CouplingGraph chain(12);
  for (int i = 0; i + 1 < 12; ++i) chain.add_edge(i, i + 1, 1.0 + 0.1 * i);
  const auto h =
      heisenberg_matrix(chain, Basis::sector(12, 0), Storage::Sparse);
  const auto& m = h.sparse();
  std::vector<double> x(m.dim), ys(m.dim), yp(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    x[i] = std::sin(0.7 * static_cast<double>(i) + 0.1);
  m.multiply_serial(x.data(), ys.data());
  m.multiply(x.data(), yp.data());
  for (std::size_t i = 0; i < m.dim; ++i) CHECK(ys[i] == yp[i]);
}

TEST_CASE("total spin squared on hand-built states") {
  const auto basis = Basis::full_space(2);
  Eigen::VectorXd up2 = Eigen::VectorXd::Zero(4);
  up2(3) = 1.0;  // |uu>: S = 1, S^2 = 2
  CHECK(total_spin_squared_expectation(up2, basis) ==
        doctest::Approx(2.0).epsilon(1e-12));
  Eigen::VectorXd singlet = Eigen::VectorXd::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  CHECK(total_spin_squared_expectation(singlet, basis) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("coupling graph edge bookkeeping") {
  CouplingGraph g(4);
  g.add_edge(2, 0, 1.5);
  CHECK(g.has_edge(EdgeId(0, 2)));
  CHECK(g.coupling(EdgeId(2, 0)) == 1.5);
  g.set_coupling(EdgeId(0, 2), -0.5);
  CHECK(g.coupling(EdgeId(0, 2)) == -0.5);
  CHECK_THROWS_AS(g.add_edge(0, 2, 1.0), Error);   // duplicate
  CHECK_THROWS_AS(g.add_edge(1, 1, 1.0), Error);   // self loop
  CHECK_THROWS_AS((void)g.coupling(EdgeId(1, 3)), Error);
  g.scale(2.0);
  CHECK(g.coupling(EdgeId(0, 2)) == -1.0);
}
