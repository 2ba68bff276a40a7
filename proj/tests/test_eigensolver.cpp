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

#include <random>
#include <vector>

#include "doctest.h"
#include "sq/eigensolver.hpp"

using namespace sq;

namespace {

CouplingGraph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.2, 2.0);
  CouplingGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((rng() & 3u) != 0u) g.add_edge(i, j, unif(rng));
  return g;
}

}  // namespace

TEST_CASE("four-site ring ground energy is exactly -2J") {
  CouplingGraph ring(4);
  ring.add_edge(0, 1, 1.0);
  ring.add_edge(1, 2, 1.0);
  ring.add_edge(2, 3, 1.0);
  ring.add_edge(3, 0, 1.0);
  const auto spec = full_spectrum(heisenberg_matrix(ring, Basis::full_space(4)));
  CHECK(spec.eigenvalues(0) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("lanczos matches dense diagonalization on random graphs") {
  for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
    const auto g = random_graph(10, seed);
    const auto basis = Basis::sector(10, 0);
    const auto dense = heisenberg_matrix(g, basis, Storage::Dense);
    const auto sparse = heisenberg_matrix(g, basis, Storage::Sparse);
    const auto full = full_spectrum(dense);
    const auto low = lowest_k(sparse, 6);
    for (int i = 0; i < 6; ++i)
      CHECK(low.eigenvalues(i) ==
            doctest::Approx(full.eigenvalues(i)).epsilon(1e-9));
  }
}

TEST_CASE("lanczos resolves a fourfold degenerate multiplet") {
  // triangle ground space: two S = 1/2 doublets at the same energy
  const auto h = heisenberg_matrix(CouplingGraph::complete(3, 1.0),
                                   Basis::full_space(3), Storage::Sparse);
  const auto low = lowest_k(h, 4);
  for (int i = 0; i < 4; ++i)
    CHECK(low.eigenvalues(i) == doctest::Approx(-0.75).epsilon(1e-10));
  // eigenvectors stay orthonormal inside the degenerate block
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(low.vectors.col(i).dot(low.vectors.col(j)) ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-9));
}

TEST_CASE("eigenvector residuals from lanczos") {
  const auto g = random_graph(9, 21);
  const auto h = heisenberg_matrix(g, Basis::sector(9, 1), Storage::Sparse);
  const auto low = lowest_k(h, 3);
  std::vector<double> y(h.dim());
  for (int i = 0; i < 3; ++i) {
    h.apply(low.vectors.col(i).data(), y.data());
    Eigen::Map<Eigen::VectorXd> yv(y.data(), y.size());
    const double resid =
        (yv - low.eigenvalues(i) * low.vectors.col(i)).norm();
    CHECK(resid < 1e-8 * std::max(1.0, h.norm_estimate()));
  }
}

TEST_CASE("degeneracy grouping") {
  const auto groups =
      degeneracy_groups({-1.0, -1.0 + 1e-12, -0.5, 0.25, 0.25, 0.25}, 1e-8);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].second == 2);
  CHECK(groups[1].second == 1);
  CHECK(groups[2].second == 3);
}

TEST_CASE("degenerate gauge fixing is idempotent and deterministic") {
  const auto h = heisenberg_matrix(CouplingGraph::complete(4, 1.0),
                                   Basis::full_space(4), Storage::Dense);
  auto a = full_spectrum(h, true);
  auto b = full_spectrum(h, true);
  CHECK((a.vectors - b.vectors).cwiseAbs().maxCoeff() == 0.0);
  Eigen::MatrixXd before = a.vectors;
  fix_degenerate_gauge(a.eigenvalues, a.vectors);
  CHECK((a.vectors - before).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dense policy limit is enforced by full_spectrum") {
  CouplingGraph chain(13);
  for (int i = 0; i + 1 < 13; ++i) chain.add_edge(i, i + 1, 1.0);
  const auto h = heisenberg_matrix(chain, Basis::full_space(13));
  CHECK(h.is_sparse());  // Auto storage switches over above the limit
  CHECK_THROWS_AS(full_spectrum(h), Error);
}
