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

#include "sq/hubbard.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace sq {

double hopping_from_exchange(double j, double u) {
  if (j < 0.0)
    throw Error(ErrorCode::Domain,
                "ferromagnetic exchange has no positive hopping map");
  if (!(u > 0.0))
    throw Error(ErrorCode::Domain, "repulsion U must be positive");
  return std::sqrt(u * j / 4.0);
}

HubbardModel hubbard_from_layout(const SqLayout& layout, double u) {
  HubbardModel model;
  model.n_sites = layout.n_sites();
  model.u = u;
  model.n_up = model.n_down = model.n_sites / 2;
  if (model.n_sites % 2 != 0)
    throw Error(ErrorCode::Domain, "half filling needs an even site count");
  for (const auto& e : layout.graph.edges())
    model.hoppings.push_back({e.id, hopping_from_exchange(e.coupling, u)});
  return model;
}

namespace {

std::vector<std::uint32_t> occupation_masks(int n_sites, int n_occ) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << n_sites); ++m)
    if (std::popcount(m) == n_occ) masks.push_back(m);
  return masks;
}

// sign of c+_i c_j acting on mask (j occupied, i empty)
int hop_sign(std::uint32_t mask, int i, int j) {
  int cnt = std::popcount(mask & ((1u << j) - 1u));
  const std::uint32_t after = mask ^ (1u << j);
  cnt += std::popcount(after & ((1u << i) - 1u));
  return (cnt & 1) ? -1 : 1;
}

Eigen::MatrixXd build_hubbard(const HubbardModel& model) {
  const auto up = occupation_masks(model.n_sites, model.n_up);
  const auto down = occupation_masks(model.n_sites, model.n_down);
  const std::size_t nu = up.size(), nd = down.size();
  const std::size_t dim = nu * nd;
  if (dim > kDensePolicyLimit)
    throw Error(ErrorCode::Capacity,
                "Hubbard sector dimension " + std::to_string(dim) +
                    " exceeds the dense limit");

  auto index_of = [](const std::vector<std::uint32_t>& v, std::uint32_t m) {
    return static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), m) - v.begin());
  };

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t iu = 0; iu < nu; ++iu) {
    for (std::size_t id = 0; id < nd; ++id) {
      const std::size_t row = iu * nd + id;
      h(row, row) += model.u * std::popcount(up[iu] & down[id]);
      for (const auto& hop : model.hoppings) {
        const int sites[2][2] = {{hop.id.a, hop.id.b}, {hop.id.b, hop.id.a}};
        for (const auto& [to, from] : sites) {
          // spin up
          if (((up[iu] >> from) & 1u) && !((up[iu] >> to) & 1u)) {
            const std::uint32_t nm = up[iu] ^ ((1u << from) | (1u << to));
            h(index_of(up, nm) * nd + id, row) +=
                hop.coupling * hop_sign(up[iu], to, from);
          }
          // spin down
          if (((down[id] >> from) & 1u) && !((down[id] >> to) & 1u)) {
            const std::uint32_t nm = down[id] ^ ((1u << from) | (1u << to));
            h(iu * nd + index_of(down, nm), row) +=
                hop.coupling * hop_sign(down[id], to, from);
          }
        }
      }
    }
  }
  return h;
}

double hubbard_splitting(const HubbardModel& model) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_hubbard(model),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1) - es.eigenvalues()(0);
}

}  // namespace

SpectrumResult half_filled_spectrum(const HubbardModel& model, int k) {
  if (model.n_up + model.n_down > 2 * model.n_sites)
    throw Error(ErrorCode::Capacity, "electron count exceeds 2 * n_sites");
  const Eigen::MatrixXd h = build_hubbard(model);
  if (k < 1 || k > h.rows())
    throw Error(ErrorCode::Domain, "invalid eigenvalue count");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  SpectrumResult res;
  res.eigenvalues = es.eigenvalues().head(k);
  res.has_vectors = true;
  res.vectors = es.eigenvectors().leftCols(k);
  fix_degenerate_gauge(res.eigenvalues, res.vectors, res.degeneracy_tol);
  return res;
}

double heisenberg_limit_error(const SqLayout& layout, double u) {
  const double gap = energy_gap(layout);
  return hubbard_splitting(hubbard_from_layout(layout, u)) / gap;
}

double tune_hoppings(const SqLayout& layout, double u, EdgeId free_hopping,
                     std::pair<double, double> bracket) {
  auto [lo, hi] = bracket;
  if (!(lo > 0.0) || !(hi > lo))
    throw Error(ErrorCode::Bracket, "bracket must satisfy 0 < lo < hi");
  HubbardModel model = hubbard_from_layout(layout, u);
  auto set_t = [&](double t) {
    for (auto& hop : model.hoppings)
      if (hop.id == free_hopping) hop.coupling = t;
  };
  auto f = [&](double t) {
    set_t(t);
    return hubbard_splitting(model);
  };

  constexpr int n = 16;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  double xs[n];
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * i / (n - 1);
    const double v = f(xs[i]);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = xs[std::max(0, best - 1)], b = xs[std::min(n - 1, best + 1)];
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-13 * std::max(1.0, b)) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  const double t_star = 0.5 * (a + b);
  const double resid = f(t_star);
  if (!(resid < 1e-9))
    throw Error(ErrorCode::NoDegeneracy,
                "no hopping in bracket restores degeneracy (best splitting " +
                    std::to_string(resid) + ")");
  return t_star;
}

}  // namespace sq
