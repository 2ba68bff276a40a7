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

#include "sq/sq_design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sq {

SqLayout rhombus_layout(int chain_len, double j_attach,
                        const std::vector<double>& j_chain) {
  if (chain_len < 2 || chain_len % 2 != 0)
    throw Error(ErrorCode::Parity,
                "mediator chain length must be even and >= 2, got " +
                    std::to_string(chain_len));
  if (static_cast<int>(j_chain.size()) != chain_len - 1)
    throw Error(ErrorCode::Domain,
                "expected " + std::to_string(chain_len - 1) +
                    " chain couplings, got " + std::to_string(j_chain.size()));

  SqLayout layout;
  layout.chain_len = chain_len;
  layout.j_attach = j_attach;
  layout.graph = CouplingGraph(4 + chain_len);
  // rhombus perimeter and short diagonal at the reference coupling 1
  layout.graph.add_edge(0, 1, 1.0);
  layout.graph.add_edge(1, 2, 1.0);
  layout.graph.add_edge(2, 3, 1.0);
  layout.graph.add_edge(3, 0, 1.0);
  layout.graph.add_edge(1, 3, 1.0);
  layout.short_diagonal = EdgeId(1, 3);

  // chain path: 0, 4+chain_len-1, ..., 4, 2
  const int last = 4 + chain_len - 1;
  layout.graph.add_edge(0, last, j_attach);
  layout.attachment = {EdgeId(0, last), EdgeId(2, 4)};
  for (int i = 0; i < chain_len - 1; ++i) {
    const int hi = last - i, lo = last - i - 1;
    layout.graph.add_edge(hi, lo, j_chain[i]);
    layout.chain_edges.emplace_back(hi, lo);
  }
  layout.graph.add_edge(2, 4, j_attach);
  layout.z_edge = layout.chain_edges.front();
  return layout;
}

double j56_closed_form(double j16) {
  const double j2 = j16 * j16;
  const double rad = j2 * j2 + 8.0 * j2 * j16 + 12.0 * j2 + 8.0 * j16 + 4.0;
  return (j16 * std::sqrt(rad) + j2 * j16 + 4.0 * j2 - 2.0 * j16 - 4.0) /
         (4.0 * j16 + 4.0);
}

SqLayout standard_layout(double j16) {
  return rhombus_layout(2, j16, {j56_closed_form(j16)});
}

double ground_splitting(const SqLayout& layout) {
  const auto basis = Basis::full_space(layout.n_sites());
  const auto spec = full_spectrum(heisenberg_matrix(layout.graph, basis));
  return spec.eigenvalues(1) - spec.eigenvalues(0);
}

namespace {

double splitting_at(SqLayout& layout, EdgeId edge, double j) {
  layout.graph.set_coupling(edge, j);
  return ground_splitting(layout);
}

// Golden-section minimum of f on [lo, hi].
template <typename F>
double golden_min(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

namespace {

// Structural validation at a candidate optimum; returns the error message
// if the twofold-singlet condition fails, empty on success.
std::string structure_failure(SqLayout work, EdgeId free_edge, double j_star,
                              double singlet_tol) {
  work.graph.set_coupling(free_edge, j_star);
  const auto basis = Basis::full_space(work.n_sites());
  const auto spec = full_spectrum(heisenberg_matrix(work.graph, basis), true);
  const auto groups = spec.groups();
  if (groups.front().second != 2)
    return "ground degeneracy at optimum is " +
           std::to_string(groups.front().second) + ", expected 2";
  for (int g = 0; g < 2; ++g) {
    const double s2 =
        total_spin_squared_expectation(spec.vectors.col(g), basis);
    if (std::abs(s2) > singlet_tol)
      return "ground state " + std::to_string(g) +
             " is not a singlet: <S^2> = " + std::to_string(s2);
  }
  return {};
}

}  // namespace

double solve_mediator_coupling(SqLayout& layout, EdgeId free_edge,
                               std::pair<double, double> bracket,
                               const SolveOptions& opts) {
  auto [lo, hi] = bracket;
  if (!(lo > 0.0) || !(hi > lo))
    throw Error(ErrorCode::Bracket, "bracket must satisfy 0 < lo < hi");

  SqLayout work = layout;
  const double reference = layout.graph.coupling(free_edge);
  auto f = [&](double j) { return splitting_at(work, free_edge, j); };

  // Coarse scan. The splitting landscape can have several local minima
  // (spurious near-degenerate plateaus besides the true level crossing),
  // so every local minimum is refined and validated, not just the argmin.
  const int n = std::max(8, opts.grid_points);
  std::vector<double> xs(n), fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * i / (n - 1);
    fs[i] = f(xs[i]);
  }
  std::vector<int> minima;
  for (int i = 0; i < n; ++i) {
    const bool down = i == 0 || fs[i] <= fs[i - 1];
    const bool up = i == n - 1 || fs[i] <= fs[i + 1];
    if (!(down && up)) continue;
    // merge contiguous plateau runs into their best representative
    if (!minima.empty() && i - minima.back() <= 1) {
      if (fs[i] < fs[minima.back()]) minima.back() = i;
    } else {
      minima.push_back(i);
    }
  }

  double best_splitting = std::numeric_limits<double>::infinity();
  double chosen = 0.0;
  bool found = false;
  std::string last_failure;
  for (int i : minima) {
    const double a = xs[std::max(0, i - 1)];
    const double b = xs[std::min(n - 1, i + 1)];
    const double j_star = golden_min(f, a, b, opts.golden_tol);
    const double splitting = f(j_star);
    best_splitting = std::min(best_splitting, splitting);
    if (!(splitting < opts.splitting_tol)) continue;
    const std::string fail =
        structure_failure(work, free_edge, j_star, opts.singlet_tol);
    if (!fail.empty()) {
      last_failure = fail;
      continue;
    }
    if (!found || std::abs(j_star - reference) < std::abs(chosen - reference)) {
      chosen = j_star;
      found = true;
    }
  }

  if (!found) {
    if (!last_failure.empty())
      throw Error(ErrorCode::Structure, last_failure);
    throw Error(ErrorCode::NoDegeneracy,
                "no coupling in bracket reaches ground splitting below " +
                    std::to_string(opts.splitting_tol) + " (best " +
                    std::to_string(best_splitting) + ")");
  }

  layout.graph.set_coupling(free_edge, chosen);
  return chosen;
}

double energy_gap(const SqLayout& layout, double degeneracy_tol) {
  const auto basis = Basis::full_space(layout.n_sites());
  const auto spec = full_spectrum(heisenberg_matrix(layout.graph, basis));
  const double splitting = spec.eigenvalues(1) - spec.eigenvalues(0);
  if (splitting > degeneracy_tol)
    throw Error(ErrorCode::Structure,
                "ground state not twofold degenerate: E1 - E0 = " +
                    std::to_string(splitting));
  return spec.eigenvalues(2) - spec.eigenvalues(0);
}

double correct_coupling(SqLayout layout, EdgeId perturbed_edge,
                        double perturbed_value, EdgeId free_edge,
                        const SolveOptions& opts) {
  if (perturbed_edge == free_edge)
    throw Error(ErrorCode::Domain, "perturbed edge equals free edge");
  if (layout.graph.has_edge(perturbed_edge))
    layout.graph.set_coupling(perturbed_edge, perturbed_value);
  else
    layout.graph.add_edge(perturbed_edge.a, perturbed_edge.b, perturbed_value);
  const double current = layout.graph.coupling(free_edge);
  const auto bracket = std::make_pair(std::max(1e-4, 0.2 * current),
                                      std::max(1.0, 3.0 * current));
  return solve_mediator_coupling(layout, free_edge, bracket, opts);
}

double min_attachment(int chain_len, std::pair<double, double> search_range) {
  auto feasible = [&](double j16) {
    std::vector<double> chain(chain_len - 1, 1.0);
    SqLayout layout = rhombus_layout(chain_len, j16, chain);
    const EdgeId free_edge = layout.chain_edges[(chain_len - 1) / 2];
    // near the feasibility boundary the crossing sits in a narrow notch
    // right next to a spurious zero-splitting plateau; scan densely
    SolveOptions opts;
    opts.grid_points = 1600;
    try {
      solve_mediator_coupling(layout, free_edge, {1e-3, 12.0}, opts);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  auto [lo, hi] = search_range;
  if (feasible(lo) || !feasible(hi))
    throw Error(ErrorCode::Bracket,
                "feasibility predicate does not change over the search range");
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace sq
