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

#include "sq/two_sq.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

namespace sq {

namespace {

constexpr double kGroupTol = 1e-9;
constexpr double kOverlapThreshold = 0.5;

// Column order of the logical product basis: 00, 01, 10, 11 with the
// first label belonging to SQ A.
Eigen::MatrixXd product_states(const TwoSqSystem& sys, const Basis& sector) {
  const int na = sys.a.n_sites();
  const Basis sec_a = Basis::sector(na, 0);
  const Basis sec_b = Basis::sector(sys.b.n_sites(), 0);
  Eigen::MatrixXd products(sector.dim(), 4);
  products.setZero();
  const Eigen::VectorXd* va[2] = {&sys.logical_a.zero, &sys.logical_a.one};
  const Eigen::VectorXd* vb[2] = {&sys.logical_b.zero, &sys.logical_b.one};
  for (int la = 0; la < 2; ++la)
    for (int lb = 0; lb < 2; ++lb) {
      const int col = 2 * la + lb;
      for (std::uint64_t sa : sec_a.states()) {
        const double amp_a = (*va[la])(static_cast<Eigen::Index>(sa));
        if (amp_a == 0.0) continue;
        for (std::uint64_t sb : sec_b.states()) {
          const double amp_b = (*vb[lb])(static_cast<Eigen::Index>(sb));
          if (amp_b == 0.0) continue;
          products(sector.index(sa | (sb << na)), col) = amp_a * amp_b;
        }
      }
      products.col(col).normalize();
    }
  return products;
}

struct LabeledSpectrum {
  double lam[4];                       // 00, 01, 10, 11
  int group_lo[4], group_hi[4];       // eigenindex range of each label's group
  double min_overlap = 1.0;
  double leakage_gap = 0.0;
};

LabeledSpectrum label_spectrum(const Eigen::VectorXd& eigs,
                               const Eigen::MatrixXd& vectors,
                               const Eigen::MatrixXd& products) {
  // group boundaries among the computed eigenvalues
  std::vector<std::pair<int, int>> ranges;
  int lo = 0;
  while (lo < eigs.size()) {
    int hi = lo + 1;
    while (hi < eigs.size() && eigs(hi) - eigs(hi - 1) <= kGroupTol) ++hi;
    ranges.emplace_back(lo, hi);
    lo = hi;
  }

  LabeledSpectrum out;
  std::vector<int> assigned(ranges.size(), 0);
  for (int p = 0; p < 4; ++p) {
    int best_g = -1;
    double best_ov = -1.0;
    for (std::size_t g = 0; g < ranges.size(); ++g) {
      const auto [glo, ghi] = ranges[g];
      const double ov =
          (vectors.middleCols(glo, ghi - glo).transpose() * products.col(p))
              .squaredNorm();
      if (ov > best_ov) {
        best_ov = ov;
        best_g = static_cast<int>(g);
      }
    }
    if (best_ov < kOverlapThreshold)
      throw Error(ErrorCode::Leakage,
                  "labeling overlap " + std::to_string(best_ov) +
                      " below threshold for product state " + std::to_string(p));
    const auto [glo, ghi] = ranges[best_g];
    if (++assigned[best_g] > ghi - glo)
      throw Error(ErrorCode::Leakage,
                  "more product states than degenerate levels in one group");
    double mean = 0.0;
    for (int i = glo; i < ghi; ++i) mean += eigs(i);
    out.lam[p] = mean / (ghi - glo);
    out.group_lo[p] = glo;
    out.group_hi[p] = ghi;
    out.min_overlap = std::min(out.min_overlap, best_ov);
  }
  if (eigs.size() < 5)
    throw Error(ErrorCode::Capacity, "need at least five eigenvalues to label");
  const double max_lam = *std::max_element(out.lam, out.lam + 4);
  out.leakage_gap = eigs(4) - max_lam;
  return out;
}

LabeledSpectrum label_at(const TwoSqSystem& sys, const Basis& sector,
                         const Eigen::MatrixXd& products, double j_inter,
                         int k = 8) {
  const auto graph = sys.combined_graph(j_inter);
  const auto m = heisenberg_matrix(graph, sector, Storage::Sparse);
  LanczosOptions opts;
  opts.residual_tol_rel = 1e-11;
  const auto spec = lowest_k(m, k, opts);
  return label_spectrum(spec.eigenvalues, spec.vectors, products);
}

}  // namespace

CouplingGraph TwoSqSystem::combined_graph(double j_inter) const {
  const int na = a.n_sites();
  CouplingGraph g(na + b.n_sites());
  for (const auto& e : a.graph.edges()) g.add_edge(e.id.a, e.id.b, e.coupling);
  for (const auto& e : b.graph.edges())
    g.add_edge(e.id.a + na, e.id.b + na, e.coupling);
  for (const auto& e : inter_edges)
    g.add_edge(e.site_a, e.site_b + na, j_inter);
  return g;
}

TwoSqSystem couple_sqs(const SqLayout& a, const SqLayout& b,
                       const std::vector<InterEdge>& edges,
                       const std::string& scheme) {
  for (const auto& e : edges)
    if (e.site_a < 0 || e.site_a >= a.n_sites() || e.site_b < 0 ||
        e.site_b >= b.n_sites())
      throw Error(ErrorCode::IndexOutOfRange, "inter-SQ edge site out of range");
  TwoSqSystem sys;
  sys.a = a;
  sys.b = b;
  sys.logical_a = ground_subspace(a);
  sys.logical_b = ground_subspace(b);
  sys.inter_edges = edges;
  sys.scheme = scheme;
  return sys;
}

std::vector<InterEdge> default_scheme_edges(const std::string& name) {
  // Frozen from discover_schemes on the standard two-mediator layout:
  // the largest-leakage-gap two-edge candidates with each spectral
  // signature. Sites 0 and 2 are the mediated rhombus corners.
  if (name == "horizontal") return {{0, 0}, {2, 2}};
  if (name == "vertical") return {{2, 0}, {2, 2}};
  throw Error(ErrorCode::Domain, "unknown scheme name: " + name);
}

GateSweep sweep_inter_coupling(const TwoSqSystem& sys,
                               const std::vector<double>& j_values) {
  for (std::size_t i = 0; i < j_values.size(); ++i) {
    if (j_values[i] < 0.0)
      throw Error(ErrorCode::Domain, "inter couplings must be nonnegative");
    if (i > 0 && j_values[i] < j_values[i - 1])
      throw Error(ErrorCode::Ordering, "sweep values must be sorted ascending");
  }
  const Basis sector = Basis::sector(sys.n_sites(), 0);
  const Eigen::MatrixXd products = product_states(sys, sector);

  GateSweep sweep;
  sweep.points.resize(j_values.size());
  std::optional<Error> failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(j_values.size());
       ++i) {
    try {
      const auto lab = label_at(sys, sector, products, j_values[i]);
      auto& pt = sweep.points[i];
      pt.j_inter = j_values[i];
      pt.lam00 = lab.lam[0];
      pt.lam01 = lab.lam[1];
      pt.lam10 = lab.lam[2];
      pt.lam11 = lab.lam[3];
      pt.leakage_gap = lab.leakage_gap;
      pt.min_overlap = lab.min_overlap;
    } catch (const Error& e) {
#pragma omp critical
      if (!failure)
        failure = Error(e.code(), "at J = " + std::to_string(j_values[i]) +
                                      ": " + e.what());
    }
  }
  if (failure) throw *failure;
  return sweep;
}

CPhasePulse cphase_pulse(const TwoSqSystem& sys, double j_inter) {
  const Basis sector = Basis::sector(sys.n_sites(), 0);
  const Eigen::MatrixXd products = product_states(sys, sector);
  const auto m =
      heisenberg_matrix(sys.combined_graph(j_inter), sector, Storage::Dense);
  const auto spec = full_spectrum(m, true);
  const auto lab = label_spectrum(spec.eigenvalues, spec.vectors, products);

  CPhasePulse pulse;
  pulse.j_inter = j_inter;
  pulse.omega = lab.lam[0] + lab.lam[3] - lab.lam[1] - lab.lam[2];
  if (std::abs(pulse.omega) < 1e-9)
    throw Error(ErrorCode::NoEntanglement,
                "coupling scheme produces no conditional phase at this J");
  pulse.duration = std::numbers::pi / std::abs(pulse.omega);
  const double t = pulse.duration;
  pulse.alpha_a = (lab.lam[2] - lab.lam[0]) * t;
  pulse.alpha_b = (lab.lam[1] - lab.lam[0]) * t;
  pulse.global_phase =
      lab.lam[0] * t + 0.5 * (pulse.alpha_a + pulse.alpha_b);

  // dressed computational basis: per degenerate group, Loewdin-orthonormal
  // projections of the assigned product states
  Eigen::MatrixXd dressed(sector.dim(), 4);
  std::vector<bool> done(4, false);
  for (int p = 0; p < 4; ++p) {
    if (done[p]) continue;
    std::vector<int> members;
    for (int q = p; q < 4; ++q)
      if (!done[q] && lab.group_lo[q] == lab.group_lo[p]) members.push_back(q);
    const int glo = lab.group_lo[p], gm = lab.group_hi[p] - glo;
    Eigen::MatrixXd coeff(gm, members.size());
    for (std::size_t c = 0; c < members.size(); ++c)
      coeff.col(c) = spec.vectors.middleCols(glo, gm).transpose() *
                     products.col(members[c]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(
        coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::MatrixXd orth = svd.matrixU() * svd.matrixV().transpose();
    for (std::size_t c = 0; c < members.size(); ++c) {
      dressed.col(members[c]) = spec.vectors.middleCols(glo, gm) * orth.col(c);
      done[members[c]] = true;
    }
  }

  // exact evolution projected onto the dressed basis
  using cd = std::complex<double>;
  const Eigen::MatrixXd w = spec.vectors.transpose() * dressed;  // dim x 4
  Eigen::Matrix<cd, 4, 4> u = Eigen::Matrix<cd, 4, 4>::Zero();
  for (Eigen::Index n = 0; n < spec.eigenvalues.size(); ++n) {
    const cd phase = std::exp(cd(0.0, -spec.eigenvalues(n) * t));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) u(i, j) += phase * w(n, i) * w(n, j);
  }
  const double sa[2] = {-1.0, 1.0};
  for (int i = 0; i < 4; ++i) {
    const double rz = 0.5 * (sa[i >> 1] * pulse.alpha_a + sa[i & 1] * pulse.alpha_b);
    u.row(i) *= std::exp(cd(0.0, rz));
  }
  u *= std::exp(cd(0.0, pulse.global_phase));

  const Eigen::Vector4cd target(1.0, 1.0, 1.0, -1.0);
  cd tr = 0.0;
  for (int i = 0; i < 4; ++i) tr += std::conj(target(i)) * u(i, i);
  const double denom = 4.0 * u.squaredNorm();
  pulse.fidelity = std::norm(tr) / denom;
  return pulse;
}

std::vector<SchemeCandidate> discover_schemes(const SqLayout& a,
                                              const SqLayout& b, int max_edges,
                                              double probe_j) {
  if (max_edges < 1 || max_edges > 2)
    throw Error(ErrorCode::Domain, "max_edges must be 1 or 2");
  TwoSqSystem base = couple_sqs(a, b, {});
  const Basis sector = Basis::sector(base.n_sites(), 0);
  const Eigen::MatrixXd products = product_states(base, sector);

  std::vector<std::vector<InterEdge>> candidates;
  std::vector<InterEdge> singles;
  for (int sa = 0; sa < a.n_sites(); ++sa)
    for (int sb = 0; sb < b.n_sites(); ++sb) singles.push_back({sa, sb});
  for (const auto& e : singles) candidates.push_back({e});
  if (max_edges == 2)
    for (std::size_t i = 0; i < singles.size(); ++i)
      for (std::size_t j = i + 1; j < singles.size(); ++j)
        candidates.push_back({singles[i], singles[j]});

  std::vector<SchemeCandidate> out(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(candidates.size());
       ++i) {
    TwoSqSystem sys = base;
    sys.inter_edges = candidates[i];
    auto& cand = out[i];
    cand.edges = candidates[i];
    try {
      const auto lab = label_at(sys, sector, products, probe_j);
      cand.leakage_gap = lab.leakage_gap;
      cand.min_overlap = lab.min_overlap;
      const double d0110 = std::abs(lab.lam[1] - lab.lam[2]);
      auto distinct = [&](int x, int y) {
        return std::abs(lab.lam[x] - lab.lam[y]) > 1e-6;
      };
      if (d0110 < 1e-8 && distinct(0, 3) && distinct(0, 1) && distinct(3, 1)) {
        cand.cls = SchemeClass::DiagonalDegenerate;
      } else if (distinct(0, 1) && distinct(0, 2) && distinct(0, 3) &&
                 distinct(1, 2) && distinct(1, 3) && distinct(2, 3)) {
        cand.cls = SchemeClass::DiagonalDistinct;
      } else {
        cand.cls = SchemeClass::Other;
      }
    } catch (const Error&) {
      cand.cls = SchemeClass::Other;
      cand.leakage_gap = 0.0;
      cand.min_overlap = 0.0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SchemeCandidate& x, const SchemeCandidate& y) {
              return x.leakage_gap > y.leakage_gap;
            });
  return out;
}

const char* scheme_class_name(SchemeClass c) {
  switch (c) {
    case SchemeClass::DiagonalDegenerate: return "DIAGONAL-DEGENERATE";
    case SchemeClass::DiagonalDistinct: return "DIAGONAL-DISTINCT";
    case SchemeClass::Other: return "OTHER";
  }
  return "OTHER";
}

}  // namespace sq
