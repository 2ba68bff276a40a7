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

#include "sq/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "sq/eigensolver.hpp"
#include "sq/sq_design.hpp"

namespace sq {

Encoding Encoding::from_label(const std::string& label) {
  if (label == "single") return {EncodingKind::Single};
  if (label == "triangle3") return {EncodingKind::Triangle3};
  if (label == "sq4") return {EncodingKind::Sq4};
  if (label == "sq6") return {EncodingKind::Sq6};
  throw Error(ErrorCode::Domain, "unknown encoding label: " + label);
}

const char* Encoding::label() const {
  switch (kind) {
    case EncodingKind::Single: return "single";
    case EncodingKind::Triangle3: return "triangle3";
    case EncodingKind::Sq4: return "sq4";
    case EncodingKind::Sq6: return "sq6";
  }
  return "?";
}

int Encoding::n_sites() const {
  switch (kind) {
    case EncodingKind::Single: return 1;
    case EncodingKind::Triangle3: return 3;
    case EncodingKind::Sq4: return 4;
    case EncodingKind::Sq6: return 6;
  }
  return 0;
}

int Encoding::manifold_dim() const {
  // triangle ground space is two S=1/2 doublets; the others are a
  // twofold singlet pair (or the bare spin doublet)
  return kind == EncodingKind::Triangle3 ? 4 : 2;
}

CouplingGraph Encoding::graph(double j) const {
  switch (kind) {
    case EncodingKind::Single:
      return CouplingGraph(1);
    case EncodingKind::Triangle3:
      return CouplingGraph::complete(3, j);
    case EncodingKind::Sq4:
      return CouplingGraph::complete(4, j);
    case EncodingKind::Sq6: {
      // two-mediator layout at the unit-attachment coupling ratios
      CouplingGraph g = standard_layout(1.0).graph;
      g.scale(j);
      return g;
    }
  }
  throw Error(ErrorCode::Domain, "bad encoding");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_sample_seed(std::uint64_t seed, EncodingKind kind,
                                 int sample) {
  // The J value is deliberately not mixed in: reusing the same field
  // realizations across a J sweep (common random numbers) removes the
  // sampling noise from cross-J comparisons of the ground splitting.
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(kind));
  h = splitmix64(h ^ static_cast<std::uint64_t>(sample));
  return h;
}

FieldConfig sample_nuclear_fields(int n_sites, double hb, std::uint64_t seed) {
  if (hb < 0.0)
    throw Error(ErrorCode::Domain, "field magnitude must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  FieldConfig cfg;
  cfg.fields.resize(n_sites);
  for (int i = 0; i < n_sites; ++i) {
    const double cos_theta = 2.0 * unif(rng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * unif(rng);
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    cfg.fields[i] = {hb * sin_theta * std::cos(phi),
                     hb * sin_theta * std::sin(phi), hb * cos_theta};
  }
  return cfg;
}

double logical_splitting(const Encoding& encoding, double j,
                         const FieldConfig& fields) {
  const int n = encoding.n_sites();
  if (fields.n_sites() != n)
    throw Error(ErrorCode::Domain, "field config does not match encoding size");
  double hb_max = 0.0;
  for (const auto& h : fields.fields)
    hb_max = std::max(hb_max, std::hypot(h[0], h[1], h[2]));
  if (encoding.kind != EncodingKind::Single && j > 0.0 && hb_max / j > 0.1)
    std::fprintf(stderr,
                 "warning: hb/J = %.3g exceeds 0.1; splitting is outside the "
                 "perturbative regime\n",
                 hb_max / j);

  const auto basis = Basis::full_space(n);
  const auto h_total = add(heisenberg_matrix(encoding.graph(j), basis),
                           zeeman_matrix(fields, basis));
  const auto spec = full_spectrum(h_total);
  const int d = encoding.manifold_dim();
  const double delta_e = spec.eigenvalues(d - 1) - spec.eigenvalues(0);
  if (d < static_cast<int>(basis.dim())) {
    const double above = spec.eigenvalues(d) - spec.eigenvalues(d - 1);
    if (above < 10.0 * delta_e)
      throw Error(ErrorCode::Manifold,
                  "logical manifold not separated: gap above is " +
                      std::to_string(above) + " vs splitting " +
                      std::to_string(delta_e));
  }
  return delta_e;
}

double precession_time(double delta_e) {
  if (!(delta_e > 0.0))
    throw Error(ErrorCode::Domain, "splitting must be positive");
  return kHbarUevNs / (2.0 * std::numbers::pi * delta_e);
}

namespace {

// median of v[lo, hi) for sorted v
double median_range(const std::vector<double>& v, std::size_t lo,
                    std::size_t hi) {
  const std::size_t n = hi - lo;
  const std::size_t mid = lo + n / 2;
  return (n % 2 == 1) ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::vector<PrecessionResult> precession_sweep(
    const std::vector<Encoding>& encodings, const std::vector<double>& j_values,
    double hb, int n_samples, std::uint64_t seed) {
  if (n_samples < 1)
    throw Error(ErrorCode::Domain, "need at least one sample");
  for (double j : j_values)
    if (!(j > 0.0))
      throw Error(ErrorCode::Domain, "couplings must be positive");

  std::vector<PrecessionResult> results;
  for (const auto& enc : encodings) {
    for (double j : j_values) {
      PrecessionResult res;
      res.encoding = enc;
      res.j = j;
      res.hb = hb;
      res.n_samples = n_samples;
      res.seed = seed;
      std::vector<double> de(n_samples,
                             std::numeric_limits<double>::quiet_NaN());
#pragma omp parallel for schedule(dynamic)
      for (int s = 0; s < n_samples; ++s) {
        const auto fields = sample_nuclear_fields(
            enc.n_sites(), hb, derive_sample_seed(seed, enc.kind, s));
        try {
          de[s] = logical_splitting(enc, j, fields);
        } catch (const Error&) {
          // excluded below
        }
      }
      std::vector<double> dt;
      for (double v : de) {
        if (std::isnan(v) || !(v > 0.0))
          ++res.excluded;
        else {
          res.delta_e.push_back(v);
          dt.push_back(precession_time(v));
        }
      }
      if (!dt.empty()) {
        std::sort(dt.begin(), dt.end());
        res.dt_median = median_range(dt, 0, dt.size());
        res.dt_q1 = median_range(dt, 0, dt.size() / 2);
        res.dt_q3 = median_range(dt, (dt.size() + 1) / 2, dt.size());
        double sum = 0.0;
        for (double v : dt) sum += v;
        res.dt_mean = sum / dt.size();
      }
      results.push_back(std::move(res));
    }
  }
  return results;
}

}  // namespace sq
