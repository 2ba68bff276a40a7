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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sq/coupling_graph.hpp"

namespace sq {

/// hbar in ueV * ns; fixes the precession-time unit convention.
inline constexpr double kHbarUevNs = 0.6582119569;

enum class EncodingKind { Single, Triangle3, Sq4, Sq6 };

/// Logical-qubit encoding compared in the decoherence study. The
/// builder produces the intra-logical-qubit graph at coupling j (ueV);
/// manifold_dim is the unperturbed ground degeneracy.
struct Encoding {
  EncodingKind kind = EncodingKind::Single;

  static Encoding from_label(const std::string& label);
  const char* label() const;
  int n_sites() const;
  int manifold_dim() const;
  CouplingGraph graph(double j) const;
};

/// Per-site fields of fixed magnitude hb with independent uniform
/// random directions, from a deterministic seeded generator.
FieldConfig sample_nuclear_fields(int n_sites, double hb, std::uint64_t seed);

/// Stream seed for one sample, stable across serial and parallel runs.
/// Independent of J so a sweep reuses the same field realizations.
std::uint64_t derive_sample_seed(std::uint64_t seed, EncodingKind kind,
                                 int sample);

/// Ground-manifold spread E_{d-1} - E_0 of H_Heisenberg(j) + H_Zeeman.
double logical_splitting(const Encoding& encoding, double j,
                         const FieldConfig& fields);

/// Precession time dT = hbar / (2 pi dE), in ns for dE in ueV.
double precession_time(double delta_e);

struct PrecessionResult {
  Encoding encoding;
  double j = 0.0;   // ueV
  double hb = 0.0;  // ueV
  int n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> delta_e;  // per valid sample, ueV
  double dt_median = 0.0, dt_mean = 0.0, dt_q1 = 0.0, dt_q3 = 0.0;  // ns
  int excluded = 0;  // samples failing the manifold-tracking check
};

std::vector<PrecessionResult> precession_sweep(
    const std::vector<Encoding>& encodings, const std::vector<double>& j_values,
    double hb, int n_samples, std::uint64_t seed);

}  // namespace sq
