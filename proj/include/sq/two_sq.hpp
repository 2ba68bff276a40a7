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

#include <string>
#include <vector>

#include "sq/logical.hpp"
#include "sq/sq_design.hpp"

namespace sq {

/// Inter-SQ edge; both sites are local 0..5 indices, the B side is
/// offset by 6 in the combined graph.
struct InterEdge {
  int site_a = 0;
  int site_b = 0;
};

/// Two six-spin SQs with a common-strength inter-coupling edge set.
struct TwoSqSystem {
  SqLayout a, b;
  LogicalSubspace logical_a, logical_b;
  std::vector<InterEdge> inter_edges;
  std::string scheme;

  int n_sites() const { return a.n_sites() + b.n_sites(); }
  CouplingGraph combined_graph(double j_inter) const;
};

TwoSqSystem couple_sqs(const SqLayout& a, const SqLayout& b,
                       const std::vector<InterEdge>& edges,
                       const std::string& scheme = "custom");

/// Default edge sets reproducing the two reference spectral signatures:
/// "horizontal" keeps lambda_01 = lambda_10 degenerate, "vertical"
/// splits the ground state into four distinct levels.
std::vector<InterEdge> default_scheme_edges(const std::string& name);

struct SweepPoint {
  double j_inter = 0.0;
  double lam00 = 0.0, lam01 = 0.0, lam10 = 0.0, lam11 = 0.0;
  double leakage_gap = 0.0;
  double min_overlap = 0.0;  // smallest squared labeling overlap
};

struct GateSweep {
  std::vector<SweepPoint> points;
};

GateSweep sweep_inter_coupling(const TwoSqSystem& sys,
                               const std::vector<double>& j_values);

struct CPhasePulse {
  double j_inter = 0.0;
  double omega = 0.0;     // lam00 + lam11 - lam01 - lam10
  double duration = 0.0;  // pi / |omega|, hbar = 1
  double alpha_a = 0.0;   // local logical z angles
  double alpha_b = 0.0;
  double global_phase = 0.0;
  double fidelity = 0.0;  // against diag(1,1,1,-1)
};

CPhasePulse cphase_pulse(const TwoSqSystem& sys, double j_inter);

enum class SchemeClass { DiagonalDegenerate, DiagonalDistinct, Other };

struct SchemeCandidate {
  std::vector<InterEdge> edges;
  SchemeClass cls = SchemeClass::Other;
  double leakage_gap = 0.0;
  double min_overlap = 0.0;
};

/// Brute-force enumeration of one- and two-edge inter-SQ couplings,
/// classified at a probe strength and sorted by leakage gap.
std::vector<SchemeCandidate> discover_schemes(const SqLayout& a,
                                              const SqLayout& b, int max_edges,
                                              double probe_j = 0.3);

const char* scheme_class_name(SchemeClass c);

}  // namespace sq
