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

#include <array>
#include <cmath>
#include <iosfwd>
#include <vector>

#include "sq/errors.hpp"

namespace sq {

/// Unordered site pair; always stored with a < b.
struct EdgeId {
  int a = 0;
  int b = 0;
  EdgeId() = default;
  EdgeId(int i, int j) : a(i < j ? i : j), b(i < j ? j : i) {}
  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

struct Edge {
  EdgeId id;
  double coupling = 0.0;
};

/// Weighted undirected graph of spin-1/2 sites; fully specifies a
/// Heisenberg Hamiltonian H = sum_edges J_ij S^i . S^j.
class CouplingGraph {
 public:
  CouplingGraph() = default;
  explicit CouplingGraph(int n_sites) : n_sites_(n_sites) {
    if (n_sites <= 0)
      throw Error(ErrorCode::Domain, "n_sites must be positive");
  }

  int n_sites() const { return n_sites_; }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(int i, int j, double coupling);
  bool has_edge(EdgeId id) const;
  double coupling(EdgeId id) const;
  void set_coupling(EdgeId id, double coupling);

  /// Uniformly scales every coupling by c.
  void scale(double c);

  /// Complete graph on n sites, all couplings equal.
  static CouplingGraph complete(int n_sites, double coupling);

  /// Plain-text edge list: header `sites N`, one `i j J_ij` line per
  /// edge, `#` comments. Site indices are 0-based.
  static CouplingGraph from_text(std::istream& in);
  void to_text(std::ostream& out) const;

 private:
  void check_site(int s) const;

  int n_sites_ = 0;
  std::vector<Edge> edges_;
};

/// Per-site field 3-vectors for the Zeeman term sum_i h_i . S^i.
struct FieldConfig {
  std::vector<std::array<double, 3>> fields;

  int n_sites() const { return static_cast<int>(fields.size()); }
  bool has_transverse(double tol = 0.0) const {
    for (const auto& h : fields)
      if (std::abs(h[0]) > tol || std::abs(h[1]) > tol) return true;
    return false;
  }
};

}  // namespace sq
