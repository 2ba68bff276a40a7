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

#include "sq/coupling_graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace sq {

void CouplingGraph::check_site(int s) const {
  if (s < 0 || s >= n_sites_)
    throw Error(ErrorCode::IndexOutOfRange,
                "site index " + std::to_string(s) + " outside [0, " +
                    std::to_string(n_sites_) + ")");
}

void CouplingGraph::add_edge(int i, int j, double coupling) {
  check_site(i);
  check_site(j);
  if (i == j)
    throw Error(ErrorCode::Domain, "self-coupling on site " + std::to_string(i));
  EdgeId id(i, j);
  if (has_edge(id))
    throw Error(ErrorCode::Domain, "duplicate edge (" + std::to_string(id.a) +
                                       ", " + std::to_string(id.b) + ")");
  edges_.push_back({id, coupling});
}

bool CouplingGraph::has_edge(EdgeId id) const {
  for (const auto& e : edges_)
    if (e.id == id) return true;
  return false;
}

double CouplingGraph::coupling(EdgeId id) const {
  for (const auto& e : edges_)
    if (e.id == id) return e.coupling;
  throw Error(ErrorCode::IndexOutOfRange,
              "no edge (" + std::to_string(id.a) + ", " + std::to_string(id.b) +
                  ")");
}

void CouplingGraph::set_coupling(EdgeId id, double coupling) {
  for (auto& e : edges_) {
    if (e.id == id) {
      e.coupling = coupling;
      return;
    }
  }
  throw Error(ErrorCode::IndexOutOfRange,
              "no edge (" + std::to_string(id.a) + ", " + std::to_string(id.b) +
                  ")");
}

void CouplingGraph::scale(double c) {
  for (auto& e : edges_) e.coupling *= c;
}

CouplingGraph CouplingGraph::complete(int n_sites, double coupling) {
  CouplingGraph g(n_sites);
  for (int i = 0; i < n_sites; ++i)
    for (int j = i + 1; j < n_sites; ++j) g.add_edge(i, j, coupling);
  return g;
}

CouplingGraph CouplingGraph::from_text(std::istream& in) {
  std::string line;
  int n_sites = -1;
  CouplingGraph g;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "sites") {
      if (n_sites >= 0)
        throw Error(ErrorCode::Domain, "duplicate sites header");
      if (!(ls >> n_sites) || n_sites <= 0)
        throw Error(ErrorCode::Domain, "bad sites header");
      g = CouplingGraph(n_sites);
      continue;
    }
    if (n_sites < 0)
      throw Error(ErrorCode::Domain, "edge line before sites header");
    int i = 0, j = 0;
    double coupling = 0.0;
    std::istringstream es(line);
    if (!(es >> i >> j >> coupling))
      throw Error(ErrorCode::Domain, "malformed edge line: " + line);
    g.add_edge(i, j, coupling);
  }
  if (n_sites < 0) throw Error(ErrorCode::Domain, "missing sites header");
  return g;
}

void CouplingGraph::to_text(std::ostream& out) const {
  out << "sites " << n_sites_ << "\n";
  char buf[64];
  for (const auto& e : edges_) {
    std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", e.id.a, e.id.b,
                  e.coupling);
    out << buf;
  }
}

}  // namespace sq
