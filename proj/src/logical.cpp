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

#include "sq/logical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sq {

namespace {

void fix_sign(Eigen::VectorXd& v) {
  for (Eigen::Index r = 0; r < v.size(); ++r) {
    if (std::abs(v(r)) > 1e-12) {
      if (v(r) < 0) v = -v;
      return;
    }
  }
}

}  // namespace

LogicalSubspace ground_subspace(const CouplingGraph& graph, EdgeId z_edge,
                                double degeneracy_tol) {
  const auto basis = Basis::full_space(graph.n_sites());
  const auto spec = full_spectrum(heisenberg_matrix(graph, basis), true);
  const std::vector<double> eigs(
      spec.eigenvalues.data(),
      spec.eigenvalues.data() + spec.eigenvalues.size());
  const auto groups = degeneracy_groups(eigs, degeneracy_tol);
  if (groups.front().second != 2)
    throw Error(ErrorCode::Structure,
                "ground degeneracy is " + std::to_string(groups.front().second) +
                    ", expected 2");

  const Eigen::MatrixXd pair = spec.vectors.leftCols(2);
  // 2x2 block of the z-edge exchange in the degenerate pair
  Eigen::Matrix2d block;
  Eigen::VectorXd tmp(basis.dim());
  for (int b = 0; b < 2; ++b) {
    apply_exchange(z_edge.a, z_edge.b, basis, pair.col(b).data(), tmp.data());
    for (int a = 0; a < 2; ++a) block(a, b) = pair.col(a).dot(tmp);
  }
  block = 0.5 * (block + block.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(block);

  LogicalSubspace sub;
  sub.graph = graph;
  sub.z_edge = z_edge;
  sub.zero = pair * es.eigenvectors().col(0);
  sub.one = pair * es.eigenvectors().col(1);
  fix_sign(sub.zero);
  fix_sign(sub.one);
  sub.gap = spec.eigenvalues(2) - spec.eigenvalues(0);
  return sub;
}

LogicalSubspace ground_subspace(const SqLayout& layout) {
  return ground_subspace(layout.graph, layout.z_edge);
}

EffectiveGenerator effective_generator(const LogicalSubspace& subspace,
                                       EdgeId edge) {
  const auto basis = Basis::full_space(subspace.n_sites());
  if (edge.a < 0 || edge.b >= subspace.n_sites())
    throw Error(ErrorCode::IndexOutOfRange, "edge site outside layout");

  EffectiveGenerator g;
  g.edge = edge;
  Eigen::VectorXd tmp(basis.dim());
  const Eigen::VectorXd* states[2] = {&subspace.zero, &subspace.one};
  for (int b = 0; b < 2; ++b) {
    apply_exchange(edge.a, edge.b, basis, states[b]->data(), tmp.data());
    for (int a = 0; a < 2; ++a) g.matrix(a, b) = states[a]->dot(tmp);
  }
  g.matrix = 0.5 * (g.matrix + g.matrix.transpose().eval());
  g.c0 = 0.5 * (g.matrix(0, 0) + g.matrix(1, 1));
  g.cz = 0.5 * (g.matrix(0, 0) - g.matrix(1, 1));
  g.cx = g.matrix(0, 1);
  g.cy = 0.0;  // real basis vectors, real operator
  return g;
}

double bloch_axis_angle(const EffectiveGenerator& g1,
                        const EffectiveGenerator& g2) {
  const Eigen::Vector3d a(g1.cx, g1.cy, g1.cz), b(g2.cx, g2.cy, g2.cz);
  if (a.norm() < 1e-10 || b.norm() < 1e-10)
    throw Error(ErrorCode::UndefinedAxis,
                "generator has no traceless part; axis undefined");
  const double c = std::clamp(a.dot(b) / (a.norm() * b.norm()), -1.0, 1.0);
  return std::acos(c) * 180.0 / std::numbers::pi;
}

}  // namespace sq
