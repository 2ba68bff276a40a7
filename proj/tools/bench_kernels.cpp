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

// Benchmark of the sparse matvec kernel: the serial reference against
// the OpenMP row-parallel version, on Heisenberg-chain S_z = 0 sectors
// of growing size. Also checks that both produce identical results, so
// the benchmark doubles as a consistency smoke test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "sq/basis.hpp"
#include "sq/hamiltonian.hpp"

namespace {

double time_matvec(const sq::CsrMatrix& m, const std::vector<double>& x,
                   std::vector<double>& y, bool parallel, int reps) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  for (int r = 0; r < reps; ++r) {
    if (parallel)
      m.multiply(x.data(), y.data());
    else
      m.multiply_serial(x.data(), y.data());
  }
  const std::chrono::duration<double> dt = clock::now() - start;
  return dt.count() / reps;
}

}  // namespace

int main() {
  std::printf("# bench_kernels: CSR matvec, serial vs OpenMP (%d threads)\n",
              omp_get_max_threads());
  std::printf("n_sites,dim,nnz,reps,serial_s,openmp_s,speedup,max_abs_diff\n");

  for (int n : {10, 12, 14, 16}) {
    sq::CouplingGraph chain(n);
    for (int i = 0; i + 1 < n; ++i) chain.add_edge(i, i + 1, 1.0);
    const auto basis = sq::Basis::sector(n, 0);
    const auto h = sq::heisenberg_matrix(chain, basis, sq::Storage::Sparse);
    const auto& m = h.sparse();

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> x(m.dim), ys(m.dim), yp(m.dim);
    for (auto& v : x) v = unif(rng);

    const int reps = m.dim > 5000 ? 50 : 400;
    time_matvec(m, x, ys, false, 3);  // warm up
    const double t_serial = time_matvec(m, x, ys, false, reps);
    const double t_parallel = time_matvec(m, x, yp, true, reps);

    double max_diff = 0.0;
    for (std::size_t i = 0; i < m.dim; ++i)
      max_diff = std::max(max_diff, std::abs(ys[i] - yp[i]));

    std::printf("%d,%zu,%zu,%d,%.6e,%.6e,%.3f,%.3e\n", n, m.dim,
                m.val.size(), reps, t_serial, t_parallel,
                t_serial / t_parallel, max_diff);
    if (max_diff != 0.0) {
      std::fprintf(stderr, "error: serial and OpenMP kernels disagree\n");
      return 1;
    }
  }
  return 0;
}
