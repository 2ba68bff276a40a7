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

#include "sq/basis.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sq {

Basis Basis::full_space(int n_sites) {
  if (n_sites <= 0 || n_sites > 30)
    throw Error(ErrorCode::Domain,
                "n_sites out of supported range: " + std::to_string(n_sites));
  Basis b;
  b.n_sites_ = n_sites;
  b.full_ = true;
  return b;
}

Basis Basis::sector(int n_sites, int sz_twice) {
  if (n_sites <= 0 || n_sites > 30)
    throw Error(ErrorCode::Domain,
                "n_sites out of supported range: " + std::to_string(n_sites));
  if (sz_twice > n_sites || sz_twice < -n_sites)
    throw Error(ErrorCode::InvalidSector,
                "|sz_twice| exceeds n_sites: " + std::to_string(sz_twice));
  if ((n_sites + sz_twice) % 2 != 0)
    throw Error(ErrorCode::InvalidSector,
                "n_sites + sz_twice must be even: n=" + std::to_string(n_sites) +
                    " sz_twice=" + std::to_string(sz_twice));
  const int n_up = (n_sites + sz_twice) / 2;
  Basis b;
  b.n_sites_ = n_sites;
  b.full_ = false;
  b.sz_twice_ = sz_twice;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n_sites); ++s)
    if (std::popcount(s) == n_up) b.states_.push_back(s);
  return b;
}

std::size_t Basis::index(std::uint64_t state) const {
  if (full_) return static_cast<std::size_t>(state);
  auto it = std::lower_bound(states_.begin(), states_.end(), state);
  if (it == states_.end() || *it != state)
    throw Error(ErrorCode::SectorViolation,
                "state not in sector basis: " + std::to_string(state));
  return static_cast<std::size_t>(it - states_.begin());
}

}  // namespace sq
