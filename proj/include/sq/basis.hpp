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
#include <vector>

#include "sq/errors.hpp"

namespace sq {

// Site k maps to bit k of the state word; a set bit is spin up.

/// Basis of the full 2^n space or of a fixed total-S_z sector.
class Basis {
 public:
  static Basis full_space(int n_sites);
  /// All bit-strings with (n_sites + sz_twice)/2 up spins, ascending.
  /// sz_twice is 2*S_z (always an integer).
  static Basis sector(int n_sites, int sz_twice);

  int n_sites() const { return n_sites_; }
  bool is_full() const { return full_; }
  int sz_twice() const { return sz_twice_; }

  std::size_t dim() const {
    return full_ ? (std::size_t{1} << n_sites_) : states_.size();
  }

  std::uint64_t state(std::size_t idx) const {
    return full_ ? static_cast<std::uint64_t>(idx) : states_[idx];
  }

  /// Index of a bit-string in this basis; the state must belong to it.
  std::size_t index(std::uint64_t state) const;

  const std::vector<std::uint64_t>& states() const { return states_; }

 private:
  int n_sites_ = 0;
  bool full_ = true;
  int sz_twice_ = 0;
  std::vector<std::uint64_t> states_;  // empty for full space
};

}  // namespace sq
