// Copyright 2023 The Authors.
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

#ifndef POSLAB_SUBSET_HPP_
#define POSLAB_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace poslab {

// Subsets of [n] for n <= 64; element e occupies bit e-1.
using Subset = std::uint64_t;
using SetFamily = std::vector<Subset>;

inline constexpr int kMaxGround = 64;

inline constexpr Subset element(int e) { return Subset{1} << (e - 1); }

inline constexpr Subset full_set(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline constexpr int size_of(Subset s) { return std::popcount(s); }

inline constexpr bool contains(Subset s, int e) { return (s >> (e - 1)) & 1; }

inline constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

// Largest element, or 0 for the empty set.
inline constexpr int max_element(Subset s) { return 64 - std::countl_zero(s); }

std::vector<int> elements(Subset s);
Subset subset_of(const std::vector<int>& elems);

// "{1,3,4}"
std::string format_set(Subset s);
std::string format_family(const SetFamily& family);

// Sorts by the increasing element list, the canonical order for output.
void sort_family(SetFamily& family);

// Calls fn(Subset) for every size-k subset of ground.
template <class Fn>
void for_each_k_subset(Subset ground, int k, Fn&& fn) {
  const std::vector<int> elems = elements(ground);
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s = 0;
    for (int i = 0; i < k; ++i) s |= element(elems[idx[i]]);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SetFamily k_subsets(Subset ground, int k);

}  // namespace poslab

#endif  // POSLAB_SUBSET_HPP_
