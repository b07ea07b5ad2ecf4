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

#include "poslab/subset.hpp"

#include <algorithm>

namespace poslab {

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  out.reserve(size_of(s));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= element(e);
  return s;
}

std::string format_set(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string format_family(const SetFamily& family) {
  std::string out = "[";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ", ";
    out += format_set(family[i]);
  }
  return out + "]";
}

void sort_family(SetFamily& family) {
  std::sort(family.begin(), family.end(), [](Subset a, Subset b) {
    return elements(a) < elements(b);
  });
}

SetFamily k_subsets(Subset ground, int k) {
  SetFamily out;
  for_each_k_subset(ground, k, [&](Subset s) { out.push_back(s); });
  return out;
}

}  // namespace poslab
