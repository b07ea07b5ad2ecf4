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

#ifndef POSLAB_TRANSVERSAL_HPP_
#define POSLAB_TRANSVERSAL_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poslab/diagram.hpp"
#include "poslab/matroid.hpp"
#include "poslab/subset.hpp"

namespace poslab {

// Sets S_1..S_k of [n]. Throws ArgumentError for elements outside [n] and
// ConstructionError when no transversal exists.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(int n, std::vector<Subset> sets);

  int n() const { return n_; }
  int k() const { return static_cast<int>(sets_.size()); }
  const std::vector<Subset>& sets() const { return sets_; }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int n_ = 0;
  std::vector<Subset> sets_;
};

// True when the sets have distinct representatives covering exactly j.
bool has_sdr_onto(const std::vector<Subset>& sets, Subset j);
bool has_transversal(const std::vector<Subset>& sets);

Matroid transversal_matroid(const SetSystem& s);

enum class CrossingMode {
  kAsPrinted,  // b,d in T and b not in S
  kSymmetric,  // additionally d not in S
};

struct CrossingWitness {
  int a = 0, b = 0, c = 0, d = 0;
  int i = 0, j = 0;  // 1-based: set i crosses set j
};

// Does s cross t? a <_a b <_a c <_a d in the cyclic order starting at a.
std::optional<CrossingWitness> find_crossing(Subset s, Subset t, int n,
                                             CrossingMode mode);
std::optional<CrossingWitness> find_crossing(
    const SetSystem& s, CrossingMode mode = CrossingMode::kAsPrinted);
bool is_noncrossing(const SetSystem& s,
                    CrossingMode mode = CrossingMode::kAsPrinted);

// Single-element deletions from any set must all change the matroid.
bool is_minimal_presentation(const SetSystem& s);

struct TransversalVerdict {
  bool transversal = true;
  bool fundamental = true;
  // Antichain breaking the rank inequality.
  std::optional<SetFamily> violation;
  // Antichain where the inequality is strict.
  std::optional<SetFamily> strict;
};

// Checks every antichain of at least two cyclic flats.
TransversalVerdict classify_transversal(const Matroid& m);
bool is_transversal(const Matroid& m);
bool is_fundamental_transversal(const Matroid& m);

struct Tau {
  int value = 0;
  std::vector<std::pair<int, int>> blocks;  // column ranges of maximal L(i)
  bool top_only = false;
  bool stray_bottom = false;
};

// Needs k = 2 and no empty column; PreconditionError otherwise.
Tau tau(const LeDiagram& d);
// Needs k = 2; applies the loopless reduction first.
bool is_transversal_rank2(const LeDiagram& d);

// {"n":N,"sets":[[...],...]}
std::string to_json(const SetSystem& s);
SetSystem parse_set_system_json(const std::string& text);

}  // namespace poslab

#endif  // POSLAB_TRANSVERSAL_HPP_
