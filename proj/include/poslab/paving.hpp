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

#ifndef POSLAB_PAVING_HPP_
#define POSLAB_PAVING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "poslab/diagram.hpp"
#include "poslab/subset.hpp"

namespace poslab {

// f: [n] -> [0, n-k-1] with 1 <= k < n. Throws ArgumentError otherwise.
class PldcFunction {
 public:
  PldcFunction() = default;
  PldcFunction(int k, int n, std::vector<int> values);
  static PldcFunction zero(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int width() const { return n_ - k_; }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const PldcFunction&, const PldcFunction&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<int> values_;
};

// Cell carrying each label, index label-1. Labels 1 and 2 share a cell when
// k = 1, labels 1 and n when k = n-1. Throws ArgumentError unless 1 <= k < n.
std::vector<Cell> boundary_numbering(int k, int n);

// Smallest violated condition index, or none.
std::optional<int> ldc_violation(const PldcFunction& f);
// Assumes f is ldc.
std::optional<int> pldc_violation(const PldcFunction& f);
bool is_ldc(const PldcFunction& f);
bool is_pldc(const PldcFunction& f);

// Throws PreconditionError unless f is ldc.
LeDiagram build_pldc_diagram(const PldcFunction& f);

struct Obstruction {
  int label = 0;  // i for H_i, 0 for the merged H_1 u H_n
  Subset set = 0;
};

struct ObstructionFamily {
  std::vector<Obstruction> members;
  bool merged = false;
  SetFamily sets() const;
};

// Throws PreconditionError unless f is pldc.
ObstructionFamily obstructions(const PldcFunction& f);

// Rank one: the loops of D_{1,n}(f), the union of the obstruction sets.
Subset rank_one_loops(const PldcFunction& f);

// Structural recognition. Throws ArgumentError unless 1 <= k < n and
// PreconditionError for non-Le or coloopful input.
std::optional<PldcFunction> recognize_paving_positroid(const LeDiagram& d);

// f(i) + f(i+1) <= 1 cyclically.
bool is_sparse_paving_f(const PldcFunction& f);

// Paving verdict for any Le-diagram, coloops included.
struct PavingCertificate {
  enum class Kind {
    kNotPaving,
    kPldc,      // coloop-less, D = D(f)
    kColoop,    // single coloop c, M = B({c}) + U_{k-1}(E - c)
    kBoolean,   // every element a coloop
    kRankZero,  // no rows
  };
  Kind kind = Kind::kNotPaving;
  std::optional<PldcFunction> f;
  int coloop = 0;
  bool paving() const { return kind != Kind::kNotPaving; }
};

PavingCertificate classify_paving(const LeDiagram& d);

// Removes the all-empty row r and relabels.
LeDiagram delete_row(const LeDiagram& d, int row);

// {"k":K,"n":N,"f":[...]}
std::string to_json(const PldcFunction& f);
PldcFunction parse_pldc_json(const std::string& text);

}  // namespace poslab

#endif  // POSLAB_PAVING_HPP_
