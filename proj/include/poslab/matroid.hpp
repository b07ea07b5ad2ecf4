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

#ifndef POSLAB_MATROID_HPP_
#define POSLAB_MATROID_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "poslab/rational.hpp"
#include "poslab/subset.hpp"

namespace poslab {

// A matroid on a ground set E inside [n], stored by its bases. E defaults to
// [n]; restriction produces smaller ground sets with the original labels.
// The constructor checks only structure (nonempty, equal sizes, inside E);
// the exchange axiom is left to validate_bases.
class Matroid {
 public:
  Matroid() = default;
  Matroid(int n, SetFamily bases);
  Matroid(int n, Subset ground, SetFamily bases);

  int n() const { return n_; }
  Subset ground() const { return ground_; }
  int rank() const { return rank_; }
  // Sorted by bitmask value.
  const SetFamily& bases() const { return bases_; }
  bool is_basis(Subset b) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int n_ = 0;
  Subset ground_ = 0;
  int rank_ = 0;
  SetFamily bases_{0};
};

bool validate_bases(int n, int r, const SetFamily& bases);
bool validate_bases(const Matroid& m);

// Ranks of every subset of [n]; needs n <= 24.
class RankTable {
 public:
  explicit RankTable(const Matroid& m);
  int operator()(Subset a) const { return rank_[a & ground_]; }
  int n() const { return n_; }

 private:
  int n_;
  Subset ground_;
  std::vector<std::uint8_t> rank_;
};

inline constexpr int kMaxTableGround = 24;

// Throws ArgumentError when a leaves the ground set.
int rank_of(const Matroid& m, Subset a);
bool is_independent(const Matroid& m, Subset a);
Subset closure(const Matroid& m, Subset a);

// Exhaustive over subsets of E; these need n <= 24.
SetFamily circuits(const Matroid& m);
SetFamily flats(const Matroid& m);
SetFamily hyperplanes(const Matroid& m);
// Hyperplanes with at least r elements.
SetFamily dependent_hyperplanes(const Matroid& m);

Subset loops(const Matroid& m);
Subset coloops(const Matroid& m);

Matroid dual(const Matroid& m);
// Bases are the maximum-cardinality intersections of bases with s.
Matroid restriction(const Matroid& m, Subset s);
// Needs equal n and disjoint ground sets.
Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid uniform(int r, int n);
Matroid uniform(int r, int n, Subset e);

struct CyclicFlat {
  Subset set = 0;
  int rank = 0;
  friend bool operator==(const CyclicFlat&, const CyclicFlat&) = default;
};

// Sorted by rank, then bitmask.
struct CyclicFlatLattice {
  std::vector<CyclicFlat> flats;
  bool less_equal(std::size_t i, std::size_t j) const {
    return is_subset(flats[i].set, flats[j].set);
  }
};

CyclicFlatLattice cyclic_flats(const Matroid& m);

SetFamily stressed_hyperplanes(const Matroid& m);
// Throws PreconditionError unless h is a stressed hyperplane.
Matroid relax(const Matroid& m, Subset h);

bool is_paving(const Matroid& m);
bool is_sparse_paving(const Matroid& m);

// Bases: the r-subsets of e lying in no member of family. Throws
// PreconditionError naming the offending set or pair.
Matroid paving_from_hyperplanes(int n, Subset e, int r,
                                const SetFamily& family);
Matroid paving_from_hyperplanes(int n, int r, const SetFamily& family);

// Column sets with a nonzero maximal minor. Throws PreconditionError on a
// rank-deficient matrix.
Matroid matroid_from_matrix(const RationalMatrix& a);

// {"n":N,"r":R,"bases":[[...],...]} with bases in canonical order; a
// "ground" array is added when E is not [n].
std::string to_json(const Matroid& m);
// Also accepts bases as hex bitmask strings.
Matroid parse_matroid_json(const std::string& text);

}  // namespace poslab

#endif  // POSLAB_MATROID_HPP_
