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

#include "poslab/matroid.hpp"

#include <algorithm>
#include <unordered_set>

#include "json.hpp"
#include "json_util.hpp"
#include "poslab/errors.hpp"

namespace poslab {

namespace {

void check_ground(int n, Subset ground) {
  if (n < 0 || n > kMaxGround) throw ArgumentError("n must lie in [0, 64]");
  if (!is_subset(ground, full_set(n)))
    throw ArgumentError("ground set " + format_set(ground) + " outside [n]");
}

void check_inside(const Matroid& m, Subset a) {
  if (!is_subset(a, m.ground()))
    throw ArgumentError("set " + format_set(a) + " leaves the ground set " +
                        format_set(m.ground()));
}

void check_table_size(const Matroid& m) {
  if (m.n() > kMaxTableGround)
    throw ArgumentError("exhaustive subset scans need n <= 24, got n=" +
                        std::to_string(m.n()));
}

// Calls fn for every subset of ground.
template <class Fn>
void for_each_subset(Subset ground, Fn&& fn) {
  Subset s = 0;
  while (true) {
    fn(s);
    if (s == ground) return;
    s = (s - ground) & ground;
  }
}

}  // namespace

Matroid::Matroid(int n, SetFamily bases)
    : Matroid(n, full_set(n), std::move(bases)) {}

Matroid::Matroid(int n, Subset ground, SetFamily bases)
    : n_(n), ground_(ground), bases_(std::move(bases)) {
  check_ground(n, ground);
  if (bases_.empty()) throw ArgumentError("a matroid needs at least one basis");
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  rank_ = size_of(bases_[0]);
  for (Subset b : bases_) {
    if (size_of(b) != rank_)
      throw ArgumentError("bases have different sizes");
    if (!is_subset(b, ground_))
      throw ArgumentError("basis " + format_set(b) + " leaves the ground set");
  }
}

bool Matroid::is_basis(Subset b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

bool validate_bases(int n, int r, const SetFamily& bases) {
  if (n < 0 || n > kMaxGround || bases.empty()) return false;
  for (Subset b : bases)
    if (size_of(b) != r || !is_subset(b, full_set(n))) return false;
  const std::unordered_set<Subset> lookup(bases.begin(), bases.end());
  for (Subset b : bases)
    for (Subset b2 : bases) {
      for (int e : elements(b & ~b2)) {
        bool ok = false;
        for (int f : elements(b2 & ~b)) {
          if (lookup.count((b & ~element(e)) | element(f))) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  return true;
}

bool validate_bases(const Matroid& m) {
  return validate_bases(m.n(), m.rank(), m.bases());
}

RankTable::RankTable(const Matroid& m) : n_(m.n()), ground_(m.ground()) {
  check_table_size(m);
  const std::size_t size = std::size_t{1} << n_;
  std::vector<char> indep(size, 0);
  for (Subset b : m.bases()) indep[b] = 1;
  for (std::size_t a = size; a-- > 0;) {
    if (indep[a] || !is_subset(a, ground_)) continue;
    for (Subset rest = ground_ & ~a; rest; rest &= rest - 1) {
      if (indep[a | (rest & -rest)]) {
        indep[a] = 1;
        break;
      }
    }
  }
  rank_.assign(size, 0);
  for (std::size_t a = 1; a < size; ++a) {
    if (indep[a]) {
      rank_[a] = static_cast<std::uint8_t>(size_of(a));
      continue;
    }
    std::uint8_t best = 0;
    for (Subset rest = a; rest; rest &= rest - 1)
      best = std::max(best, rank_[a & ~(rest & -rest)]);
    rank_[a] = best;
  }
}

int rank_of(const Matroid& m, Subset a) {
  check_inside(m, a);
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, size_of(a & b));
  return best;
}

bool is_independent(const Matroid& m, Subset a) {
  check_inside(m, a);
  for (Subset b : m.bases())
    if (is_subset(a, b)) return true;
  return false;
}

Subset closure(const Matroid& m, Subset a) {
  const int r = rank_of(m, a);
  Subset out = a;
  for (int e : elements(m.ground() & ~a))
    if (rank_of(m, a | element(e)) == r) out |= element(e);
  return out;
}

SetFamily circuits(const Matroid& m) {
  const RankTable rank(m);
  SetFamily out;
  for_each_subset(m.ground(), [&](Subset c) {
    const int size = size_of(c);
    if (rank(c) == size) return;
    for (Subset rest = c; rest; rest &= rest - 1)
      if (rank(c & ~(rest & -rest)) != size - 1) return;
    out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

SetFamily flats_with(const Matroid& m, const RankTable& rank) {
  SetFamily out;
  for_each_subset(m.ground(), [&](Subset f) {
    const int r = rank(f);
    for (Subset rest = m.ground() & ~f; rest; rest &= rest - 1)
      if (rank(f | (rest & -rest)) == r) return;
    out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

SetFamily hyperplanes_with(const Matroid& m, const RankTable& rank) {
  SetFamily out;
  for (Subset f : flats_with(m, rank))
    if (rank(f) == m.rank() - 1) out.push_back(f);
  return out;
}

}  // namespace

SetFamily flats(const Matroid& m) { return flats_with(m, RankTable(m)); }

SetFamily hyperplanes(const Matroid& m) {
  return hyperplanes_with(m, RankTable(m));
}

SetFamily dependent_hyperplanes(const Matroid& m) {
  SetFamily out;
  for (Subset h : hyperplanes(m))
    if (size_of(h) >= m.rank()) out.push_back(h);
  return out;
}

Subset loops(const Matroid& m) {
  Subset used = 0;
  for (Subset b : m.bases()) used |= b;
  return m.ground() & ~used;
}

Subset coloops(const Matroid& m) {
  Subset common = m.ground();
  for (Subset b : m.bases()) common &= b;
  return common;
}

Matroid dual(const Matroid& m) {
  SetFamily bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid(m.n(), m.ground(), std::move(bases));
}

Matroid restriction(const Matroid& m, Subset s) {
  check_inside(m, s);
  const int r = rank_of(m, s);
  SetFamily bases;
  for (Subset b : m.bases())
    if (size_of(b & s) == r) bases.push_back(b & s);
  return Matroid(m.n(), s, std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n() != b.n())
    throw ArgumentError("direct_sum needs matroids on the same [n]");
  if (a.ground() & b.ground())
    throw ArgumentError("direct_sum needs disjoint ground sets");
  SetFamily bases;
  for (Subset x : a.bases())
    for (Subset y : b.bases()) bases.push_back(x | y);
  return Matroid(a.n(), a.ground() | b.ground(), std::move(bases));
}

Matroid uniform(int r, int n) { return uniform(r, n, full_set(n)); }

Matroid uniform(int r, int n, Subset e) {
  check_ground(n, e);
  if (r < 0 || r > size_of(e))
    throw ArgumentError("uniform matroid rank outside [0, |E|]");
  return Matroid(n, e, k_subsets(e, r));
}

CyclicFlatLattice cyclic_flats(const Matroid& m) {
  const RankTable rank(m);
  CyclicFlatLattice lattice;
  for (Subset f : flats_with(m, rank)) {
    const int r = rank(f);
    bool cyclic = true;
    for (Subset rest = f; rest && cyclic; rest &= rest - 1)
      cyclic = rank(f & ~(rest & -rest)) == r;
    if (cyclic) lattice.flats.push_back({f, r});
  }
  std::sort(lattice.flats.begin(), lattice.flats.end(),
            [](const CyclicFlat& x, const CyclicFlat& y) {
              return x.rank != y.rank ? x.rank < y.rank : x.set < y.set;
            });
  return lattice;
}

namespace {

bool stressed(const RankTable& rank, Subset h, int r) {
  bool ok = true;
  for_each_k_subset(h, r, [&](Subset x) {
    if (!ok) return;
    for (Subset rest = x; rest; rest &= rest - 1)
      if (rank(x & ~(rest & -rest)) != r - 1) {
        ok = false;
        return;
      }
  });
  return ok;
}

}  // namespace

SetFamily stressed_hyperplanes(const Matroid& m) {
  const RankTable rank(m);
  SetFamily out;
  for (Subset h : hyperplanes_with(m, rank))
    if (stressed(rank, h, m.rank())) out.push_back(h);
  return out;
}

Matroid relax(const Matroid& m, Subset h) {
  const SetFamily stressed_family = stressed_hyperplanes(m);
  if (std::find(stressed_family.begin(), stressed_family.end(), h) ==
      stressed_family.end())
    throw PreconditionError(format_set(h) + " is not a stressed hyperplane");
  SetFamily bases = m.bases();
  for_each_k_subset(h, m.rank(), [&](Subset x) { bases.push_back(x); });
  return Matroid(m.n(), m.ground(), std::move(bases));
}

bool is_paving(const Matroid& m) {
  // Every (r-1)-subset of E must lie in some basis.
  const int r = m.rank();
  if (r == 0) return true;
  std::unordered_set<Subset> covered;
  for (Subset b : m.bases())
    for (Subset rest = b; rest; rest &= rest - 1)
      covered.insert(b & ~(rest & -rest));
  std::size_t needed = 1;
  const int e = size_of(m.ground());
  for (int i = 0; i < r - 1; ++i) needed = needed * (e - i) / (i + 1);
  return covered.size() == needed;
}

bool is_sparse_paving(const Matroid& m) {
  return is_paving(m) && is_paving(dual(m));
}

Matroid paving_from_hyperplanes(int n, Subset e, int r,
                                const SetFamily& family) {
  check_ground(n, e);
  if (r < 0 || r > size_of(e))
    throw PreconditionError("rank outside [0, |E|]");
  for (Subset s : family) {
    if (!is_subset(s, e))
      throw PreconditionError("set " + format_set(s) +
                              " is not contained in E");
    if (size_of(s) < r)
      throw PreconditionError("set " + format_set(s) + " has fewer than " +
                              std::to_string(r) + " elements");
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (size_of(family[i] & family[j]) > r - 2)
        throw PreconditionError("sets " + format_set(family[i]) + " and " +
                                format_set(family[j]) + " meet in more than " +
                                std::to_string(r - 2) + " elements");
  SetFamily bases;
  for_each_k_subset(e, r, [&](Subset b) {
    for (Subset s : family)
      if (is_subset(b, s)) return;
    bases.push_back(b);
  });
  if (bases.empty())
    throw PreconditionError("the sets cover every " + std::to_string(r) +
                            "-subset of E");
  return Matroid(n, e, std::move(bases));
}

Matroid paving_from_hyperplanes(int n, int r, const SetFamily& family) {
  return paving_from_hyperplanes(n, full_set(n), r, family);
}

Matroid matroid_from_matrix(const RationalMatrix& a) {
  if (a.cols() > kMaxGround) throw ArgumentError("more than 64 columns");
  if (matrix_rank(a) != a.rows())
    throw PreconditionError("matrix does not have full row rank");
  SetFamily bases;
  for_each_k_subset(full_set(a.cols()), a.rows(), [&](Subset j) {
    std::vector<int> cols;
    for (int e : elements(j)) cols.push_back(e - 1);
    if (column_minor(a, cols) != 0) bases.push_back(j);
  });
  return Matroid(a.cols(), std::move(bases));
}

std::string to_json(const Matroid& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n();
  j["r"] = m.rank();
  if (m.ground() != full_set(m.n())) j["ground"] = elements(m.ground());
  SetFamily bases = m.bases();
  sort_family(bases);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (Subset b : bases) arr.push_back(elements(b));
  j["bases"] = arr;
  return j.dump();
}

Matroid parse_matroid_json(const std::string& text) {
  const nlohmann::json j = json_util::parse(text);
  const int n = json_util::get_int(j, "n");
  const int r = json_util::get_int(j, "r");
  if (n < 0 || n > kMaxGround) throw ParseError("n outside [0, 64]", 1, 1);
  Subset ground = full_set(n);
  if (j.contains("ground")) {
    ground = 0;
    for (int e : json_util::get_int_array(j, "ground")) {
      if (e < 1 || e > n) throw ParseError("ground element outside [n]", 1, 1);
      ground |= element(e);
    }
  }
  if (!j.contains("bases") || !j["bases"].is_array())
    throw ParseError("missing array field \"bases\"", 1, 1);
  SetFamily bases;
  for (const auto& b : j["bases"]) {
    Subset s = 0;
    if (b.is_string()) {
      std::string hex = b.get<std::string>();
      if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0)
        hex = hex.substr(2);
      try {
        std::size_t used = 0;
        s = std::stoull(hex, &used, 16);
        if (used != hex.size() || hex.empty()) throw std::invalid_argument(hex);
      } catch (const std::exception&) {
        throw ParseError("bad bitmask \"" + b.get<std::string>() + "\"", 1, 1);
      }
      if (!is_subset(s, full_set(n)))
        throw ParseError("bitmask outside [n]", 1, 1);
    } else {
      for (int e : json_util::int_array(b, "bases")) {
        if (e < 1 || e > n) throw ParseError("basis element outside [n]", 1, 1);
        s |= element(e);
      }
    }
    if (size_of(s) != r)
      throw ParseError("basis " + format_set(s) + " does not have size r", 1,
                       1);
    bases.push_back(s);
  }
  try {
    return Matroid(n, ground, std::move(bases));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace poslab
