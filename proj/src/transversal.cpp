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

#include "poslab/transversal.hpp"

#include <algorithm>

#include "json.hpp"
#include "json_util.hpp"
#include "poslab/errors.hpp"

namespace poslab {

namespace {

// Kuhn's augmenting paths from set i; owner[e-1] is the set holding e.
bool try_assign(const std::vector<Subset>& sets, Subset allowed, int i,
                std::vector<int>& owner, Subset& visited) {
  for (Subset rest = sets[i] & allowed & ~visited; rest; rest &= rest - 1) {
    const int e = std::countr_zero(rest);
    visited |= Subset{1} << e;
    if (owner[e] < 0 || try_assign(sets, allowed, owner[e], owner, visited)) {
      owner[e] = i;
      return true;
    }
  }
  return false;
}

bool full_matching(const std::vector<Subset>& sets, Subset allowed) {
  std::vector<int> owner(kMaxGround, -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Subset visited = 0;
    if (!try_assign(sets, allowed, static_cast<int>(i), owner, visited))
      return false;
  }
  return true;
}

}  // namespace

bool has_sdr_onto(const std::vector<Subset>& sets, Subset j) {
  if (size_of(j) != static_cast<int>(sets.size())) return false;
  return full_matching(sets, j);
}

bool has_transversal(const std::vector<Subset>& sets) {
  return full_matching(sets, ~Subset{0});
}

SetSystem::SetSystem(int n, std::vector<Subset> sets)
    : n_(n), sets_(std::move(sets)) {
  if (n < 0 || n > kMaxGround) throw ArgumentError("n must lie in [0, 64]");
  for (Subset s : sets_)
    if (!is_subset(s, full_set(n)))
      throw ArgumentError("set " + format_set(s) + " leaves [n]");
  if (!has_transversal(sets_))
    throw ConstructionError("set system has no transversal");
}

Matroid transversal_matroid(const SetSystem& s) {
  SetFamily bases;
  for_each_k_subset(full_set(s.n()), s.k(), [&](Subset j) {
    if (full_matching(s.sets(), j)) bases.push_back(j);
  });
  return Matroid(s.n(), std::move(bases));
}

std::optional<CrossingWitness> find_crossing(Subset s, Subset t, int n,
                                             CrossingMode mode) {
  const Subset ac = s & ~t;
  const Subset b_side = t & ~s;
  const Subset d_side = mode == CrossingMode::kSymmetric ? t & ~s : t;
  // Positions are offsets from a in the cyclic order.
  for (int a : elements(ac)) {
    auto at = [&](int offset) { return (a - 1 + offset) % n + 1; };
    for (int ob = 1; ob < n; ++ob) {
      if (!contains(b_side, at(ob))) continue;
      for (int oc = ob + 1; oc < n; ++oc) {
        if (!contains(ac, at(oc))) continue;
        for (int od = oc + 1; od < n; ++od) {
          if (!contains(d_side, at(od))) continue;
          return CrossingWitness{a, at(ob), at(oc), at(od), 0, 0};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<CrossingWitness> find_crossing(const SetSystem& s,
                                             CrossingMode mode) {
  for (int i = 0; i < s.k(); ++i)
    for (int j = 0; j < s.k(); ++j) {
      if (i == j) continue;
      auto w = find_crossing(s.sets()[i], s.sets()[j], s.n(), mode);
      if (w) {
        w->i = i + 1;
        w->j = j + 1;
        return w;
      }
    }
  return std::nullopt;
}

bool is_noncrossing(const SetSystem& s, CrossingMode mode) {
  return !find_crossing(s, mode);
}

bool is_minimal_presentation(const SetSystem& s) {
  const Matroid m = transversal_matroid(s);
  for (int i = 0; i < s.k(); ++i) {
    for (int e : elements(s.sets()[i])) {
      std::vector<Subset> smaller = s.sets();
      smaller[i] &= ~element(e);
      if (!has_transversal(smaller)) continue;
      if (transversal_matroid(SetSystem(s.n(), smaller)) == m) return false;
    }
  }
  return true;
}

namespace {

struct Term {
  Subset set;
  long coef;
};

class AntichainSearch {
 public:
  AntichainSearch(const Matroid& m)
      : rank_(m), lattice_(cyclic_flats(m)) {}

  TransversalVerdict run() {
    const std::size_t count = lattice_.flats.size();
    for (std::size_t i = 0; i < count && verdict_.transversal; ++i) {
      chosen_ = {i};
      std::vector<Term> terms = {{0, -1}, {lattice_.flats[i].set, 1}};
      extend(i, lattice_.flats[i].set, terms);
    }
    return verdict_;
  }

 private:
  void extend(std::size_t last, Subset meet, const std::vector<Term>& terms) {
    for (std::size_t j = last + 1;
         j < lattice_.flats.size() && verdict_.transversal; ++j) {
      bool incomparable = true;
      for (std::size_t c : chosen_)
        if (lattice_.less_equal(c, j) || lattice_.less_equal(j, c)) {
          incomparable = false;
          break;
        }
      if (!incomparable) continue;
      const Subset f = lattice_.flats[j].set;
      std::vector<Term> next = terms;
      for (const Term& t : terms) next.push_back({t.set | f, -t.coef});
      merge(next);
      chosen_.push_back(j);
      check(meet & f, next);
      extend(j, meet & f, next);
      chosen_.pop_back();
    }
  }

  static void merge(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.set < b.set; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
      Term t = terms[i++];
      while (i < terms.size() && terms[i].set == t.set) t.coef += terms[i++].coef;
      if (t.coef != 0 || t.set == 0) terms[out++] = t;
    }
    terms.resize(out);
  }

  void check(Subset meet, const std::vector<Term>& terms) {
    long rhs = 0;
    for (const Term& t : terms) rhs += t.coef * rank_(t.set);
    const long lhs = rank_(meet);
    if (lhs == rhs) return;
    SetFamily witness;
    for (std::size_t c : chosen_) witness.push_back(lattice_.flats[c].set);
    if (lhs > rhs) {
      verdict_.transversal = false;
      verdict_.violation = witness;
    }
    if (verdict_.fundamental) {
      verdict_.fundamental = false;
      verdict_.strict = witness;
    }
  }

  RankTable rank_;
  CyclicFlatLattice lattice_;
  std::vector<std::size_t> chosen_;
  TransversalVerdict verdict_;
};

}  // namespace

TransversalVerdict classify_transversal(const Matroid& m) {
  return AntichainSearch(m).run();
}

bool is_transversal(const Matroid& m) {
  return classify_transversal(m).transversal;
}

bool is_fundamental_transversal(const Matroid& m) {
  return classify_transversal(m).fundamental;
}

Tau tau(const LeDiagram& d) {
  if (d.k() != 2) throw PreconditionError("tau needs a rank-2 diagram");
  if (loops(d)) throw PreconditionError("tau needs a loopless diagram");
  enum Kind { kTop, kBottom, kBoth };
  const int width = d.width();
  std::vector<Kind> kind(width + 1);
  for (int c = 1; c <= width; ++c) {
    const bool top = d.filled(1, c);
    const bool bottom = c <= d.shape().part(2) && d.filled(2, c);
    kind[c] = top && bottom ? kBoth : top ? kTop : kBottom;
  }
  Tau t;
  std::vector<char> covered(width + 1, 0);
  for (int c = 2; c <= width; ++c) {
    if (kind[c] != kBoth || kind[c - 1] != kBottom) continue;
    int start = c - 1;
    while (start > 1 && kind[start - 1] == kBottom) --start;
    t.blocks.push_back({start, c});
    for (int x = start; x <= c; ++x) covered[x] = 1;
  }
  for (int c = 1; c <= width; ++c) {
    if (covered[c]) continue;
    if (kind[c] == kTop) t.top_only = true;
    if (kind[c] == kBottom) t.stray_bottom = true;
  }
  t.value = static_cast<int>(t.blocks.size()) + t.top_only + t.stray_bottom;
  return t;
}

bool is_transversal_rank2(const LeDiagram& d) {
  if (d.k() != 2) throw PreconditionError("needs a rank-2 diagram");
  return tau(loopless_reduction(d)).value <= 2;
}

std::string to_json(const SetSystem& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n();
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (Subset x : s.sets()) sets.push_back(elements(x));
  j["sets"] = sets;
  return j.dump();
}

SetSystem parse_set_system_json(const std::string& text) {
  const nlohmann::json j = json_util::parse(text);
  const int n = json_util::get_int(j, "n");
  if (n < 0 || n > kMaxGround) throw ParseError("n outside [0, 64]", 1, 1);
  if (!j.contains("sets") || !j["sets"].is_array())
    throw ParseError("missing array field \"sets\"", 1, 1);
  std::vector<Subset> sets;
  for (const auto& s : j["sets"]) {
    Subset x = 0;
    for (int e : json_util::int_array(s, "sets")) {
      if (e < 1 || e > n) throw ParseError("set element outside [n]", 1, 1);
      x |= element(e);
    }
    sets.push_back(x);
  }
  return SetSystem(n, sets);
}

}  // namespace poslab
