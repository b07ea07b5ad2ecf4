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

#ifndef POSLAB_TESTS_ORACLES_HPP_
#define POSLAB_TESTS_ORACLES_HPP_

// Slow reference implementations written independently of the library.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "poslab/diagram.hpp"
#include "poslab/rational.hpp"
#include "poslab/subset.hpp"

namespace oracle {

using poslab::Subset;

inline bool le_ok(const poslab::LeDiagram& d) {
  const int k = d.k();
  for (int i = 1; i <= k; ++i)
    for (int i2 = i + 1; i2 <= k; ++i2)
      for (int j = 1; j <= d.shape().part(i2); ++j)
        for (int j2 = j + 1; j2 <= d.shape().part(i2); ++j2)
          if (d.filled(i, j2) && d.filled(i2, j) && !d.filled(i2, j2))
            return false;
  return true;
}

// Every filling of every shape, kept when le_ok.
inline std::vector<poslab::LeDiagram> all_le(int k, int n) {
  const int m = n - k;
  std::vector<poslab::LeDiagram> out;
  std::vector<int> parts(k);
  std::function<void(int, int)> shapes = [&](int row, int cap) {
    if (row == k) {
      poslab::Shape s(k, n, parts);
      const int cells = s.cell_count();
      std::vector<poslab::Cell> list;
      for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= parts[r - 1]; ++c) list.push_back({r, c});
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        std::vector<poslab::Cell> filled;
        for (int t = 0; t < cells; ++t)
          if ((mask >> t) & 1) filled.push_back(list[t]);
        poslab::LeDiagram d(s, filled);
        if (le_ok(d)) out.push_back(d);
      }
      return;
    }
    for (int p = 0; p <= cap; ++p) {
      parts[row] = p;
      shapes(row + 1, p);
    }
  };
  shapes(0, m);
  return out;
}

// Terminal sets of vertex-disjoint path families, by listing every path.
inline std::vector<Subset> bases_by_paths(const poslab::LeDiagram& d) {
  const int k = d.k(), n = d.n();
  // Labels by walking the boundary.
  std::vector<int> src(k + 1), snk(d.width() + 1);
  {
    int label = 1, col = d.width();
    for (int r = 1; r <= k; ++r) {
      while (col > d.shape().part(r)) snk[col--] = label++;
      src[r] = label++;
    }
    while (col >= 1) snk[col--] = label++;
  }
  // Vertex ids: 1000*r + c for cells, -label for boundary.
  auto next_left = [&](int r, int c) {
    for (int cc = c - 1; cc >= 1; --cc)
      if (d.filled(r, cc)) return 1000 * r + cc;
    return 0;
  };
  auto next_down = [&](int r, int c) {
    for (int rr = r + 1; rr <= k && d.shape().part(rr) >= c; ++rr)
      if (d.filled(rr, c)) return 1000 * rr + c;
    return -snk[c];
  };
  struct Path {
    std::set<int> vertices;
    int end;
  };
  std::vector<std::vector<Path>> paths(k + 1);
  for (int r = 1; r <= k; ++r) {
    paths[r].push_back({{-src[r]}, src[r]});
    const int first = next_left(r, d.shape().part(r) + 1);
    if (!first) continue;
    std::function<void(int, std::set<int>)> walk = [&](int v,
                                                       std::set<int> seen) {
      if (v < 0) {
        paths[r].push_back({seen, -v});
        return;
      }
      seen.insert(v);
      const int rr = v / 1000, cc = v % 1000;
      if (int l = next_left(rr, cc)) walk(l, seen);
      const int dn = next_down(rr, cc);
      std::set<int> s2 = seen;
      if (dn < 0) s2.insert(dn);
      walk(dn, s2);
    };
    walk(first, {-src[r]});
  }
  std::set<Subset> found;
  std::function<void(int, std::set<int>, Subset)> choose =
      [&](int r, std::set<int> used, Subset ends) {
        if (r > k) {
          found.insert(ends);
          return;
        }
        for (const Path& p : paths[r]) {
          bool clash = false;
          for (int v : p.vertices)
            if (used.count(v)) clash = true;
          if (clash || (ends & poslab::element(p.end))) continue;
          std::set<int> u2 = used;
          u2.insert(p.vertices.begin(), p.vertices.end());
          choose(r + 1, u2, ends | poslab::element(p.end));
        }
      };
  choose(1, {}, 0);
  (void)n;
  return {found.begin(), found.end()};
}

// Leibniz expansion.
inline poslab::Rational leibniz(const std::vector<std::vector<poslab::Rational>>& a) {
  const int k = static_cast<int>(a.size());
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  poslab::Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    poslab::Rational term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < k; ++i) term *= a[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline int rank(const std::vector<Subset>& bases, Subset a) {
  int best = 0;
  for (Subset b : bases) best = std::max(best, poslab::size_of(a & b));
  return best;
}

// Flats as closures of all subsets.
inline std::vector<Subset> flats(int n, const std::vector<Subset>& bases) {
  std::set<Subset> out;
  for (Subset a = 0; a < (Subset{1} << n); ++a) {
    const int r = rank(bases, a);
    Subset cl = a;
    for (int e = 1; e <= n; ++e)
      if (rank(bases, a | poslab::element(e)) == r) cl |= poslab::element(e);
    out.insert(cl);
  }
  return {out.begin(), out.end()};
}

inline std::vector<Subset> circuits(int n, const std::vector<Subset>& bases) {
  auto indep = [&](Subset a) {
    for (Subset b : bases)
      if ((a & ~b) == 0) return true;
    return false;
  };
  std::vector<Subset> out;
  for (Subset a = 1; a < (Subset{1} << n); ++a) {
    if (indep(a)) continue;
    bool minimal = true;
    for (int e = 1; e <= n; ++e)
      if (poslab::contains(a, e) && !indep(a & ~poslab::element(e)))
        minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

// Cyclic flats: flats that are unions of circuits.
inline std::vector<Subset> cyclic_flats(int n, const std::vector<Subset>& bases) {
  const auto circ = circuits(n, bases);
  std::vector<Subset> out;
  for (Subset f : flats(n, bases)) {
    Subset u = 0;
    for (Subset c : circ)
      if ((c & ~f) == 0) u |= c;
    if (u == f) out.push_back(f);
  }
  return out;
}

// Transversals by trying every injective choice of representatives.
inline std::vector<Subset> transversals(const std::vector<Subset>& sets) {
  std::set<Subset> out;
  std::function<void(std::size_t, Subset)> go = [&](std::size_t i, Subset used) {
    if (i == sets.size()) {
      out.insert(used);
      return;
    }
    for (int e : poslab::elements(sets[i] & ~used)) go(i + 1, used | poslab::element(e));
  };
  go(0, 0);
  return {out.begin(), out.end()};
}

inline std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace oracle

#endif  // POSLAB_TESTS_ORACLES_HPP_
