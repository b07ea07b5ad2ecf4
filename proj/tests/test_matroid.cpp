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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "poslab/enumeration.hpp"
#include "poslab/errors.hpp"
#include "poslab/matroid.hpp"
#include "poslab/network.hpp"

using namespace poslab;

namespace {

std::vector<Matroid> positroids(int n_max) {
  std::vector<Matroid> out;
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k)
      for (const LeDiagram& d : enumerate_le_diagrams(k, n))
        out.emplace_back(n, bases_from_flows(d));
  return out;
}

// Line with four points plus two free points, rank 3.
Matroid four_point_line() {
  return paving_from_hyperplanes(6, 3, {subset_of({1, 2, 3, 4})});
}

}  // namespace

TEST_CASE("uniform matroids") {
  const Matroid u = uniform(2, 4);
  CHECK(u.bases().size() == 6);
  CHECK(rank_of(u, subset_of({1, 2, 3})) == 2);
  CHECK(circuits(u).size() == 4);
  CHECK(is_paving(u));
  CHECK(is_sparse_paving(u));
  CHECK(loops(uniform(0, 3)) == full_set(3));
  CHECK(coloops(uniform(3, 3)) == full_set(3));
  CHECK(is_paving(uniform(0, 3)));
}

TEST_CASE("constructor and validation") {
  CHECK_THROWS_AS(Matroid(3, SetFamily{}), ArgumentError);
  CHECK_THROWS_AS(Matroid(3, {subset_of({1}), subset_of({1, 2})}), ArgumentError);
  CHECK_THROWS_AS(Matroid(3, {subset_of({4})}), ArgumentError);
  // {1,2},{3,4} fails exchange.
  CHECK_FALSE(validate_bases(4, 2, {subset_of({1, 2}), subset_of({3, 4})}));
  CHECK(validate_bases(4, 2, uniform(2, 4).bases()));
  CHECK_FALSE(validate_bases(4, 3, uniform(2, 4).bases()));
}

TEST_CASE("rank, closure and flats against closures of all subsets") {
  for (const Matroid& m : positroids(5)) {
    const auto& b = m.bases();
    for (Subset a = 0; a < (Subset{1} << m.n()); ++a)
      CHECK(rank_of(m, a) == oracle::rank(b, a));
    CHECK(oracle::sorted(flats(m)) == oracle::flats(m.n(), b));
    CHECK(oracle::sorted(circuits(m)) == oracle::sorted(oracle::circuits(m.n(), b)));
    std::vector<Subset> cyc;
    for (const CyclicFlat& z : cyclic_flats(m).flats) {
      cyc.push_back(z.set);
      CHECK(z.rank == oracle::rank(b, z.set));
    }
    CHECK(oracle::sorted(cyc) == oracle::cyclic_flats(m.n(), b));
    for (Subset f : flats(m)) CHECK(closure(m, f) == f);
  }
}

TEST_CASE("rank axioms") {
  for (const Matroid& m : positroids(5)) {
    const RankTable r(m);
    const Subset all = full_set(m.n());
    for (Subset a = 0; a <= all; ++a) {
      CHECK(r(a) <= size_of(a));
      for (int e : elements(all & ~a)) CHECK(r(a | element(e)) - r(a) <= 1);
    }
    for (Subset a = 0; a <= all; a += 3)
      for (Subset c = 0; c <= all; c += 5)
        CHECK(r(a | c) + r(a & c) <= r(a) + r(c));
  }
}

TEST_CASE("duality is an involution and preserves the exchange axiom") {
  for (const Matroid& m : positroids(6)) {
    const Matroid d = dual(m);
    CHECK(d.rank() == m.n() - m.rank());
    CHECK(validate_bases(d));
    CHECK(dual(d) == m);
    CHECK(loops(d) == coloops(m));
  }
}

TEST_CASE("restriction and direct sum") {
  const Matroid u = uniform(2, 4);
  const Matroid r = restriction(u, subset_of({1, 2, 3}));
  CHECK(r.ground() == subset_of({1, 2, 3}));
  CHECK(r.bases().size() == 3);
  const Matroid r1 = restriction(u, subset_of({4}));
  CHECK(r1.rank() == 1);

  const Matroid a = uniform(1, 6, subset_of({1, 2}));
  const Matroid b = uniform(2, 6, subset_of({3, 4, 5, 6}));
  const Matroid s = direct_sum(a, b);
  CHECK(s.rank() == 3);
  CHECK(s.bases().size() == 2 * 6);
  CHECK(validate_bases(s));
  CHECK_THROWS_AS(direct_sum(a, a), ArgumentError);
  // Splitting off a coloop.
  const Matroid c = direct_sum(uniform(1, 3, subset_of({1})),
                               uniform(1, 3, subset_of({2, 3})));
  CHECK(coloops(c) == subset_of({1}));
}

TEST_CASE("stressed hyperplanes and relaxation") {
  const Matroid m = four_point_line();
  CHECK(m.rank() == 3);
  CHECK(validate_bases(m));
  SetFamily big;
  for (Subset h : stressed_hyperplanes(m))
    if (size_of(h) >= m.rank()) big.push_back(h);
  CHECK(big == SetFamily{subset_of({1, 2, 3, 4})});
  // Two-element hyperplanes are stressed vacuously.
  CHECK(stressed_hyperplanes(m).size() == hyperplanes(m).size());
  CHECK(dependent_hyperplanes(m) == SetFamily{subset_of({1, 2, 3, 4})});
  CHECK(relax(m, subset_of({1, 2, 3, 4})) == uniform(3, 6));
  CHECK_THROWS_AS(relax(m, subset_of({1, 2})), PreconditionError);
  CHECK(is_paving(m));
  CHECK_FALSE(is_sparse_paving(m));
}

TEST_CASE("relaxing every stressed hyperplane of a paving matroid gives uniform") {
  for (const Matroid& m : positroids(6)) {
    if (!is_paving(m) || loops(m) != 0 || m.rank() == 0) continue;
    Matroid cur = m;
    auto nontrivial = [&](const Matroid& x) {
      for (Subset h : stressed_hyperplanes(x))
        if (size_of(h) >= x.rank()) return std::optional<Subset>(h);
      return std::optional<Subset>();
    };
    for (auto h = nontrivial(cur); h; h = nontrivial(cur)) cur = relax(cur, *h);
    CHECK(cur == uniform(m.rank(), m.n()));
  }
}

TEST_CASE("paving exactly when every hyperplane is stressed") {
  for (const Matroid& m : positroids(6))
    CHECK(is_paving(m) == (stressed_hyperplanes(m) == hyperplanes(m)));
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r) {
      const Matroid u = uniform(r, n);
      CHECK(stressed_hyperplanes(u) == hyperplanes(u));
    }
}

TEST_CASE("circuit-hyperplanes are stressed") {
  for (const Matroid& m : positroids(6)) {
    const SetFamily st = stressed_hyperplanes(m);
    const SetFamily c = circuits(m);
    for (Subset h : hyperplanes(m))
      if (std::find(c.begin(), c.end(), h) != c.end())
        CHECK(std::find(st.begin(), st.end(), h) != st.end());
  }
}

TEST_CASE("paving from hyperplanes") {
  CHECK_THROWS_AS(
      paving_from_hyperplanes(6, 3, {subset_of({1, 2, 3}), subset_of({1, 2, 4})}),
      PreconditionError);
  CHECK_THROWS_AS(paving_from_hyperplanes(6, 3, {subset_of({1, 2})}),
                  PreconditionError);
  CHECK_THROWS_AS(paving_from_hyperplanes(3, 2, {subset_of({1, 2, 3})}),
                  PreconditionError);
  const Matroid m = paving_from_hyperplanes(
      6, 3, {subset_of({1, 2, 3}), subset_of({3, 4, 5})});
  CHECK(validate_bases(m));
  CHECK(is_sparse_paving(m));
  CHECK(m.bases().size() == 18);
}

TEST_CASE("matroid of a matrix") {
  const RationalMatrix a({{1, 0, 1, 1}, {0, 1, 1, 2}});
  const Matroid m = matroid_from_matrix(a);
  CHECK(m == uniform(2, 4));
  const RationalMatrix b({{1, 0, 2}, {0, 1, 0}});
  CHECK(loops(matroid_from_matrix(b)) == 0);
  CHECK(matroid_from_matrix(b).bases().size() == 2);
  CHECK_THROWS_AS(matroid_from_matrix(RationalMatrix({{1, 2}, {2, 4}})),
                  PreconditionError);
}

TEST_CASE("JSON round trip") {
  const Matroid m = four_point_line();
  CHECK(parse_matroid_json(to_json(m)) == m);
  const Matroid r = restriction(uniform(2, 5), subset_of({2, 4, 5}));
  CHECK(parse_matroid_json(to_json(r)) == r);
  CHECK(to_json(uniform(1, 2)) == R"({"n":2,"r":1,"bases":[[1],[2]]})");
  CHECK_THROWS_AS(parse_matroid_json(R"({"n":2,"r":1,"bases":[[3]]})"), Error);
}
