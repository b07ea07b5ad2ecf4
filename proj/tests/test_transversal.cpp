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
#include "poslab/transversal.hpp"

using namespace poslab;

namespace {

Matroid positroid(const LeDiagram& d) { return Matroid(d.n(), bases_from_flows(d)); }

SetSystem support_of(const LeDiagram& d) {
  return support(boundary_measurement(build_network(d)));
}

int rank_one_cyclic_flats(const Matroid& m) {
  int count = 0;
  for (const CyclicFlat& z : cyclic_flats(m).flats) count += z.rank == 1;
  return count;
}

}  // namespace

TEST_CASE("set system construction") {
  CHECK_THROWS_AS(SetSystem(3, {subset_of({1}), subset_of({1})}), ConstructionError);
  CHECK_THROWS_AS(SetSystem(3, {subset_of({4})}), ArgumentError);
  CHECK_NOTHROW(SetSystem(3, {subset_of({1}), subset_of({1, 2})}));
}

TEST_CASE("transversal matroids of small systems") {
  for (int n = 1; n <= 6; ++n)
    for (int r = 1; r <= n; ++r) {
      const SetSystem s(n, std::vector<Subset>(r, full_set(n)));
      CHECK(transversal_matroid(s) == uniform(r, n));
      // A single [n] cannot shrink; with r >= 2 copies any one can.
      CHECK(is_minimal_presentation(s) == (r == 1));
    }
  const SetSystem single(2, {subset_of({1}), subset_of({2})});
  CHECK(transversal_matroid(single).bases() == SetFamily{subset_of({1, 2})});
  CHECK(is_minimal_presentation(single));

  const SetSystem intro(4, {subset_of({1, 2}), subset_of({2, 3, 4})});
  SetFamily expected;
  for (Subset b : k_subsets(full_set(4), 2))
    if (b != subset_of({3, 4})) expected.push_back(b);
  CHECK(oracle::sorted(transversal_matroid(intro).bases()) == oracle::sorted(expected));
  CHECK(oracle::sorted(transversal_matroid(intro).bases()) ==
        oracle::transversals(intro.sets()));
}

TEST_CASE("matching agrees with injective choices") {
  for (int n = 2; n <= 6; ++n)
    for (const LeDiagram& d : enumerate_le_diagrams(2, n)) {
      const SetSystem s = support_of(d);
      CHECK(oracle::sorted(transversal_matroid(s).bases()) ==
            oracle::transversals(s.sets()));
    }
}

TEST_CASE("crossing as written") {
  const SetSystem s(4, {subset_of({1, 3}), subset_of({2, 4})});
  CHECK_FALSE(is_noncrossing(s));
  const auto w = find_crossing(s);
  REQUIRE(w);
  CHECK(w->a == 1);
  CHECK(w->b == 2);
  CHECK(w->c == 3);
  CHECK(w->d == 4);
  CHECK(w->i == 1);
  CHECK(w->j == 2);
  CHECK(is_noncrossing(SetSystem(5, {subset_of({1}), subset_of({1, 2}),
                                     subset_of({1, 2, 3, 4, 5})})));
  // d may lie in S in the verbatim reading only.
  CHECK(find_crossing(subset_of({1, 3, 4}), subset_of({2, 4}), 4,
                      CrossingMode::kAsPrinted));
  CHECK_FALSE(find_crossing(subset_of({1, 3, 4}), subset_of({2, 4}), 4,
                            CrossingMode::kSymmetric));
}

TEST_CASE("nested systems never cross") {
  for (int n = 1; n <= 6; ++n)
    for (Subset a = 1; a <= full_set(n); ++a)
      for (Subset b = a; b <= full_set(n); b = (b + 1) | a)
        CHECK_FALSE(find_crossing(a, b, n, CrossingMode::kAsPrinted));
}

TEST_CASE("supports of Le-networks are noncrossing in both modes") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      for (const LeDiagram& d : enumerate_le_diagrams(k, n)) {
        const SetSystem s = support_of(d);
        CHECK(is_noncrossing(s));
        CHECK(is_noncrossing(s, CrossingMode::kSymmetric));
        CHECK(is_fundamental_transversal(transversal_matroid(s)));
      }
}

TEST_CASE("square diagrams are presented by their supports") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      for (const LeDiagram& d : enumerate_le_diagrams(k, n)) {
        if (!validate_sq(d)) continue;
        const SetSystem s = support_of(d);
        const Matroid m = positroid(d);
        CHECK(transversal_matroid(s) == m);
        CHECK(is_minimal_presentation(s));
        CHECK(is_fundamental_transversal(m));
      }
}

TEST_CASE("transversality verdicts on named examples") {
  CHECK(is_transversal(positroid(fixtures::intro())));
  CHECK(is_transversal(uniform(3, 6)));
  CHECK(is_fundamental_transversal(uniform(3, 6)));
  const TransversalVerdict v = classify_transversal(positroid(fixtures::rank_two_reduced()));
  CHECK_FALSE(v.transversal);
  CHECK_FALSE(v.fundamental);
  REQUIRE(v.violation);
  CHECK(v.violation->size() >= 2);
}

TEST_CASE("three transversal non-fundamental positroids at n=6, k=3") {
  int found = 0;
  for (const LeDiagram& d : enumerate_le_diagrams(3, 6)) {
    const TransversalVerdict v = classify_transversal(positroid(d));
    if (v.transversal && !v.fundamental) {
      ++found;
      CHECK(v.strict);
    }
  }
  CHECK(found == 3);
}

TEST_CASE("fundamental implies transversal") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (const LeDiagram& d : enumerate_le_diagrams(k, n)) {
        const TransversalVerdict v = classify_transversal(positroid(d));
        if (v.fundamental) CHECK(v.transversal);
      }
}

TEST_CASE("transversal exactly when the loopless reduction is") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k)
      for (const LeDiagram& d : enumerate_le_diagrams(k, n)) {
        if (loops(d) == 0) continue;
        CHECK(is_transversal(positroid(d)) ==
              is_transversal(positroid(loopless_reduction(d))));
      }
}

TEST_CASE("tau on named diagrams") {
  const Tau t = tau(fixtures::rank_two_reduced());
  CHECK(t.value == 3);
  CHECK(tau(fixtures::intro()).value == 1);
  CHECK(tau(fixtures::intro()).blocks.size() == 1);
  CHECK(tau(LeDiagram::full(2, 6)).value == 0);
  CHECK_THROWS_AS(tau(fixtures::rank_two_with_loops()), PreconditionError);
  CHECK_THROWS_AS(tau(fixtures::running_example()), PreconditionError);
  CHECK_FALSE(is_transversal_rank2(fixtures::rank_two_with_loops()));
  CHECK(is_transversal_rank2(fixtures::intro()));
  CHECK(is_transversal_rank2(LeDiagram::full(2, 6)));
  CHECK_THROWS_AS(is_transversal_rank2(fixtures::running_example()), PreconditionError);
}

TEST_CASE("tau counts rank-one cyclic flats") {
  for (int n = 2; n <= 9; ++n)
    for (const LeDiagram& d : enumerate_le_diagrams(2, n)) {
      if (loops(d) != 0) continue;
      CHECK(tau(d).value == rank_one_cyclic_flats(positroid(d)));
    }
}

TEST_CASE("rank-2 criterion agrees with the cyclic-flat test") {
  for (int n = 2; n <= 8; ++n)
    for (const LeDiagram& d : enumerate_le_diagrams(2, n))
      CHECK(is_transversal_rank2(d) == is_transversal(positroid(d)));
}

TEST_CASE("columns of one L block are parallel, blocks are independent") {
  for (int n = 3; n <= 8; ++n)
    for (const LeDiagram& d : enumerate_le_diagrams(2, n)) {
      if (loops(d) != 0) continue;
      const Tau t = tau(d);
      const Matroid m = positroid(d);
      const BoundaryLabeling lab = boundary_labeling(d);
      std::vector<int> reps;
      for (auto [lo, hi] : t.blocks) {
        Subset block = 0;
        for (int c = lo; c <= hi; ++c) block |= element(lab.col_sink[c - 1]);
        CHECK(rank_of(m, block) == 1);
        reps.push_back(lab.col_sink[hi - 1]);
      }
      for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
          CHECK(rank_of(m, element(reps[i]) | element(reps[j])) == 2);
    }
}

TEST_CASE("set system JSON") {
  const SetSystem s(4, {subset_of({1, 2}), subset_of({2, 3, 4})});
  CHECK(to_json(s) == R"({"n":4,"sets":[[1,2],[2,3,4]]})");
  CHECK(parse_set_system_json(to_json(s)) == s);
  CHECK_THROWS_AS(parse_set_system_json(R"({"n":4,"sets":[[5]]})"), Error);
}
