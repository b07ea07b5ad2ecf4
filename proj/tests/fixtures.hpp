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

#ifndef POSLAB_TESTS_FIXTURES_HPP_
#define POSLAB_TESTS_FIXTURES_HPP_

#include <string>

#include "poslab/diagram.hpp"
#include "poslab/paving.hpp"

namespace fixtures {

inline poslab::LeDiagram ascii(const std::string& text) {
  return poslab::parse_ascii(text);
}

// 2x2 box, top-left cell empty.
inline poslab::LeDiagram intro() { return ascii(".*\n**\n"); }

// Top row empty.
inline poslab::LeDiagram two_by_two_bottom_row() { return ascii("..\n**\n"); }
// Only the right column filled.
inline poslab::LeDiagram two_by_two_right_column() {
  return ascii(".*\n.*\n");
}

// Shape (4,4,3) in a 3x4 box.
inline poslab::LeDiagram running_example() {
  return ascii("k=3 n=7\n.**.\n.***\n..*\n");
}

inline poslab::LeDiagram amplituhedron(int which) {
  switch (which) {
    case 0:
      return ascii("k=3 n=6\n*.*\n*.*\n*.*\n");
    case 1:
      return ascii("k=3 n=6\n*.*\n*.*\n**\n");
    case 2:
      return ascii("k=3 n=6\n*.*\n**\n**\n");
    default:
      return ascii("k=3 n=6\n**\n**\n**\n");
  }
}

// Rank 2 on [12] with two empty columns.
inline poslab::LeDiagram rank_two_with_loops() {
  return ascii("k=2 n=12\n*.*...**.*\n.**.***\n");
}

inline poslab::LeDiagram rank_two_reduced() {
  return ascii("k=2 n=10\n*.*..***\n.*****\n");
}

inline poslab::PldcFunction f_of(int k, int n,
                                 std::initializer_list<std::pair<int, int>> nz) {
  std::vector<int> v(n, 0);
  for (auto [i, value] : nz) v[i - 1] = value;
  return poslab::PldcFunction(k, n, v);
}

// k=4, n=10.
inline poslab::PldcFunction sparse_example() {
  return f_of(4, 10, {{1, 1}, {3, 1}, {6, 1}, {9, 1}});
}
inline poslab::PldcFunction double_run_example() {
  return f_of(4, 10, {{1, 1}, {3, 2}, {6, 1}, {9, 1}});
}
inline poslab::PldcFunction wrap_example() {
  return f_of(4, 10, {{1, 1}, {3, 1}, {6, 1}, {10, 1}});
}
inline poslab::PldcFunction not_pldc_example() {
  return f_of(4, 10, {{1, 2}, {3, 1}, {9, 3}});
}

inline poslab::LeDiagram sparse_example_diagram() {
  return ascii("k=4 n=10\n*.**.*\n******\n.*****\n*****\n");
}
inline poslab::LeDiagram double_run_diagram() {
  return ascii("k=4 n=10\n*.*..*\n******\n.*****\n*****\n");
}
inline poslab::LeDiagram wrap_diagram() {
  return ascii("k=4 n=10\n*.**.*\n******\n******\n.****\n");
}
inline poslab::LeDiagram not_pldc_diagram() {
  return ascii("k=4 n=10\n****.*\n******\n...***\n****\n");
}

}  // namespace fixtures

#endif  // POSLAB_TESTS_FIXTURES_HPP_
