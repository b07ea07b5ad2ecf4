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

#ifndef POSLAB_DIAGRAM_HPP_
#define POSLAB_DIAGRAM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "poslab/subset.hpp"

namespace poslab {

// 1-based; row 1 is on top, column 1 is leftmost.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string format_cell(const Cell& c);

// A partition with k parts (zeros allowed) inside a k x (n-k) box.
class Shape {
 public:
  Shape() = default;
  // Throws StructuralError on non-monotone or out-of-box parts.
  Shape(int k, int n, std::vector<int> parts);

  int k() const { return k_; }
  int n() const { return n_; }
  int width() const { return n_ - k_; }
  const std::vector<int>& parts() const { return parts_; }
  int part(int row) const { return parts_[row - 1]; }
  bool contains(const Cell& c) const {
    return c.row >= 1 && c.row <= k_ && c.col >= 1 && c.col <= part(c.row);
  }
  // Number of cells of the shape in column col.
  int column_height(int col) const;
  int cell_count() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<int> parts_;
};

// A filling of a shape. The filling is stored as one column bitmask per row
// (bit c-1 set when (row, c) holds a bullet). Nothing beyond structural
// validity is enforced; see validate_le.
class LeDiagram {
 public:
  LeDiagram() = default;
  LeDiagram(Shape shape, std::vector<std::uint64_t> rows);
  LeDiagram(Shape shape, const std::vector<Cell>& filled);

  static LeDiagram full(int k, int n);
  static LeDiagram empty(int k, int n);

  const Shape& shape() const { return shape_; }
  int k() const { return shape_.k(); }
  int n() const { return shape_.n(); }
  int width() const { return shape_.width(); }
  bool filled(int row, int col) const {
    return (rows_[row - 1] >> (col - 1)) & 1;
  }
  bool filled(const Cell& c) const { return filled(c.row, c.col); }
  std::uint64_t row_mask(int row) const { return rows_[row - 1]; }
  const std::vector<std::uint64_t>& row_masks() const { return rows_; }
  // Filled cells in row-major order.
  std::vector<Cell> filled_cells() const;
  int bullet_count() const;

  friend bool operator==(const LeDiagram&, const LeDiagram&) = default;

 private:
  Shape shape_;
  std::vector<std::uint64_t> rows_;
};

// Cells (i,j'), (i',j) filled with (i',j') empty, for i<i', j<j'.
struct LeViolation {
  Cell above;
  Cell left;
  Cell empty;
};

std::optional<LeViolation> find_le_violation(const LeDiagram& d);
bool validate_le(const LeDiagram& d);
// Throws PreconditionError when d is not a Le-diagram.
bool validate_sq(const LeDiagram& d);

// Removes every column without a bullet, including box columns that lie
// outside the shape.
LeDiagram loopless_reduction(const LeDiagram& d);

struct BoundaryLabeling {
  std::vector<int> row_source;  // row r -> label, index r-1
  std::vector<int> col_sink;    // column c -> label, index c-1
  Subset sources = 0;
  Subset sinks = 0;
};

BoundaryLabeling boundary_labeling(const Shape& s);
BoundaryLabeling boundary_labeling(const LeDiagram& d);

// Sink labels of all-empty columns.
Subset loops(const LeDiagram& d);
// Source labels of all-empty rows.
Subset coloops(const LeDiagram& d);

// ASCII: optional header "k=K n=N", then one line per row, '*' filled,
// '.' empty. Without the header k is the line count and n = k + longest row.
LeDiagram parse_ascii(const std::string& text);
std::string to_ascii(const LeDiagram& d);

// {"k":K,"n":N,"parts":[...],"filled":[[r,c],...]}
LeDiagram parse_diagram_json(const std::string& text);
std::string to_json(const LeDiagram& d);

// Detects JSON by a leading '{', otherwise ASCII.
LeDiagram parse_diagram(const std::string& text);

}  // namespace poslab

#endif  // POSLAB_DIAGRAM_HPP_
