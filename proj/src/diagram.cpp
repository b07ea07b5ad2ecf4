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

#include "poslab/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "poslab/errors.hpp"
#include "json_util.hpp"

namespace poslab {

namespace {

std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

}  // namespace

std::string format_cell(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Shape::Shape(int k, int n, std::vector<int> parts)
    : k_(k), n_(n), parts_(std::move(parts)) {
  if (k < 0 || n < k || n > kMaxGround)
    throw StructuralError("shape needs 0 <= k <= n <= 64, got k=" +
                          std::to_string(k) + " n=" + std::to_string(n));
  if (static_cast<int>(parts_.size()) != k)
    throw StructuralError("shape has " + std::to_string(parts_.size()) +
                          " parts but k=" + std::to_string(k));
  for (int i = 0; i < k; ++i) {
    if (parts_[i] < 0 || parts_[i] > n - k)
      throw StructuralError("part " + std::to_string(i + 1) +
                            " outside [0, n-k]");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw StructuralError("parts are not weakly decreasing at row " +
                            std::to_string(i + 1));
  }
}

int Shape::column_height(int col) const {
  int h = 0;
  while (h < k_ && parts_[h] >= col) ++h;
  return h;
}

int Shape::cell_count() const {
  int total = 0;
  for (int p : parts_) total += p;
  return total;
}

LeDiagram::LeDiagram(Shape shape, std::vector<std::uint64_t> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.k())
    throw StructuralError("filling has the wrong number of rows");
  for (int r = 1; r <= shape_.k(); ++r) {
    if (rows_[r - 1] & ~low_bits(shape_.part(r)))
      throw StructuralError("filled cell outside the shape in row " +
                            std::to_string(r));
  }
}

LeDiagram::LeDiagram(Shape shape, const std::vector<Cell>& filled)
    : shape_(std::move(shape)), rows_(shape_.k(), 0) {
  for (const Cell& c : filled) {
    if (!shape_.contains(c))
      throw StructuralError("filled cell " + format_cell(c) +
                            " outside the shape");
    rows_[c.row - 1] |= std::uint64_t{1} << (c.col - 1);
  }
}

LeDiagram LeDiagram::full(int k, int n) {
  Shape s(k, n, std::vector<int>(k, n - k));
  return LeDiagram(s, std::vector<std::uint64_t>(k, low_bits(n - k)));
}

LeDiagram LeDiagram::empty(int k, int n) {
  Shape s(k, n, std::vector<int>(k, n - k));
  return LeDiagram(s, std::vector<std::uint64_t>(k, 0));
}

std::vector<Cell> LeDiagram::filled_cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= k(); ++r)
    for (int c = 1; c <= shape_.part(r); ++c)
      if (filled(r, c)) out.push_back({r, c});
  return out;
}

int LeDiagram::bullet_count() const {
  int total = 0;
  for (auto m : rows_) total += std::popcount(m);
  return total;
}

std::optional<LeViolation> find_le_violation(const LeDiagram& d) {
  std::uint64_t above = 0;
  for (int r = 1; r <= d.k(); ++r) {
    const std::uint64_t row = d.row_mask(r);
    const std::uint64_t inside = low_bits(d.shape().part(r));
    if (row != 0) {
      const int lowest = std::countr_zero(row);
      const std::uint64_t right_of_lowest = ~low_bits(lowest + 1);
      const std::uint64_t bad = inside & ~row & above & right_of_lowest;
      if (bad) {
        const int col = std::countr_zero(bad) + 1;
        int top = 1;
        while (!d.filled(top, col)) ++top;
        return LeViolation{{top, col}, {r, lowest + 1}, {r, col}};
      }
    }
    above |= row;
  }
  return std::nullopt;
}

bool validate_le(const LeDiagram& d) { return !find_le_violation(d); }

bool validate_sq(const LeDiagram& d) {
  if (!validate_le(d))
    throw PreconditionError("validate_sq requires a Le-diagram");
  for (int i = 1; i <= d.k(); ++i) {
    const std::uint64_t top = d.row_mask(i);
    for (int i2 = i + 1; i2 <= d.k(); ++i2) {
      const std::uint64_t common = top & d.row_mask(i2);
      if (!common) continue;
      const int highest = 63 - std::countl_zero(common);
      if (~top & d.row_mask(i2) & low_bits(highest)) return false;
    }
  }
  return true;
}

LeDiagram loopless_reduction(const LeDiagram& d) {
  std::uint64_t used = 0;
  for (auto m : d.row_masks()) used |= m;
  const int width = std::popcount(used);
  std::vector<int> parts(d.k());
  std::vector<std::uint64_t> rows(d.k(), 0);
  for (int r = 1; r <= d.k(); ++r) {
    parts[r - 1] = std::popcount(used & low_bits(d.shape().part(r)));
    int out = 0;
    for (int c = 1; c <= d.width(); ++c) {
      if (!((used >> (c - 1)) & 1)) continue;
      if (d.filled(r, c)) rows[r - 1] |= std::uint64_t{1} << out;
      ++out;
    }
  }
  return LeDiagram(Shape(d.k(), d.k() + width, parts), rows);
}

BoundaryLabeling boundary_labeling(const Shape& s) {
  BoundaryLabeling b;
  b.row_source.assign(s.k(), 0);
  b.col_sink.assign(s.width(), 0);
  int label = 1;
  int col = s.width();
  for (int r = 1; r <= s.k(); ++r) {
    for (; col > s.part(r); --col) {
      b.col_sink[col - 1] = label;
      b.sinks |= element(label++);
    }
    b.row_source[r - 1] = label;
    b.sources |= element(label++);
  }
  for (; col >= 1; --col) {
    b.col_sink[col - 1] = label;
    b.sinks |= element(label++);
  }
  return b;
}

BoundaryLabeling boundary_labeling(const LeDiagram& d) {
  return boundary_labeling(d.shape());
}

Subset loops(const LeDiagram& d) {
  const BoundaryLabeling b = boundary_labeling(d);
  std::uint64_t used = 0;
  for (auto m : d.row_masks()) used |= m;
  Subset out = 0;
  for (int c = 1; c <= d.width(); ++c)
    if (!((used >> (c - 1)) & 1)) out |= element(b.col_sink[c - 1]);
  return out;
}

Subset coloops(const LeDiagram& d) {
  const BoundaryLabeling b = boundary_labeling(d);
  Subset out = 0;
  for (int r = 1; r <= d.k(); ++r)
    if (d.row_mask(r) == 0) out |= element(b.row_source[r - 1]);
  return out;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool parse_header(const std::string& line, int& k, int& n) {
  std::istringstream in(line);
  std::string a, b;
  if (!(in >> a >> b)) return false;
  if (a.rfind("k=", 0) != 0 || b.rfind("n=", 0) != 0) return false;
  try {
    std::size_t pa = 0, pb = 0;
    k = std::stoi(a.substr(2), &pa);
    n = std::stoi(b.substr(2), &pb);
    if (pa != a.size() - 2 || pb != b.size() - 2) return false;
  } catch (const std::exception&) {
    return false;
  }
  std::string rest;
  return !(in >> rest);
}

}  // namespace

LeDiagram parse_ascii(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  int k = -1, n = -1;
  std::size_t first = 0;
  if (!lines.empty() && !lines[0].empty() &&
      (lines[0][0] == 'k' || lines[0][0] == '#')) {
    std::string h = lines[0];
    if (h[0] == '#') h = h.substr(1);
    if (!parse_header(h, k, n))
      throw ParseError("malformed header, expected \"k=K n=N\"", 1, 1);
    first = 1;
  }
  if (k < 0) {
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    k = static_cast<int>(lines.size());
  } else {
    for (std::size_t i = first + k; i < lines.size(); ++i)
      if (!lines[i].empty())
        throw ParseError("more rows than k=" + std::to_string(k),
                         static_cast<int>(i) + 1, 1);
  }
  std::vector<int> parts(k, 0);
  std::vector<std::uint64_t> rows(k, 0);
  int longest = 0;
  for (int r = 0; r < k; ++r) {
    const std::size_t li = first + r;
    if (li >= lines.size()) break;
    const std::string& line = lines[li];
    if (line.size() > 64)
      throw ParseError("row longer than 64 cells", static_cast<int>(li) + 1,
                       65);
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] == '*') {
        rows[r] |= std::uint64_t{1} << c;
      } else if (line[c] != '.') {
        throw ParseError(std::string("unexpected character '") + line[c] +
                             "'",
                         static_cast<int>(li) + 1, static_cast<int>(c) + 1);
      }
    }
    parts[r] = static_cast<int>(line.size());
    longest = std::max(longest, parts[r]);
  }
  if (n < 0) n = k + longest;
  return LeDiagram(Shape(k, n, parts), rows);
}

std::string to_ascii(const LeDiagram& d) {
  std::string out =
      "k=" + std::to_string(d.k()) + " n=" + std::to_string(d.n()) + "\n";
  for (int r = 1; r <= d.k(); ++r) {
    for (int c = 1; c <= d.shape().part(r); ++c)
      out += d.filled(r, c) ? '*' : '.';
    out += '\n';
  }
  return out;
}

LeDiagram parse_diagram_json(const std::string& text) {
  const nlohmann::json j = json_util::parse(text);
  const int k = json_util::get_int(j, "k");
  const int n = json_util::get_int(j, "n");
  const std::vector<int> parts = json_util::get_int_array(j, "parts");
  std::vector<Cell> cells;
  if (!j.contains("filled") || !j["filled"].is_array())
    throw ParseError("missing array field \"filled\"", 1, 1);
  for (const auto& c : j["filled"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
        !c[1].is_number_integer())
      throw ParseError("filled entries must be [row, col] pairs", 1, 1);
    cells.push_back({c[0].get<int>(), c[1].get<int>()});
  }
  return LeDiagram(Shape(k, n, parts), cells);
}

std::string to_json(const LeDiagram& d) {
  nlohmann::ordered_json j;
  j["k"] = d.k();
  j["n"] = d.n();
  j["parts"] = d.shape().parts();
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const Cell& c : d.filled_cells()) cells.push_back({c.row, c.col});
  j["filled"] = cells;
  return j.dump();
}

LeDiagram parse_diagram(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{')
    return parse_diagram_json(text);
  return parse_ascii(text);
}

}  // namespace poslab
