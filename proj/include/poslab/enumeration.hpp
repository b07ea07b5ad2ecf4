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

#ifndef POSLAB_ENUMERATION_HPP_
#define POSLAB_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "poslab/diagram.hpp"
#include "poslab/errors.hpp"

namespace poslab {

inline constexpr const char* kVersion = "poslab 1.0.0";

enum class Property { kAll, kTransversal, kFundamental, kPaving, kSparsePaving };

std::string to_string(Property p);
// Throws ArgumentError for an unknown name.
Property parse_property(const std::string& name);

// Partitions with k parts in [0, n-k], largest first in lexicographic order.
std::vector<Shape> shapes_in_box(int k, int n);

using DiagramVisitor = std::function<void(const LeDiagram&)>;

// Le-fillings of one shape. first_column restricts column 1 to the given
// bitmask over rows (bit r-1 for row r); leave empty for all.
void for_each_filling(const Shape& shape, const DiagramVisitor& visit,
                      std::optional<std::uint64_t> first_column = {});
// Every valid column-1 filling of the shape, in visiting order.
std::vector<std::uint64_t> first_columns(const Shape& shape);

void for_each_le_diagram(int k, int n, const DiagramVisitor& visit);
std::vector<LeDiagram> enumerate_le_diagrams(int k, int n);

bool has_property(const LeDiagram& d, Property p);

// jobs > 1 spreads (shape, first column) tasks over worker threads.
std::uint64_t count_with_property(int k, int n, Property p, int jobs = 1);

// Number of subsets of [n] without two cyclically adjacent elements.
std::uint64_t cyclic_nonadjacent_subsets(int n);
// s_0 = 1, s_1 = 2, s_n = s_{n-1} + s_{n-2}.
std::uint64_t sparse_recurrence(int n);
// pldc-based count; n+1 for k in {1, n-1}, 1 for k in {0, n}.
std::uint64_t count_sparse_paving(int k, int n);

struct CountTable {
  Property property = Property::kAll;
  int n_max = 0;
  // cells[n-1][k] for 0 <= k <= n.
  std::vector<std::vector<std::optional<std::uint64_t>>> cells;
  bool complete() const;
};

// Append-only JSON-lines cache keyed by (k, n, property, version).
class ResultCache {
 public:
  explicit ResultCache(std::string path);
  std::optional<std::uint64_t> get(int k, int n, Property p) const;
  void put(int k, int n, Property p, std::uint64_t count);

 private:
  std::string path_;
  std::map<std::tuple<int, int, std::string>, std::uint64_t> entries_;
  mutable std::mutex mutex_;
};

struct TableOptions {
  int jobs = 1;
  double budget_seconds = 0;  // 0 disables the budget
  ResultCache* cache = nullptr;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(CountTable partial)
      : Error("time budget exceeded"), partial_(std::move(partial)) {}
  const CountTable& partial() const { return partial_; }

 private:
  CountTable partial_;
};

// Rows n = 1..n_max. Throws BudgetExceeded with the finished cells.
CountTable emit_table(Property p, int n_max, const TableOptions& options = {});

// Missing cells print as "?".
std::string to_markdown(const CountTable& t);
std::string to_csv(const CountTable& t);

}  // namespace poslab

#endif  // POSLAB_ENUMERATION_HPP_
