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

#include "poslab/enumeration.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "poslab/matroid.hpp"
#include "poslab/network.hpp"
#include "poslab/paving.hpp"
#include "poslab/transversal.hpp"

namespace poslab {

std::string to_string(Property p) {
  switch (p) {
    case Property::kAll:
      return "all";
    case Property::kTransversal:
      return "transversal";
    case Property::kFundamental:
      return "fundamental";
    case Property::kPaving:
      return "paving";
    case Property::kSparsePaving:
      return "sparse-paving";
  }
  return "all";
}

Property parse_property(const std::string& name) {
  for (Property p : {Property::kAll, Property::kTransversal,
                     Property::kFundamental, Property::kPaving,
                     Property::kSparsePaving})
    if (to_string(p) == name) return p;
  throw ArgumentError("unknown property \"" + name +
                      "\"; expected all, transversal, fundamental, paving or "
                      "sparse-paving");
}

std::vector<Shape> shapes_in_box(int k, int n) {
  const int m = n - k;
  std::vector<Shape> out;
  std::vector<int> parts(k);
  std::function<void(int, int)> rec = [&](int row, int cap) {
    if (row == k) {
      out.emplace_back(k, n, parts);
      return;
    }
    for (int p = cap; p >= 0; --p) {
      parts[row] = p;
      rec(row + 1, p);
    }
  };
  rec(0, m);
  return out;
}

namespace {

// Column choices given the rows that already hold a bullet further left.
// A filled top cell at row t forces every lower row with a bullet on its left.
template <class Fn>
void for_each_column(int height, std::uint64_t has_left, Fn&& fn) {
  fn(std::uint64_t{0});
  for (int t = 0; t < height; ++t) {
    const std::uint64_t below = full_set(height) & ~full_set(t + 1);
    const std::uint64_t forced = below & has_left;
    const std::uint64_t free = below & ~has_left;
    std::uint64_t sub = 0;
    while (true) {
      fn((std::uint64_t{1} << t) | forced | sub);
      if (sub == free) break;
      sub = (sub - free) & free;
    }
  }
}

class FillingWalker {
 public:
  FillingWalker(const Shape& shape, const DiagramVisitor& visit)
      : shape_(shape), visit_(visit), rows_(shape.k(), 0) {}

  void run(std::optional<std::uint64_t> first) {
    if (shape_.k() == 0 || shape_.part(1) == 0) {
      visit_(LeDiagram(shape_, rows_));
      return;
    }
    if (first) {
      place(1, *first, 0);
    } else {
      for_each_column(shape_.column_height(1), 0,
                      [&](std::uint64_t col) { place(1, col, 0); });
    }
  }

  void place(int c, std::uint64_t col, std::uint64_t has_left) {
    for (std::uint64_t rest = col; rest; rest &= rest - 1)
      rows_[std::countr_zero(rest)] |= element(c);
    const std::uint64_t next_left = has_left | col;
    if (c == shape_.part(1)) {
      visit_(LeDiagram(shape_, rows_));
    } else {
      for_each_column(shape_.column_height(c + 1), next_left,
                      [&](std::uint64_t nc) { place(c + 1, nc, next_left); });
    }
    for (std::uint64_t rest = col; rest; rest &= rest - 1)
      rows_[std::countr_zero(rest)] &= ~element(c);
  }

 private:
  const Shape& shape_;
  const DiagramVisitor& visit_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace

void for_each_filling(const Shape& shape, const DiagramVisitor& visit,
                      std::optional<std::uint64_t> first_column) {
  FillingWalker(shape, visit).run(first_column);
}

std::vector<std::uint64_t> first_columns(const Shape& shape) {
  std::vector<std::uint64_t> out;
  if (shape.k() == 0 || shape.part(1) == 0) return out;
  for_each_column(shape.column_height(1), 0,
                  [&](std::uint64_t c) { out.push_back(c); });
  return out;
}

void for_each_le_diagram(int k, int n, const DiagramVisitor& visit) {
  for (const Shape& s : shapes_in_box(k, n)) for_each_filling(s, visit);
}

std::vector<LeDiagram> enumerate_le_diagrams(int k, int n) {
  std::vector<LeDiagram> out;
  for_each_le_diagram(k, n, [&](const LeDiagram& d) { out.push_back(d); });
  return out;
}

bool has_property(const LeDiagram& d, Property p) {
  if (p == Property::kAll) return true;
  const Matroid m(d.n(), bases_from_flows(d));
  switch (p) {
    case Property::kTransversal:
      return is_transversal(m);
    case Property::kFundamental:
      return is_fundamental_transversal(m);
    case Property::kPaving:
      return is_paving(m);
    case Property::kSparsePaving:
      return is_sparse_paving(m);
    case Property::kAll:
      break;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Stop {};

struct Task {
  const Shape* shape;
  std::optional<std::uint64_t> first;
};

// Returns nullopt when the deadline passes first.
std::optional<std::uint64_t> count_cell(int k, int n, Property p, int jobs,
                                        std::optional<Clock::time_point> deadline) {
  const std::vector<Shape> shapes = shapes_in_box(k, n);
  std::vector<Task> tasks;
  for (const Shape& s : shapes) {
    const auto firsts = first_columns(s);
    if (firsts.empty()) tasks.push_back({&s, std::nullopt});
    for (auto c : firsts) tasks.push_back({&s, c});
  }
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stopped{false};
  auto worker = [&] {
    std::size_t checks = 0;
    while (!stopped) {
      const std::size_t t = next++;
      if (t >= tasks.size()) return;
      std::uint64_t local = 0;
      try {
        for_each_filling(
            *tasks[t].shape,
            [&](const LeDiagram& d) {
              if (deadline && (++checks & 63) == 0 &&
                  (stopped || Clock::now() > *deadline))
                throw Stop{};
              if (has_property(d, p)) ++local;
            },
            tasks[t].first);
      } catch (const Stop&) {
        stopped = true;
        return;
      }
      counts[t] = local;
      if (deadline && Clock::now() > *deadline) stopped = true;
    }
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (stopped) return std::nullopt;
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

}  // namespace

std::uint64_t count_with_property(int k, int n, Property p, int jobs) {
  if (k < 0 || k > n || n > kMaxGround)
    throw ArgumentError("needs 0 <= k <= n <= 64");
  return *count_cell(k, n, p, jobs, std::nullopt);
}

std::uint64_t cyclic_nonadjacent_subsets(int n) {
  if (n > 30) throw ArgumentError("brute force limited to n <= 30");
  std::uint64_t count = 0;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      ok = !(contains(s, i) && contains(s, i % n + 1));
    if (ok) ++count;
  }
  return count;
}

std::uint64_t sparse_recurrence(int n) {
  std::uint64_t a = 1, b = 2;
  if (n == 0) return a;
  for (int i = 1; i < n; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::uint64_t count_sparse_paving(int k, int n) {
  if (k < 0 || k > n || n > 30) throw ArgumentError("needs 0 <= k <= n <= 30");
  if (k == 0 || k == n) return 1;
  if (k == 1 || k == n - 1) return n + 1;
  std::uint64_t count = 0;
  std::vector<int> values(n);
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    for (int i = 1; i <= n; ++i) values[i - 1] = contains(s, i);
    const PldcFunction f(k, n, values);
    if (is_sparse_paving_f(f) && is_pldc(f)) ++count;
  }
  return count;
}

bool CountTable::complete() const {
  for (const auto& row : cells)
    for (const auto& c : row)
      if (!c) return false;
  return true;
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) continue;
    if (j.value("version", "") != kVersion) continue;
    if (!j.contains("k") || !j.contains("n") || !j.contains("count") ||
        !j.contains("property"))
      continue;
    entries_[{j["k"].get<int>(), j["n"].get<int>(),
              j["property"].get<std::string>()}] =
        j["count"].get<std::uint64_t>();
  }
}

std::optional<std::uint64_t> ResultCache::get(int k, int n, Property p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  const auto it = entries_.find({k, n, to_string(p)});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(int k, int n, Property p, std::uint64_t count) {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_[{k, n, to_string(p)}] = count;
  nlohmann::ordered_json j;
  j["k"] = k;
  j["n"] = n;
  j["property"] = to_string(p);
  j["version"] = kVersion;
  j["count"] = count;
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << '\n';
}

CountTable emit_table(Property p, int n_max, const TableOptions& options) {
  if (n_max < 1 || n_max > 12) throw ArgumentError("n_max must lie in [1, 12]");
  CountTable table;
  table.property = p;
  table.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) table.cells.emplace_back(n + 1);
  std::optional<Clock::time_point> deadline;
  if (options.budget_seconds > 0)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(
                                      options.budget_seconds));
  for (int n = 1; n <= n_max; ++n)
    for (int k = 0; k <= n; ++k) {
      auto& cell = table.cells[n - 1][k];
      if (options.cache) cell = options.cache->get(k, n, p);
      if (cell) continue;
      cell = count_cell(k, n, p, options.jobs, deadline);
      if (!cell) throw BudgetExceeded(table);
      if (options.cache) options.cache->put(k, n, p, *cell);
    }
  return table;
}

namespace {

std::string cell_text(const CountTable& t, int n, int k) {
  if (k > n) return "";
  const auto& c = t.cells[n - 1][k];
  return c ? std::to_string(*c) : "?";
}

}  // namespace

std::string to_markdown(const CountTable& t) {
  std::ostringstream out;
  out << "| n\\k |";
  for (int k = 0; k <= t.n_max; ++k) out << ' ' << k << " |";
  out << "\n|---|";
  for (int k = 0; k <= t.n_max; ++k) out << "---|";
  out << '\n';
  for (int n = 1; n <= t.n_max; ++n) {
    out << "| " << n << " |";
    for (int k = 0; k <= t.n_max; ++k) {
      const std::string s = cell_text(t, n, k);
      out << (s.empty() ? " " : " " + s + " ") << '|';
    }
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const CountTable& t) {
  std::ostringstream out;
  out << "n";
  for (int k = 0; k <= t.n_max; ++k) out << ",k=" << k;
  out << '\n';
  for (int n = 1; n <= t.n_max; ++n) {
    out << n;
    for (int k = 0; k <= t.n_max; ++k) out << ',' << cell_text(t, n, k);
    out << '\n';
  }
  return out.str();
}

}  // namespace poslab
