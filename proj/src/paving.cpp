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

#include "poslab/paving.hpp"

#include <algorithm>

#include "json.hpp"
#include "json_util.hpp"
#include "poslab/errors.hpp"

namespace poslab {

namespace {

void check_kn(int k, int n) {
  if (k < 1 || k >= n || n > kMaxGround)
    throw ArgumentError("needs 1 <= k < n <= 64, got k=" + std::to_string(k) +
                        " n=" + std::to_string(n));
}

Subset wrapped_interval(int lo, int hi, int n) {
  Subset s = 0;
  for (int v = lo; v <= hi; ++v) s |= element(((v - 1) % n + n) % n + 1);
  return s;
}

}  // namespace

PldcFunction::PldcFunction(int k, int n, std::vector<int> values)
    : k_(k), n_(n), values_(std::move(values)) {
  check_kn(k, n);
  if (static_cast<int>(values_.size()) != n)
    throw ArgumentError("f needs exactly n values");
  for (int i = 1; i <= n; ++i)
    if (values_[i - 1] < 0 || values_[i - 1] > n - k - 1)
      throw ArgumentError("f(" + std::to_string(i) + ")=" +
                          std::to_string(values_[i - 1]) +
                          " outside [0, n-k-1]");
}

PldcFunction PldcFunction::zero(int k, int n) {
  return PldcFunction(k, n, std::vector<int>(n, 0));
}

std::vector<Cell> boundary_numbering(int k, int n) {
  check_kn(k, n);
  const int m = n - k;
  std::vector<Cell> cells(n);
  cells[0] = {k, m};
  for (int i = 2; i <= n; ++i)
    cells[i - 1] = i <= m + 1 ? Cell{1, m + 2 - i} : Cell{i - m, 1};
  return cells;
}

std::optional<int> ldc_violation(const PldcFunction& f) {
  const int n = f.n(), k = f.k(), m = f.width();
  // (1) The run for i <= m+1 must fit in the top row. The bound allows the
  // top-left cell to be emptied.
  for (int i = 2; i <= m + 1; ++i)
    if (f(i) > m + 2 - i) return 1;
  for (int i = 1; i <= n; ++i)
    if ((i == 1 || i >= m + 2) && f(i) > m - 1) return 2;
  // The run of f(1) sits in the bottom row, so it only meets the top-row runs
  // when there is a single row.
  for (int i = k == 1 ? 1 : 2; i <= m + 1; ++i)
    for (int j = i + 1; j <= m + 1; ++j)
      if (f(i) && f(j) && f(i) >= j - i) return 3;
  if (f(1) + f(n) > m - 1) return 4;
  if (k == 1) {
    // The single row is also the bottom row; it must keep a bullet.
    int total = 0;
    for (int v : f.values()) total += v;
    if (total > m - 1) return 4;
  }
  return std::nullopt;
}

std::optional<int> pldc_violation(const PldcFunction& f) {
  const int n = f.n(), m = f.width();
  std::vector<int> support;
  for (int i = 1; i <= n; ++i)
    if (f(i)) support.push_back(i);
  int worst = 0;
  auto flag = [&](int c) {
    if (!worst || c < worst) worst = c;
  };
  for (int i : support)
    for (int j : support) {
      if (i >= j) continue;
      if (i == 1 && j < n) {
        if (j <= m + 1 && f(1) + 2 > j) flag(1);
        if (j > m + 1 && f(1) + f(j) > m) flag(1);
      }
      if (i > 1 && i <= m + 1 && j > m + 1 &&
          f(i) + f(j) > std::min(j - i, m))
        flag(2);
      if (i > m + 1 && f(j) > std::min(j - i - 1, m - f(i))) flag(3);
      if (i == 1 && j == n)
        for (int l : support)
          if (l != 1 && l != n && f(1) + f(l) + f(n) > m) flag(4);
    }
  if (!worst) return std::nullopt;
  return worst;
}

bool is_ldc(const PldcFunction& f) { return !ldc_violation(f); }

bool is_pldc(const PldcFunction& f) { return is_ldc(f) && !pldc_violation(f); }

LeDiagram build_pldc_diagram(const PldcFunction& f) {
  if (!is_ldc(f))
    throw PreconditionError("build_pldc_diagram needs an ldc function");
  const int k = f.k(), n = f.n(), m = f.width();
  std::vector<int> parts(k, m);
  parts[k - 1] = m - f(1);
  std::vector<std::uint64_t> rows(k);
  for (int r = 0; r < k; ++r) rows[r] = full_set(parts[r]);
  const std::vector<Cell> cells = boundary_numbering(k, n);
  for (int i = 2; i <= n; ++i) {
    if (!f(i)) continue;
    const Cell c = cells[i - 1];
    const int lo = i <= m + 1 ? c.col - f(i) + 1 : c.col;
    for (int col = lo; col < lo + f(i); ++col)
      rows[c.row - 1] &= ~element(col);
  }
  return LeDiagram(Shape(k, n, parts), rows);
}

SetFamily ObstructionFamily::sets() const {
  SetFamily out;
  for (const Obstruction& o : members) out.push_back(o.set);
  return out;
}

ObstructionFamily obstructions(const PldcFunction& f) {
  if (!is_pldc(f)) throw PreconditionError("obstructions need a pldc function");
  const int n = f.n(), k = f.k(), m = f.width();
  ObstructionFamily family;
  for (int i = 1; i <= n; ++i) {
    if (!f(i)) continue;
    const Subset h = i <= m + 1 ? wrapped_interval(i, i + k + f(i) - 2, n)
                                : wrapped_interval(i - f(i) + 1, i + k - 1, n);
    family.members.push_back({i, h});
  }
  if (f(1) && f(n)) {
    const Subset merged =
        family.members.front().set | family.members.back().set;
    family.members.erase(family.members.begin());
    family.members.pop_back();
    family.members.push_back({0, merged});
    family.merged = true;
  }
  return family;
}

Subset rank_one_loops(const PldcFunction& f) {
  Subset out = 0;
  for (const Obstruction& o : obstructions(f).members) out |= o.set;
  return out;
}

std::optional<PldcFunction> recognize_paving_positroid(const LeDiagram& d) {
  check_kn(d.k(), d.n());
  if (!validate_le(d))
    throw PreconditionError("recognition needs a Le-diagram");
  if (coloops(d))
    throw PreconditionError(
        "recognition needs a coloop-less diagram; see classify_paving");
  const int k = d.k(), n = d.n(), m = d.width();
  for (int r = 1; r < k; ++r)
    if (d.shape().part(r) != m) return std::nullopt;
  std::vector<int> f(n, 0);
  f[0] = m - d.shape().part(k);
  // Top row: maximal empty runs, each named by the label of its right end.
  const int top_len = d.shape().part(1);
  for (int c = top_len; c >= 1;) {
    if (d.filled(1, c)) {
      --c;
      continue;
    }
    int a = c;
    while (a > 1 && !d.filled(1, a - 1)) --a;
    f[m + 2 - c - 1] = c - a + 1;
    c = a - 1;
  }
  // Lower rows: empties must form a prefix starting at column 1.
  for (int r = 2; r <= k; ++r) {
    const std::uint64_t inside = full_set(d.shape().part(r));
    const std::uint64_t empty = inside & ~d.row_mask(r);
    const int len = std::popcount(empty);
    if (empty != full_set(len)) return std::nullopt;
    f[m + r - 1] = len;
  }
  for (int v : f)
    if (v > m - 1) return std::nullopt;
  const PldcFunction g(k, n, f);
  if (!is_ldc(g) || build_pldc_diagram(g) != d || !is_pldc(g))
    return std::nullopt;
  return g;
}

bool is_sparse_paving_f(const PldcFunction& f) {
  for (int i = 1; i <= f.n(); ++i)
    if (f(i) + f(i % f.n() + 1) > 1) return false;
  // In rank one all runs merge into the single hyperplane of loops.
  if (f.k() == 1) {
    int total = 0;
    for (int v : f.values()) total += v;
    return total <= 1;
  }
  return true;
}

LeDiagram delete_row(const LeDiagram& d, int row) {
  if (row < 1 || row > d.k()) throw ArgumentError("row out of range");
  if (d.row_mask(row)) throw PreconditionError("row is not empty");
  std::vector<int> parts = d.shape().parts();
  std::vector<std::uint64_t> rows = d.row_masks();
  parts.erase(parts.begin() + (row - 1));
  rows.erase(rows.begin() + (row - 1));
  return LeDiagram(Shape(d.k() - 1, d.n() - 1, parts), rows);
}

PavingCertificate classify_paving(const LeDiagram& d) {
  if (!validate_le(d))
    throw PreconditionError("classify_paving needs a Le-diagram");
  PavingCertificate cert;
  if (d.k() == 0) {
    cert.kind = PavingCertificate::Kind::kRankZero;
    return cert;
  }
  if (d.k() == d.n()) {
    cert.kind = PavingCertificate::Kind::kBoolean;
    return cert;
  }
  const Subset c = coloops(d);
  if (!c) {
    cert.f = recognize_paving_positroid(d);
    if (cert.f) cert.kind = PavingCertificate::Kind::kPldc;
    return cert;
  }
  if (size_of(c) > 1) return cert;
  const BoundaryLabeling labels = boundary_labeling(d);
  int row = 1;
  while (labels.row_source[row - 1] != max_element(c)) ++row;
  // The rest must be the uniform matroid, i.e. the full rectangle.
  if (delete_row(d, row) != LeDiagram::full(d.k() - 1, d.n() - 1)) return cert;
  cert.kind = PavingCertificate::Kind::kColoop;
  cert.coloop = max_element(c);
  return cert;
}

std::string to_json(const PldcFunction& f) {
  nlohmann::ordered_json j;
  j["k"] = f.k();
  j["n"] = f.n();
  j["f"] = f.values();
  return j.dump();
}

PldcFunction parse_pldc_json(const std::string& text) {
  const nlohmann::json j = json_util::parse(text);
  return PldcFunction(json_util::get_int(j, "k"), json_util::get_int(j, "n"),
                      json_util::get_int_array(j, "f"));
}

}  // namespace poslab
