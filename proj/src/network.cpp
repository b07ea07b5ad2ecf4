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

#include "poslab/network.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "poslab/errors.hpp"

namespace poslab {

PlanarNetwork::PlanarNetwork(int n, Subset sources, int internal_count,
                             std::vector<Edge> edges)
    : n_(n),
      sources_(sources),
      internal_count_(internal_count),
      edges_(std::move(edges)) {
  if (n < 0 || n > kMaxGround) throw ArgumentError("n must lie in [0, 64]");
  if (!is_subset(sources, full_set(n)))
    throw ArgumentError("source label outside [n]");
  std::vector<int> degree(n, 0);
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.to < 0 || e.from >= vertex_count() ||
        e.to >= vertex_count())
      throw ArgumentError("edge endpoint out of range");
    if (e.weight <= 0)
      throw DomainError("edge weights must be positive, got " +
                        to_fraction_string(e.weight));
    if (e.from < n) {
      if (!contains(sources, e.from + 1))
        throw StructuralError("sink " + std::to_string(e.from + 1) +
                              " has an outgoing edge");
      ++degree[e.from];
    }
    if (e.to < n) {
      if (contains(sources, e.to + 1))
        throw StructuralError("source " + std::to_string(e.to + 1) +
                              " has an incoming edge");
      ++degree[e.to];
    }
  }
  for (int v = 0; v < n; ++v)
    if (degree[v] > 1)
      throw StructuralError("boundary vertex " + std::to_string(v + 1) +
                            " has degree above one");
}

namespace {

// Kahn's algorithm; returns fewer than vertex_count ids on a cycle.
std::vector<int> topological_order(const PlanarNetwork& net) {
  const int v = net.vertex_count();
  std::vector<int> indeg(v, 0);
  std::vector<std::vector<int>> out(v);
  for (const Edge& e : net.edges()) {
    ++indeg[e.to];
    out[e.from].push_back(e.to);
  }
  std::vector<int> order;
  std::queue<int> ready;
  for (int i = 0; i < v; ++i)
    if (!indeg[i]) ready.push(i);
  while (!ready.empty()) {
    const int x = ready.front();
    ready.pop();
    order.push_back(x);
    for (int y : out[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  return order;
}

}  // namespace

bool PlanarNetwork::acyclic() const {
  return static_cast<int>(topological_order(*this).size()) == vertex_count();
}

int weighted_edge_count(const LeDiagram& d) { return d.bullet_count(); }

std::vector<Rational> prime_weights(const LeDiagram& d) {
  return first_primes(weighted_edge_count(d));
}

PlanarNetwork build_network(const LeDiagram& d,
                            const std::vector<Rational>& weights) {
  if (!validate_le(d))
    throw PreconditionError("build_network requires a Le-diagram");
  if (static_cast<int>(weights.size()) != weighted_edge_count(d))
    throw ArgumentError("expected " + std::to_string(weighted_edge_count(d)) +
                        " weights, got " + std::to_string(weights.size()));
  const BoundaryLabeling labels = boundary_labeling(d);
  const int n = d.n();
  std::map<Cell, int> id;
  for (const Cell& c : d.filled_cells()) {
    const int next = n + static_cast<int>(id.size());
    id[c] = next;
  }
  std::vector<Edge> edges;
  std::size_t t = 0;
  for (int r = 1; r <= d.k(); ++r) {
    int prev = labels.row_source[r - 1] - 1;
    for (int c = d.shape().part(r); c >= 1; --c) {
      if (!d.filled(r, c)) continue;
      edges.push_back({prev, id[{r, c}], weights[t++]});
      prev = id[{r, c}];
    }
  }
  for (const auto& [cell, v] : id) {
    int below = -1;
    for (int r = cell.row + 1; r <= d.k() && d.shape().part(r) >= cell.col;
         ++r)
      if (d.filled(r, cell.col)) {
        below = id[{r, cell.col}];
        break;
      }
    if (below < 0) below = labels.col_sink[cell.col - 1] - 1;
    edges.push_back({v, below, 1});
  }
  return PlanarNetwork(n, labels.sources, static_cast<int>(id.size()),
                       std::move(edges));
}

PlanarNetwork build_network(const LeDiagram& d) {
  return build_network(d, prime_weights(d));
}

MeasurementMatrix boundary_measurement(const PlanarNetwork& net) {
  const std::vector<int> order = topological_order(net);
  if (static_cast<int>(order.size()) != net.vertex_count())
    throw UnsupportedInputError("network has a directed cycle");
  std::vector<std::vector<const Edge*>> out(net.vertex_count());
  for (const Edge& e : net.edges()) out[e.from].push_back(&e);

  MeasurementMatrix m;
  m.n = net.n();
  m.row_labels = elements(net.sources());
  m.entries = RationalMatrix(static_cast<int>(m.row_labels.size()), net.n());
  std::vector<Rational> paths(net.vertex_count());
  for (std::size_t row = 0; row < m.row_labels.size(); ++row) {
    const int s = m.row_labels[row];
    for (auto& p : paths) p = 0;
    paths[s - 1] = 1;
    for (int v : order) {
      if (paths[v] == 0) continue;
      for (const Edge* e : out[v]) paths[e->to] += paths[v] * e->weight;
    }
    for (int j = 1; j <= net.n(); ++j) {
      if (j == s) {
        m.entries.at(row, j - 1) = 1;
        continue;
      }
      if (contains(net.sources(), j)) continue;
      const int lo = std::min(s, j), hi = std::max(s, j);
      const Subset between = full_set(hi - 1) & ~full_set(lo);
      const bool negative = size_of(net.sources() & between) % 2;
      m.entries.at(row, j - 1) = negative ? Rational(-paths[j - 1])
                                          : paths[j - 1];
    }
  }
  return m;
}

std::string to_json(const MeasurementMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.entries.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.entries.cols(); ++c)
      row.push_back(to_fraction_string(m.entries.at(r, c)));
    rows.push_back(row);
  }
  return rows.dump();
}

std::string to_text(const MeasurementMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.entries.rows());
  std::size_t width = 1;
  for (int r = 0; r < m.entries.rows(); ++r)
    for (int c = 0; c < m.entries.cols(); ++c) {
      cells[r].push_back(m.entries.at(r, c).get_str());
      width = std::max(width, cells[r].back().size());
    }
  std::ostringstream out;
  for (int r = 0; r < m.entries.rows(); ++r) {
    out << m.row_labels[r] << ":";
    for (const auto& s : cells[r])
      out << ' ' << std::string(width - s.size(), ' ') << s;
    out << '\n';
  }
  return out.str();
}

namespace {

// Unit-capacity vertex-disjoint path search. Boundary vertices are not split:
// sources have no incoming and sinks no outgoing edges, so at most one path
// can use each of them anyway.
class DisjointPaths {
 public:
  explicit DisjointPaths(const PlanarNetwork& net)
      : n_(net.n()), sources_(net.sources()) {
    const int nodes = n_ + 2 * net.internal_count();
    head_.assign(nodes, -1);
    for (int i = 0; i < net.internal_count(); ++i)
      add_arc(n_ + 2 * i, n_ + 2 * i + 1);
    for (const Edge& e : net.edges()) {
      const int from = e.from < n_ ? e.from : n_ + 2 * (e.from - n_) + 1;
      const int to = e.to < n_ ? e.to : n_ + 2 * (e.to - n_);
      add_arc(from, to);
    }
    base_cap_ = cap_;
  }

  bool realizable(Subset j) {
    cap_ = base_cap_;
    const Subset starts = sources_ & ~j;
    targets_ = j & ~sources_;
    if (size_of(starts) != size_of(targets_)) return false;
    for (int s : elements(starts)) {
      seen_.assign(head_.size(), 0);
      if (!augment(s - 1)) return false;
    }
    return true;
  }

 private:
  void add_arc(int u, int v) {
    to_.push_back(v);
    cap_.push_back(1);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u);
    cap_.push_back(0);
    next_.push_back(head_[v]);
    head_[v] = static_cast<int>(to_.size()) - 1;
  }

  bool augment(int u) {
    seen_[u] = 1;
    if (u < n_ && contains(targets_, u + 1)) {
      targets_ &= ~element(u + 1);
      return true;
    }
    for (int a = head_[u]; a >= 0; a = next_[a]) {
      const int v = to_[a];
      if (!cap_[a] || seen_[v]) continue;
      if (augment(v)) {
        --cap_[a];
        ++cap_[a ^ 1];
        return true;
      }
    }
    return false;
  }

  int n_;
  Subset sources_;
  Subset targets_ = 0;
  std::vector<int> head_, to_, next_, cap_, base_cap_;
  std::vector<char> seen_;
};

}  // namespace

bool has_disjoint_path_system(const PlanarNetwork& net, Subset j) {
  if (!is_subset(j, full_set(net.n())))
    throw ArgumentError("terminal set " + format_set(j) + " outside [n]");
  if (size_of(j) != net.k())
    throw ArgumentError("terminal set must have " + std::to_string(net.k()) +
                        " elements");
  return DisjointPaths(net).realizable(j);
}

SetFamily bases_from_flows(const LeDiagram& d) {
  const PlanarNetwork net = build_network(
      d, std::vector<Rational>(weighted_edge_count(d), Rational(1)));
  DisjointPaths paths(net);
  SetFamily bases;
  for_each_k_subset(full_set(d.n()), d.k(), [&](Subset j) {
    if (paths.realizable(j)) bases.push_back(j);
  });
  std::sort(bases.begin(), bases.end());
  return bases;
}

SetSystem support(const MeasurementMatrix& m) {
  std::vector<Subset> sets;
  for (int r = 0; r < m.entries.rows(); ++r) {
    Subset s = 0;
    for (int c = 0; c < m.entries.cols(); ++c)
      if (m.entries.at(r, c) != 0) s |= element(c + 1);
    sets.push_back(s);
  }
  return SetSystem(m.n, sets);
}

}  // namespace poslab
