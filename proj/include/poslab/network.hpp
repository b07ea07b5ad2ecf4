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

#ifndef POSLAB_NETWORK_HPP_
#define POSLAB_NETWORK_HPP_

#include <vector>

#include "poslab/diagram.hpp"
#include "poslab/rational.hpp"
#include "poslab/subset.hpp"
#include "poslab/transversal.hpp"

namespace poslab {

struct Edge {
  int from = 0;
  int to = 0;
  Rational weight = 1;
};

// Vertex ids: boundary label l is vertex l-1; internal vertices follow.
class PlanarNetwork {
 public:
  PlanarNetwork() = default;
  // Throws DomainError on a non-positive weight and StructuralError when a
  // boundary vertex has degree above one, a source has an incoming edge or a
  // sink an outgoing one.
  PlanarNetwork(int n, Subset sources, int internal_count,
                std::vector<Edge> edges);

  int n() const { return n_; }
  int k() const { return size_of(sources_); }
  Subset sources() const { return sources_; }
  Subset sinks() const { return full_set(n_) & ~sources_; }
  int internal_count() const { return internal_count_; }
  int vertex_count() const { return n_ + internal_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool acyclic() const;

 private:
  int n_ = 0;
  Subset sources_ = 0;
  int internal_count_ = 0;
  std::vector<Edge> edges_;
};

// Horizontal edges of the network of d, one per bullet, in canonical order:
// rows top to bottom, each row right to left.
int weighted_edge_count(const LeDiagram& d);
std::vector<Rational> prime_weights(const LeDiagram& d);

// Internal vertex n+t is the t-th bullet in row-major order. Throws
// PreconditionError if d is not a Le-diagram and ArgumentError on a weight
// count mismatch.
PlanarNetwork build_network(const LeDiagram& d,
                            const std::vector<Rational>& weights);
PlanarNetwork build_network(const LeDiagram& d);

struct MeasurementMatrix {
  int n = 0;
  std::vector<int> row_labels;  // sources, increasing
  RationalMatrix entries;       // k x n, column j-1 holds label j
};

// Throws UnsupportedInputError on a cyclic network.
MeasurementMatrix boundary_measurement(const PlanarNetwork& net);

// JSON array of rows of "p/q" strings.
std::string to_json(const MeasurementMatrix& m);
std::string to_text(const MeasurementMatrix& m);

// Throws ArgumentError unless |j| equals the number of sources.
bool has_disjoint_path_system(const PlanarNetwork& net, Subset j);

SetFamily bases_from_flows(const LeDiagram& d);

SetSystem support(const MeasurementMatrix& m);

}  // namespace poslab

#endif  // POSLAB_NETWORK_HPP_
