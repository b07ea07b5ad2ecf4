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

#include "poslab/rational.hpp"

#include <utility>

#include "poslab/errors.hpp"

namespace poslab {

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_)
      throw ArgumentError("ragged matrix");
    for (const auto& v : row) data_.push_back(v);
  }
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw ArgumentError("not a rational: \"" + s + "\"");
  q.canonicalize();
  return q;
}

namespace {

// Gaussian elimination in place; returns the rank and the determinant sign
// bookkeeping through det when the matrix is square.
int eliminate(std::vector<std::vector<Rational>>& m, Rational* det) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  Rational d = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      d = 0;
      continue;
    }
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      d = -d;
    }
    d *= m[rank][c];
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  if (det) *det = rank == rows ? d : Rational(0);
  return rank;
}

}  // namespace

int matrix_rank(const RationalMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) m[r][c] = a.at(r, c);
  return eliminate(m, nullptr);
}

Rational column_minor(const RationalMatrix& a, const std::vector<int>& cols) {
  if (static_cast<int>(cols.size()) != a.rows())
    throw ArgumentError("minor needs as many columns as rows");
  if (a.rows() == 0) return 1;
  std::vector<std::vector<Rational>> m(a.rows(),
                                       std::vector<Rational>(cols.size()));
  for (int r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = a.at(r, cols[c]);
  Rational det;
  eliminate(m, &det);
  return det;
}

std::vector<Rational> first_primes(int count) {
  std::vector<Rational> out;
  for (long p = 2; static_cast<int>(out.size()) < count; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) {
        prime = false;
        break;
      }
    if (prime) out.emplace_back(p);
  }
  return out;
}

}  // namespace poslab
