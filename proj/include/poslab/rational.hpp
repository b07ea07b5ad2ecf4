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

#ifndef POSLAB_RATIONAL_HPP_
#define POSLAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace poslab {

using Rational = mpq_class;

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// "p/q" with q >= 1, always including the denominator.
std::string to_fraction_string(const Rational& q);
// Accepts "p/q" or an integer; throws ArgumentError otherwise.
Rational parse_rational(const std::string& s);

int matrix_rank(const RationalMatrix& a);
// Determinant of the square submatrix on the given 0-based columns.
Rational column_minor(const RationalMatrix& a, const std::vector<int>& cols);

// The first count primes as rationals.
std::vector<Rational> first_primes(int count);

}  // namespace poslab

#endif  // POSLAB_RATIONAL_HPP_
