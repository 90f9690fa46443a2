// Copyright 2026 The nlie Authors.
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

#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "nlie/exactla/linear.hpp"

namespace nlie::testing {

using exactla::Field;
using exactla::Subspace;
using exactla::Vector;

inline Vector vec(const Field& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Vector qvec(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(Field::rationals().parse_scalar(x));
  return v;
}

inline Subspace span(const Field& f, std::size_t n, std::initializer_list<Vector> vs) {
  std::vector<Vector> v(vs);
  return Subspace::span(f, n, v);
}

/// Random vector with small entries, biased towards zeros so that random
/// spans are often rank deficient.
inline Vector random_vector(std::mt19937_64& rng, const Field& f, std::size_t n) {
  std::uniform_int_distribution<int> pick(-3, 3);
  std::bernoulli_distribution zero(0.4);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(zero(rng) ? f.zero() : f.from_int(pick(rng)));
  return v;
}

inline Subspace random_subspace(std::mt19937_64& rng, const Field& f, std::size_t n) {
  std::uniform_int_distribution<std::size_t> count(0, n + 1);
  std::vector<Vector> gens;
  for (std::size_t k = count(rng); k > 0; --k) gens.push_back(random_vector(rng, f, n));
  return Subspace::span(f, n, gens);
}

}  // namespace nlie::testing
