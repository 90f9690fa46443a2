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

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nlie/exactla/linear.hpp"

namespace nlie::nalg {

using exactla::Field;
using exactla::LinearMap;
using exactla::Scalar;
using exactla::Subspace;
using exactla::Vector;

/// Basis-index tuple, 0-based.
using Tuple = std::vector<std::uint32_t>;

struct Term {
  std::uint32_t index;
  Scalar value;
};
/// Sparse coordinate vector with strictly increasing indices.
using SparseVector = std::vector<Term>;

/// Finite-dimensional vector space with an n-linear bracket given by
/// sparse structure constants. A tuple without an entry brackets to zero.
///
/// Nothing about the identities the bracket satisfies is stored here;
/// that is what validate_leibniz / validate_lie report.
class NaryAlgebra {
 public:
  /// Empty labels default to e1..e<dim>. Throws DimensionError when
  /// arity < 2 or dim^arity does not fit the tuple encoding.
  NaryAlgebra(std::string name, unsigned arity, std::size_t dim, Field field,
              std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  unsigned arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  void set_name(std::string name) { name_ = std::move(name); }
  /// Sets the structure constant for a basis tuple; a zero value erases it.
  void set_bracket(std::span<const std::uint32_t> args, const Vector& value);
  /// Adds to the structure constant for a basis tuple.
  void add_to_bracket(std::span<const std::uint32_t> args, std::uint32_t index, const Scalar& value);

  /// Structure constants of a basis tuple, or nullptr for a zero bracket.
  const SparseVector* basis_bracket(std::span<const std::uint32_t> args) const;
  Vector basis_bracket_dense(std::span<const std::uint32_t> args) const;

  /// n-linear extension of the structure constants.
  Vector bracket(std::span<const Vector> args) const;
  /// Same, without copying the arguments.
  Vector bracket(std::span<const Vector* const> args) const;

  bool is_zero_bracket() const { return table_.empty(); }
  std::size_t nonzero_count() const { return table_.size(); }
  /// All nonzero structure constants, tuples in lexicographic order.
  std::vector<std::pair<Tuple, SparseVector>> entries() const;

  Vector zero() const { return exactla::zero_vector(field_, dim_); }
  Vector basis_vector(std::size_t i) const { return exactla::unit_vector(field_, dim_, i); }
  /// Number of basis tuples, dim^arity.
  std::uint64_t tuple_count() const { return tuple_count_; }
  Tuple decode(std::uint64_t code) const;

  /// Same arity, dimension, field and structure constants (names and
  /// labels are ignored).
  bool same_structure(const NaryAlgebra& other) const;

 private:
  std::uint64_t encode(std::span<const std::uint32_t> args) const;

  std::string name_;
  unsigned arity_;
  std::size_t dim_;
  Field field_;
  std::vector<std::string> labels_;
  std::uint64_t tuple_count_ = 1;
  std::unordered_map<std::uint64_t, SparseVector> table_;
};

using AlgebraPtr = std::shared_ptr<const NaryAlgebra>;

inline AlgebraPtr share(NaryAlgebra a) { return std::make_shared<const NaryAlgebra>(std::move(a)); }

/// Element of S_n in one-line notation with its signature.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> image);

  std::size_t size() const { return image_.size(); }
  std::uint32_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::uint32_t>& image() const { return image_; }
  int sign() const { return sign_; }
  bool is_identity() const;

  /// All of S_n in lexicographic order, identity first.
  static std::vector<Permutation> all(std::size_t n);
  /// Transposition of positions i and i+1.
  static Permutation adjacent(std::size_t n, std::size_t i);

 private:
  std::vector<std::uint32_t> image_;
  int sign_;
};

/// Calls fn(tuple) for every tuple in [0, radix)^length in lexicographic
/// order; fn returns false to stop early. Returns false if stopped.
template <class Fn>
bool for_each_tuple(std::size_t length, std::size_t radix, Fn&& fn) {
  Tuple t(length, 0);
  if (radix == 0 && length > 0) return true;
  while (true) {
    if (!fn(static_cast<const Tuple&>(t))) return false;
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++t[pos] < radix) break;
      t[pos] = 0;
      if (pos == 0) return true;
    }
    if (length == 0) return true;
  }
}

/// Human-readable vector: "2*e1 - e3", "0" for zero.
std::string format_vector(const NaryAlgebra& a, const Vector& v);
/// "(x,y,z)" using the algebra's labels.
std::string format_tuple(const NaryAlgebra& a, std::span<const std::uint32_t> t);

}  // namespace nlie::nalg
