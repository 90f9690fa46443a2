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
#include <span>
#include <vector>

#include "nlie/exactla/scalar.hpp"

namespace nlie::exactla {

class Subspace;

/// Incremental reduced row-echelon builder.
///
/// Rows are kept in canonical RREF at all times (pivots ascending, pivot
/// entries 1, pivot columns cleared in every other row). Over F_p the rows
/// are stored as packed residues and reduced with the dispatching kernels.
class Echelon {
 public:
  Echelon(Field field, std::size_t width);

  const Field& field() const { return field_; }
  std::size_t width() const { return width_; }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the row space. Returns true when the rank grew.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  /// Remainder of v after clearing every pivot column.
  Vector reduce(const Vector& v) const;

  Vector row(std::size_t i) const;
  Subspace to_subspace() const;

 private:
  void check_width(const Vector& v) const;
  std::vector<std::uint32_t> pack(const Vector& v) const;
  Vector unpack(const std::vector<std::uint32_t>& v) const;
  void reduce_packed(std::vector<std::uint32_t>& v) const;
  void reduce_rational(Vector& v) const;

  Field field_;
  std::size_t width_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> rows_;                       // rational rows
  std::vector<std::vector<std::uint32_t>> packed_;  // F_p rows
};

/// Subspace of K^ambient stored by its canonical RREF basis, so equality of
/// subspaces is equality of stored bases.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace full(const Field& field, std::size_t ambient);
  /// Throws DimensionError if some vector has the wrong length.
  static Subspace span(const Field& field, std::size_t ambient, std::span<const Vector> vectors);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  bool is_full() const { return basis_.size() == ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member in the stored basis (its pivot entries).
  /// Throws PreconditionError when v is not in the subspace.
  Vector coordinates(const Vector& v) const;

  bool operator==(const Subspace& rhs) const;

 private:
  friend class Echelon;
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
/// Zassenhaus intersection.
Subspace subspace_intersect(const Subspace& u, const Subspace& w);

/// Dense matrix of a linear map K^cols -> K^rows; column j is the image of
/// the j-th source basis vector.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Field field, std::size_t rows, std::size_t cols);
  static LinearMap identity(const Field& field, std::size_t n);
  static LinearMap from_columns(const Field& field, std::size_t rows, std::span<const Vector> columns);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }

  Vector apply(const Vector& v) const;
  Vector column(std::size_t c) const;
  /// this ∘ rhs
  LinearMap compose(const LinearMap& rhs) const;
  std::size_t rank() const;

  bool operator==(const LinearMap& rhs) const = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct KernelImage {
  Subspace kernel;  // in source coordinates
  Subspace image;   // in target coordinates
};

KernelImage kernel_image(const LinearMap& map);

/// K^ambient / divisor with a deterministic basis: the quotient coordinates
/// are the non-pivot coordinates of the divisor's RREF.
struct QuotientSpace {
  Subspace divisor;
  std::vector<std::size_t> representatives;  // non-pivot coordinates
  LinearMap projection;                      // (ambient - rank) x ambient
  LinearMap section;                         // ambient x (ambient - rank)

  std::size_t dim() const { return representatives.size(); }
  Vector project(const Vector& v) const;
};

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& sub);

}  // namespace nlie::exactla
