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

#include "nlie/exactla/linear.hpp"

#include <algorithm>

#include "nlie/exactla/kernels.hpp"

namespace nlie::exactla {

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(Field field, std::size_t width) : field_(field), width_(width) {}

void Echelon::check_width(const Vector& v) const {
  if (v.size() != width_) {
    throw DimensionError("vector of length " + std::to_string(v.size()) + " in a space of dimension " +
                         std::to_string(width_));
  }
}

std::vector<std::uint32_t> Echelon::pack(const Vector& v) const {
  std::vector<std::uint32_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].field() != field_) throw FieldError("vector entry from " + v[i].field().to_string());
    out[i] = v[i].residue();
  }
  return out;
}

Vector Echelon::unpack(const std::vector<std::uint32_t>& v) const {
  Vector out;
  out.reserve(v.size());
  for (auto x : v) out.push_back(field_.from_int(static_cast<long>(x)));
  return out;
}

void Echelon::reduce_packed(std::vector<std::uint32_t>& v) const {
  const std::uint32_t p = field_.characteristic();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::uint32_t c = v[pivots_[i]];
    if (c != 0) kernels::axpy_mod(v, packed_[i], p - c, p);
  }
}

void Echelon::reduce_rational(Vector& v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (!v[pivots_[i]].is_zero()) axpy(v, -v[pivots_[i]], rows_[i]);
  }
}

Vector Echelon::reduce(const Vector& v) const {
  check_width(v);
  if (field_.is_rational()) {
    Vector r = v;
    reduce_rational(r);
    return r;
  }
  auto r = pack(v);
  reduce_packed(r);
  return unpack(r);
}

bool Echelon::contains(const Vector& v) const {
  check_width(v);
  if (field_.is_rational()) {
    Vector r = v;
    reduce_rational(r);
    return is_zero(r);
  }
  auto r = pack(v);
  reduce_packed(r);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

bool Echelon::insert(const Vector& v) {
  check_width(v);
  if (field_.is_rational()) {
    Vector r = v;
    reduce_rational(r);
    auto lead = std::find_if(r.begin(), r.end(), [](const Scalar& x) { return !x.is_zero(); });
    if (lead == r.end()) return false;
    const std::size_t col = static_cast<std::size_t>(lead - r.begin());
    r = scale(lead->inverse(), r);
    for (auto& row : rows_) {
      if (!row[col].is_zero()) axpy(row, -row[col], r);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, col);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }
  const std::uint32_t p = field_.characteristic();
  auto r = pack(v);
  reduce_packed(r);
  auto lead = std::find_if(r.begin(), r.end(), [](std::uint32_t x) { return x != 0; });
  if (lead == r.end()) return false;
  const std::size_t col = static_cast<std::size_t>(lead - r.begin());
  kernels::scale_mod(r, field_.from_int(static_cast<long>(*lead)).inverse().residue(), p);
  for (auto& row : packed_) {
    if (row[col] != 0) kernels::axpy_mod(row, r, p - row[col], p);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, col);
  packed_.insert(packed_.begin() + pos, std::move(r));
  return true;
}

Vector Echelon::row(std::size_t i) const {
  return field_.is_rational() ? rows_.at(i) : unpack(packed_.at(i));
}

Subspace Echelon::to_subspace() const {
  Subspace s;
  s.field_ = field_;
  s.ambient_ = width_;
  s.pivots_ = pivots_;
  s.basis_.reserve(rank());
  for (std::size_t i = 0; i < rank(); ++i) s.basis_.push_back(row(i));
  return s;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(const Field& field, std::size_t ambient) {
  return Echelon(field, ambient).to_subspace();
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  Echelon e(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) e.insert(unit_vector(field, ambient, i));
  return e.to_subspace();
}

Subspace Subspace::span(const Field& field, std::size_t ambient, std::span<const Vector> vectors) {
  Echelon e(field, ambient);
  for (const auto& v : vectors) e.insert(v);
  return e.to_subspace();
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("membership test with a vector of the wrong length");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!r[pivots_[i]].is_zero()) axpy(r, -r[pivots_[i]], basis_[i]);
  }
  return exactla::is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspaces of different ambient spaces");
  if (other.rank() > rank()) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw PreconditionError("vector is not in the subspace");
  Vector c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::operator==(const Subspace& rhs) const {
  return field_ == rhs.field_ && ambient_ == rhs.ambient_ && pivots_ == rhs.pivots_ && basis_ == rhs.basis_;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("subspace_sum: ambient mismatch");
  if (u.field() != w.field()) throw FieldError("subspace_sum: field mismatch");
  Echelon e(u.field(), u.ambient_dim());
  for (const auto& v : u.basis()) e.insert(v);
  for (const auto& v : w.basis()) e.insert(v);
  return e.to_subspace();
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionError("subspace_intersect: ambient mismatch");
  if (u.field() != w.field()) throw FieldError("subspace_intersect: field mismatch");
  const std::size_t n = u.ambient_dim();
  const Field& field = u.field();
  Echelon e(field, 2 * n);
  for (const auto& v : u.basis()) {
    Vector row = v;
    row.insert(row.end(), v.begin(), v.end());
    e.insert(row);
  }
  for (const auto& v : w.basis()) {
    Vector row = v;
    row.resize(2 * n, field.zero());
    e.insert(row);
  }
  Echelon out(field, n);
  for (std::size_t i = 0; i < e.rank(); ++i) {
    if (e.pivots()[i] < n) continue;
    Vector row = e.row(i);
    out.insert(Vector(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
  }
  return out.to_subspace();
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

LinearMap LinearMap::identity(const Field& field, std::size_t n) {
  LinearMap m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

LinearMap LinearMap::from_columns(const Field& field, std::size_t rows, std::span<const Vector> columns) {
  LinearMap m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.size() != cols_) {
    throw DimensionError("map with " + std::to_string(cols_) + " columns applied to a vector of length " +
                         std::to_string(v.size()));
  }
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = data_[r * cols_ + c];
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Vector LinearMap::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

LinearMap LinearMap::compose(const LinearMap& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("compose: inner dimensions differ");
  LinearMap out(field_, rows_, rhs.cols_);
  for (std::size_t c = 0; c < rhs.cols_; ++c) {
    Vector col = apply(rhs.column(c));
    for (std::size_t r = 0; r < rows_; ++r) out.at(r, c) = col[r];
  }
  return out;
}

std::size_t LinearMap::rank() const { return kernel_image(*this).image.rank(); }

KernelImage kernel_image(const LinearMap& map) {
  const Field& field = map.field();
  Echelon rows(field, map.cols());
  for (std::size_t r = 0; r < map.rows(); ++r) {
    Vector row;
    row.reserve(map.cols());
    for (std::size_t c = 0; c < map.cols(); ++c) row.push_back(map(r, c));
    rows.insert(row);
  }
  std::vector<Vector> kernel;
  const auto& pivots = rows.pivots();
  std::vector<Vector> reduced;
  for (std::size_t i = 0; i < rows.rank(); ++i) reduced.push_back(rows.row(i));
  for (std::size_t f = 0; f < map.cols(); ++f) {
    if (std::binary_search(pivots.begin(), pivots.end(), f)) continue;
    Vector x = unit_vector(field, map.cols(), f);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -reduced[i][f];
    kernel.push_back(std::move(x));
  }
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < map.cols(); ++c) columns.push_back(map.column(c));
  return {Subspace::span(field, map.cols(), kernel), Subspace::span(field, map.rows(), columns)};
}

// ---------------------------------------------------------------- quotient

Vector QuotientSpace::project(const Vector& v) const {
  if (v.size() != divisor.ambient_dim()) throw DimensionError("project: vector length mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < divisor.rank(); ++i) {
    const auto p = divisor.pivots()[i];
    if (!r[p].is_zero()) axpy(r, -r[p], divisor.basis()[i]);
  }
  Vector out;
  out.reserve(representatives.size());
  for (auto c : representatives) out.push_back(r[c]);
  return out;
}

QuotientSpace quotient_space(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim() != ambient_dim) throw DimensionError("quotient_space: ambient mismatch");
  const Field& field = sub.field();
  QuotientSpace q;
  q.divisor = sub;
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    if (!std::binary_search(sub.pivots().begin(), sub.pivots().end(), c)) q.representatives.push_back(c);
  }
  const std::size_t k = q.representatives.size();
  q.projection = LinearMap(field, k, ambient_dim);
  for (std::size_t c = 0; c < ambient_dim; ++c) {
    Vector image = q.project(unit_vector(field, ambient_dim, c));
    for (std::size_t r = 0; r < k; ++r) q.projection.at(r, c) = image[r];
  }
  q.section = LinearMap(field, ambient_dim, k);
  for (std::size_t j = 0; j < k; ++j) q.section.at(q.representatives[j], j) = field.one();
  return q;
}

}  // namespace nlie::exactla
