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

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nlie/exactla/error.hpp"

namespace nlie::exactla {

class Scalar;

/// Ground field: the rationals, or a prime field F_p with p odd.
///
/// A computation never mixes fields; scalars carry their modulus and any
/// mixed operation throws FieldError.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws FieldError unless p is an odd prime below 2^31.
  static Field prime(std::uint32_t p);
  /// Parses "Q" or "F<p>".
  static Field parse(std::string_view text);

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }
  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// Maps a rational into this field; throws FieldError when the
  /// denominator is not invertible mod p.
  Scalar from_rational(const mpq_class& value) const;
  /// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument on
  /// malformed text.
  Scalar parse_scalar(std::string_view text) const;

  constexpr bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element: a rational in lowest terms, or a residue in [0, p).
///
/// Rationals whose numerator and denominator fit in 64 bits are kept
/// inline; anything larger lives in a shared immutable GMP rational.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Field field() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  /// Value as a rational; for F_p this is the canonical residue.
  mpq_class rational() const;
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  bool operator==(const Scalar& rhs) const;

  /// "p", "-p", "p/q" for Q; "k" for F_p.
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(std::int64_t num, std::int64_t den, std::uint32_t modulus) : num_(num), den_(den), modulus_(modulus) {}
  static Scalar from_mpq(mpq_class value);
  void check_same(const Scalar& rhs) const;
  void assign_big(const mpq_class& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;  // set only when the value does not fit inline
  std::uint32_t modulus_ = 0;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
/// y += c * x
void axpy(Vector& y, const Scalar& c, const Vector& x);

}  // namespace nlie::exactla
