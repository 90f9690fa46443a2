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

#include "nlie/exactla/scalar.hpp"

#include <cctype>
#include <climits>
#include <stdexcept>

namespace nlie::exactla {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw FieldError("characteristic 2 is not supported");
  if (p >= (1u << 31) || !is_prime(p)) {
    throw FieldError("F" + std::to_string(p) + ": modulus must be an odd prime below 2^31");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text[0] == 'F' && all_digits(text.substr(1)) && text.size() <= 11) {
    unsigned long long p = std::stoull(std::string(text.substr(1)));
    if (p >= (1ull << 31)) throw FieldError("field modulus too large: " + std::string(text));
    return prime(static_cast<std::uint32_t>(p));
  }
  throw FieldError("unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Field::zero() const { return Scalar(0, 1, p_); }
Scalar Field::one() const { return Scalar(1, 1, p_); }

Scalar Field::from_int(long value) const {
  if (p_ == 0) return Scalar(value, 1, 0);
  long r = value % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(r, 1, p_);
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (p_ == 0) {
    mpq_class q = value;
    q.canonicalize();
    return Scalar::from_mpq(std::move(q));
  }
  mpz_class p(p_);
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw FieldError("denominator not invertible in F" + std::to_string(p_));
  auto inv = mod_inverse(static_cast<std::uint32_t>(den.get_ui()), p_);
  std::uint64_t r = static_cast<std::uint64_t>(num.get_ui()) * inv % p_;
  return Scalar(static_cast<std::int64_t>(r), 1, p_);
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in scalar '" + std::string(text) + "'");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return from_rational(q);
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits(i128 v) { return v >= INT64_MIN + 1 && v <= INT64_MAX; }

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Scalar Scalar::from_mpq(mpq_class value) {
  Scalar s;
  s.assign_big(value);
  return s;
}

void Scalar::assign_big(const mpq_class& value) {
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p() && value.get_num() != LONG_MIN) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_shared<const mpq_class>(value);
  }
}

mpq_class Scalar::rational() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

Field Scalar::field() const { return Field(modulus_); }

std::uint32_t Scalar::residue() const {
  if (modulus_ == 0) throw FieldError("residue() called on a rational scalar");
  return static_cast<std::uint32_t>(num_);
}

void Scalar::check_same(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw FieldError("mixed-field arithmetic: " + field().to_string() + " vs " + rhs.field().to_string());
  }
}

Scalar Scalar::operator-() const {
  if (modulus_ != 0) return Scalar(num_ == 0 ? 0 : modulus_ - num_, 1, modulus_);
  if (big_) return from_mpq(-*big_);
  return Scalar(-num_, den_, 0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (modulus_ != 0) return Scalar(mod_inverse(residue(), modulus_), 1, 0 + modulus_);
  if (big_) return from_mpq(1 / *big_);
  return num_ < 0 ? Scalar(-den_, -num_, 0) : Scalar(den_, num_, 0);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same(rhs);
  if (modulus_ != 0) {
    std::int64_t r = num_ + rhs.num_;
    if (r >= modulus_) r -= modulus_;
    num_ = r;
    return *this;
  }
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, rhs.num_, &r) && r != INT64_MIN) {
        num_ = r;
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    i128 d = static_cast<i128>(den_) * rhs.den_;
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign_big(rational() + rhs.rational());
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same(rhs);
  if (modulus_ != 0) {
    num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(rhs.num_) % modulus_);
    return *this;
  }
  if (is_zero() || rhs.is_one()) return *this;
  if (rhs.is_zero() || is_one()) return *this = rhs;
  if (!big_ && !rhs.big_) {
    // cross-cancel so that the products are already in lowest terms
    u128 g1 = gcd128(abs128(num_), static_cast<u128>(rhs.den_));
    u128 g2 = gcd128(abs128(rhs.num_), static_cast<u128>(den_));
    i128 n = (static_cast<i128>(num_) / static_cast<i128>(g1)) * (static_cast<i128>(rhs.num_) / static_cast<i128>(g2));
    i128 d = (static_cast<i128>(den_) / static_cast<i128>(g2)) * (static_cast<i128>(rhs.den_) / static_cast<i128>(g1));
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  assign_big(rational() * rhs.rational());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_) return false;
  if (big_ || rhs.big_) return big_ && rhs.big_ && *big_ == *rhs.big_;
  return num_ == rhs.num_ && den_ == rhs.den_;
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vector& y, const Scalar& c, const Vector& x) {
  if (y.size() != x.size()) throw DimensionError("vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}

}  // namespace nlie::exactla
