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

#include "nlie/nalg/algebra.hpp"

#include <algorithm>
#include <limits>

namespace nlie::nalg {

NaryAlgebra::NaryAlgebra(std::string name, unsigned arity, std::size_t dim, Field field,
                         std::vector<std::string> labels)
    : name_(std::move(name)), arity_(arity), dim_(dim), field_(field), labels_(std::move(labels)) {
  if (arity_ < 2) throw DimensionError("arity must be at least 2");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_) throw DimensionError("label count differs from dimension");
  for (unsigned i = 0; i < arity_; ++i) {
    if (dim_ != 0 && tuple_count_ > std::numeric_limits<std::uint64_t>::max() / 2 / dim_) {
      throw DimensionError("dim^arity too large");
    }
    tuple_count_ *= dim_;
  }
}

std::uint64_t NaryAlgebra::encode(std::span<const std::uint32_t> args) const {
  if (args.size() != arity_) throw DimensionError("bracket tuple has the wrong arity");
  std::uint64_t code = 0;
  for (auto a : args) {
    if (a >= dim_) throw DimensionError("basis index out of range");
    code = code * dim_ + a;
  }
  return code;
}

Tuple NaryAlgebra::decode(std::uint64_t code) const {
  Tuple t(arity_);
  for (std::size_t i = arity_; i-- > 0;) {
    t[i] = static_cast<std::uint32_t>(code % dim_);
    code /= dim_;
  }
  return t;
}

void NaryAlgebra::set_bracket(std::span<const std::uint32_t> args, const Vector& value) {
  const auto code = encode(args);
  if (value.size() != dim_) throw DimensionError("bracket value has the wrong length");
  SparseVector sparse;
  for (std::uint32_t i = 0; i < value.size(); ++i) {
    if (value[i].field() != field_) throw FieldError("bracket value from another field");
    if (!value[i].is_zero()) sparse.push_back({i, value[i]});
  }
  if (sparse.empty()) {
    table_.erase(code);
  } else {
    table_[code] = std::move(sparse);
  }
}

void NaryAlgebra::add_to_bracket(std::span<const std::uint32_t> args, std::uint32_t index, const Scalar& value) {
  if (value.is_zero()) return;
  if (index >= dim_) throw DimensionError("basis index out of range");
  const auto code = encode(args);
  auto& sparse = table_[code];
  auto it = std::lower_bound(sparse.begin(), sparse.end(), index,
                             [](const Term& t, std::uint32_t i) { return t.index < i; });
  if (it != sparse.end() && it->index == index) {
    it->value += value;
    if (it->value.is_zero()) sparse.erase(it);
  } else {
    sparse.insert(it, {index, value});
  }
  if (sparse.empty()) table_.erase(code);
}

const SparseVector* NaryAlgebra::basis_bracket(std::span<const std::uint32_t> args) const {
  auto it = table_.find(encode(args));
  return it == table_.end() ? nullptr : &it->second;
}

Vector NaryAlgebra::basis_bracket_dense(std::span<const std::uint32_t> args) const {
  Vector v = zero();
  if (const auto* s = basis_bracket(args)) {
    for (const auto& t : *s) v[t.index] = t.value;
  }
  return v;
}

Vector NaryAlgebra::bracket(std::span<const Vector> values) const {
  std::vector<const Vector*> ptrs;
  ptrs.reserve(values.size());
  for (const auto& v : values) ptrs.push_back(&v);
  return bracket(std::span<const Vector* const>(ptrs));
}

Vector NaryAlgebra::bracket(std::span<const Vector* const> ptrs) const {
  if (ptrs.size() != arity_) throw DimensionError("bracket called with the wrong number of arguments");
  auto args = [&](std::size_t s) -> const Vector& { return *ptrs[s]; };
  std::vector<std::vector<std::uint32_t>> support(arity_);
  for (std::size_t s = 0; s < arity_; ++s) {
    if (args(s).size() != dim_) throw DimensionError("bracket argument has the wrong length");
    for (std::uint32_t i = 0; i < dim_; ++i) {
      if (!args(s)[i].is_zero()) support[s].push_back(i);
    }
  }
  Vector out = zero();
  if (table_.empty()) return out;
  Tuple pick(arity_, 0);
  Tuple t(arity_);
  double products = 1;
  for (const auto& s : support) {
    if (s.empty()) return out;
    products *= static_cast<double>(s.size());
  }
  if (products > static_cast<double>(table_.size())) {
    // Fewer stored constants than support tuples: walk the table instead.
    Tuple u(arity_);
    for (const auto& [code, value] : table_) {
      std::uint64_t rest = code;
      for (std::size_t s = arity_; s-- > 0;) {
        u[s] = static_cast<std::uint32_t>(rest % dim_);
        rest /= dim_;
      }
      bool live = true;
      for (std::size_t s = 0; s < arity_ && live; ++s) live = !args(s)[u[s]].is_zero();
      if (!live) continue;
      Scalar coef = args(0)[u[0]];
      for (std::size_t s = 1; s < arity_; ++s) coef *= args(s)[u[s]];
      for (const auto& term : value) out[term.index] += coef * term.value;
    }
    return out;
  }
  while (true) {
    for (std::size_t s = 0; s < arity_; ++s) t[s] = support[s][pick[s]];
    if (const auto* value = basis_bracket(t)) {
      Scalar coef = field_.one();
      for (std::size_t s = 0; s < arity_; ++s) coef *= args(s)[t[s]];
      for (const auto& term : *value) out[term.index] += coef * term.value;
    }
    std::size_t pos = arity_;
    while (pos > 0) {
      --pos;
      if (++pick[pos] < support[pos].size()) break;
      pick[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<std::pair<Tuple, SparseVector>> NaryAlgebra::entries() const {
  std::vector<std::pair<std::uint64_t, const SparseVector*>> codes;
  codes.reserve(table_.size());
  for (const auto& [code, value] : table_) codes.emplace_back(code, &value);
  std::sort(codes.begin(), codes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Tuple, SparseVector>> out;
  out.reserve(codes.size());
  for (const auto& [code, value] : codes) out.emplace_back(decode(code), *value);
  return out;
}

bool NaryAlgebra::same_structure(const NaryAlgebra& other) const {
  if (arity_ != other.arity_ || dim_ != other.dim_ || field_ != other.field_) return false;
  if (table_.size() != other.table_.size()) return false;
  for (const auto& [code, value] : table_) {
    auto it = other.table_.find(code);
    if (it == other.table_.end() || it->second.size() != value.size()) return false;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (value[i].index != it->second[i].index || !(value[i].value == it->second[i].value)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)), sign_(1) {
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw DimensionError("not a permutation");
    seen[v] = true;
  }
  for (std::size_t i = 0; i < image_.size(); ++i) {
    for (std::size_t j = i + 1; j < image_.size(); ++j) {
      if (image_[i] > image_[j]) sign_ = -sign_;
    }
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<Permutation> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation Permutation::adjacent(std::size_t n, std::size_t i) {
  if (i + 1 >= n) throw DimensionError("adjacent transposition out of range");
  std::vector<std::uint32_t> p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint32_t>(k);
  std::swap(p[i], p[i + 1]);
  return Permutation(std::move(p));
}

// ---------------------------------------------------------------- formatting

std::string format_vector(const NaryAlgebra& a, const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coef = v[i].to_string();
    bool negative = !coef.empty() && coef.front() == '-';
    if (negative) coef.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coef != "1") out += coef + "*";
    out += a.label(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_tuple(const NaryAlgebra& a, std::span<const std::uint32_t> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += a.label(t[i]);
  }
  return out + ")";
}

}  // namespace nlie::nalg
