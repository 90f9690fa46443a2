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

#include "nlie/nalg/morphism.hpp"

#include <deque>

namespace nlie::nalg {
namespace {

// Bracket with `v` in position `slot` and basis vectors elsewhere.
Vector bracket_in_slot(const NaryAlgebra& a, std::size_t slot, const Vector& v, const Tuple& others) {
  Vector out = a.zero();
  Tuple t(a.arity());
  for (std::size_t s = 0, o = 0; s < a.arity(); ++s) {
    if (s != slot) t[s] = others[o++];
  }
  for (std::uint32_t k = 0; k < a.dim(); ++k) {
    if (v[k].is_zero()) continue;
    t[slot] = k;
    if (const auto* value = a.basis_bracket(t)) {
      for (const auto& term : *value) out[term.index] += v[k] * term.value;
    }
  }
  return out;
}

}  // namespace

std::optional<Tuple> AlgebraMorphism::find_violation(const NaryAlgebra& source, const NaryAlgebra& target,
                                                     const LinearMap& map) {
  if (source.arity() != target.arity()) throw DimensionError("morphism between algebras of different arity");
  if (source.field() != target.field() || map.field() != source.field()) {
    throw FieldError("morphism between algebras over different fields");
  }
  if (map.rows() != target.dim() || map.cols() != source.dim()) {
    throw DimensionError("morphism matrix must be " + std::to_string(target.dim()) + "x" +
                         std::to_string(source.dim()));
  }
  std::vector<Vector> images;
  for (std::size_t j = 0; j < source.dim(); ++j) images.push_back(map.column(j));
  std::optional<Tuple> bad;
  std::vector<const Vector*> args(source.arity());
  for_each_tuple(source.arity(), source.dim(), [&](const Tuple& t) {
    Vector lhs = map.apply(source.basis_bracket_dense(t));
    for (std::size_t s = 0; s < t.size(); ++s) args[s] = &images[t[s]];
    if (!(lhs == target.bracket(std::span<const Vector* const>(args)))) {
      bad = t;
      return false;
    }
    return true;
  });
  return bad;
}

AlgebraMorphism AlgebraMorphism::validated(AlgebraPtr source, AlgebraPtr target, LinearMap map) {
  if (auto bad = find_violation(*source, *target, map)) {
    throw PreconditionError("map " + source->name() + " -> " + target->name() +
                            " does not preserve the bracket at " + format_tuple(*source, *bad));
  }
  return AlgebraMorphism(std::move(source), std::move(target), std::move(map));
}

AlgebraMorphism AlgebraMorphism::identity(AlgebraPtr a) {
  auto map = LinearMap::identity(a->field(), a->dim());
  return AlgebraMorphism(a, a, std::move(map));
}

AlgebraMorphism AlgebraMorphism::compose(const AlgebraMorphism& rhs) const {
  if (rhs.target_->dim() != source_->dim()) throw DimensionError("composing non-composable morphisms");
  // Composites of bracket-preserving maps preserve brackets.
  return AlgebraMorphism(rhs.source_, target_, map_.compose(rhs.map_));
}

bool AlgebraMorphism::is_surjective() const { return map_.rank() == target_->dim(); }

// ---------------------------------------------------------------- ideals

bool is_ideal(const NaryAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionError("subspace does not live in the algebra");
  if (s.is_zero() || s.is_full()) return true;
  for (std::size_t slot = 0; slot < a.arity(); ++slot) {
    for (const auto& v : s.basis()) {
      bool ok = for_each_tuple(a.arity() - 1, a.dim(), [&](const Tuple& others) {
        return s.contains(bracket_in_slot(a, slot, v, others));
      });
      if (!ok) return false;
    }
  }
  return true;
}

Ideal Ideal::checked(AlgebraPtr parent, Subspace space) {
  if (!is_ideal(*parent, space)) {
    throw PreconditionError("subspace is not an ideal of " + parent->name());
  }
  return Ideal(std::move(parent), std::move(space));
}

Ideal Ideal::zero(AlgebraPtr parent) {
  auto s = Subspace::zero(parent->field(), parent->dim());
  return Ideal(std::move(parent), std::move(s));
}

Ideal Ideal::whole(AlgebraPtr parent) {
  auto s = Subspace::full(parent->field(), parent->dim());
  return Ideal(std::move(parent), std::move(s));
}

Ideal ideal_closure(const AlgebraPtr& a, const Subspace& s) {
  if (s.ambient_dim() != a->dim()) throw DimensionError("ideal_closure: subspace does not live in the algebra");
  exactla::Echelon echelon(a->field(), a->dim());
  std::deque<Vector> pending;
  for (const auto& v : s.basis()) {
    if (echelon.insert(v)) pending.push_back(v);
  }
  // Brackets are linear in the ideal slot, so bracketing each newly added
  // generator once reaches the fixpoint.
  while (!pending.empty() && echelon.rank() < a->dim()) {
    Vector v = std::move(pending.front());
    pending.pop_front();
    for (std::size_t slot = 0; slot < a->arity(); ++slot) {
      for_each_tuple(a->arity() - 1, a->dim(), [&](const Tuple& others) {
        Vector w = bracket_in_slot(*a, slot, v, others);
        if (echelon.insert(w)) pending.push_back(std::move(w));
        return true;
      });
    }
  }
  return Ideal(a, echelon.to_subspace());
}

}  // namespace nlie::nalg
