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

#include <optional>
#include <string>

#include "nlie/nalg/algebra.hpp"

namespace nlie::nalg {

/// Linear map between algebras of the same arity and field that commutes
/// with the brackets on every basis tuple. Only obtainable through
/// validation.
class AlgebraMorphism {
 public:
  /// Throws PreconditionError with the violating tuple when the map does
  /// not preserve brackets, DimensionError on size mismatch.
  static AlgebraMorphism validated(AlgebraPtr source, AlgebraPtr target, LinearMap map);
  /// First basis tuple where map([x..]) != [map x..], if any.
  static std::optional<Tuple> find_violation(const NaryAlgebra& source, const NaryAlgebra& target,
                                             const LinearMap& map);
  static AlgebraMorphism identity(AlgebraPtr a);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const LinearMap& map() const { return map_; }

  Vector operator()(const Vector& v) const { return map_.apply(v); }
  /// this ∘ rhs
  AlgebraMorphism compose(const AlgebraMorphism& rhs) const;
  bool is_surjective() const;

 private:
  AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, LinearMap map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  AlgebraPtr source_;
  AlgebraPtr target_;
  LinearMap map_;
};

/// n-sided ideal: a subspace that absorbs brackets whenever any single
/// argument lies in it.
class Ideal {
 public:
  /// Throws PreconditionError when space is not an ideal of parent.
  static Ideal checked(AlgebraPtr parent, Subspace space);
  static Ideal zero(AlgebraPtr parent);
  static Ideal whole(AlgebraPtr parent);

  const AlgebraPtr& parent() const { return parent_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.rank(); }

  bool operator==(const Ideal& rhs) const { return space_ == rhs.space_; }

 private:
  Ideal(AlgebraPtr parent, Subspace space) : parent_(std::move(parent)), space_(std::move(space)) {}
  friend Ideal ideal_closure(const AlgebraPtr& a, const Subspace& s);

  AlgebraPtr parent_;
  Subspace space_;
};

/// Whether [x_1..x_n] lies in s whenever one x_i is a basis vector of s and
/// the others are basis vectors of a.
bool is_ideal(const NaryAlgebra& a, const Subspace& s);

/// Smallest ideal containing s.
Ideal ideal_closure(const AlgebraPtr& a, const Subspace& s);

}  // namespace nlie::nalg
