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
#include <span>
#include <string>
#include <vector>

#include "nlie/nalg/morphism.hpp"

namespace nlie::nalg {

// ---------------------------------------------------------------- axioms

struct Counterexample {
  enum class Kind { fundamental_identity, skew_symmetry };
  Kind kind;
  /// Fundamental identity: (l_1..l_n, l'_1..l'_{n-1}). Skew symmetry: the
  /// n-tuple, with `position` the first slot of the adjacent transposition.
  Tuple tuple;
  std::size_t position = 0;
  Vector lhs;
  Vector rhs;
  /// rhs - lhs
  Vector defect;
};

struct ValidationReport {
  bool ok = true;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return ok; }
  std::string describe(const NaryAlgebra& a) const;
};

/// Checks the fundamental identity
///   [[l_1..l_n], l'_1..l'_{n-1}] = sum_i [l_1..[l_i, l'_1..l'_{n-1}]..l_n]
/// on every (2n-1)-tuple of basis vectors; the first violation in
/// lexicographic order is reported.
ValidationReport validate_leibniz(const NaryAlgebra& a);

/// validate_leibniz plus skew symmetry under adjacent transpositions (which
/// generate S_n). Throws FieldError in characteristic 2.
ValidationReport validate_lie(const NaryAlgebra& a);

// ---------------------------------------------------------------- commutators

enum class CommutatorVariant { leibniz, lie, relative };

std::string_view variant_name(CommutatorVariant v);

/// Commutator ideal of n ideals of the same algebra.
///  - leibniz:  generated by [x_τ(1)..x_τ(n)], x_i in N_i, τ in S_n
///  - lie:      generated by [x_1..x_n], x_i in N_i
///  - relative: generated by <y>_σ = [y] - sgn(σ)[y_σ(1)..y_σ(n)] for y any
///              slot assignment of the x_i and σ in S_n
Ideal commutator(const AlgebraPtr& a, std::span<const Ideal> ideals, CommutatorVariant variant);

/// Commutator with every slot equal to the whole algebra.
Ideal full_commutator(const AlgebraPtr& a, CommutatorVariant variant);

/// Relative commutator <A..A> generated by brackets with two equal
/// adjacent arguments; must agree with full_commutator(a, relative).
Ideal relative_commutator_adjacent(const AlgebraPtr& a);

// ---------------------------------------------------------------- quotients

struct Quotient {
  AlgebraPtr algebra;
  AlgebraMorphism projection;
  exactla::QuotientSpace space;
};

/// Algebra on K^dim / N with the induced bracket; throws PreconditionError
/// when n is not an ideal of a. An empty name becomes "<a>/N".
Quotient quotient_algebra(const AlgebraPtr& a, const Subspace& n, std::string name = {});

/// a / [a..a] (Leibniz commutator); the result has zero bracket.
Quotient abelianization(const AlgebraPtr& a);

/// a / <a..a>; throws PreconditionError unless a is Leibniz.
Quotient liesation(const AlgebraPtr& a);

/// Leibniz 2-algebra on the (n-1)-st tensor power with
///   [a_1⊗..⊗a_{n-1}, b_1⊗..⊗b_{n-1}] = sum_i a_1⊗..⊗[a_i,b_1..b_{n-1}]⊗..⊗a_{n-1}.
/// Throws PreconditionError unless a is Leibniz.
AlgebraPtr daletskii(const AlgebraPtr& a);

// ---------------------------------------------------------------- kernels

Ideal kernel_ideal(const AlgebraMorphism& f);

struct KernelPair {
  AlgebraPtr algebra;       // {(b, b') : f b = f b'} inside B x B
  Subspace embedding;       // the same subspace in coordinates of B x B
  AlgebraMorphism first;    // (b, b') -> b
  AlgebraMorphism second;   // (b, b') -> b'
};

KernelPair kernel_pair(const AlgebraMorphism& f);

struct Subalgebra {
  AlgebraPtr algebra;
  AlgebraMorphism inclusion;
};

/// Subalgebra on s (coordinates = pivot entries of its RREF basis); throws
/// PreconditionError when s is not closed under the bracket.
Subalgebra subalgebra(const AlgebraPtr& a, const Subspace& s, std::string name);

/// a x b with the componentwise bracket.
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

// ---------------------------------------------------------------- builders

/// d-dimensional algebra with zero n-ary bracket.
AlgebraPtr abelian(std::size_t d, unsigned n, const Field& field = Field::rationals());

struct FreeNilpotent {
  AlgebraPtr algebra;         // V ⊕ W
  AlgebraMorphism augmentation;  // onto the abelian algebra V, killing W
};

/// Degree-two truncation of the free Leibniz (W = V^{⊗n}) or Lie
/// (W = Λ^n V) n-algebra on d generators. `variant` must be leibniz or lie.
FreeNilpotent free_nilpotent2(unsigned n, std::size_t d, CommutatorVariant variant,
                              const Field& field = Field::rationals());

}  // namespace nlie::nalg
