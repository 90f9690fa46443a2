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
#include <vector>

#include "nlie/ext/centrality.hpp"

namespace nlie::homology {

using exactla::LinearMap;
using exactla::QuotientSpace;
using exactla::Subspace;
using exactla::Vector;
using ext::Cube;
using ext::GaloisStructure;
using nalg::AlgebraMorphism;
using nalg::AlgebraPtr;
using nalg::Ideal;

// ---------------------------------------------------------------- Hopf

struct HopfReport {
  Subspace numerator;    // C(f_∅..f_∅) ∩ ∩_i K[f_i]
  Subspace denominator;  // central_obstruction(c, g)
  std::size_t h_dim = 0;
  /// Numerator vectors completing a basis of the denominator.
  std::vector<Vector> h_basis;
};

/// Evaluates the Hopf formula on an extension. Whether the answer is
/// H_{m+1} depends on c being a presentation, which is not checked.
HopfReport hopf_evaluate(const Cube& c, GaloisStructure g);

/// Whether the g-commutator of a with itself is all of a. Throws
/// PreconditionError when a fails the validator g requires.
bool is_perfect(const AlgebraPtr& a, GaloisStructure g);

// ---------------------------------------------------------------- UCE

enum class UceVariant { leibniz, lie };

std::string_view uce_variant_name(UceVariant v);
std::optional<UceVariant> parse_uce_variant(std::string_view s);
/// lb-vect for leibniz, lie-vect for lie.
GaloisStructure uce_structure(UceVariant v);

struct UceChecks {
  bool surjective = false;
  bool central = false;
  bool perfect = false;
  /// The bracket of L on tensor representatives kills the relations, so
  /// the U bracket does not depend on representatives.
  bool well_defined = false;
  /// U passes validate_leibniz (leibniz) or validate_lie (lie).
  bool validated = false;

  bool all() const { return surjective && central && perfect && well_defined && validated; }
};

struct UceResult {
  AlgebraPtr U;
  AlgebraMorphism u;  // U -> L
  Ideal kernel;       // of U
  UceVariant variant;
  /// L^{⊗n} / R; tensor index of (i_1..i_n) is i_1 d^{n-1} + .. + i_n.
  QuotientSpace relations;
  UceChecks checks;
};

/// U = L^{⊗n} / R with R spanned by the fundamental-identity relations
/// (and, for lie, by the symmetric adjacent pairs). Throws
/// PreconditionError when L fails the validator or is not Vect-perfect.
UceResult uce(const AlgebraPtr& l, UceVariant variant);
inline UceResult uce_leibniz(const AlgebraPtr& l) { return uce(l, UceVariant::leibniz); }
inline UceResult uce_lie(const AlgebraPtr& l) { return uce(l, UceVariant::lie); }

/// dim ker u of the matching universal central extension.
std::size_t h2_via_uce(const AlgebraPtr& l, UceVariant variant);

struct NamedCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct UceComparison {
  UceResult leibniz;
  UceResult lie;
  LinearMap f;  // U_lb -> U_lie on classes of tensor representatives
  std::size_t ker_lb = 0;
  std::size_t ker_lie = 0;
  std::size_t ker_f = 0;
  /// <K[u_lb]..K[u_lb]> == K[f]; only holds when ker f = 0, kept for
  /// reference next to the check actually made.
  bool kernel_commutator_equals_ker_f = false;
  /// well-defined, factorization, exactness, relative-commutator
  std::vector<NamedCheck> checks;

  bool ok() const;
};

/// Builds both universal central extensions of a perfect Lie n-algebra
/// and the comparison map f : U_lb -> U_lie, then checks
///   well-defined         R_lb ⊆ R_lie
///   factorization        f is a surjective morphism and u_lb = u_lie ∘ f
///   exactness            dim ker u_lb = dim ker u_lie + dim ker f
///   relative-commutator  <U_lb..U_lb> = ker f
UceComparison compare_uce(const AlgebraPtr& l);

}  // namespace nlie::homology
