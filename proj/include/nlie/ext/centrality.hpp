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

#include <string_view>
#include <vector>

#include "nlie/ext/cube.hpp"

namespace nlie::ext {

/// Which reflection defines centrality: Leibniz n-algebras over vector
/// spaces, Lie n-algebras over vector spaces, or Leibniz over Lie.
enum class GaloisStructure { lb_over_vect, lie_over_vect, lb_over_lie };

/// "lb-vect", "lie-vect", "lb-lie"
std::string_view galois_name(GaloisStructure g);
std::optional<GaloisStructure> parse_galois(std::string_view s);
nalg::CommutatorVariant commutator_variant(GaloisStructure g);

/// Throws PreconditionError unless `a` passes the validator g requires.
void require_structure(const nalg::NaryAlgebra& a, GaloisStructure g);

struct ObstructionTerm {
  std::vector<Mask> cover;  // one subset of {1..m} per slot
  Subspace term;
};

struct Obstruction {
  Ideal ideal;  // of the ∅-node
  std::vector<ObstructionTerm> terms;
};

/// Σ over ordered disjoint covers (I_1..I_n) of {1..m} of
/// C(∩_{i∈I_1} K[f_i], .., ∩_{i∈I_n} K[f_i]), empty intersections being
/// the whole ∅-node. Throws PreconditionError when c is not an extension
/// or a node fails the validator for g.
Obstruction central_obstruction(const Cube& c, GaloisStructure g);

/// Same sum over all covers, overlapping ones included.
Ideal obstruction_over_all_covers(const Cube& c, GaloisStructure g);

bool is_central(const Cube& c, GaloisStructure g);

/// Centrality through kernel pairs. For m = 1 the two projections of
/// R[f] must agree on C(R[f]..R[f]); for m >= 2 the cube is read as a map
/// of (m-1)-cubes along the last direction and the projections of the
/// componentwise kernel pair must agree on its level-(m-1) obstruction.
bool is_central_oracle(const Cube& c, GaloisStructure g);

/// Componentwise kernel pair of c read as a morphism of (m-1)-cubes
/// along the last direction, with its projections at the ∅-node.
struct KernelPairCube {
  Cube cube;
  AlgebraMorphism first;
  AlgebraMorphism second;
};
KernelPairCube kernel_pair_cube(const Cube& c);

struct Centralization {
  Cube central;                  // B / L_1[f] -> A
  AlgebraMorphism comparison;    // B -> B / L_1[f]
};

/// Divides the domain of a 1-cube by its obstruction. Central input is
/// returned unchanged with an identity comparison.
Centralization centralize1(const Cube& c, GaloisStructure g);

}  // namespace nlie::ext
