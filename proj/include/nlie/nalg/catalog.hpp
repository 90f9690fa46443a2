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

#include "nlie/nalg/algebra.hpp"

/// Small named algebras used as fixtures throughout the tests and shipped
/// as JSON files under fixtures/algebras.
namespace nlie::nalg::catalog {

/// [e1,e2] = e3 = -[e2,e1].
AlgebraPtr heisenberg3(const Field& field = Field::rationals());
/// Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f (and skew).
AlgebraPtr sl2(const Field& field = Field::rationals());
/// Basis x, y with [x,x] = y: Leibniz, not Lie.
AlgebraPtr lz2(const Field& field = Field::rationals());
/// One-dimensional [x,x] = x: not Leibniz.
AlgebraPtr idempotent_line(const Field& field = Field::rationals());
/// Simple 4-dimensional Filippov 3-algebra [e_i,e_j,e_k] = ε_ijkl e_l.
AlgebraPtr v4(const Field& field = Field::rationals());
/// Takiff algebra sl2 ⋉ sl2 on e, f, h, E, F, H: the second copy is an
/// abelian ideal carrying the adjoint action.
AlgebraPtr takiff_sl2(const Field& field = Field::rationals());

}  // namespace nlie::nalg::catalog
