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

#include <string>
#include <vector>

#include "nlie/ext/centrality.hpp"
#include "nlie/nalg/catalog.hpp"

namespace nlie::testing {

using ext::Cube;
using ext::GaloisStructure;
using nalg::AlgebraPtr;
using nalg::Ideal;

/// Leibniz with [e1,e2] = e3 only; not skew symmetric.
inline AlgebraPtr one_sided() {
  const auto q = exactla::Field::rationals();
  nalg::NaryAlgebra a("one_sided", 2, 3, q);
  a.set_bracket(nalg::Tuple{0, 1}, exactla::unit_vector(q, 3, 2));
  return nalg::share(std::move(a));
}

inline std::vector<AlgebraPtr> corpus_algebras() {
  using nalg::CommutatorVariant;
  return {nalg::abelian(2, 2),
          nalg::catalog::heisenberg3(),
          nalg::catalog::sl2(),
          nalg::catalog::lz2(),
          nalg::catalog::v4(),
          one_sided(),
          nalg::free_nilpotent2(2, 2, CommutatorVariant::leibniz).algebra,
          nalg::free_nilpotent2(2, 2, CommutatorVariant::lie).algebra,
          nalg::free_nilpotent2(2, 3, CommutatorVariant::lie).algebra,
          nalg::free_nilpotent2(3, 2, CommutatorVariant::leibniz).algebra,
          nalg::free_nilpotent2(3, 3, CommutatorVariant::lie).algebra};
}

/// Ideal closures of small spans: basis vectors, sums and differences of
/// two basis vectors, and the three commutator ideals; deduplicated.
inline std::vector<Ideal> sample_ideals(const AlgebraPtr& a) {
  std::vector<Ideal> out;
  auto add = [&](const exactla::Subspace& s) {
    auto i = nalg::ideal_closure(a, s);
    for (const auto& o : out) {
      if (o == i) return;
    }
    out.push_back(std::move(i));
  };
  const auto& f = a->field();
  add(exactla::Subspace::zero(f, a->dim()));
  add(exactla::Subspace::full(f, a->dim()));
  for (auto v : {nalg::CommutatorVariant::leibniz, nalg::CommutatorVariant::relative}) {
    add(nalg::full_commutator(a, v).space());
  }
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::vector<exactla::Vector> g{a->basis_vector(i)};
    add(exactla::Subspace::span(f, a->dim(), g));
    for (std::size_t j = i + 1; j < a->dim(); ++j) {
      for (int sign : {1, -1}) {
        auto v = a->basis_vector(i);
        exactla::axpy(v, f.from_int(sign), a->basis_vector(j));
        std::vector<exactla::Vector> h{v};
        add(exactla::Subspace::span(f, a->dim(), h));
      }
    }
  }
  return out;
}

struct CorpusCube {
  std::string label;
  Cube cube;
  bool lie;  // every node passes validate_lie
};

/// 1-cubes for the first `max_ideals` sampled ideals and 2-cubes for
/// pairs of them (at most `max_squares` per algebra).
inline std::vector<CorpusCube> corpus_cubes(std::size_t max_ideals = 8, std::size_t max_squares = 10) {
  std::vector<CorpusCube> out;
  for (const auto& a : corpus_algebras()) {
    const bool lie = nalg::validate_lie(*a).ok;
    auto ideals = sample_ideals(a);
    if (ideals.size() > max_ideals) ideals.resize(max_ideals, ideals.front());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      std::vector<Ideal> one{ideals[i]};
      out.push_back({a->name() + " m=1 #" + std::to_string(i), ext::cube_from_ideals(a, one), lie});
    }
    std::size_t squares = 0;
    for (std::size_t i = 0; i < ideals.size() && squares < max_squares; ++i) {
      for (std::size_t j = 0; j < ideals.size() && squares < max_squares; ++j) {
        if (i == j && ideals.size() > 2) continue;
        std::vector<Ideal> two{ideals[i], ideals[j]};
        out.push_back({a->name() + " m=2 #" + std::to_string(i) + "," + std::to_string(j),
                       ext::cube_from_ideals(a, two), lie});
        ++squares;
      }
    }
  }
  return out;
}

inline std::vector<GaloisStructure> structures_for(bool lie) {
  if (lie) return {GaloisStructure::lb_over_vect, GaloisStructure::lie_over_vect, GaloisStructure::lb_over_lie};
  return {GaloisStructure::lb_over_vect, GaloisStructure::lb_over_lie};
}

}  // namespace nlie::testing
