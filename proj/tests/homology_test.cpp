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


#include "doctest.h"
#include "nlie/exactla/error.hpp"
#include "nlie/homology/homology.hpp"
#include "nlie/nalg/catalog.hpp"
#include "corpus.hpp"
#include "free_trunc.hpp"

using namespace nlie;
using namespace nlie::homology;
using ext::GaloisStructure;
using exactla::Field;
using nalg::CommutatorVariant;

namespace {

std::size_t power(std::size_t d, unsigned n) {
  std::size_t r = 1;
  while (n--) r *= d;
  return r;
}

std::size_t choose(std::size_t d, unsigned n) {
  if (n > d) return 0;
  std::size_t r = 1;
  for (unsigned k = 0; k < n; ++k) r = r * (d - k) / (k + 1);
  return r;
}

HopfReport hopf_fnil2(unsigned n, std::size_t d, CommutatorVariant v, GaloisStructure g) {
  auto fn = nalg::free_nilpotent2(n, d, v);
  return hopf_evaluate(Cube::from_morphism(fn.augmentation), g);
}

}  // namespace

TEST_CASE("hopf_evaluate") {
  SUBCASE("identity 1-cube") {
    auto sl2 = nalg::catalog::sl2();
    auto r = hopf_evaluate(Cube::from_morphism(nalg::AlgebraMorphism::identity(sl2)), GaloisStructure::lie_over_vect);
    CHECK(r.numerator.is_zero());
    CHECK(r.h_dim == 0);
  }
  SUBCASE("free_nilpotent2(2,2,leibniz) over lb-vect") {
    auto r = hopf_fnil2(2, 2, CommutatorVariant::leibniz, GaloisStructure::lb_over_vect);
    CHECK(r.numerator.rank() == 4);
    CHECK(r.denominator.rank() == 0);
    CHECK(r.h_dim == 4);
    CHECK(r.h_basis.size() == 4);
  }
  SUBCASE("free_nilpotent2(2,3,lie) over lie-vect") {
    CHECK(hopf_fnil2(2, 3, CommutatorVariant::lie, GaloisStructure::lie_over_vect).h_dim == 3);
  }
  SUBCASE("free_nilpotent2(2,2,leibniz) over lb-lie is the symmetric part") {
    auto r = hopf_fnil2(2, 2, CommutatorVariant::leibniz, GaloisStructure::lb_over_lie);
    CHECK(r.numerator.rank() == 3);
    CHECK(r.denominator.rank() == 0);
    CHECK(r.h_dim == 3);
    // [v1,v2] + [v2,v1] lies in the numerator
    auto v = exactla::zero_vector(Field::rationals(), 6);
    v[3] = v[4] = Field::rationals().one();
    CHECK(r.numerator.contains(v));
  }
  SUBCASE("errors") {
    auto lz = nalg::catalog::lz2();
    CHECK_THROWS_AS(hopf_evaluate(Cube::from_morphism(nalg::AlgebraMorphism::identity(lz)),
                                  GaloisStructure::lie_over_vect),
                    PreconditionError);
    auto into = nalg::AlgebraMorphism::validated(nalg::abelian(0, 2), nalg::abelian(1, 2),
                                                 exactla::LinearMap(Field::rationals(), 1, 0));
    CHECK_THROWS_AS(hopf_evaluate(Cube::from_morphism(into), GaloisStructure::lb_over_vect),
                    PreconditionError);
  }
}

TEST_CASE("Hopf values on free_nilpotent2 targets") {
  for (unsigned n : {2u, 3u}) {
    for (std::size_t d : {1u, 2u, 3u}) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(hopf_fnil2(n, d, CommutatorVariant::leibniz, GaloisStructure::lb_over_vect).h_dim == power(d, n));
      CHECK(hopf_fnil2(n, d, CommutatorVariant::lie, GaloisStructure::lie_over_vect).h_dim == choose(d, n));
      CHECK(hopf_fnil2(n, d, CommutatorVariant::leibniz, GaloisStructure::lb_over_lie).h_dim ==
            power(d, n) - choose(d, n));
    }
  }
}

TEST_CASE("truncated free Leibniz algebra agrees with the free_nilpotent2 values") {
  struct Expect {
    std::size_t num, den;
  };
  // independent oracle values (numerator, denominator) for d = 1, 2, 3
  const Expect leibniz[] = {{2, 1}, {12, 8}, {36, 27}};
  const Expect relative[] = {{2, 1}, {9, 6}, {25, 19}};
  const Expect lie[] = {{0, 0}, {3, 2}, {11, 8}};
  for (std::size_t d = 1; d <= 3; ++d) {
    CAPTURE(d);
    auto free = nlie::testing::free_leibniz_truncated(d);
    REQUIRE(nalg::validate_leibniz(*free.algebra).ok);
    std::vector<nalg::Ideal> k{nalg::Ideal::checked(free.algebra, free.degree_two_up)};
    auto c = ext::cube_from_ideals(free.algebra, k);

    auto lb = hopf_evaluate(c, GaloisStructure::lb_over_vect);
    CHECK(lb.numerator.rank() == leibniz[d - 1].num);
    CHECK(lb.denominator.rank() == leibniz[d - 1].den);
    CHECK(lb.h_dim == d * d);

    auto rel = hopf_evaluate(c, GaloisStructure::lb_over_lie);
    CHECK(rel.numerator.rank() == relative[d - 1].num);
    CHECK(rel.denominator.rank() == relative[d - 1].den);
    CHECK(rel.h_dim == d * d - choose(d, 2));

    auto lies = nalg::liesation(free.algebra);
    std::vector<exactla::Vector> images;
    for (const auto& v : free.degree_two_up.basis()) images.push_back(lies.projection(v));
    std::vector<nalg::Ideal> kl{nalg::Ideal::checked(
        lies.algebra, Subspace::span(Field::rationals(), lies.algebra->dim(), images))};
    auto l = hopf_evaluate(ext::cube_from_ideals(lies.algebra, kl), GaloisStructure::lie_over_vect);
    CHECK(l.numerator.rank() == lie[d - 1].num);
    CHECK(l.denominator.rank() == lie[d - 1].den);
    CHECK(l.h_dim == choose(d, 2));
  }
}

TEST_CASE("is_perfect") {
  CHECK_FALSE(is_perfect(nalg::abelian(2, 2), GaloisStructure::lb_over_vect));
  CHECK(is_perfect(nalg::catalog::sl2(), GaloisStructure::lie_over_vect));
  CHECK_FALSE(is_perfect(nalg::catalog::heisenberg3(), GaloisStructure::lie_over_vect));
  CHECK(is_perfect(nalg::catalog::v4(), GaloisStructure::lie_over_vect));
  CHECK_FALSE(is_perfect(nalg::catalog::sl2(), GaloisStructure::lb_over_lie));
  CHECK_THROWS_AS(is_perfect(nalg::catalog::lz2(), GaloisStructure::lie_over_vect), PreconditionError);
}

TEST_CASE("universal central extensions") {
  struct Case {
    AlgebraPtr l;
    UceVariant variant;
    std::size_t relations, dim_u, kernel;
  };
  // frozen oracle values
  const Case cases[] = {
      {nalg::catalog::sl2(), UceVariant::leibniz, 6, 3, 0},
      {nalg::catalog::sl2(), UceVariant::lie, 6, 3, 0},
      {nalg::catalog::v4(), UceVariant::leibniz, 60, 4, 0},
      {nalg::catalog::v4(), UceVariant::lie, 60, 4, 0},
      {nalg::catalog::takiff_sl2(), UceVariant::leibniz, 29, 7, 1},
      {nalg::catalog::takiff_sl2(), UceVariant::lie, 30, 6, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.l->name());
    CAPTURE(uce_variant_name(c.variant));
    auto r = uce(c.l, c.variant);
    CHECK(r.relations.divisor.rank() == c.relations);
    CHECK(r.U->dim() == c.dim_u);
    CHECK(r.kernel.dim() == c.kernel);
    CHECK(r.checks.surjective);
    CHECK(r.checks.central);
    CHECK(r.checks.perfect);
    CHECK(r.checks.well_defined);
    CHECK(r.checks.validated);
    CHECK(h2_via_uce(c.l, c.variant) == c.kernel);
    if (c.variant == UceVariant::lie) CHECK(nalg::validate_lie(*r.U).ok);
    CHECK(nalg::validate_leibniz(*r.U).ok);

    // a relation pushed into any slot brackets to a relation
    const auto& q = r.relations;
    for (const auto& rel : q.divisor.basis()) CHECK(exactla::is_zero(q.project(rel)));
  }
  SUBCASE("uce_lie(sl2) is an isomorphism") {
    auto r = uce_lie(nalg::catalog::sl2());
    CHECK(r.u.map().rank() == 3);
    CHECK(r.U->label(0).find("⊙") != std::string::npos);
  }
}

TEST_CASE("uce preconditions") {
  auto h = nalg::catalog::heisenberg3();
  CHECK_THROWS_WITH_AS(uce_leibniz(h), "h3 is not Vect-perfect", PreconditionError);
  CHECK_THROWS_AS(uce_lie(nalg::catalog::lz2()), PreconditionError);
  CHECK_THROWS_AS(h2_via_uce(h, UceVariant::lie), PreconditionError);
  CHECK_THROWS_AS(compare_uce(h), PreconditionError);
}

TEST_CASE("compare_uce") {
  struct Case {
    AlgebraPtr l;
    std::size_t ker_lb, ker_lie, ker_f;
    bool kernel_reading;
  };
  const Case cases[] = {
      {nalg::catalog::sl2(), 0, 0, 0, true},
      {nalg::catalog::v4(), 0, 0, 0, true},
      {nalg::catalog::takiff_sl2(), 1, 0, 1, false},
  };
  for (const auto& c : cases) {
    CAPTURE(c.l->name());
    auto r = compare_uce(c.l);
    for (const auto& check : r.checks) {
      CAPTURE(check.name);
      CAPTURE(check.detail);
      CHECK(check.ok);
    }
    CHECK(r.checks.size() == 4);
    CHECK(r.ok());
    CHECK(r.ker_lb == c.ker_lb);
    CHECK(r.ker_lie == c.ker_lie);
    CHECK(r.ker_f == c.ker_f);
    CHECK(r.kernel_commutator_equals_ker_f == c.kernel_reading);
    CHECK(r.leibniz.u.map() == r.lie.u.map().compose(r.f));
  }
}

TEST_CASE("Hopf reports over the cube corpus") {
  std::size_t checked = 0;
  for (const auto& entry : nlie::testing::corpus_cubes(5, 4)) {
    CAPTURE(entry.label);
    for (auto g : nlie::testing::structures_for(entry.lie)) {
      auto r = hopf_evaluate(entry.cube, g);
      CHECK(r.numerator.contains(r.denominator));
      CHECK(r.h_dim == r.numerator.rank() - r.denominator.rank());
      if (entry.cube.m() == 1 && ext::is_central(entry.cube, g)) CHECK(r.denominator.is_zero());
      ++checked;
    }
  }
  CHECK(checked > 50);
}
