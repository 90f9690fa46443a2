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

#include "nlie/ext/centrality.hpp"

#include <map>

#include "nlie/exactla/error.hpp"

namespace nlie::ext {

namespace {

Mask bit(unsigned j) { return Mask{1} << j; }

void require_extension(const Cube& c) {
  auto r = is_extension(c);
  if (!r.ok) {
    throw PreconditionError("not an extension: the comparison map at " + format_mask(*r.failing) +
                            " is not surjective");
  }
}

// Obstruction sum without precondition checks; `overlapping` also admits
// covers whose parts share elements.
Obstruction obstruction_sum(const Cube& c, GaloisStructure g, bool overlapping) {
  const AlgebraPtr& a = c.node(0);
  const unsigned n = a->arity();
  const unsigned m = c.m();
  const auto variant = commutator_variant(g);

  std::vector<Ideal> kernels;
  for (unsigned i = 0; i < m; ++i) kernels.push_back(nalg::kernel_ideal(c.f(i)));
  std::vector<std::optional<Ideal>> meets(std::size_t{1} << m);
  auto meet = [&](Mask s) -> const Ideal& {
    auto& slot = meets[s];
    if (!slot) {
      Subspace space = Subspace::full(a->field(), a->dim());
      for (unsigned i = 0; i < m; ++i) {
        if (s & bit(i)) space = exactla::subspace_intersect(space, kernels[i].space());
      }
      slot = Ideal::checked(a, std::move(space));
    }
    return *slot;
  };

  Obstruction out{Ideal::zero(a), {}};
  Subspace total = Subspace::zero(a->field(), a->dim());
  std::map<std::vector<Mask>, bool> seen;
  const std::size_t radix = overlapping ? (std::size_t{1} << n) - 1 : n;
  nalg::for_each_tuple(m, radix, [&](const nalg::Tuple& t) {
    std::vector<Mask> cover(n, 0);
    for (unsigned i = 0; i < m; ++i) {
      if (overlapping) {
        for (unsigned s = 0; s < n; ++s) {
          if ((t[i] + 1) & bit(s)) cover[s] |= bit(i);
        }
      } else {
        cover[t[i]] |= bit(i);
      }
    }
    if (!seen.emplace(cover, true).second) return true;
    std::vector<Ideal> slots;
    for (Mask s : cover) slots.push_back(meet(s));
    Subspace term = nalg::commutator(a, slots, variant).space();
    total = exactla::subspace_sum(total, term);
    out.terms.push_back({std::move(cover), std::move(term)});
    return true;
  });
  out.ideal = Ideal::checked(a, std::move(total));
  return out;
}

void check_inputs(const Cube& c, GaloisStructure g) {
  for (Mask s = 0; s <= c.full(); ++s) require_structure(*c.node(s), g);
  require_extension(c);
}

bool projections_agree(const AlgebraMorphism& first, const AlgebraMorphism& second, const Subspace& on) {
  for (const auto& x : on.basis()) {
    if (first(x) != second(x)) return false;
  }
  return true;
}

}  // namespace

std::string_view galois_name(GaloisStructure g) {
  switch (g) {
    case GaloisStructure::lb_over_vect: return "lb-vect";
    case GaloisStructure::lie_over_vect: return "lie-vect";
    case GaloisStructure::lb_over_lie: return "lb-lie";
  }
  return "?";
}

std::optional<GaloisStructure> parse_galois(std::string_view s) {
  for (auto g : {GaloisStructure::lb_over_vect, GaloisStructure::lie_over_vect, GaloisStructure::lb_over_lie}) {
    if (galois_name(g) == s) return g;
  }
  return std::nullopt;
}

nalg::CommutatorVariant commutator_variant(GaloisStructure g) {
  switch (g) {
    case GaloisStructure::lb_over_vect: return nalg::CommutatorVariant::leibniz;
    case GaloisStructure::lie_over_vect: return nalg::CommutatorVariant::lie;
    case GaloisStructure::lb_over_lie: return nalg::CommutatorVariant::relative;
  }
  return nalg::CommutatorVariant::leibniz;
}

void require_structure(const nalg::NaryAlgebra& a, GaloisStructure g) {
  if (g == GaloisStructure::lie_over_vect) {
    auto r = nalg::validate_lie(a);
    if (!r.ok) throw PreconditionError(a.name() + " is not a Lie n-algebra: " + r.describe(a));
  } else {
    auto r = nalg::validate_leibniz(a);
    if (!r.ok) throw PreconditionError(a.name() + " is not a Leibniz n-algebra: " + r.describe(a));
  }
}

Obstruction central_obstruction(const Cube& c, GaloisStructure g) {
  check_inputs(c, g);
  return obstruction_sum(c, g, false);
}

Ideal obstruction_over_all_covers(const Cube& c, GaloisStructure g) {
  check_inputs(c, g);
  return obstruction_sum(c, g, true).ideal;
}

bool is_central(const Cube& c, GaloisStructure g) { return central_obstruction(c, g).ideal.dim() == 0; }

KernelPairCube kernel_pair_cube(const Cube& c) {
  if (c.m() < 2) throw PreconditionError("kernel_pair_cube needs m >= 2");
  const unsigned d = c.m() - 1;
  const std::size_t count = std::size_t{1} << d;
  std::vector<nalg::KernelPair> pairs;
  std::vector<AlgebraPtr> nodes;
  for (Mask s = 0; s < count; ++s) {
    pairs.push_back(nalg::kernel_pair(c.arrow(s, d)));
    nodes.push_back(pairs.back().algebra);
  }
  std::vector<Cube::ArrowData> arrows;
  for (Mask s = 0; s < count; ++s) {
    for (unsigned j = 0; j < d; ++j) {
      if (s & bit(j)) continue;
      const auto& g = c.arrow(s, j).map();
      const auto& from = pairs[s].embedding;
      const auto& to = pairs[s | bit(j)].embedding;
      const std::size_t src = g.cols();
      std::vector<Vector> columns;
      for (const auto& v : from.basis()) {
        Vector b(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(src));
        Vector b2(v.begin() + static_cast<std::ptrdiff_t>(src), v.end());
        Vector w = g.apply(b);
        Vector w2 = g.apply(b2);
        w.insert(w.end(), w2.begin(), w2.end());
        columns.push_back(to.coordinates(w));
      }
      arrows.push_back({s, j, exactla::LinearMap::from_columns(c.node(0)->field(), to.rank(), columns)});
    }
  }
  auto first = pairs[0].first;
  auto second = pairs[0].second;
  return KernelPairCube{Cube::make(d, std::move(nodes), arrows), std::move(first), std::move(second)};
}

bool is_central_oracle(const Cube& c, GaloisStructure g) {
  check_inputs(c, g);
  const auto variant = commutator_variant(g);
  if (c.m() == 1) {
    auto r = nalg::kernel_pair(c.f(0));
    auto brackets = nalg::full_commutator(r.algebra, variant);
    return projections_agree(r.first, r.second, brackets.space());
  }
  auto r = kernel_pair_cube(c);
  auto lower = obstruction_sum(r.cube, g, false);
  return projections_agree(r.first, r.second, lower.ideal.space());
}

Centralization centralize1(const Cube& c, GaloisStructure g) {
  if (c.m() != 1) throw PreconditionError("centralize1 needs a 1-cube");
  auto obstruction = central_obstruction(c, g);
  if (obstruction.ideal.dim() == 0) return Centralization{c, AlgebraMorphism::identity(c.node(0))};
  const auto& b = c.node(0);
  auto q = nalg::quotient_algebra(b, obstruction.ideal.space(), b->name() + "/L");
  std::vector<AlgebraPtr> nodes{q.algebra, c.node(1)};
  std::vector<Cube::ArrowData> arrows{{0, 0, c.f(0).map().compose(q.space.section)}};
  return Centralization{Cube::make(1, std::move(nodes), arrows), q.projection};
}

}  // namespace nlie::ext
