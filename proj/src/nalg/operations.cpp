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

#include "nlie/nalg/operations.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace nlie::nalg {
namespace {

// acc += coef * value
void accumulate(Vector& acc, const Scalar& coef, const SparseVector* value) {
  if (value == nullptr) return;
  for (const auto& t : *value) acc[t.index] += coef * t.value;
}

void reset(Vector& v, const Field& field) {
  for (auto& x : v) {
    if (!x.is_zero()) x = field.zero();
  }
}

Vector negate(const Vector& v) {
  Vector r = v;
  for (auto& x : r) x = -x;
  return r;
}

LinearMap block_projection(const Field& field, std::size_t rows, std::size_t total, std::size_t offset) {
  LinearMap m(field, rows, total);
  for (std::size_t i = 0; i < rows; ++i) m.at(i, offset + i) = field.one();
  return m;
}

}  // namespace

// ---------------------------------------------------------------- axioms

std::string ValidationReport::describe(const NaryAlgebra& a) const {
  if (ok) return "ok";
  const auto& c = *counterexample;
  if (c.kind == Counterexample::Kind::skew_symmetry) {
    return "FAIL (skew symmetry at " + format_tuple(a, c.tuple) + ")";
  }
  return "FAIL (fundamental identity at " + format_tuple(a, c.tuple) + "; defect " + format_vector(a, c.defect) + ")";
}

ValidationReport validate_leibniz(const NaryAlgebra& a) {
  const std::size_t n = a.arity();
  const std::size_t d = a.dim();
  const Field& field = a.field();
  ValidationReport report;
  Vector lhs = a.zero();
  Vector rhs = a.zero();
  Tuple outer(n);
  Tuple varied(n);
  // Both sides vanish when [-, l'] is zero on every basis vector; only the
  // remaining l' are visited, still in lexicographic order.
  std::vector<Tuple> live;
  for_each_tuple(n - 1, d, [&](const Tuple& lp) {
    std::copy(lp.begin(), lp.end(), outer.begin() + 1);
    for (std::uint32_t x = 0; x < d; ++x) {
      outer[0] = x;
      if (a.basis_bracket(outer) != nullptr) {
        live.push_back(lp);
        break;
      }
    }
    return true;
  });
  for_each_tuple(n, d, [&](const Tuple& l) {
    const SparseVector* inner = a.basis_bracket(l);
    for (const Tuple& lp : live) {
      reset(lhs, field);
      reset(rhs, field);
      std::copy(lp.begin(), lp.end(), outer.begin() + 1);
      if (inner != nullptr) {
        for (const auto& t : *inner) {
          outer[0] = t.index;
          accumulate(lhs, t.value, a.basis_bracket(outer));
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        outer[0] = l[i];
        const SparseVector* derived = a.basis_bracket(outer);
        if (derived == nullptr) continue;
        varied = l;
        for (const auto& t : *derived) {
          varied[i] = t.index;
          accumulate(rhs, t.value, a.basis_bracket(varied));
        }
      }
      if (lhs == rhs) continue;
      Counterexample c{Counterexample::Kind::fundamental_identity, l, 0, lhs, rhs, exactla::sub(rhs, lhs)};
      c.tuple.insert(c.tuple.end(), lp.begin(), lp.end());
      report.ok = false;
      report.counterexample = std::move(c);
      return false;
    }
    return true;
  });
  return report;
}

ValidationReport validate_lie(const NaryAlgebra& a) {
  if (a.field().characteristic() == 2) throw FieldError("Lie n-algebras need characteristic != 2");
  ValidationReport report = validate_leibniz(a);
  if (!report.ok) return report;
  const std::size_t n = a.arity();
  for_each_tuple(n, a.dim(), [&](const Tuple& t) {
    Vector value = a.basis_bracket_dense(t);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Tuple swapped = t;
      std::swap(swapped[i], swapped[i + 1]);
      Vector other = negate(a.basis_bracket_dense(swapped));
      if (value == other) continue;
      report.ok = false;
      report.counterexample =
          Counterexample{Counterexample::Kind::skew_symmetry, t, i, value, other, exactla::sub(other, value)};
      return false;
    }
    return true;
  });
  return report;
}

// ---------------------------------------------------------------- commutators

std::string_view variant_name(CommutatorVariant v) {
  switch (v) {
    case CommutatorVariant::leibniz:
      return "leibniz";
    case CommutatorVariant::lie:
      return "lie";
    case CommutatorVariant::relative:
      return "relative";
  }
  return "?";
}

Ideal commutator(const AlgebraPtr& a, std::span<const Ideal> ideals, CommutatorVariant variant) {
  const std::size_t n = a->arity();
  if (ideals.size() != n) throw DimensionError("commutator needs exactly n ideals");
  for (const auto& ideal : ideals) {
    if (ideal.space().ambient_dim() != a->dim()) throw DimensionError("commutator: ideal of another algebra");
  }
  exactla::Echelon generators(a->field(), a->dim());
  for (const auto& ideal : ideals) {
    if (ideal.space().is_zero()) return Ideal::zero(a);
  }
  if (a->is_zero_bracket()) return Ideal::zero(a);

  // Identical ideals give identical slot assignments; enumerate each once.
  std::vector<std::size_t> canon(n);
  for (std::size_t i = 0; i < n; ++i) {
    canon[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (ideals[j].space() == ideals[i].space()) {
        canon[i] = canon[j];
        break;
      }
    }
  }
  // For the relative variant one assignment suffices: a tuple from the
  // assignment τ is y∘τ for y from the identity assignment, and
  // <y∘τ>_σ = sgn τ (h(τ) - h(τσ)) with h(ρ) = sgn ρ [y∘ρ], a difference
  // of generators <y>_ρ already enumerated.
  std::vector<Permutation> assignments;
  if (variant != CommutatorVariant::leibniz) {
    assignments.push_back(Permutation::all(n).front());
  } else {
    std::set<std::vector<std::size_t>> seen;
    for (auto& tau : Permutation::all(n)) {
      std::vector<std::size_t> key(n);
      for (std::size_t i = 0; i < n; ++i) key[i] = canon[tau(i)];
      if (seen.insert(key).second) assignments.push_back(std::move(tau));
    }
  }
  const auto sigmas = Permutation::all(n);

  std::vector<const Vector*> args(n);
  std::vector<const Vector*> permuted(n);
  for (const auto& tau : assignments) {
    std::vector<const std::vector<Vector>*> slots(n);
    for (std::size_t i = 0; i < n; ++i) slots[i] = &ideals[tau(i)].space().basis();
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) args[i] = &(*slots[i])[pick[i]];
      if (generators.rank() == a->dim()) break;
      Vector base = a->bracket(std::span<const Vector* const>(args));
      if (variant == CommutatorVariant::relative) {
        for (const auto& sigma : sigmas) {
          if (sigma.is_identity()) continue;
          for (std::size_t i = 0; i < n; ++i) permuted[i] = args[sigma(i)];
          Vector other = a->bracket(std::span<const Vector* const>(permuted));
          exactla::axpy(other, a->field().from_int(-sigma.sign()), base);
          if (!exactla::is_zero(other)) generators.insert(other);
        }
      } else if (!exactla::is_zero(base)) {
        generators.insert(base);
      }
      std::size_t pos = n;
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++pick[pos] < slots[pos]->size()) {
          done = false;
          break;
        }
        pick[pos] = 0;
      }
      if (done) break;
    }
  }
  return ideal_closure(a, generators.to_subspace());
}

Ideal full_commutator(const AlgebraPtr& a, CommutatorVariant variant) {
  std::vector<Ideal> whole(a->arity(), Ideal::whole(a));
  return commutator(a, whole, variant);
}

Ideal relative_commutator_adjacent(const AlgebraPtr& a) {
  const std::size_t n = a->arity();
  exactla::Echelon generators(a->field(), a->dim());
  for_each_tuple(n, a->dim(), [&](const Tuple& t) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (t[i] > t[i + 1]) continue;
      if (t[i] == t[i + 1]) {
        generators.insert(a->basis_bracket_dense(t));
        continue;
      }
      // Polarisation of [.., x, x, ..] at x = e_a + e_b.
      Tuple swapped = t;
      std::swap(swapped[i], swapped[i + 1]);
      generators.insert(exactla::add(a->basis_bracket_dense(t), a->basis_bracket_dense(swapped)));
    }
    return true;
  });
  return ideal_closure(a, generators.to_subspace());
}

// ---------------------------------------------------------------- quotients

Quotient quotient_algebra(const AlgebraPtr& a, const Subspace& n, std::string name) {
  if (n.ambient_dim() != a->dim()) throw DimensionError("quotient_algebra: subspace of another space");
  // Representative independence of the induced bracket on basis tuples is
  // exactly the ideal property.
  if (!is_ideal(*a, n)) throw PreconditionError("cannot divide " + a->name() + " by a non-ideal");
  auto space = exactla::quotient_space(a->dim(), n);
  std::vector<std::string> labels;
  for (auto r : space.representatives) labels.push_back(a->label(r));
  if (name.empty()) name = a->name() + "/N";
  NaryAlgebra q(std::move(name), a->arity(), space.dim(), a->field(), std::move(labels));
  Tuple lifted(a->arity());
  for_each_tuple(a->arity(), space.dim(), [&](const Tuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) lifted[i] = static_cast<std::uint32_t>(space.representatives[t[i]]);
    if (a->basis_bracket(lifted) != nullptr) q.set_bracket(t, space.project(a->basis_bracket_dense(lifted)));
    return true;
  });
  auto qa = share(std::move(q));
  auto projection = AlgebraMorphism::validated(a, qa, space.projection);
  return Quotient{qa, std::move(projection), std::move(space)};
}

Quotient abelianization(const AlgebraPtr& a) {
  return quotient_algebra(a, full_commutator(a, CommutatorVariant::leibniz).space(), "ab(" + a->name() + ")");
}

Quotient liesation(const AlgebraPtr& a) {
  if (!validate_leibniz(*a)) throw PreconditionError(a->name() + " is not a Leibniz n-algebra");
  return quotient_algebra(a, full_commutator(a, CommutatorVariant::relative).space(), "lie(" + a->name() + ")");
}

AlgebraPtr daletskii(const AlgebraPtr& a) {
  if (!validate_leibniz(*a)) throw PreconditionError(a->name() + " is not a Leibniz n-algebra");
  const std::size_t m = a->arity() - 1;
  const std::size_t d = a->dim();
  std::size_t dim = 1;
  for (std::size_t i = 0; i < m; ++i) dim *= d;
  std::vector<std::string> labels;
  for_each_tuple(m, d, [&](const Tuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "⊗" : "") + a->label(t[i]);
    labels.push_back(std::move(s));
    return true;
  });
  NaryAlgebra out("daletskii(" + a->name() + ")", 2, dim, a->field(), std::move(labels));
  auto encode = [&](const Tuple& t) {
    std::uint32_t code = 0;
    for (auto x : t) code = static_cast<std::uint32_t>(code * d + x);
    return code;
  };
  Tuple args(a->arity());
  for_each_tuple(m, d, [&](const Tuple& left) {
    return for_each_tuple(m, d, [&](const Tuple& right) {
      std::array<std::uint32_t, 2> pair{encode(left), encode(right)};
      std::copy(right.begin(), right.end(), args.begin() + 1);
      for (std::size_t i = 0; i < m; ++i) {
        args[0] = left[i];
        const auto* value = a->basis_bracket(args);
        if (value == nullptr) continue;
        Tuple replaced = left;
        for (const auto& t : *value) {
          replaced[i] = t.index;
          out.add_to_bracket(pair, encode(replaced), t.value);
        }
      }
      return true;
    });
  });
  return share(std::move(out));
}

// ---------------------------------------------------------------- kernels

Ideal kernel_ideal(const AlgebraMorphism& f) {
  return Ideal::checked(f.source(), exactla::kernel_image(f.map()).kernel);
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->arity() != b->arity()) throw DimensionError("direct product of algebras of different arity");
  if (a->field() != b->field()) throw FieldError("direct product of algebras over different fields");
  std::set<std::string> left(a->labels().begin(), a->labels().end());
  bool clash = false;
  for (const auto& l : b->labels()) clash = clash || left.count(l) > 0;
  std::vector<std::string> labels;
  for (const auto& l : a->labels()) labels.push_back(clash ? l + "_1" : l);
  for (const auto& l : b->labels()) labels.push_back(clash ? l + "_2" : l);
  const std::size_t da = a->dim();
  NaryAlgebra p(a->name() + "x" + b->name(), a->arity(), da + b->dim(), a->field(), std::move(labels));
  for (const auto& [t, value] : a->entries()) {
    for (const auto& term : value) p.add_to_bracket(t, term.index, term.value);
  }
  for (auto [t, value] : b->entries()) {
    for (auto& x : t) x += static_cast<std::uint32_t>(da);
    for (const auto& term : value) p.add_to_bracket(t, static_cast<std::uint32_t>(term.index + da), term.value);
  }
  return share(std::move(p));
}

Subalgebra subalgebra(const AlgebraPtr& a, const Subspace& s, std::string name) {
  if (s.ambient_dim() != a->dim()) throw DimensionError("subalgebra: subspace of another space");
  const auto& basis = s.basis();
  NaryAlgebra sub(std::move(name), a->arity(), basis.size(), a->field());
  std::vector<const Vector*> args(a->arity());
  bool closed = for_each_tuple(a->arity(), basis.size(), [&](const Tuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) args[i] = &basis[t[i]];
    Vector value = a->bracket(std::span<const Vector* const>(args));
    if (!s.contains(value)) return false;
    sub.set_bracket(t, s.coordinates(value));
    return true;
  });
  if (!closed) throw PreconditionError("subspace is not closed under the bracket of " + a->name());
  auto sa = share(std::move(sub));
  auto inclusion = AlgebraMorphism::validated(sa, a, LinearMap::from_columns(a->field(), a->dim(), basis));
  return Subalgebra{sa, std::move(inclusion)};
}

KernelPair kernel_pair(const AlgebraMorphism& f) {
  const auto& b = f.source();
  const Field& field = b->field();
  const std::size_t d = b->dim();
  LinearMap difference(field, f.map().rows(), 2 * d);
  for (std::size_t r = 0; r < f.map().rows(); ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      difference.at(r, c) = f.map()(r, c);
      difference.at(r, d + c) = -f.map()(r, c);
    }
  }
  Subspace embedding = exactla::kernel_image(difference).kernel;
  auto product = direct_product(b, b);
  auto sub = subalgebra(product, embedding, "R[" + b->name() + "]");
  auto first = AlgebraMorphism::validated(sub.algebra, b, block_projection(field, d, 2 * d, 0).compose(sub.inclusion.map()));
  auto second = AlgebraMorphism::validated(sub.algebra, b, block_projection(field, d, 2 * d, d).compose(sub.inclusion.map()));
  return KernelPair{sub.algebra, std::move(embedding), std::move(first), std::move(second)};
}

// ---------------------------------------------------------------- builders

AlgebraPtr abelian(std::size_t d, unsigned n, const Field& field) {
  return share(NaryAlgebra("abelian_" + std::to_string(d), n, d, field));
}

FreeNilpotent free_nilpotent2(unsigned n, std::size_t d, CommutatorVariant variant, const Field& field) {
  if (d < 1) throw PreconditionError("free_nilpotent2 needs at least one generator");
  if (variant == CommutatorVariant::relative) throw PreconditionError("free_nilpotent2 variant must be leibniz or lie");
  const bool lie = variant == CommutatorVariant::lie;
  if (lie && field.characteristic() == 2) throw FieldError("Lie n-algebras need characteristic != 2");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("v" + std::to_string(i + 1));
  std::map<Tuple, std::uint32_t> top;  // degree-n basis, lexicographic
  for_each_tuple(n, d, [&](const Tuple& t) {
    if (lie && std::adjacent_find(t.begin(), t.end(), std::greater_equal<>()) != t.end()) return true;
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? (lie ? "∧" : "⊗") : "") + labels[t[i]];
    top.emplace(t, static_cast<std::uint32_t>(d + top.size()));
    labels.push_back(std::move(s));
    return true;
  });
  const std::string name = "free_nilpotent2(n=" + std::to_string(n) + ",d=" + std::to_string(d) + "," +
                           std::string(variant_name(variant)) + ")";
  NaryAlgebra f(name, n, d + top.size(), field, labels);
  for_each_tuple(n, d, [&](const Tuple& t) {
    if (!lie) {
      f.add_to_bracket(t, top.at(t), field.one());
      return true;
    }
    Tuple sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return true;
    // sign of the permutation sorting t
    int sign = 1;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i + 1; j < t.size(); ++j) {
        if (t[i] > t[j]) sign = -sign;
      }
    }
    f.add_to_bracket(t, top.at(sorted), field.from_int(sign));
    return true;
  });
  auto fa = share(std::move(f));
  std::vector<std::string> vlabels(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(d));
  auto v = share(NaryAlgebra("abelian_" + std::to_string(d), n, d, field, std::move(vlabels)));
  LinearMap eps(field, d, fa->dim());
  for (std::size_t i = 0; i < d; ++i) eps.at(i, i) = field.one();
  return FreeNilpotent{fa, AlgebraMorphism::validated(fa, v, std::move(eps))};
}

}  // namespace nlie::nalg
