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


#include "nlie/homology/homology.hpp"

#include <stdexcept>

#include "nlie/exactla/error.hpp"

namespace nlie::homology {

using exactla::Echelon;
using nalg::CommutatorVariant;
using nalg::NaryAlgebra;
using nalg::SparseVector;
using nalg::Tuple;

HopfReport hopf_evaluate(const Cube& c, GaloisStructure g) {
  // validates the nodes and the extension property
  auto obstruction = ext::central_obstruction(c, g);
  const auto& base = c.node(0);
  Subspace numerator = nalg::full_commutator(base, ext::commutator_variant(g)).space();
  for (unsigned i = 0; i < c.m(); ++i) {
    numerator = exactla::subspace_intersect(numerator, nalg::kernel_ideal(c.f(i)).space());
  }
  HopfReport report;
  report.denominator = obstruction.ideal.space();
  if (!numerator.contains(report.denominator)) {
    throw std::logic_error("Hopf denominator not contained in the numerator");
  }
  Echelon e(base->field(), base->dim());
  for (const auto& v : report.denominator.basis()) e.insert(v);
  for (const auto& v : numerator.basis()) {
    if (e.insert(v)) report.h_basis.push_back(v);
  }
  report.numerator = std::move(numerator);
  report.h_dim = report.h_basis.size();
  return report;
}

bool is_perfect(const AlgebraPtr& a, GaloisStructure g) {
  ext::require_structure(*a, g);
  return nalg::full_commutator(a, ext::commutator_variant(g)).space().is_full();
}

std::string_view uce_variant_name(UceVariant v) { return v == UceVariant::leibniz ? "leibniz" : "lie"; }

std::optional<UceVariant> parse_uce_variant(std::string_view s) {
  if (s == "leibniz") return UceVariant::leibniz;
  if (s == "lie") return UceVariant::lie;
  return std::nullopt;
}

GaloisStructure uce_structure(UceVariant v) {
  return v == UceVariant::leibniz ? GaloisStructure::lb_over_vect : GaloisStructure::lie_over_vect;
}

namespace {

struct TensorSpace {
  std::size_t d;
  unsigned n;
  std::size_t dim = 1;

  TensorSpace(std::size_t d_, unsigned n_) : d(d_), n(n_) {
    for (unsigned i = 0; i < n; ++i) dim *= d;
  }
  std::size_t code(const Tuple& t) const {
    std::size_t r = 0;
    for (auto x : t) r = r * d + x;
    return r;
  }
  Tuple decode(std::size_t c) const {
    Tuple t(n);
    for (unsigned i = n; i-- > 0;) {
      t[i] = static_cast<std::uint32_t>(c % d);
      c /= d;
    }
    return t;
  }
};

// out += f_1 ⊗ .. ⊗ f_n
void add_tensor(Vector& out, const TensorSpace& ts, const std::vector<const SparseVector*>& factors) {
  const auto& field = out.front().field();
  std::vector<std::size_t> pos(factors.size(), 0);
  while (true) {
    std::size_t code = 0;
    auto coef = field.one();
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const auto& term = (*factors[k])[pos[k]];
      code = code * ts.d + term.index;
      coef *= term.value;
    }
    out[code] += coef;
    std::size_t k = factors.size();
    while (k > 0) {
      --k;
      if (++pos[k] < factors[k]->size()) break;
      pos[k] = 0;
      if (k == 0) return;
    }
  }
}

Subspace relation_space(const NaryAlgebra& l, const TensorSpace& ts, UceVariant variant) {
  const auto& field = l.field();
  const unsigned n = ts.n;
  Echelon rel(field, ts.dim);
  // [l_1..l_n] ⊗ l'_2..l'_n - Σ_i l_1 ⊗ .. [l_i, l'_2..l'_n] .. ⊗ l_n
  nalg::for_each_tuple(n, ts.d, [&](const Tuple& ls) {
    const SparseVector* top = l.basis_bracket(ls);
    nalg::for_each_tuple(n - 1, ts.d, [&](const Tuple& lp) {
      Vector r = exactla::zero_vector(field, ts.dim);
      Tuple t(n);
      if (top) {
        std::copy(lp.begin(), lp.end(), t.begin() + 1);
        for (const auto& term : *top) {
          t[0] = term.index;
          r[ts.code(t)] += term.value;
        }
      }
      Tuple arg(n);
      std::copy(lp.begin(), lp.end(), arg.begin() + 1);
      for (unsigned i = 0; i < n; ++i) {
        arg[0] = ls[i];
        const SparseVector* inner = l.basis_bracket(arg);
        if (!inner) continue;
        t = ls;
        for (const auto& term : *inner) {
          t[i] = term.index;
          r[ts.code(t)] -= term.value;
        }
      }
      if (!exactla::is_zero(r)) rel.insert(r);
      return true;
    });
    return true;
  });
  if (variant == UceVariant::lie) {
    // x ⊗ x in adjacent slots, for every x: spanned by e_a⊗e_b + e_b⊗e_a
    for (unsigned i = 0; i + 1 < n; ++i) {
      nalg::for_each_tuple(n, ts.d, [&](const Tuple& t) {
        if (t[i] > t[i + 1]) return true;
        Vector r = exactla::zero_vector(field, ts.dim);
        Tuple s = t;
        std::swap(s[i], s[i + 1]);
        r[ts.code(t)] += field.one();
        r[ts.code(s)] += field.one();
        rel.insert(r);
        return true;
      });
    }
  }
  return rel.to_subspace();
}

std::string not_perfect(const NaryAlgebra& a) { return a.name() + " is not Vect-perfect"; }

}  // namespace

UceResult uce(const AlgebraPtr& l, UceVariant variant) {
  const auto g = uce_structure(variant);
  if (!is_perfect(l, g)) throw PreconditionError(not_perfect(*l));
  const auto& field = l->field();
  const TensorSpace ts(l->dim(), l->arity());
  auto q = exactla::quotient_space(ts.dim, relation_space(*l, ts, variant));

  // φ(t) = [t] on tensor-basis representatives
  std::vector<SparseVector> phi;
  std::vector<std::string> labels;
  const std::string sep = variant == UceVariant::leibniz ? "∗" : "⊙";
  for (auto rep : q.representatives) {
    Tuple t = ts.decode(rep);
    const SparseVector* b = l->basis_bracket(t);
    phi.push_back(b ? *b : SparseVector{});
    std::string label;
    for (std::size_t k = 0; k < t.size(); ++k) label += (k ? sep : "") + l->label(t[k]);
    labels.push_back(std::move(label));
  }

  UceChecks checks;
  // φ vanishes on R, so a relation in any slot brackets to zero
  checks.well_defined = true;
  for (const auto& r : q.divisor.basis()) {
    Vector image = l->zero();
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c].is_zero()) continue;
      if (const auto* b = l->basis_bracket(ts.decode(c))) {
        for (const auto& term : *b) image[term.index] += r[c] * term.value;
      }
    }
    if (!exactla::is_zero(image)) {
      checks.well_defined = false;
      break;
    }
  }

  const std::string prefix = variant == UceVariant::leibniz ? "uce_lb(" : "uce_lie(";
  NaryAlgebra u_alg(prefix + l->name() + ")", ts.n, q.dim(), field, labels);
  std::vector<const SparseVector*> factors(ts.n);
  nalg::for_each_tuple(ts.n, q.dim(), [&](const Tuple& js) {
    for (unsigned k = 0; k < ts.n; ++k) {
      if (phi[js[k]].empty()) return true;
      factors[k] = &phi[js[k]];
    }
    Vector tensor = exactla::zero_vector(field, ts.dim);
    add_tensor(tensor, ts, factors);
    Vector value = q.project(tensor);
    if (!exactla::is_zero(value)) u_alg.set_bracket(js, value);
    return true;
  });
  auto u_ptr = nalg::share(std::move(u_alg));

  std::vector<Vector> columns;
  for (const auto& p : phi) {
    Vector c = l->zero();
    for (const auto& term : p) c[term.index] = term.value;
    columns.push_back(std::move(c));
  }
  auto u = AlgebraMorphism::validated(u_ptr, l, LinearMap::from_columns(field, l->dim(), columns));

  checks.surjective = u.is_surjective();
  checks.validated = variant == UceVariant::leibniz ? nalg::validate_leibniz(*u_ptr).ok : nalg::validate_lie(*u_ptr).ok;
  if (checks.validated) {
    checks.central = ext::is_central(Cube::from_morphism(u), g);
    checks.perfect = is_perfect(u_ptr, g);
  }
  auto kernel = nalg::kernel_ideal(u);
  return UceResult{u_ptr, std::move(u), std::move(kernel), variant, std::move(q), checks};
}

std::size_t h2_via_uce(const AlgebraPtr& l, UceVariant variant) { return uce(l, variant).kernel.dim(); }

bool UceComparison::ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

UceComparison compare_uce(const AlgebraPtr& l) {
  if (!is_perfect(l, GaloisStructure::lie_over_vect)) throw PreconditionError(not_perfect(*l));
  auto lb = uce(l, UceVariant::leibniz);
  auto lie = uce(l, UceVariant::lie);
  const auto& field = l->field();
  const std::size_t tensor_dim = lb.relations.divisor.ambient_dim();
  std::vector<NamedCheck> checks;

  bool contained = lie.relations.divisor.contains(lb.relations.divisor);
  checks.push_back({"well-defined", contained,
                    contained ? "Leibniz relations lie in the Lie relations"
                              : "a Leibniz relation is not a Lie relation"});

  std::vector<Vector> columns;
  for (auto rep : lb.relations.representatives) {
    columns.push_back(lie.relations.project(exactla::unit_vector(field, tensor_dim, rep)));
  }
  auto f = LinearMap::from_columns(field, lie.U->dim(), columns);

  auto violation = AlgebraMorphism::find_violation(*lb.U, *lie.U, f);
  bool onto = f.rank() == lie.U->dim();
  bool factors = lb.u.map() == lie.u.map().compose(f);
  std::string detail;
  if (violation) detail = "f does not preserve the bracket at " + nalg::format_tuple(*lb.U, *violation);
  else if (!onto) detail = "f is not surjective";
  else if (!factors) detail = "u_lb differs from u_lie ∘ f";
  else detail = "f is a surjective morphism and u_lb = u_lie ∘ f";
  checks.push_back({"factorization", !violation && onto && factors, detail});

  auto ker_f = exactla::kernel_image(f).kernel;
  UceComparison cmp{std::move(lb), std::move(lie), f, 0, 0, 0, false, {}};
  cmp.ker_lb = cmp.leibniz.kernel.dim();
  cmp.ker_lie = cmp.lie.kernel.dim();
  cmp.ker_f = ker_f.rank();
  checks.push_back({"exactness", cmp.ker_lb == cmp.ker_lie + cmp.ker_f,
                    "dim ker u_lb = " + std::to_string(cmp.ker_lb) + ", dim ker u_lie = " +
                        std::to_string(cmp.ker_lie) + ", dim ker f = " + std::to_string(cmp.ker_f)});

  const auto& u_lb = cmp.leibniz.U;
  auto relative = nalg::full_commutator(u_lb, CommutatorVariant::relative).space();
  checks.push_back({"relative-commutator", relative == ker_f,
                    "dim <U_lb..U_lb> = " + std::to_string(relative.rank()) +
                        ", dim ker f = " + std::to_string(cmp.ker_f)});

  std::vector<Ideal> kernels(l->arity(), cmp.leibniz.kernel);
  cmp.kernel_commutator_equals_ker_f =
      nalg::commutator(u_lb, kernels, CommutatorVariant::relative).space() == ker_f;
  cmp.checks = std::move(checks);
  return cmp;
}

}  // namespace nlie::homology
