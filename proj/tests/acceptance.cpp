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


// Runs acceptance criteria 1-7 and prints one PASS/FAIL line for each.
// Exit status is 0 only if every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "free_trunc.hpp"
#include "nlie/homology/homology.hpp"
#include "nlie/nalg/catalog.hpp"
#include "support.hpp"

using namespace nlie;
using ext::Cube;
using ext::GaloisStructure;
using exactla::Field;
using exactla::Subspace;
using exactla::Vector;
using nalg::AlgebraPtr;
using nalg::CommutatorVariant;
using nalg::Ideal;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (cond) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary};
    return {false, std::to_string(failures) + "/" + std::to_string(cases) + " failed, first: " + first};
  }
};

const std::vector<GaloisStructure> kAll{GaloisStructure::lb_over_vect, GaloisStructure::lie_over_vect,
                                        GaloisStructure::lb_over_lie};

std::vector<GaloisStructure> applicable(const nalg::NaryAlgebra& a) {
  if (nalg::validate_lie(a).ok) return kAll;
  return {GaloisStructure::lb_over_vect, GaloisStructure::lb_over_lie};
}

// Ideal closures of spans of at most two vectors with entries in {-1,0,1}.
std::vector<Ideal> enumerate_ideals(const AlgebraPtr& a) {
  const auto& f = a->field();
  const std::size_t d = a->dim();
  std::vector<Vector> vs;
  nalg::for_each_tuple(d, 3, [&](const nalg::Tuple& t) {
    Vector v;
    for (auto x : t) v.push_back(f.from_int(static_cast<long>(x) - 1));
    vs.push_back(std::move(v));
    return true;
  });
  std::vector<Ideal> out;
  auto add = [&](std::vector<Vector> gens) {
    auto i = nalg::ideal_closure(a, Subspace::span(f, d, gens));
    for (const auto& o : out) {
      if (o == i) return;
    }
    out.push_back(std::move(i));
  };
  add({});
  for (std::size_t i = 0; i < vs.size(); ++i) {
    add({vs[i]});
    for (std::size_t j = i + 1; j < vs.size(); ++j) add({vs[i], vs[j]});
  }
  return out;
}

AlgebraPtr lz2_squared() { return nalg::direct_product(nalg::catalog::lz2(), nalg::catalog::lz2()); }

// ---------------------------------------------------------------- 1

Outcome axiom_suite() {
  Tally t;
  for (auto a : {nalg::abelian(1, 2), nalg::abelian(2, 2), nalg::abelian(3, 2), nalg::catalog::heisenberg3(),
                 nalg::catalog::sl2(), nalg::catalog::v4()}) {
    t.expect(nalg::validate_lie(*a).ok, a->name() + " fails validate_lie");
  }
  auto lz = nalg::catalog::lz2();
  t.expect(nalg::validate_leibniz(*lz).ok, "Lz2 fails validate_leibniz");
  auto lie = nalg::validate_lie(*lz);
  t.expect(!lie.ok && lie.describe(*lz) == "FAIL (skew symmetry at (x,x))", "Lz2 lie report: " + lie.describe(*lz));
  t.expect(!nalg::validate_leibniz(*nalg::catalog::idempotent_line()).ok, "[x,x]=x passes validate_leibniz");

  std::size_t mutants = 0;
  for (auto a : {nalg::catalog::heisenberg3(), nalg::catalog::sl2(), nalg::catalog::v4()}) {
    nalg::for_each_tuple(a->arity(), a->dim(), [&](const nalg::Tuple& args) {
      for (std::uint32_t k = 0; k < a->dim(); ++k) {
        nalg::NaryAlgebra m = *a;
        m.add_to_bracket(args, k, m.field().one());
        bool flipped = !nalg::validate_leibniz(m).ok || !nalg::validate_lie(m).ok;
        t.expect(flipped, a->name() + " mutation at " + nalg::format_tuple(*a, args) + " survives");
        ++mutants;
      }
      return true;
    });
  }
  return t.outcome(std::to_string(mutants) + " single-entry mutants of h3/sl2/V4 all rejected");
}

// ---------------------------------------------------------------- 2

Outcome oracle_equivalence_1() {
  Tally t;
  for (auto a : {nalg::catalog::heisenberg3(), nalg::catalog::sl2(), nalg::catalog::lz2(), nalg::catalog::v4(),
                 nalg::abelian(3, 2)}) {
    auto gs = applicable(*a);
    for (const auto& i : enumerate_ideals(a)) {
      std::vector<Ideal> one{i};
      auto c = ext::cube_from_ideals(a, one);
      for (auto g : gs) {
        t.expect(ext::is_central(c, g) == ext::is_central_oracle(c, g),
                 a->name() + " / ideal of dim " + std::to_string(i.dim()) + " under " +
                     std::string(ext::galois_name(g)));
      }
    }
  }
  if (t.cases < 15) t.expect(false, "fewer than 15 cases");
  return t.outcome(std::to_string(t.cases) + " 1-cubes x structures agree");
}

// ---------------------------------------------------------------- 3

Outcome oracle_equivalence_2() {
  Tally t;
  for (auto a : {nalg::catalog::heisenberg3(), lz2_squared()}) {
    auto ideals = enumerate_ideals(a);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        std::vector<Ideal> pair{ideals[i], ideals[j]};
        auto c = ext::cube_from_ideals(a, pair);
        for (auto g : {GaloisStructure::lb_over_vect, GaloisStructure::lb_over_lie}) {
          t.expect(ext::is_central(c, g) == ext::is_central_oracle(c, g),
                   a->name() + " pair (" + std::to_string(i) + "," + std::to_string(j) + ") under " +
                       std::string(ext::galois_name(g)));
        }
      }
    }
  }
  const std::size_t pairs = t.cases;
  auto h = nalg::catalog::heisenberg3();
  const auto& q = h->field();
  auto sp = [&](std::initializer_list<std::size_t> idx) {
    std::vector<Vector> g;
    for (auto k : idx) g.push_back(h->basis_vector(k));
    return Ideal::checked(h, Subspace::span(q, 3, g));
  };
  std::vector<Ideal> square{sp({1, 2}), sp({0, 2})};
  auto c = ext::cube_from_ideals(h, square);
  t.expect(ext::is_extension(c).ok, "h3 square is not an extension");
  std::vector<Vector> e3{h->basis_vector(2)};
  for (auto g : {GaloisStructure::lb_over_vect, GaloisStructure::lie_over_vect}) {
    auto ob = ext::central_obstruction(c, g);
    t.expect(ob.ideal.space() == Subspace::span(q, 3, e3), "h3 square obstruction is not span{e3}");
    t.expect(!ext::is_central(c, g) && !ext::is_central_oracle(c, g), "h3 square reported central");
  }
  return t.outcome(std::to_string(pairs) + " 2-cube checks agree; h3 square obstruction = span{e3}");
}

// ---------------------------------------------------------------- 4

std::size_t choose(std::size_t d, unsigned n) {
  if (n > d) return 0;
  std::size_t r = 1;
  for (unsigned k = 0; k < n; ++k) r = r * (d - k) / (k + 1);
  return r;
}

Outcome hopf_values() {
  Tally t;
  for (unsigned n : {2u, 3u}) {
    for (std::size_t d : {1u, 2u, 3u}) {
      std::size_t dn = 1;
      for (unsigned k = 0; k < n; ++k) dn *= d;
      const std::string at = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
      auto lb = nalg::free_nilpotent2(n, d, CommutatorVariant::leibniz);
      auto li = nalg::free_nilpotent2(n, d, CommutatorVariant::lie);
      auto h_lb = homology::hopf_evaluate(Cube::from_morphism(lb.augmentation), GaloisStructure::lb_over_vect).h_dim;
      auto h_li = homology::hopf_evaluate(Cube::from_morphism(li.augmentation), GaloisStructure::lie_over_vect).h_dim;
      auto h_rel = homology::hopf_evaluate(Cube::from_morphism(lb.augmentation), GaloisStructure::lb_over_lie).h_dim;
      t.expect(h_lb == dn, "lb-vect " + at);
      t.expect(h_li == choose(d, n), "lie-vect " + at);
      t.expect(h_rel == dn - choose(d, n), "lb-lie " + at);
      if (n != 2) continue;
      // independent truncated free Leibniz algebra, degree <= 3
      auto free = testing::free_leibniz_truncated(d);
      std::vector<Ideal> k{Ideal::checked(free.algebra, free.degree_two_up)};
      auto c = ext::cube_from_ideals(free.algebra, k);
      t.expect(homology::hopf_evaluate(c, GaloisStructure::lb_over_vect).h_dim == h_lb, "free oracle lb-vect " + at);
      t.expect(homology::hopf_evaluate(c, GaloisStructure::lb_over_lie).h_dim == h_rel, "free oracle lb-lie " + at);
      auto lies = nalg::liesation(free.algebra);
      std::vector<Vector> images;
      for (const auto& v : free.degree_two_up.basis()) images.push_back(lies.projection(v));
      std::vector<Ideal> kl{Ideal::checked(lies.algebra, Subspace::span(lies.algebra->field(), lies.algebra->dim(), images))};
      t.expect(homology::hopf_evaluate(ext::cube_from_ideals(lies.algebra, kl), GaloisStructure::lie_over_vect).h_dim ==
                   h_li,
               "free oracle lie-vect " + at);
    }
  }
  return t.outcome("d^n, C(d,n), d^n-C(d,n) for n in {2,3}, d in {1,2,3}; n=2 matches the truncated free algebra");
}

// ---------------------------------------------------------------- 5

void expect_uce(Tally& t, const homology::UceResult& r, std::size_t kernel, const std::string& what) {
  t.expect(r.checks.surjective, what + ": u not surjective");
  t.expect(r.checks.central, what + ": not central");
  t.expect(r.checks.perfect, what + ": U not perfect");
  t.expect(r.checks.well_defined, what + ": bracket not well defined");
  t.expect(r.checks.validated, what + ": U fails its validator");
  t.expect(r.kernel.dim() == kernel, what + ": kernel dim " + std::to_string(r.kernel.dim()));
}

Outcome uce_suite() {
  Tally t;
  auto sl2 = nalg::catalog::sl2();
  auto v4 = nalg::catalog::v4();
  auto lie_sl2 = homology::uce_lie(sl2);
  expect_uce(t, lie_sl2, 0, "uce_lie(sl2)");
  t.expect(lie_sl2.U->dim() == 3 && lie_sl2.u.map().rank() == 3, "uce_lie(sl2): u is not an isomorphism");
  // frozen oracle kernel dimensions
  expect_uce(t, homology::uce_leibniz(sl2), 0, "uce_leibniz(sl2)");
  expect_uce(t, homology::uce_lie(v4), 0, "uce_lie(V4)");
  for (auto a : {sl2, v4}) {
    auto cmp = homology::compare_uce(a);
    for (const auto& c : cmp.checks) t.expect(c.ok, a->name() + " " + c.name + ": " + c.detail);
    t.expect(cmp.ker_lb == cmp.ker_lie + cmp.ker_f, a->name() + " dimension identity");
  }
  return t.outcome("uce_lie(sl2) iso; uce_leibniz(sl2), uce_lie(V4) kernel 0; compare_uce(sl2, V4) all checks");
}

// ---------------------------------------------------------------- 6

Outcome structural() {
  Tally t;
  std::mt19937_64 rng(20260418);
  auto algebras = testing::corpus_algebras();
  for (int k = 0; k < 100; ++k) {
    const auto& a = algebras[rng() % algebras.size()];
    std::vector<Ideal> ideals;
    for (unsigned s = 0; s < a->arity(); ++s) {
      ideals.push_back(nalg::ideal_closure(a, testing::random_subspace(rng, a->field(), a->dim())));
    }
    auto rel = nalg::commutator(a, ideals, CommutatorVariant::relative);
    auto lb = nalg::commutator(a, ideals, CommutatorVariant::leibniz);
    t.expect(lb.space().contains(rel.space()), a->name() + ": relative commutator not inside the Leibniz one");
  }

  std::size_t cubes = 0;
  for (const auto& entry : testing::corpus_cubes(6, 5)) {
    const auto& c = entry.cube;
    ++cubes;
    if (ext::is_central(c, GaloisStructure::lb_over_vect)) {
      t.expect(ext::is_central(c, GaloisStructure::lb_over_lie), entry.label + ": lb-vect central but not lb-lie");
    }
    for (auto g : testing::structures_for(entry.lie)) {
      auto r = homology::hopf_evaluate(c, g);
      t.expect(r.numerator.contains(r.denominator), entry.label + ": denominator not in numerator");
      if (c.m() <= 2 && c.arity() <= 3) {
        t.expect(ext::obstruction_over_all_covers(c, g) == ext::central_obstruction(c, g).ideal,
                 entry.label + ": covers and partitions differ");
      }
    }
  }
  for (const auto& a : algebras) {
    if (!nalg::validate_leibniz(*a).ok) continue;
    t.expect(nalg::validate_lie(*nalg::liesation(a).algebra).ok, "liesation of " + a->name() + " is not Lie");
  }
  t.expect(nalg::validate_leibniz(*nalg::daletskii(nalg::catalog::v4())).ok, "daletskii(V4) is not Leibniz");
  return t.outcome("100 random ideal tuples, " + std::to_string(cubes) + " corpus extensions, liesation, daletskii(V4)");
}

// ---------------------------------------------------------------- 7

struct Run {
  int code;
  std::string output;
};

Run shell(const std::string& command) {
  Run r{-1, {}};
  FILE* p = popen((command + " 2>&1").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_contract() {
  Tally t;
  const fs::path fixtures = NLIE_FIXTURE_DIR;
  const std::string cli = NLIE_CLI_PATH;
  auto q = [](const fs::path& p) { return "'" + p.string() + "'"; };
  auto alg = [&](const char* name) { return q(fixtures / "algebras" / (std::string(name) + ".json")); };
  auto cube = [&](const std::string& name) { return q(fixtures / "cubes" / (name + ".json")); };

  // command, expected exit code
  std::vector<std::pair<std::string, int>> commands;
  for (const auto& e : fs::directory_iterator(fixtures / "algebras")) {
    commands.push_back({"check " + q(e.path()) + " --lie", 0});
    commands.push_back({"--json check " + q(e.path()), 0});
  }
  for (const char* a : {"h3", "sl2", "v4", "lz2", "abelian_2", "takiff_sl2", "fnil2_2_2_leibniz"}) {
    for (const char* v : {"leibniz", "lie", "relative"}) commands.push_back({std::string("commutator ") + alg(a) + " --variant " + v, 0});
    commands.push_back({std::string("abelianize ") + alg(a), 0});
    commands.push_back({std::string("--json liesate ") + alg(a), 0});
    commands.push_back({std::string("daletskii ") + alg(a), 0});
  }
  for (const char* a : {"sl2", "v4", "takiff_sl2"}) {
    for (const char* v : {"leibniz", "lie"}) {
      commands.push_back({std::string("uce ") + alg(a) + " --variant " + v, 0});
      commands.push_back({std::string("--json h2 ") + alg(a) + " --variant " + v, 0});
    }
    commands.push_back({std::string("compare-uce ") + alg(a) + " --json", 0});
  }
  for (const char* c : {"cube_h3_center", "cube_h3_quot23", "cube_h3_square", "cube_lz2_y", "cube_sl2_identity",
                        "cube_lz2_squared_square", "fnil2_2_2_leibniz", "fnil2_2_3_lie", "fnil2_3_2_leibniz"}) {
    commands.push_back({"extension " + cube(c), 0});
    commands.push_back({"central " + cube(c) + " --galois lb-vect --oracle", 0});
    commands.push_back({"hopf " + cube(c) + " --galois lb-lie --json", 0});
  }
  commands.push_back({"extension " + cube("cube_degenerate_square") + " --json", 0});
  commands.push_back({"central " + cube("cube_h3_square") + " --galois lie-vect", 0});
  commands.push_back({"hopf " + cube("fnil2_2_2_leibniz") + " --galois lb-vect --json", 0});
  commands.push_back({"hopf " + cube("fnil2_2_3_lie") + " --galois lie-vect", 0});
  for (const auto& e : fs::directory_iterator(fixtures / "morphisms")) {
    commands.push_back({"morphism " + q(e.path()), e.path().stem() == "lz2_swap" ? 1 : 0});
  }
  commands.push_back({"free-nilpotent2 --n 3 --d 2 --variant lie --cube", 0});
  // exit-code contract: semantic failure and parse failure
  commands.push_back({"uce " + alg("h3") + " --variant lie", 1});
  commands.push_back({"check " + q(fixtures / "invalid" / "args_out_of_range.json"), 2});
  commands.push_back({"check " + q(fixtures / "invalid" / "truncated.json"), 2});

  for (const auto& [args, expected] : commands) {
    auto first = shell(cli + " " + args);
    auto second = shell(cli + " " + args);
    t.expect(first.code == expected, args + ": exit " + std::to_string(first.code));
    t.expect(first.code == second.code && first.output == second.output, args + ": output differs between runs");
  }
  auto sample = shell(cli + " central " + cube("cube_h3_square") + " --galois lie-vect");
  t.expect(sample.output == "central: false; obstruction dim 1; basis: e3\n", "h3 square text: " + sample.output);

  std::size_t files = 0;
  for (const char* dir : {"algebras", "cubes", "morphisms"}) {
    for (const auto& e : fs::directory_iterator(fixtures / dir)) {
      auto r = shell(cli + " normalize " + q(e.path()));
      t.expect(r.code == 0 && r.output == slurp(e.path()), e.path().filename().string() + " does not round-trip");
      ++files;
    }
  }
  return t.outcome(std::to_string(commands.size()) + " commands byte-identical across two runs; " +
                   std::to_string(files) + " fixtures round-trip; exit codes 0/1/2");
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"axiom suite", axiom_suite},
      {"oracle equivalence, 1-cubes", oracle_equivalence_1},
      {"oracle equivalence, 2-cubes", oracle_equivalence_2},
      {"Hopf abelian values", hopf_values},
      {"UCE suite", uce_suite},
      {"structural properties", structural},
      {"CLI contract", cli_contract},
  };
  const auto start = clock::now();
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << " (" << criteria[i].first << ", " << ms
              << " ms): " << o.detail << std::endl;
    all = all && o.ok;
  }
  const auto total = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
  std::cout << "total " << total << " ms" << std::endl;
  return all ? 0 : 1;
}
