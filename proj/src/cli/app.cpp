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


#include "nlie/cli/app.hpp"

#include <functional>

#include "CLI11.hpp"
#include "nlie/cli/io.hpp"
#include "nlie/homology/homology.hpp"

namespace nlie::cli {
namespace {

using ext::GaloisStructure;
using nalg::AlgebraPtr;
using nalg::CommutatorVariant;
using nalg::NaryAlgebra;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

std::string basis_text(const NaryAlgebra& a, const exactla::Subspace& s) {
  std::vector<std::string> parts;
  for (const auto& v : s.basis()) parts.push_back(nalg::format_vector(a, v));
  return join(parts);
}

json basis_json(const exactla::Subspace& s) {
  json out = json::array();
  for (const auto& v : s.basis()) out.push_back(vector_to_json(v));
  return out;
}

std::string algebra_text(const NaryAlgebra& a) {
  std::string out = "name: " + a.name() + "\n";
  out += "n: " + std::to_string(a.arity()) + "; dim: " + std::to_string(a.dim()) + "; field: " + a.field().to_string() + "\n";
  out += "basis: " + join(a.labels()) + "\n";
  if (a.is_zero_bracket()) return out + "bracket: zero\n";
  for (const auto& [t, value] : a.entries()) {
    std::vector<std::string> args;
    for (auto x : t) args.push_back(a.label(x));
    Vector v = a.zero();
    for (const auto& term : value) v[term.index] = term.value;
    std::string inner;
    for (std::size_t i = 0; i < args.size(); ++i) inner += (i ? "," : "") + args[i];
    out += "[" + inner + "] = " + nalg::format_vector(a, v) + "\n";
  }
  return out;
}

const std::map<std::string, CommutatorVariant> kCommutatorVariants{
    {"leibniz", CommutatorVariant::leibniz}, {"lie", CommutatorVariant::lie}, {"relative", CommutatorVariant::relative}};
const std::map<std::string, GaloisStructure> kGalois{{"lb-vect", GaloisStructure::lb_over_vect},
                                                    {"lie-vect", GaloisStructure::lie_over_vect},
                                                    {"lb-lie", GaloisStructure::lb_over_lie}};
const std::map<std::string, homology::UceVariant> kUceVariants{{"leibniz", homology::UceVariant::leibniz},
                                                              {"lie", homology::UceVariant::lie}};

template <class Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

struct Options {
  bool json = false;
  std::string field_text;
  std::string file;
  bool lie = false;
  bool oracle = false;
  bool cube = false;
  std::string variant = "leibniz";
  std::string galois;
  unsigned n = 2;
  std::size_t d = 1;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leibniz and Lie n-algebras: commutators, higher central extensions, Hopf formulas", "nlie"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--field", o.field_text, "Read every input over Q or F<p> instead of the declared field");

  auto algebra_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("algebra", o.file, "Algebra file")->required();
    return sub;
  };
  auto cube_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("cube", o.file, "Cube file")->required();
    return sub;
  };

  algebra_command("check", "Validate the fundamental identity (and skew symmetry with --lie)")
      ->add_flag("--lie", o.lie, "Also check skew symmetry");
  algebra_command("commutator", "Commutator ideal of the algebra with itself")
      ->add_option("--variant", o.variant, "leibniz, lie or relative")
      ->required()
      ->check(CLI::IsMember(keys(kCommutatorVariants)));
  algebra_command("abelianize", "Quotient by the Leibniz commutator");
  algebra_command("liesate", "Quotient by the relative commutator");
  algebra_command("daletskii", "Leibniz 2-algebra on the (n-1)-st tensor power");
  cube_command("extension", "Whether the cube is an extension");
  auto* central = cube_command("central", "Centrality of an extension");
  central->add_option("--galois", o.galois, "lb-vect, lie-vect or lb-lie")->required()->check(CLI::IsMember(keys(kGalois)));
  central->add_flag("--oracle", o.oracle, "Also evaluate the kernel-pair characterisation");
  cube_command("hopf", "Hopf formula on an extension")
      ->add_option("--galois", o.galois, "lb-vect, lie-vect or lb-lie")
      ->required()
      ->check(CLI::IsMember(keys(kGalois)));
  algebra_command("uce", "Universal central extension of a perfect algebra")
      ->add_option("--variant", o.variant, "leibniz or lie")
      ->required()
      ->check(CLI::IsMember(keys(kUceVariants)));
  algebra_command("h2", "Dimension of H2 as the kernel of the universal central extension")
      ->add_option("--variant", o.variant, "leibniz or lie")
      ->required()
      ->check(CLI::IsMember(keys(kUceVariants)));
  algebra_command("compare-uce", "Compare the Leibniz and Lie universal central extensions");
  auto* fnil = app.add_subcommand("free-nilpotent2", "Degree-two truncated free algebra (JSON document)");
  fnil->add_option("--n", o.n, "Arity")->required()->check(CLI::Range(2, 16));
  fnil->add_option("--d", o.d, "Number of generators")->required()->check(CLI::Range(1, 64));
  fnil->add_option("--variant", o.variant, "leibniz or lie")->required()->check(CLI::IsMember(keys(kUceVariants)));
  fnil->add_flag("--cube", o.cube, "Emit the augmentation onto the abelian algebra as an explicit 1-cube");
  app.add_subcommand("normalize", "Canonical form of an algebra, morphism or cube file")
      ->add_option("file", o.file, "JSON document")
      ->required();
  app.add_subcommand("morphism", "Load and validate a morphism file")->add_option("file", o.file, "Morphism file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::optional<Field> field;
  if (!o.field_text.empty()) {
    try {
      field = Field::parse(o.field_text);
    } catch (const FieldError& e) {
      err << "error: --field: " << e.what() << "\n";
      return 2;
    }
  }

  try {
    if (command == "check") {
      auto a = load_algebra(o.file, field);
      auto lb = nalg::validate_leibniz(*a);
      json doc{{"leibniz", {{"ok", lb.ok}, {"report", lb.describe(*a)}}}};
      std::string text = "leibniz: " + lb.describe(*a) + "\n";
      if (o.lie) {
        auto lie = nalg::validate_lie(*a);
        doc["lie"] = {{"ok", lie.ok}, {"report", lie.describe(*a)}};
        text += "lie: " + lie.describe(*a) + "\n";
      }
      out << (o.json ? dump(doc) : text);
      return 0;
    }
    if (command == "commutator") {
      auto a = load_algebra(o.file, field);
      auto c = nalg::full_commutator(a, kCommutatorVariants.at(o.variant));
      if (o.json) {
        out << dump({{"variant", o.variant}, {"dim", c.dim()}, {"basis", basis_json(c.space())}});
      } else {
        out << "commutator (" << o.variant << "): dim " << c.dim();
        if (c.dim() > 0) out << "; basis: " << basis_text(*a, c.space());
        out << "\n";
      }
      return 0;
    }
    if (command == "abelianize" || command == "liesate" || command == "daletskii") {
      auto a = load_algebra(o.file, field);
      AlgebraPtr r = command == "abelianize" ? nalg::abelianization(a).algebra
                     : command == "liesate"  ? nalg::liesation(a).algebra
                                             : nalg::daletskii(a);
      out << (o.json ? dump(algebra_to_json(*r)) : algebra_text(*r));
      return 0;
    }
    if (command == "extension") {
      auto c = load_cube(o.file, field);
      auto r = ext::is_extension(c);
      json doc{{"extension", r.ok}};
      std::string text = r.ok ? "extension: true\n" : "";
      if (!r.ok) {
        doc["failing"] = ext::format_mask(*r.failing);
        text = "extension: false; comparison map at " + ext::format_mask(*r.failing) + " is not surjective\n";
      }
      out << (o.json ? dump(doc) : text);
      return 0;
    }
    if (command == "central") {
      auto c = load_cube(o.file, field);
      auto g = kGalois.at(o.galois);
      auto ob = ext::central_obstruction(c, g);
      const bool is_central = ob.ideal.dim() == 0;
      json doc{{"galois", o.galois},
               {"central", is_central},
               {"obstruction", {{"dim", ob.ideal.dim()}, {"basis", basis_json(ob.ideal.space())}}}};
      std::string text = std::string("central: ") + (is_central ? "true" : "false") + "; obstruction dim " +
                         std::to_string(ob.ideal.dim());
      if (!is_central) text += "; basis: " + basis_text(*c.node(0), ob.ideal.space());
      text += "\n";
      if (o.oracle) {
        bool oracle = ext::is_central_oracle(c, g);
        doc["oracle"] = oracle;
        text += std::string("oracle: ") + (oracle ? "true" : "false") + "\n";
      }
      out << (o.json ? dump(doc) : text);
      return 0;
    }
    if (command == "hopf") {
      auto c = load_cube(o.file, field);
      auto r = homology::hopf_evaluate(c, kGalois.at(o.galois));
      const auto& base = *c.node(0);
      if (base.name().rfind("free_nilpotent2", 0) != 0) {
        err << "note: the Hopf quotient is H_" << c.m() + 1 << " only when the cube is a presentation; "
            << base.name() << " is not a free_nilpotent2 output\n";
      }
      if (o.json) {
        out << dump({{"numerator", r.numerator.rank()}, {"denominator", r.denominator.rank()}, {"h", r.h_dim}});
      } else {
        out << "numerator dim " << r.numerator.rank() << "; denominator dim " << r.denominator.rank() << "; h "
            << r.h_dim << "\n";
        std::vector<std::string> parts;
        for (const auto& v : r.h_basis) parts.push_back(nalg::format_vector(base, v));
        if (!parts.empty()) out << "h basis: " << join(parts) << "\n";
      }
      return 0;
    }
    if (command == "uce") {
      auto a = load_algebra(o.file, field);
      auto r = homology::uce(a, kUceVariants.at(o.variant));
      const auto& k = r.checks;
      if (o.json) {
        out << dump({{"variant", o.variant},
                     {"dim", r.U->dim()},
                     {"kernel_dim", r.kernel.dim()},
                     {"relations_rank", r.relations.divisor.rank()},
                     {"checks",
                      {{"surjective", k.surjective},
                       {"central", k.central},
                       {"perfect", k.perfect},
                       {"well_defined", k.well_defined},
                       {"validated", k.validated}}},
                     {"algebra", algebra_to_json(*r.U)},
                     {"u", matrix_to_json(r.u.map())}});
      } else {
        auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
        out << "U: " << r.U->name() << "; dim " << r.U->dim() << "; kernel dim " << r.kernel.dim() << "\n";
        if (r.kernel.dim() > 0) out << "kernel basis: " << basis_text(*r.U, r.kernel.space()) << "\n";
        out << "checks: surjective " << mark(k.surjective) << ", central " << mark(k.central) << ", perfect "
            << mark(k.perfect) << ", well-defined " << mark(k.well_defined) << ", validated " << mark(k.validated)
            << "\n";
      }
      if (!k.all()) {
        err << "error: a universal central extension postcondition failed\n";
        return 1;
      }
      return 0;
    }
    if (command == "h2") {
      auto a = load_algebra(o.file, field);
      auto h = homology::h2_via_uce(a, kUceVariants.at(o.variant));
      out << (o.json ? dump({{"variant", o.variant}, {"h2", h}}) : "h2 (" + o.variant + "): " + std::to_string(h) + "\n");
      return 0;
    }
    if (command == "compare-uce") {
      auto a = load_algebra(o.file, field);
      auto r = homology::compare_uce(a);
      if (o.json) {
        json checks = json::array();
        for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        out << dump({{"ok", r.ok()},
                     {"ker_lb", r.ker_lb},
                     {"ker_lie", r.ker_lie},
                     {"ker_f", r.ker_f},
                     {"kernel_commutator_equals_ker_f", r.kernel_commutator_equals_ker_f},
                     {"checks", checks}});
      } else {
        out << "dim ker u_lb = " << r.ker_lb << "; dim ker u_lie = " << r.ker_lie << "; dim ker f = " << r.ker_f << "\n";
        for (const auto& c : r.checks) out << c.name << ": " << (c.ok ? "ok" : "FAIL") << " (" << c.detail << ")\n";
      }
      return r.ok() ? 0 : 1;
    }
    if (command == "free-nilpotent2") {
      auto v = o.variant == "lie" ? CommutatorVariant::lie : CommutatorVariant::leibniz;
      auto fn = nalg::free_nilpotent2(o.n, o.d, v, field.value_or(Field::rationals()));
      if (!o.cube) {
        out << dump(algebra_to_json(*fn.algebra));
        return 0;
      }
      out << dump({{"m", 1},
                   {"mode", "explicit"},
                   {"nodes", {{"", algebra_to_json(*fn.algebra)}, {"1", algebra_to_json(*fn.augmentation.target())}}},
                   {"arrows", {{"->1", matrix_to_json(fn.augmentation.map())}}}});
      return 0;
    }
    if (command == "normalize") {
      out << dump(normalize(read_json(o.file), o.file));
      return 0;
    }
    if (command == "morphism") {
      auto f = load_morphism(o.file, field);
      auto ki = exactla::kernel_image(f.map());
      if (o.json) {
        out << dump({{"morphism", true},
                     {"rank", ki.image.rank()},
                     {"surjective", f.is_surjective()},
                     {"kernel_dim", ki.kernel.rank()}});
      } else {
        out << "morphism: ok; rank " << ki.image.rank() << "; surjective: " << (f.is_surjective() ? "true" : "false")
            << "; kernel dim " << ki.kernel.rank() << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 1;
  }
  err << "error: unknown command " << command << "\n";
  return 2;
}

}  // namespace nlie::cli
