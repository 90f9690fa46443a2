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


#include "nlie/cli/io.hpp"

#include <bit>
#include <fstream>
#include <set>
#include <sstream>

namespace nlie::cli {
namespace fs = std::filesystem;

using nalg::AlgebraPtr;
using nalg::NaryAlgebra;
using nalg::Tuple;

namespace {

// A document root is named "<file>:"; field paths are appended to it.
std::string root(const std::string& file) { return file + ":"; }

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError((where.ends_with(':') ? where.substr(0, where.size() - 1) : where) + ": " + what);
}

std::string at(const std::string& where, const std::string& key) {
  return where.ends_with(':') ? where + " " + key : where + "." + key;
}
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& member(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) fail(where, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

void only_keys(const json& doc, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : doc.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) fail(where, "unknown key '" + k + "'");
  }
}

std::int64_t integer(const json& v, const std::string& where, std::int64_t lo, std::int64_t hi) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  auto x = v.get<std::int64_t>();
  if (x < lo || x > hi) fail(where, std::to_string(x) + " out of range " + std::to_string(lo) + ".." + std::to_string(hi));
  return x;
}

const std::string& text(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get_ref<const std::string&>();
}

const json& array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  return v;
}

Field field_of(const json& v, const std::string& where) {
  try {
    return Field::parse(text(v, where));
  } catch (const FieldError& e) {
    fail(where, e.what());
  }
}

exactla::Scalar scalar(const json& v, const Field& field, const std::string& where) {
  const auto& s = text(v, where);
  try {
    return field.parse_scalar(s);
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  } catch (const FieldError& e) {
    fail(where, e.what());
  }
}

Vector vector_from_json(const json& v, const Field& field, std::size_t n, const std::string& where) {
  array(v, where);
  if (v.size() != n) fail(where, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar(v[i], field, at(where, i)));
  return out;
}

fs::path relative_to(const fs::path& file, const std::string& ref) {
  fs::path p(ref);
  return p.is_absolute() ? p : file.parent_path() / p;
}

json canonical_matrix(const json& m, const Field& field, const std::string& where) {
  array(m, where);
  json out = json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    const auto& row = array(m[r], at(where, r));
    if (row.size() != m[0].size()) fail(at(where, r), "rows differ in length");
    json o = json::array();
    for (std::size_t c = 0; c < row.size(); ++c) o.push_back(scalar(row[c], field, at(at(where, r), c)).to_string());
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

json read_json(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    auto close = what.find("] ");
    throw ParseError(path.string() + ": " + (close == std::string::npos ? what : what.substr(close + 2)));
  }
}

namespace {

// One-line form with ", " and ": " separators.
std::string inline_form(const json& v) {
  if (v.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      out += (first ? "" : ", ") + json(k).dump() + ": " + inline_form(x);
      first = false;
    }
    return out + "}";
  }
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + inline_form(v[i]);
    return out + "]";
  }
  return v.dump();
}

// Like json::dump(2), except that anything fitting in 80 columns stays on
// one line.
void write(std::string& out, const json& v, std::size_t indent, std::size_t used) {
  std::string flat = inline_form(v);
  if (!v.is_structured() || v.empty() || used + flat.size() <= 80) {
    out += flat;
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool object = v.is_object();
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (const auto& [k, x] : v.items()) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    std::size_t col = pad.size();
    if (object) {
      std::string key = json(k).dump() + ": ";
      out += key;
      col += key.size();
    }
    write(out, x, indent + 2, col + 1);
  }
  out += "\n" + std::string(indent, ' ') + (object ? "}" : "]");
}

}  // namespace

std::string dump(const json& doc) {
  std::string out;
  write(out, doc, 0, 0);
  return out + "\n";
}

AlgebraPtr algebra_from_json(const json& doc, const std::string& where, const std::optional<Field>& field) {
  const auto& name = text(member(doc, "name", where), at(where, "name"));
  auto n = integer(member(doc, "n", where), at(where, "n"), 2, 16);
  auto dim = integer(member(doc, "dim", where), at(where, "dim"), 0, 1 << 20);
  Field declared = field_of(member(doc, "field", where), at(where, "field"));
  const Field& k = field ? *field : declared;
  only_keys(doc, {"name", "n", "dim", "field", "basis", "brackets"}, where);

  std::vector<std::string> labels;
  if (auto it = doc.find("basis"); it != doc.end()) {
    const auto& b = array(*it, at(where, "basis"));
    if (b.size() != static_cast<std::size_t>(dim)) fail(at(where, "basis"), "expected " + std::to_string(dim) + " labels");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      labels.push_back(text(b[i], at(at(where, "basis"), i)));
      if (!seen.insert(labels.back()).second) fail(at(at(where, "basis"), i), "duplicate label '" + labels.back() + "'");
    }
  }
  std::optional<NaryAlgebra> a;
  try {
    a.emplace(name, static_cast<unsigned>(n), static_cast<std::size_t>(dim), k, labels);
  } catch (const DimensionError& e) {
    fail(where, e.what());
  }

  const std::string bw = at(where, "brackets");
  const auto& brackets = array(member(doc, "brackets", where), bw);
  std::set<Tuple> seen;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const std::string ew = at(bw, i);
    const auto& entry = brackets[i];
    const auto& args = array(member(entry, "args", ew), at(ew, "args"));
    only_keys(entry, {"args", "value"}, ew);
    if (args.size() != static_cast<std::size_t>(n)) fail(at(ew, "args"), "expected " + std::to_string(n) + " indices");
    Tuple t;
    for (std::size_t j = 0; j < args.size(); ++j) {
      t.push_back(static_cast<std::uint32_t>(integer(args[j], at(at(ew, "args"), j), 1, dim) - 1));
    }
    if (!seen.insert(t).second) fail(at(ew, "args"), "duplicate entry " + nalg::format_tuple(*a, t));
    const auto& value = member(entry, "value", ew);
    if (!value.is_object()) fail(at(ew, "value"), "expected an object keyed by basis index");
    Vector v = a->zero();
    for (const auto& [key, x] : value.items()) {
      const std::string vw = at(ew, "value") + "[\"" + key + "\"]";
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(key, &used);
        if (used != key.size() || key.front() == '0') throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(vw, "key must be a basis index 1.." + std::to_string(dim));
      }
      if (idx < 1 || idx > static_cast<std::size_t>(dim)) fail(vw, "basis index out of range 1.." + std::to_string(dim));
      v[idx - 1] = scalar(x, k, vw);
    }
    a->set_bracket(t, v);
  }
  return nalg::share(std::move(*a));
}

AlgebraPtr load_algebra(const fs::path& path, const std::optional<Field>& field) {
  return algebra_from_json(read_json(path), root(path.string()), field);
}

json algebra_to_json(const NaryAlgebra& a) {
  json brackets = json::array();
  for (const auto& [t, value] : a.entries()) {
    json args = json::array();
    for (auto x : t) args.push_back(x + 1);
    json v = json::object();
    for (const auto& term : value) v[std::to_string(term.index + 1)] = term.value.to_string();
    brackets.push_back({{"args", args}, {"value", v}});
  }
  return {{"name", a.name()},     {"n", a.arity()}, {"dim", a.dim()}, {"field", a.field().to_string()},
          {"basis", a.labels()}, {"brackets", brackets}};
}

LinearMap matrix_from_json(const json& doc, const Field& field, std::size_t rows, std::size_t cols,
                           const std::string& where) {
  array(doc, where);
  if (doc.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(doc.size()));
  LinearMap m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vector row = vector_from_json(doc[r], field, cols, at(where, r));
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

json matrix_to_json(const LinearMap& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

nalg::AlgebraMorphism load_morphism(const fs::path& path, const std::optional<Field>& field) {
  const std::string where = root(path.string());
  json doc = read_json(path);
  only_keys(doc, {"source", "target", "matrix"}, where);
  auto source = load_algebra(relative_to(path, text(member(doc, "source", where), at(where, "source"))), field);
  auto target = load_algebra(relative_to(path, text(member(doc, "target", where), at(where, "target"))), field);
  if (source->field() != target->field()) fail(where, "source and target are over different fields");
  auto m = matrix_from_json(member(doc, "matrix", where), source->field(), target->dim(), source->dim(),
                            at(where, "matrix"));
  return nalg::AlgebraMorphism::validated(source, target, std::move(m));
}

std::optional<ext::Mask> parse_subset(std::string_view s, unsigned m) {
  ext::Mask mask = 0;
  int last = 0;
  for (char c : s) {
    int d = c - '0';
    if (d < 1 || d > static_cast<int>(m) || d <= last) return std::nullopt;
    mask |= ext::Mask{1} << (d - 1);
    last = d;
  }
  return mask;
}

std::string subset_key(ext::Mask s) {
  std::string out;
  for (unsigned i = 0; s >> i; ++i) {
    if (s >> i & 1u) out += static_cast<char>('1' + i);
  }
  return out;
}

namespace {

struct ArrowKey {
  ext::Mask from;
  unsigned j;
};

std::optional<ArrowKey> parse_arrow(const std::string& key, unsigned m) {
  auto sep = key.find("->");
  if (sep == std::string::npos) return std::nullopt;
  auto from = parse_subset(std::string_view(key).substr(0, sep), m);
  auto to = parse_subset(std::string_view(key).substr(sep + 2), m);
  if (!from || !to || (*from & ~*to) != 0) return std::nullopt;
  ext::Mask added = *to & ~*from;
  if (added == 0 || (added & (added - 1)) != 0) return std::nullopt;
  return ArrowKey{*from, static_cast<unsigned>(std::countr_zero(added))};
}

}  // namespace

ext::Cube load_cube(const fs::path& path, const std::optional<Field>& field) {
  const std::string where = root(path.string());
  json doc = read_json(path);
  const unsigned m = static_cast<unsigned>(integer(member(doc, "m", where), at(where, "m"), 1, 9));
  const auto& mode = text(member(doc, "mode", where), at(where, "mode"));

  if (mode == "ideals") {
    only_keys(doc, {"m", "mode", "algebra", "ideals"}, where);
    auto a = load_algebra(relative_to(path, text(member(doc, "algebra", where), at(where, "algebra"))), field);
    const std::string iw = at(where, "ideals");
    const auto& ideals = array(member(doc, "ideals", where), iw);
    if (ideals.size() != m) fail(iw, "expected " + std::to_string(m) + " ideals");
    std::vector<nalg::Ideal> parsed;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& gens = array(ideals[i], at(iw, i));
      std::vector<Vector> vs;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        vs.push_back(vector_from_json(gens[g], a->field(), a->dim(), at(at(iw, i), g)));
      }
      parsed.push_back(nalg::Ideal::checked(a, exactla::Subspace::span(a->field(), a->dim(), vs)));
    }
    return ext::cube_from_ideals(a, parsed);
  }
  if (mode != "explicit") fail(at(where, "mode"), "expected \"ideals\" or \"explicit\"");

  only_keys(doc, {"m", "mode", "nodes", "arrows"}, where);
  const std::string nw = at(where, "nodes");
  const auto& nodes = member(doc, "nodes", where);
  if (!nodes.is_object()) fail(nw, "expected an object keyed by subset");
  const std::size_t count = std::size_t{1} << m;
  std::vector<AlgebraPtr> algebras(count);
  for (const auto& [key, v] : nodes.items()) {
    const std::string kw = nw + "[\"" + key + "\"]";
    auto s = parse_subset(key, m);
    if (!s) fail(kw, "not a subset of {1.." + std::to_string(m) + "} written with increasing digits");
    algebras[*s] = v.is_string() ? load_algebra(relative_to(path, v.get<std::string>()), field)
                                 : algebra_from_json(v, kw, field);
  }
  for (ext::Mask s = 0; s < count; ++s) {
    if (!algebras[s]) fail(nw, "missing node \"" + subset_key(s) + "\"");
  }
  const std::string aw = at(where, "arrows");
  const auto& arrows = member(doc, "arrows", where);
  if (!arrows.is_object()) fail(aw, "expected an object keyed by \"I->J\"");
  std::vector<ext::Cube::ArrowData> data;
  for (const auto& [key, v] : arrows.items()) {
    const std::string kw = aw + "[\"" + key + "\"]";
    auto k = parse_arrow(key, m);
    if (!k) fail(kw, "expected \"I->J\" with J = I plus one element");
    const auto& src = algebras[k->from];
    const auto& dst = algebras[k->from | (ext::Mask{1} << k->j)];
    data.push_back({k->from, k->j, matrix_from_json(v, src->field(), dst->dim(), src->dim(), kw)});
  }
  if (data.size() != static_cast<std::size_t>(m) << (m - 1)) {
    // Cube::make names the missing arrow
    for (ext::Mask s = 0; s < count; ++s) {
      for (unsigned j = 0; j < m; ++j) {
        if (s >> j & 1u) continue;
        bool found = false;
        for (const auto& d : data) found = found || (d.from == s && d.j == j);
        if (!found) fail(aw, "missing arrow \"" + subset_key(s) + "->" + subset_key(s | (ext::Mask{1} << j)) + "\"");
      }
    }
  }
  return ext::Cube::make(m, std::move(algebras), data);
}

json normalize(const json& doc, const std::string& file) {
  const std::string where = root(file);
  if (!doc.is_object()) fail(where, "expected an object");
  const Field q = Field::rationals();
  if (doc.contains("brackets")) return algebra_to_json(*algebra_from_json(doc, where));
  if (doc.contains("matrix")) {
    only_keys(doc, {"source", "target", "matrix"}, where);
    return {{"source", text(member(doc, "source", where), at(where, "source"))},
            {"target", text(member(doc, "target", where), at(where, "target"))},
            {"matrix", canonical_matrix(doc["matrix"], q, at(where, "matrix"))}};
  }
  if (!doc.contains("mode")) fail(where, "not an algebra, morphism or cube document");
  const unsigned m = static_cast<unsigned>(integer(member(doc, "m", where), at(where, "m"), 1, 9));
  const auto& mode = text(doc["mode"], at(where, "mode"));
  json out = {{"m", m}, {"mode", mode}};
  if (mode == "ideals") {
    only_keys(doc, {"m", "mode", "algebra", "ideals"}, where);
    out["algebra"] = text(member(doc, "algebra", where), at(where, "algebra"));
    const auto& ideals = array(member(doc, "ideals", where), at(where, "ideals"));
    out["ideals"] = json::array();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      out["ideals"].push_back(canonical_matrix(ideals[i], q, at(at(where, "ideals"), i)));
    }
    return out;
  }
  if (mode != "explicit") fail(at(where, "mode"), "expected \"ideals\" or \"explicit\"");
  only_keys(doc, {"m", "mode", "nodes", "arrows"}, where);
  Field k = q;
  out["nodes"] = json::object();
  for (const auto& [key, v] : member(doc, "nodes", where).items()) {
    auto s = parse_subset(key, m);
    if (!s) fail(at(where, "nodes") + "[\"" + key + "\"]", "bad subset key");
    if (v.is_string()) {
      out["nodes"][subset_key(*s)] = v;
    } else {
      auto a = algebra_from_json(v, at(where, "nodes") + "[\"" + key + "\"]");
      if (*s == 0) k = a->field();
      out["nodes"][subset_key(*s)] = algebra_to_json(*a);
    }
  }
  out["arrows"] = json::object();
  for (const auto& [key, v] : member(doc, "arrows", where).items()) {
    const std::string kw = at(where, "arrows") + "[\"" + key + "\"]";
    auto a = parse_arrow(key, m);
    if (!a) fail(kw, "bad arrow key");
    out["arrows"][subset_key(a->from) + "->" + subset_key(a->from | (ext::Mask{1} << a->j))] =
        canonical_matrix(v, k, kw);
  }
  return out;
}

}  // namespace nlie::cli
