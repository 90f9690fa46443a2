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

#include "nlie/ext/cube.hpp"

#include <bit>
#include <string>

#include "nlie/exactla/error.hpp"

namespace nlie::ext {

namespace {

constexpr unsigned kMaxM = 10;

Mask bit(unsigned j) { return Mask{1} << j; }

}  // namespace

std::string format_mask(Mask s) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; s >> i; ++i) {
    if (!(s & bit(i))) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Cube Cube::make(unsigned m, std::vector<AlgebraPtr> nodes, std::span<const ArrowData> arrows) {
  if (m == 0 || m > kMaxM) throw DimensionError("cube dimension m must be between 1 and " + std::to_string(kMaxM));
  if (nodes.size() != (std::size_t{1} << m)) {
    throw DimensionError("an " + std::to_string(m) + "-cube needs " + std::to_string(std::size_t{1} << m) +
                         " nodes, got " + std::to_string(nodes.size()));
  }
  for (Mask s = 0; s < nodes.size(); ++s) {
    if (!nodes[s]) throw PreconditionError("missing node " + format_mask(s));
    if (nodes[s]->arity() != nodes[0]->arity()) throw DimensionError("node " + format_mask(s) + " has a different arity");
    if (nodes[s]->field() != nodes[0]->field()) throw FieldError("node " + format_mask(s) + " is over a different field");
  }

  std::vector<std::optional<AlgebraMorphism>> table(nodes.size() * m);
  for (const auto& a : arrows) {
    if (a.j >= m || a.from >= nodes.size() || (a.from & bit(a.j))) {
      throw DimensionError("arrow " + format_mask(a.from) + " -> element " + std::to_string(a.j + 1) +
                           " does not fit the cube");
    }
    auto& slot = table[a.from * m + a.j];
    const std::string where = format_mask(a.from) + "->" + format_mask(a.from | bit(a.j));
    if (slot) throw PreconditionError("duplicate arrow " + where);
    try {
      slot = AlgebraMorphism::validated(nodes[a.from], nodes[a.from | bit(a.j)], a.map);
    } catch (const PreconditionError& e) {
      throw PreconditionError("arrow " + where + ": " + e.what());
    } catch (const DimensionError& e) {
      throw DimensionError("arrow " + where + ": " + e.what());
    }
  }
  for (Mask s = 0; s < nodes.size(); ++s) {
    for (unsigned j = 0; j < m; ++j) {
      if (!(s & bit(j)) && !table[s * m + j]) {
        throw PreconditionError("missing arrow " + format_mask(s) + "->" + format_mask(s | bit(j)));
      }
    }
  }
  Cube c(m, std::move(nodes), std::move(table));

  for (Mask s = 0; s <= c.full(); ++s) {
    for (unsigned j = 0; j < m; ++j) {
      for (unsigned k = j + 1; k < m; ++k) {
        if (s & (bit(j) | bit(k))) continue;
        auto a = c.arrow(s | bit(j), k).map().compose(c.arrow(s, j).map());
        auto b = c.arrow(s | bit(k), j).map().compose(c.arrow(s, k).map());
        if (!(a == b)) {
          throw PreconditionError("cube does not commute on the square from " + format_mask(s) + " to " +
                                  format_mask(s | bit(j) | bit(k)));
        }
      }
    }
  }
  return c;
}

Cube Cube::from_morphism(const AlgebraMorphism& f) {
  std::vector<AlgebraPtr> nodes{f.source(), f.target()};
  std::vector<ArrowData> arrows{{0, 0, f.map()}};
  return make(1, std::move(nodes), arrows);
}

const AlgebraMorphism& Cube::arrow(Mask from, unsigned j) const {
  if (j >= m_ || from > full() || (from & bit(j))) throw DimensionError("no such arrow in the cube");
  return *arrows_[from * m_ + j];
}

AlgebraMorphism Cube::composite(Mask from, Mask to) const {
  if ((from & ~to) || to > full()) throw DimensionError("composite needs from ⊆ to");
  auto result = AlgebraMorphism::identity(node(from));
  Mask cur = from;
  for (unsigned j = 0; j < m_; ++j) {
    if (!(to & bit(j)) || (from & bit(j))) continue;
    result = arrow(cur, j).compose(result);
    cur |= bit(j);
  }
  return result;
}

Cube cube_from_ideals(const AlgebraPtr& a, std::span<const Ideal> ideals) {
  const unsigned m = static_cast<unsigned>(ideals.size());
  if (m == 0 || m > kMaxM) throw DimensionError("cube_from_ideals needs between 1 and 10 ideals");
  for (const auto& i : ideals) {
    if (i.parent() != a && !i.parent()->same_structure(*a)) {
      throw PreconditionError("ideal does not belong to " + a->name());
    }
  }
  const std::size_t count = std::size_t{1} << m;
  std::vector<AlgebraPtr> nodes(count);
  std::vector<exactla::LinearMap> sections(count), projections(count);
  for (Mask s = 0; s < count; ++s) {
    if (s == 0) {
      nodes[0] = a;
      sections[0] = projections[0] = exactla::LinearMap::identity(a->field(), a->dim());
      continue;
    }
    Subspace sum = Subspace::zero(a->field(), a->dim());
    std::string label;
    for (unsigned i = 0; i < m; ++i) {
      if (!(s & bit(i))) continue;
      sum = exactla::subspace_sum(sum, ideals[i].space());
      label += std::to_string(i + 1);
    }
    auto q = nalg::quotient_algebra(a, sum, a->name() + "/I" + label);
    nodes[s] = q.algebra;
    sections[s] = q.space.section;
    projections[s] = q.space.projection;
  }
  std::vector<Cube::ArrowData> arrows;
  for (Mask s = 0; s < count; ++s) {
    for (unsigned j = 0; j < m; ++j) {
      if (s & bit(j)) continue;
      arrows.push_back({s, j, projections[s | bit(j)].compose(sections[s])});
    }
  }
  return Cube::make(m, std::move(nodes), arrows);
}

ExtensionReport is_extension(const Cube& c) {
  const Field& field = c.node(0)->field();
  for (Mask i = 0; i < c.full(); ++i) {
    std::vector<Mask> above;
    std::vector<std::size_t> offset(c.full() + 1, 0);
    std::size_t total = 0;
    for (Mask j = 0; j <= c.full(); ++j) {
      if (j == i || (i & ~j)) continue;
      above.push_back(j);
      offset[j] = total;
      total += c.node(j)->dim();
    }

    // lim_{J⊋I} f_J inside the product: x_{J∪k} = f x_J on covering arrows
    std::vector<Vector> rows;
    for (Mask j : above) {
      for (unsigned k = 0; k < c.m(); ++k) {
        if (j & bit(k)) continue;
        const auto& map = c.arrow(j, k).map();
        const Mask to = j | bit(k);
        for (std::size_t r = 0; r < map.rows(); ++r) {
          Vector row = exactla::zero_vector(field, total);
          for (std::size_t col = 0; col < map.cols(); ++col) row[offset[j] + col] = map(r, col);
          row[offset[to] + r] -= field.one();
          rows.push_back(std::move(row));
        }
      }
    }
    exactla::LinearMap constraints(field, rows.size(), total);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t col = 0; col < total; ++col) constraints.at(r, col) = rows[r][col];
    }
    const std::size_t limit_dim = exactla::kernel_image(constraints).kernel.rank();

    exactla::LinearMap comparison(field, total, c.node(i)->dim());
    for (Mask j : above) {
      auto map = c.composite(i, j).map();
      for (std::size_t r = 0; r < map.rows(); ++r) {
        for (std::size_t col = 0; col < map.cols(); ++col) comparison.at(offset[j] + r, col) = map(r, col);
      }
    }
    if (comparison.rank() != limit_dim) return {false, i};
  }
  return {};
}

}  // namespace nlie::ext
