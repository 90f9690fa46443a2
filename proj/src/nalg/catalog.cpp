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

#include "nlie/nalg/catalog.hpp"

#include <array>

namespace nlie::nalg::catalog {
namespace {

void put(NaryAlgebra& a, std::initializer_list<std::uint32_t> args, std::uint32_t index, long value) {
  Tuple t(args);
  a.add_to_bracket(t, index, a.field().from_int(value));
}

}  // namespace

AlgebraPtr heisenberg3(const Field& field) {
  NaryAlgebra a("h3", 2, 3, field);
  put(a, {0, 1}, 2, 1);
  put(a, {1, 0}, 2, -1);
  return share(std::move(a));
}

AlgebraPtr sl2(const Field& field) {
  NaryAlgebra a("sl2", 2, 3, field, {"e", "f", "h"});
  put(a, {0, 1}, 2, 1);
  put(a, {1, 0}, 2, -1);
  put(a, {2, 0}, 0, 2);
  put(a, {0, 2}, 0, -2);
  put(a, {2, 1}, 1, -2);
  put(a, {1, 2}, 1, 2);
  return share(std::move(a));
}

AlgebraPtr lz2(const Field& field) {
  NaryAlgebra a("Lz2", 2, 2, field, {"x", "y"});
  put(a, {0, 0}, 1, 1);
  return share(std::move(a));
}

AlgebraPtr idempotent_line(const Field& field) {
  NaryAlgebra a("idempotent_line", 2, 1, field, {"x"});
  put(a, {0, 0}, 0, 1);
  return share(std::move(a));
}

AlgebraPtr v4(const Field& field) {
  NaryAlgebra a("V4", 3, 4, field);
  for_each_tuple(4, 4, [&](const Tuple& t) {
    std::array<bool, 4> seen{};
    for (auto x : t) {
      if (seen[x]) return true;
      seen[x] = true;
    }
    int sign = 1;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (t[i] > t[j]) sign = -sign;
      }
    }
    put(a, {t[0], t[1], t[2]}, t[3], sign);
    return true;
  });
  return share(std::move(a));
}

AlgebraPtr takiff_sl2(const Field& field) {
  auto base = sl2(field);
  NaryAlgebra a("takiff_sl2", 2, 6, field, {"e", "f", "h", "E", "F", "H"});
  for (const auto& [t, value] : base->entries()) {
    for (const auto& term : value) {
      a.add_to_bracket(t, term.index, term.value);
      a.add_to_bracket(Tuple{t[0], t[1] + 3}, term.index + 3, term.value);
      a.add_to_bracket(Tuple{t[0] + 3, t[1]}, term.index + 3, term.value);
    }
  }
  return share(std::move(a));
}

}  // namespace nlie::nalg::catalog
