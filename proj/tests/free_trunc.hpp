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

#include <map>
#include <vector>

#include "nlie/nalg/operations.hpp"

namespace nlie::testing {

/// Degree <= 3 truncation of the free (right) Leibniz algebra on d
/// generators: basis = words of length 1..3, [a, v] = av for a letter v,
/// [a, bv] = [a, b]v - [av, b], and zero once the degrees add past 3.
struct FreeTruncated {
  nalg::AlgebraPtr algebra;
  exactla::Subspace degree_two_up;  // kernel of the map onto V
};

inline FreeTruncated free_leibniz_truncated(std::size_t d, std::size_t max_degree = 3) {
  using Word = std::vector<std::uint32_t>;
  using Combination = std::map<Word, long>;
  std::vector<Word> words;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    nalg::for_each_tuple(k, d, [&](const nalg::Tuple& t) {
      words.emplace_back(t.begin(), t.end());
      return true;
    });
  }
  std::map<Word, std::uint32_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<std::uint32_t>(i);

  auto bracket = [&](auto&& self, const Word& a, const Word& b) -> Combination {
    Combination out;
    if (a.size() + b.size() > max_degree) return out;
    Word av = a;
    av.push_back(b.back());
    if (b.size() == 1) {
      out[av] = 1;
      return out;
    }
    Word head(b.begin(), b.end() - 1);
    for (const auto& [w, c] : self(self, a, head)) {
      Word wv = w;
      wv.push_back(b.back());
      out[wv] += c;
    }
    for (const auto& [w, c] : self(self, av, head)) out[w] -= c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  };

  const auto q = exactla::Field::rationals();
  nalg::NaryAlgebra f("free_leibniz_truncated", 2, words.size(), q);
  for (const auto& a : words) {
    for (const auto& b : words) {
      for (const auto& [w, c] : bracket(bracket, a, b)) {
        f.add_to_bracket(nalg::Tuple{index[a], index[b]}, index[w], q.from_int(c));
      }
    }
  }
  std::vector<exactla::Vector> gens;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() >= 2) gens.push_back(exactla::unit_vector(q, words.size(), i));
  }
  return {nalg::share(std::move(f)), exactla::Subspace::span(q, words.size(), gens)};
}

}  // namespace nlie::testing
