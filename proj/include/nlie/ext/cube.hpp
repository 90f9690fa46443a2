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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nlie/nalg/operations.hpp"

namespace nlie::ext {

using nalg::AlgebraMorphism;
using nalg::AlgebraPtr;
using nalg::Ideal;
using exactla::Field;
using exactla::Subspace;
using exactla::Vector;

/// Subset of {1..m}; element i is bit i-1.
using Mask = std::uint32_t;

/// m-fold arrow: an algebra at every subset of {1..m} and a morphism
/// along every covering inclusion I ⊂ I ∪ {j}.
class Cube {
 public:
  /// Arrow from node `from` adding element `j` (0-based bit index).
  struct ArrowData {
    Mask from;
    unsigned j;
    exactla::LinearMap map;
  };

  /// Validates node count, arity and field agreement, every arrow as a
  /// morphism, and commutativity of every square. Throws
  /// PreconditionError / DimensionError.
  static Cube make(unsigned m, std::vector<AlgebraPtr> nodes, std::span<const ArrowData> arrows);
  /// The 1-cube given by a single morphism.
  static Cube from_morphism(const AlgebraMorphism& f);

  unsigned m() const { return m_; }
  Mask full() const { return (Mask{1} << m_) - 1; }
  const AlgebraPtr& node(Mask s) const { return nodes_.at(s); }
  /// Covering arrow node(from) -> node(from | 1<<j).
  const AlgebraMorphism& arrow(Mask from, unsigned j) const;
  /// f^I_J for I ⊆ J, composed along increasing elements.
  AlgebraMorphism composite(Mask from, Mask to) const;
  /// f_i : f_∅ -> f_{i}, with i a 0-based element.
  const AlgebraMorphism& f(unsigned i) const { return arrow(0, i); }
  unsigned arity() const { return nodes_.front()->arity(); }

 private:
  Cube(unsigned m, std::vector<AlgebraPtr> nodes, std::vector<std::optional<AlgebraMorphism>> arrows)
      : m_(m), nodes_(std::move(nodes)), arrows_(std::move(arrows)) {}

  unsigned m_;
  std::vector<AlgebraPtr> nodes_;
  std::vector<std::optional<AlgebraMorphism>> arrows_;  // index from * m + j
};

/// Cube with node S = A / Σ_{i∈S} I_i and the induced projections.
Cube cube_from_ideals(const AlgebraPtr& a, std::span<const Ideal> ideals);

struct ExtensionReport {
  bool ok = true;
  std::optional<Mask> failing;
};

/// For every I ⊊ {1..m}, whether f_I -> lim_{J⊋I} f_J is surjective.
ExtensionReport is_extension(const Cube& c);

/// "{1,2}" style rendering of a subset, "{}" for the empty set.
std::string format_mask(Mask s);

}  // namespace nlie::ext
