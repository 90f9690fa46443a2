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

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "nlie/exactla/error.hpp"
#include "nlie/ext/cube.hpp"

/// JSON file formats for algebras, morphisms and cubes.
///
/// Malformed input raises ParseError with a "<file>: <field>: ..." or
/// "<file>:<line>:<col>: ..." prefix. Documents that parse but describe
/// something invalid (a matrix that is not a morphism, a subspace that is
/// not an ideal) raise the library's PreconditionError instead.
namespace nlie::cli {

using json = nlohmann::json;
using exactla::Field;
using exactla::LinearMap;
using exactla::Vector;

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reads and parses a JSON document; I/O and syntax errors become
/// ParseError with the file name and line.
json read_json(const std::filesystem::path& path);

/// Sorted keys, two-space indentation for anything that does not fit
/// in 80 columns, trailing newline.
std::string dump(const json& doc);

/// `where` names the document in diagnostics. With `field` set, the
/// scalars are read in that field instead of the one the file declares.
nalg::AlgebraPtr algebra_from_json(const json& doc, const std::string& where,
                                   const std::optional<Field>& field = std::nullopt);
nalg::AlgebraPtr load_algebra(const std::filesystem::path& path, const std::optional<Field>& field = std::nullopt);
/// Canonical form: sorted bracket args, lowest-terms scalars, zero
/// entries dropped.
json algebra_to_json(const nalg::NaryAlgebra& a);

/// Rows of scalar strings.
LinearMap matrix_from_json(const json& doc, const Field& field, std::size_t rows, std::size_t cols,
                           const std::string& where);
json matrix_to_json(const LinearMap& m);
json vector_to_json(const Vector& v);

/// {"source": path, "target": path, "matrix": rows}; paths are relative
/// to the morphism file.
nalg::AlgebraMorphism load_morphism(const std::filesystem::path& path,
                                    const std::optional<Field>& field = std::nullopt);

/// Cube file in "ideals" or "explicit" mode.
ext::Cube load_cube(const std::filesystem::path& path, const std::optional<Field>& field = std::nullopt);

/// Parses "", "1", "13", ... into a subset of {1..m}; digits must be
/// strictly increasing.
std::optional<ext::Mask> parse_subset(std::string_view s, unsigned m);
/// Inverse of parse_subset.
std::string subset_key(ext::Mask s);

/// Same document with every scalar, subset key and bracket list in
/// canonical form; the kind (algebra, morphism, cube) is detected from the
/// keys. Referenced files are not followed.
json normalize(const json& doc, const std::string& where);

}  // namespace nlie::cli
