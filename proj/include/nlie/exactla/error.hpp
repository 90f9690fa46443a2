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

#include <stdexcept>
#include <string>

namespace nlie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors, maps or subspaces whose sizes do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between scalars of different fields, or an unsupported field.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// A semantic precondition failed: not an ideal, not a morphism, not
/// perfect, not an extension, wrong algebra class for the chosen structure.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlie
