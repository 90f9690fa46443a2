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

#include "nlie/exactla/kernels.hpp"

namespace nlie::exactla::kernels::scalar {

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t coef,
              std::uint32_t p) {
  const std::uint64_t c = coef;
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + c * src[i]) % p);
  }
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t coef, std::uint32_t p) {
  const std::uint64_t c = coef;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<std::uint32_t>(c * v[i] % p);
  }
}

}  // namespace nlie::exactla::kernels::scalar
