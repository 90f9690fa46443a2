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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Row kernels for elimination over F_p on packed residues.
//
// Every routine has a portable scalar reference implementation; an AVX2
// variant is compiled when the toolchain targets x86-64 and is selected at
// runtime when the CPU reports AVX2. Both must produce bit-identical rows.

namespace nlie::exactla::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set available on this machine and build.
Isa detected_isa();
/// Instruction set the dispatching entry points currently use.
Isa active_isa();
/// Forces the dispatch target; requesting an unavailable ISA falls back to
/// scalar. Intended for equivalence tests and benchmarks.
void force_isa(Isa isa);
/// Restores detection-based dispatch.
void reset_isa();

/// dst[i] = (dst[i] + coef * src[i]) mod p, all values in [0, p).
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t coef,
              std::uint32_t p);
/// v[i] = coef * v[i] mod p.
void scale_mod(std::span<std::uint32_t> v, std::uint32_t coef, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t coef,
              std::uint32_t p);
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t coef, std::uint32_t p);
}  // namespace scalar

#if defined(NLIE_HAVE_AVX2)
namespace avx2 {
// Vector path requires p < 2^16 so that dst + coef * src fits in 32 bits;
// larger moduli are delegated to the scalar kernel.
void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t coef,
              std::uint32_t p);
void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t coef, std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace nlie::exactla::kernels
