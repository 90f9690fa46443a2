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

#include <atomic>

#include "nlie/exactla/error.hpp"

namespace nlie::exactla::kernels {
namespace {

Isa detect() {
#if defined(NLIE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = detect();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
  active().store(isa, std::memory_order_relaxed);
}

void reset_isa() { active().store(detected_isa(), std::memory_order_relaxed); }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t coef,
              std::uint32_t p) {
  if (dst.size() != src.size()) throw DimensionError("axpy_mod: length mismatch");
#if defined(NLIE_HAVE_AVX2)
  if (active_isa() == Isa::avx2) {
    avx2::axpy_mod(dst.data(), src.data(), dst.size(), coef, p);
    return;
  }
#endif
  scalar::axpy_mod(dst.data(), src.data(), dst.size(), coef, p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t coef, std::uint32_t p) {
#if defined(NLIE_HAVE_AVX2)
  if (active_isa() == Isa::avx2) {
    avx2::scale_mod(v.data(), v.size(), coef, p);
    return;
  }
#endif
  scalar::scale_mod(v.data(), v.size(), coef, p);
}

}  // namespace nlie::exactla::kernels
