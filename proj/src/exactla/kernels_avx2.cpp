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

#include <immintrin.h>

#include "nlie/exactla/kernels.hpp"

namespace nlie::exactla::kernels::avx2 {
namespace {

// Barrett reduction of eight unsigned 32-bit lanes x < 2^32 by p < 2^16,
// with magic = floor(2^32 / p). The quotient estimate is low by at most one,
// so a single conditional subtraction finishes the job.
inline __m256i reduce(__m256i x, __m256i magic, __m256i pv) {
  __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x, magic), 32);
  __m256i q_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), magic);
  __m256i q = _mm256_blend_epi32(q_even, q_odd, 0xAA);
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
  // r in [0, 2p): min(r, r - p) as unsigned picks the reduced value.
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

}  // namespace

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t coef,
              std::uint32_t p) {
  if (p >= (1u << 16)) {
    scalar::axpy_mod(dst, src, n, coef, p);
    return;
  }
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(coef));
  const __m256i magic = _mm256_set1_epi32(static_cast<int>((std::uint64_t{1} << 32) / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(s, cv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce(x, magic, pv));
  }
  scalar::axpy_mod(dst + i, src + i, n - i, coef, p);
}

void scale_mod(std::uint32_t* v, std::size_t n, std::uint32_t coef, std::uint32_t p) {
  if (p >= (1u << 16)) {
    scalar::scale_mod(v, n, coef, p);
    return;
  }
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(coef));
  const __m256i magic = _mm256_set1_epi32(static_cast<int>((std::uint64_t{1} << 32) / p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_mullo_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)), cv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), reduce(x, magic, pv));
  }
  scalar::scale_mod(v + i, n - i, coef, p);
}

}  // namespace nlie::exactla::kernels::avx2
