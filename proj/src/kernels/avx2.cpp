// Copyright 2026 The risbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Four-lane AVX2/FMA variants of the hot kernels. Compiled with
// -mavx2 -mfma; callers must check availability (see dispatch.cpp).

#include <immintrin.h>

#include <cmath>

#include "ris/kernels.hpp"

namespace ris::kernels {

namespace {

// pi/2 split for Cody-Waite reduction (FDLIBM): the first term carries
// 33 significant bits so n * pio2_1 is exact for |n| < 2^20.
constexpr double pio2_1 = 1.57079632673412561417e+00;
constexpr double pio2_1t = 6.07710050650619224932e-11;
constexpr double two_over_pi = 6.36619772367581382433e-01;

// FDLIBM kernel polynomial coefficients on [-pi/4, pi/4].
constexpr double S1 = -1.66666666666666324348e-01;
constexpr double S2 = 8.33333333332248946124e-03;
constexpr double S3 = -1.98412698298579493134e-04;
constexpr double S4 = 2.75573137070700676789e-06;
constexpr double S5 = -2.50507602534068634195e-08;
constexpr double S6 = 1.58969099521155010221e-10;

constexpr double C1 = 4.16666666666666019037e-02;
constexpr double C2 = -1.38888888888741095749e-03;
constexpr double C3 = 2.48015872894767294178e-05;
constexpr double C4 = -2.75573143513906633035e-07;
constexpr double C5 = 2.08757232129817482790e-09;
constexpr double C6 = -1.13596475577881948265e-11;

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

// Simultaneous sin/cos for |x| up to ~1e6 rad. Reduction and the odd/even
// polynomial structure preserve sin(-x) == -sin(x) and cos(-x) == cos(x)
// bit-exactly, which the mirror-symmetry guarantees of the simulator rely
// on.
inline void sincos4(__m256d x, __m256d* sin_out, __m256d* cos_out) {
  const __m256d n = _mm256_round_pd(
      _mm256_mul_pd(x, splat(two_over_pi)),
      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(n, splat(pio2_1), x);
  r = _mm256_fnmadd_pd(n, splat(pio2_1t), r);

  const __m256d r2 = _mm256_mul_pd(r, r);

  __m256d sp = splat(S6);
  sp = _mm256_fmadd_pd(sp, r2, splat(S5));
  sp = _mm256_fmadd_pd(sp, r2, splat(S4));
  sp = _mm256_fmadd_pd(sp, r2, splat(S3));
  sp = _mm256_fmadd_pd(sp, r2, splat(S2));
  sp = _mm256_fmadd_pd(sp, r2, splat(S1));
  // sin(r) = r + r^3 * poly(r^2)
  const __m256d s = _mm256_fmadd_pd(_mm256_mul_pd(sp, r2), r, r);

  __m256d cp = splat(C6);
  cp = _mm256_fmadd_pd(cp, r2, splat(C5));
  cp = _mm256_fmadd_pd(cp, r2, splat(C4));
  cp = _mm256_fmadd_pd(cp, r2, splat(C3));
  cp = _mm256_fmadd_pd(cp, r2, splat(C2));
  cp = _mm256_fmadd_pd(cp, r2, splat(C1));
  // cos(r) = 1 - r^2/2 + r^4 * poly(r^2)
  const __m256d r4 = _mm256_mul_pd(r2, r2);
  __m256d c = _mm256_fmadd_pd(cp, r4, _mm256_fnmadd_pd(r2, splat(0.5), splat(1.0)));

  // Quadrant m = n mod 4, computed exactly in doubles (n is integral and
  // well inside 2^50).
  const __m256d m = _mm256_fnmadd_pd(
      _mm256_floor_pd(_mm256_mul_pd(n, splat(0.25))), splat(4.0), n);
  const __m256d m1 = _mm256_cmp_pd(m, splat(1.0), _CMP_EQ_OQ);
  const __m256d m2 = _mm256_cmp_pd(m, splat(2.0), _CMP_EQ_OQ);
  const __m256d m3 = _mm256_cmp_pd(m, splat(3.0), _CMP_EQ_OQ);
  const __m256d swap = _mm256_or_pd(m1, m3);
  const __m256d neg_sin = _mm256_or_pd(m2, m3);
  const __m256d neg_cos = _mm256_or_pd(m1, m2);

  const __m256d sign_bit = splat(-0.0);
  __m256d sv = _mm256_blendv_pd(s, c, swap);
  __m256d cv = _mm256_blendv_pd(c, s, swap);
  sv = _mm256_xor_pd(sv, _mm256_and_pd(neg_sin, sign_bit));
  cv = _mm256_xor_pd(cv, _mm256_and_pd(neg_cos, sign_bit));
  *sin_out = sv;
  *cos_out = cv;
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

PhasorSum field_sum_avx2(const FieldBatch& b) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  __m256d acc_amp = _mm256_setzero_pd();

  const __m256d tx_x = splat(b.tx_x), tx_y = splat(b.tx_y), tx_z = splat(b.tx_z);
  const __m256d rx_x = splat(b.rx_x), rx_y = splat(b.rx_y), rx_z = splat(b.rx_z);
  const __m256d neg_k = splat(-b.wavenumber);
  const __m256d amp_scale = splat(b.amp_scale);

  std::size_t i = 0;
  for (; i + 4 <= b.n; i += 4) {
    const __m256d px = _mm256_loadu_pd(b.x + i);
    const __m256d py = _mm256_loadu_pd(b.y + i);
    const __m256d pz = _mm256_loadu_pd(b.z + i);

    __m256d dx = _mm256_sub_pd(px, tx_x);
    __m256d dy = _mm256_sub_pd(py, tx_y);
    __m256d dz = _mm256_sub_pd(pz, tx_z);
    const __m256d d_t = _mm256_sqrt_pd(_mm256_fmadd_pd(
        dx, dx, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dz, dz))));

    dx = _mm256_sub_pd(px, rx_x);
    dy = _mm256_sub_pd(py, rx_y);
    dz = _mm256_sub_pd(pz, rx_z);
    const __m256d d_r = _mm256_sqrt_pd(_mm256_fmadd_pd(
        dx, dx, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dz, dz))));

    const __m256d amp =
        _mm256_div_pd(amp_scale, _mm256_mul_pd(d_t, d_r));
    const __m256d phase = _mm256_mul_pd(neg_k, _mm256_add_pd(d_t, d_r));

    __m256d s, c;
    sincos4(phase, &s, &c);

    const __m256d signed_amp =
        _mm256_mul_pd(amp, _mm256_loadu_pd(b.sign + i));
    acc_re = _mm256_fmadd_pd(signed_amp, c, acc_re);
    acc_im = _mm256_fmadd_pd(signed_amp, s, acc_im);
    acc_amp = _mm256_add_pd(acc_amp, amp);
  }

  PhasorSum out;
  out.re = hsum(acc_re);
  out.im = hsum(acc_im);
  out.amplitude_sum = hsum(acc_amp);

  for (; i < b.n; ++i) {
    const double dx_t = b.x[i] - b.tx_x;
    const double dy_t = b.y[i] - b.tx_y;
    const double dz_t = b.z[i] - b.tx_z;
    const double d_t = std::sqrt(dx_t * dx_t + dy_t * dy_t + dz_t * dz_t);
    const double dx_r = b.x[i] - b.rx_x;
    const double dy_r = b.y[i] - b.rx_y;
    const double dz_r = b.z[i] - b.rx_z;
    const double d_r = std::sqrt(dx_r * dx_r + dy_r * dy_r + dz_r * dz_r);
    const double amplitude = b.amp_scale / (d_t * d_r);
    const double phase = -b.wavenumber * (d_t + d_r);
    out.re += b.sign[i] * amplitude * std::cos(phase);
    out.im += b.sign[i] * amplitude * std::sin(phase);
    out.amplitude_sum += amplitude;
  }
  return out;
}

Phasor signed_phasor_sum_avx2(const double* cos_phi, const double* sin_phi,
                              const double* sign, const double* weight,
                              std::size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  if (weight == nullptr) {
    for (; i + 4 <= n; i += 4) {
      const __m256d sg = _mm256_loadu_pd(sign + i);
      acc_re = _mm256_fmadd_pd(sg, _mm256_loadu_pd(cos_phi + i), acc_re);
      acc_im = _mm256_fmadd_pd(sg, _mm256_loadu_pd(sin_phi + i), acc_im);
    }
  } else {
    for (; i + 4 <= n; i += 4) {
      const __m256d sw = _mm256_mul_pd(_mm256_loadu_pd(sign + i),
                                       _mm256_loadu_pd(weight + i));
      acc_re = _mm256_fmadd_pd(sw, _mm256_loadu_pd(cos_phi + i), acc_re);
      acc_im = _mm256_fmadd_pd(sw, _mm256_loadu_pd(sin_phi + i), acc_im);
    }
  }
  Phasor out{hsum(acc_re), hsum(acc_im)};
  for (; i < n; ++i) {
    const double sw = weight == nullptr ? sign[i] : sign[i] * weight[i];
    out.re += sw * cos_phi[i];
    out.im += sw * sin_phi[i];
  }
  return out;
}

}  // namespace ris::kernels
