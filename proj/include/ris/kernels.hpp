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

#pragma once

#include <cstddef>
#include <string_view>

#if defined(__x86_64__) || defined(_M_X64)
#define RIS_KERNELS_HAVE_AVX2 1
#else
#define RIS_KERNELS_HAVE_AVX2 0
#endif

namespace ris::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend backend);
bool backend_available(Backend backend);

/// Backend used by the dispatching entry points. Defaults to the widest
/// available instruction set; the RIS_KERNEL environment variable
/// ("scalar" or "avx2") overrides the default at startup.
Backend active_backend();
void set_backend(Backend backend);  // throws if unavailable on this host

/// One batch of the coherent field summation. All arrays have length n;
/// sign[i] is +1.0 or -1.0 (the 1-bit phase state of element i).
///
/// Per element: d_t = |p_i - tx|, d_r = |p_i - rx|,
///   amplitude = taper * amp_scale / (d_t * d_r),
///   phase     = -wavenumber * (d_t + d_r),
/// accumulating sign * amplitude * exp(j*phase). The taper is
/// max(cos_in, 0)^q * max(cos_out, 0)^q against the plate normal; q = 0
/// (the default) means no taper and is the only case the SIMD variant
/// implements.
struct FieldBatch {
  const double* x = nullptr;
  const double* y = nullptr;
  const double* z = nullptr;
  const double* sign = nullptr;
  std::size_t n = 0;
  double tx_x = 0, tx_y = 0, tx_z = 0;
  double rx_x = 0, rx_y = 0, rx_z = 0;
  double wavenumber = 0;
  double amp_scale = 1.0;
  double taper_q = 0.0;
  double normal_x = 0, normal_y = 0, normal_z = 0;
};

struct PhasorSum {
  double re = 0.0;
  double im = 0.0;
  double amplitude_sum = 0.0;  // sum of |amplitude|, for bound checks
};

PhasorSum field_sum_scalar(const FieldBatch& batch);
#if RIS_KERNELS_HAVE_AVX2
PhasorSum field_sum_avx2(const FieldBatch& batch);  // requires taper_q == 0
#endif

/// Dispatching entry point. Batches with taper_q != 0 always take the
/// scalar reference path.
PhasorSum field_sum(const FieldBatch& batch);

/// sum_i sign[i] * w[i] * (cos_phi[i] + j*sin_phi[i]); weight may be null
/// for unit weights. Used by the codebook scan.
struct Phasor {
  double re = 0.0;
  double im = 0.0;
};

Phasor signed_phasor_sum_scalar(const double* cos_phi, const double* sin_phi,
                                const double* sign, const double* weight,
                                std::size_t n);
#if RIS_KERNELS_HAVE_AVX2
Phasor signed_phasor_sum_avx2(const double* cos_phi, const double* sin_phi,
                              const double* sign, const double* weight,
                              std::size_t n);
#endif
Phasor signed_phasor_sum(const double* cos_phi, const double* sin_phi,
                         const double* sign, const double* weight,
                         std::size_t n);

}  // namespace ris::kernels
