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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ris/kernels.hpp"

namespace ris::kernels {

namespace {

bool cpu_has_avx2() {
#if RIS_KERNELS_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_backend() {
  if (const char* env = std::getenv("RIS_KERNEL")) {
    const std::string_view v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::avx2;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect_backend()};
  return slot;
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  return backend == Backend::scalar || cpu_has_avx2();
}

Backend active_backend() { return backend_slot().load(); }

void set_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw std::invalid_argument("kernel backend " +
                                std::string(backend_name(backend)) +
                                " not available on this host");
  }
  backend_slot().store(backend);
}

PhasorSum field_sum(const FieldBatch& batch) {
#if RIS_KERNELS_HAVE_AVX2
  // The SIMD variant covers the untapered model only.
  if (batch.taper_q == 0.0 && active_backend() == Backend::avx2) {
    return field_sum_avx2(batch);
  }
#endif
  return field_sum_scalar(batch);
}

Phasor signed_phasor_sum(const double* cos_phi, const double* sin_phi,
                         const double* sign, const double* weight,
                         std::size_t n) {
#if RIS_KERNELS_HAVE_AVX2
  if (active_backend() == Backend::avx2) {
    return signed_phasor_sum_avx2(cos_phi, sin_phi, sign, weight, n);
  }
#endif
  return signed_phasor_sum_scalar(cos_phi, sin_phi, sign, weight, n);
}

}  // namespace ris::kernels
