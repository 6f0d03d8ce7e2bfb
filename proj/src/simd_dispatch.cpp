// Copyright 2026 the cesaro-lab authors
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

#include "cesaro/simd.hpp"

#include <cstdlib>
#include <cstring>

#include "simd_internal.hpp"

namespace cesaro::simd {
namespace {

Backend g_backend = Backend::Scalar;
const KernelTable* g_table = &scalar::kTable;
bool g_initialized = false;

bool cpu_has_avx2() {
#if defined(CESARO_COMPILE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

void ensure_init() {
  if (!g_initialized) set_backend_auto();
}

}  // namespace

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

bool set_backend(Backend b) {
  if (!backend_available(b)) return false;
  g_backend = b;
#if defined(CESARO_COMPILE_AVX2)
  g_table = (b == Backend::Avx2) ? &avx2::kTable : &scalar::kTable;
#else
  g_table = &scalar::kTable;
#endif
  g_initialized = true;
  return true;
}

void set_backend_auto() {
  Backend pick = cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
  if (const char* env = std::getenv("CESARO_LAB_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) pick = Backend::Scalar;
    else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) pick = Backend::Avx2;
  }
  set_backend(pick);
}

Backend active_backend() {
  ensure_init();
  return g_backend;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "?";
}

const char* active_backend_name() { return backend_name(active_backend()); }

double sum(const double* x, std::size_t n) {
  ensure_init();
  return g_table->sum(x, n);
}
double dot(const double* a, const double* b, std::size_t n) {
  ensure_init();
  return g_table->dot(a, b, n);
}
cplx cdot(const cplx* a, const cplx* b, std::size_t n) {
  ensure_init();
  return g_table->cdot(a, b, n);
}
cplx cdotu(const cplx* a, const cplx* b, std::size_t n) {
  ensure_init();
  return g_table->cdotu(a, b, n);
}
cplx wdot(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  ensure_init();
  return g_table->wdot(w, a, b, n);
}
double wnorm2(const double* w, const cplx* a, std::size_t n) {
  ensure_init();
  return g_table->wnorm2(w, a, n);
}
double norm2(const cplx* a, std::size_t n) {
  ensure_init();
  return g_table->norm2(a, n);
}
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  ensure_init();
  g_table->axpy(alpha, x, y, n);
}
void scal(cplx alpha, cplx* x, std::size_t n) {
  ensure_init();
  g_table->scal(alpha, x, n);
}
void hadamard(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  ensure_init();
  g_table->hadamard(a, b, out, n);
}
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
            std::size_t cols) {
  ensure_init();
  g_table->matvec(a, x, y, rows, cols);
}
void matvec_herm(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
                 std::size_t cols) {
  ensure_init();
  g_table->matvec_herm(a, x, y, rows, cols);
}

}  // namespace cesaro::simd
