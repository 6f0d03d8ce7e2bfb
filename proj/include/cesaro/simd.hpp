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

#pragma once

#include <cstddef>

#include "cesaro/core.hpp"

// Data-parallel inner loops behind the whole lab: weighted reductions for
// quadrature, complex dot products and matvecs for the discretized operators,
// pointwise products for the multiplier representation.
//
// Every kernel has a scalar reference implementation and (on x86-64) an AVX2
// variant. The backend is picked once at startup from CPUID, can be pinned
// with the CESARO_LAB_SIMD environment variable (scalar|avx2|auto) or
// set_backend(), and the two variants are equivalence-tested against each
// other. Results are deterministic for a fixed backend: reductions use a
// fixed blocked pairwise order.

namespace cesaro::simd {

enum class Backend { Scalar, Avx2 };

Backend active_backend();
const char* backend_name(Backend b);
const char* active_backend_name();
bool backend_available(Backend b);

/// Returns false (and leaves the dispatch table untouched) if the requested
/// backend is not available on this machine.
bool set_backend(Backend b);

/// CPUID detection with CESARO_LAB_SIMD override.
void set_backend_auto();

// -- reductions ------------------------------------------------------------

double sum(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);

/// sum_i a_i * conj(b_i)
cplx cdot(const cplx* a, const cplx* b, std::size_t n);

/// sum_i a_i * b_i (no conjugation; matvec rows)
cplx cdotu(const cplx* a, const cplx* b, std::size_t n);

/// sum_i w_i * a_i * conj(b_i) (quadrature inner product)
cplx wdot(const double* w, const cplx* a, const cplx* b, std::size_t n);

/// sum_i w_i * |a_i|^2
double wnorm2(const double* w, const cplx* a, std::size_t n);

/// sum_i |a_i|^2
double norm2(const cplx* a, std::size_t n);

// -- maps ------------------------------------------------------------------

/// y_i += alpha * x_i
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

/// x_i *= alpha
void scal(cplx alpha, cplx* x, std::size_t n);

/// out_i = a_i * b_i
void hadamard(const cplx* a, const cplx* b, cplx* out, std::size_t n);

// -- dense matrix action (row-major) ----------------------------------------

/// y = A x
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
            std::size_t cols);

/// y = A^H x (conjugate transpose action, accumulated row by row)
void matvec_herm(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
                 std::size_t cols);

}  // namespace cesaro::simd
