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

namespace cesaro::simd {

struct KernelTable {
  double (*sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  cplx (*cdot)(const cplx*, const cplx*, std::size_t);
  cplx (*cdotu)(const cplx*, const cplx*, std::size_t);
  cplx (*wdot)(const double*, const cplx*, const cplx*, std::size_t);
  double (*wnorm2)(const double*, const cplx*, std::size_t);
  double (*norm2)(const cplx*, std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*scal)(cplx, cplx*, std::size_t);
  void (*hadamard)(const cplx*, const cplx*, cplx*, std::size_t);
  void (*matvec)(const cplx*, const cplx*, cplx*, std::size_t, std::size_t);
  void (*matvec_herm)(const cplx*, const cplx*, cplx*, std::size_t,
                      std::size_t);
};

namespace scalar {
extern const KernelTable kTable;
}

#if defined(CESARO_COMPILE_AVX2)
namespace avx2 {
extern const KernelTable kTable;
}
#endif

}  // namespace cesaro::simd
