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

#include "simd_internal.hpp"

#if defined(CESARO_COMPILE_AVX2)

#include <immintrin.h>

// AVX2 kernels. std::complex<double> is laid out [re, im], so one __m256d
// carries two complex values. Reductions keep four real lanes per accumulator
// and run the same blocked pairwise tree as the scalar reference; the final
// horizontal combine is the only ordering difference, so the two backends
// agree to a few ulps per element.

namespace cesaro::simd::avx2 {
namespace {

constexpr std::size_t kLeaf = 128;

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// negate lanes 0 and 2
inline __m256d signflip_even(__m256d v) {
  const __m256d mask = _mm256_set_pd(0.0, -0.0, 0.0, -0.0);
  return _mm256_xor_pd(v, mask);
}

// negate lanes 1 and 3
inline __m256d signflip_odd(__m256d v) {
  const __m256d mask = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
  return _mm256_xor_pd(v, mask);
}

template <typename T, typename Leaf>
T pairwise(std::size_t n, Leaf leaf) {
  struct Rec {
    Leaf& f;
    T run(std::size_t off, std::size_t len) {
      if (len <= kLeaf) return f(off, len);
      std::size_t half = (len / 2 + kLeaf - 1) / kLeaf * kLeaf;
      if (half >= len) half = len / 2;
      return run(off, half) + run(off + half, len - half);
    }
  } rec{leaf};
  return rec.run(0, n);
}

double sum_(const double* x, std::size_t n) {
  return pairwise<double>(n, [&](std::size_t off, std::size_t len) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = off, end = off + len;
    for (; i + 4 <= end; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < end; ++i) s += x[i];
    return s;
  });
}

double dot_(const double* a, const double* b, std::size_t n) {
  return pairwise<double>(n, [&](std::size_t off, std::size_t len) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = off, end = off + len;
    for (; i + 4 <= end; i += 4)
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < end; ++i) s += a[i] * b[i];
    return s;
  });
}

cplx cdot_(const cplx* a, const cplx* b, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  return pairwise<cplx>(n, [&](std::size_t off, std::size_t len) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = off, end = off + len;
    for (; i + 2 <= end; i += 2) {
      __m256d f = _mm256_loadu_pd(ap + 2 * i);
      __m256d g = _mm256_loadu_pd(bp + 2 * i);
      // re lanes: fr*gr, fi*gi -> sum gives fr*gr + fi*gi
      acc_re = _mm256_fmadd_pd(f, g, acc_re);
      // im lanes: [-fr*gi, +fi*gr]
      __m256d gs = _mm256_permute_pd(g, 0x5);
      acc_im = _mm256_add_pd(acc_im, signflip_even(_mm256_mul_pd(f, gs)));
    }
    double re = hsum(acc_re), im = hsum(acc_im);
    for (; i < end; ++i) {
      re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
      im += a[i].imag() * b[i].real() - a[i].real() * b[i].imag();
    }
    return cplx(re, im);
  });
}

cplx cdotu_(const cplx* a, const cplx* b, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  return pairwise<cplx>(n, [&](std::size_t off, std::size_t len) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = off, end = off + len;
    for (; i + 2 <= end; i += 2) {
      __m256d f = _mm256_loadu_pd(ap + 2 * i);
      __m256d g = _mm256_loadu_pd(bp + 2 * i);
      // re lanes: [fr*gr, -fi*gi]; im lanes from gs = [gi, gr]: [fr*gi, fi*gr]
      acc_re = _mm256_add_pd(acc_re, signflip_odd(_mm256_mul_pd(f, g)));
      acc_im = _mm256_fmadd_pd(f, _mm256_permute_pd(g, 0x5), acc_im);
    }
    double re = hsum(acc_re), im = hsum(acc_im);
    for (; i < end; ++i) {
      re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
      im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return cplx(re, im);
  });
}

cplx wdot_(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  return pairwise<cplx>(n, [&](std::size_t off, std::size_t len) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = off, end = off + len;
    for (; i + 2 <= end; i += 2) {
      __m128d wp = _mm_loadu_pd(w + i);
      __m256d wv = _mm256_permute4x64_pd(_mm256_castpd128_pd256(wp), 0x50);
      __m256d f = _mm256_mul_pd(_mm256_loadu_pd(ap + 2 * i), wv);
      __m256d g = _mm256_loadu_pd(bp + 2 * i);
      acc_re = _mm256_fmadd_pd(f, g, acc_re);
      __m256d gs = _mm256_permute_pd(g, 0x5);
      acc_im = _mm256_add_pd(acc_im, signflip_even(_mm256_mul_pd(f, gs)));
    }
    double re = hsum(acc_re), im = hsum(acc_im);
    for (; i < end; ++i) {
      re += w[i] * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
      im += w[i] * (a[i].imag() * b[i].real() - a[i].real() * b[i].imag());
    }
    return cplx(re, im);
  });
}

double wnorm2_(const double* w, const cplx* a, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  return pairwise<double>(n, [&](std::size_t off, std::size_t len) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = off, end = off + len;
    for (; i + 2 <= end; i += 2) {
      __m128d wp = _mm_loadu_pd(w + i);
      __m256d wv = _mm256_permute4x64_pd(_mm256_castpd128_pd256(wp), 0x50);
      __m256d f = _mm256_loadu_pd(ap + 2 * i);
      acc = _mm256_fmadd_pd(_mm256_mul_pd(f, wv), f, acc);
    }
    double s = hsum(acc);
    for (; i < end; ++i)
      s += w[i] * (a[i].real() * a[i].real() + a[i].imag() * a[i].imag());
    return s;
  });
}

double norm2_(const cplx* a, std::size_t n) {
  return dot_(reinterpret_cast<const double*>(a),
              reinterpret_cast<const double*>(a), 2 * n);
}

void axpy_(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(xp + 2 * i);
    __m256d vs = _mm256_permute_pd(v, 0x5);
    __m256d acc = _mm256_loadu_pd(yp + 2 * i);
    // y += [xr*ar - xi*ai, xi*ar + xr*ai]
    acc = _mm256_add_pd(acc, _mm256_fmaddsub_pd(v, ar, _mm256_mul_pd(vs, ai)));
    _mm256_storeu_pd(yp + 2 * i, acc);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_(cplx alpha, cplx* x, std::size_t n) {
  double* xp = reinterpret_cast<double*>(x);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(xp + 2 * i);
    __m256d vs = _mm256_permute_pd(v, 0x5);
    _mm256_storeu_pd(xp + 2 * i, _mm256_fmaddsub_pd(v, ar, _mm256_mul_pd(vs, ai)));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void hadamard_(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  const double* ap = reinterpret_cast<const double*>(a);
  const double* bp = reinterpret_cast<const double*>(b);
  double* op = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(ap + 2 * i);
    __m256d vb = _mm256_loadu_pd(bp + 2 * i);
    __m256d br = _mm256_movedup_pd(vb);
    __m256d bi = _mm256_permute_pd(vb, 0xF);
    __m256d as = _mm256_permute_pd(va, 0x5);
    _mm256_storeu_pd(op + 2 * i, _mm256_fmaddsub_pd(va, br, _mm256_mul_pd(as, bi)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void matvec_(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
             std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = cdotu_(a + i * cols, x, cols);
}

void matvec_herm_(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
                  std::size_t cols) {
  double* yp = reinterpret_cast<double*>(y);
  for (std::size_t j = 0; j < cols; ++j) y[j] = cplx(0, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const double* row = reinterpret_cast<const double*>(a + i * cols);
    // y_j += conj(row_j) * x_i:
    //   re += rr*xr + ri*xi ; im += rr*xi - ri*xr
    // term1 = row * [xr, -xr] -> [rr*xr, -ri*xr]
    // term2 = swap(row) * xi  -> [ri*xi,  rr*xi]
    const __m256d xr_s = _mm256_set_pd(-x[i].real(), x[i].real(),
                                       -x[i].real(), x[i].real());
    const __m256d xi = _mm256_set1_pd(x[i].imag());
    std::size_t j = 0;
    for (; j + 2 <= cols; j += 2) {
      __m256d r = _mm256_loadu_pd(row + 2 * j);
      __m256d rs = _mm256_permute_pd(r, 0x5);
      __m256d acc = _mm256_loadu_pd(yp + 2 * j);
      acc = _mm256_fmadd_pd(r, xr_s, acc);
      acc = _mm256_fmadd_pd(rs, xi, acc);
      _mm256_storeu_pd(yp + 2 * j, acc);
    }
    for (; j < cols; ++j) {
      const cplx rv = a[i * cols + j];
      y[j] += cplx(rv.real() * x[i].real() + rv.imag() * x[i].imag(),
                   rv.real() * x[i].imag() - rv.imag() * x[i].real());
    }
  }
}

}  // namespace

const KernelTable kTable = {sum_,    dot_,  cdot_,    cdotu_,    wdot_,
                            wnorm2_, norm2_, axpy_,   scal_,     hadamard_,
                            matvec_, matvec_herm_};

}  // namespace cesaro::simd::avx2

#endif  // CESARO_COMPILE_AVX2
