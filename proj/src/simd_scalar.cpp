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

// Reference kernels. Reductions run blocked pairwise: leaves of <= 128
// elements are summed into four interleaved accumulators, then blocks are
// combined left to right along a fixed binary tree. The order never depends
// on the data, so runs are reproducible, and the tree keeps rounding error
// at O(log n) instead of O(n).

namespace cesaro::simd::scalar {
namespace {

constexpr std::size_t kLeaf = 128;

template <typename T, typename Leaf>
T pairwise(std::size_t n, Leaf leaf) {
  if (n <= kLeaf) return leaf(0, n);
  // recurse on halves, left half rounded down to a multiple of the leaf size
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
    double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
    std::size_t i = off, end = off + len;
    for (; i + 4 <= end; i += 4) {
      a0 += x[i];
      a1 += x[i + 1];
      a2 += x[i + 2];
      a3 += x[i + 3];
    }
    for (; i < end; ++i) a0 += x[i];
    return (a0 + a1) + (a2 + a3);
  });
}

double dot_(const double* a, const double* b, std::size_t n) {
  return pairwise<double>(n, [&](std::size_t off, std::size_t len) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    std::size_t i = off, end = off + len;
    for (; i + 4 <= end; i += 4) {
      s0 += a[i] * b[i];
      s1 += a[i + 1] * b[i + 1];
      s2 += a[i + 2] * b[i + 2];
      s3 += a[i + 3] * b[i + 3];
    }
    for (; i < end; ++i) s0 += a[i] * b[i];
    return (s0 + s1) + (s2 + s3);
  });
}

cplx cdot_(const cplx* a, const cplx* b, std::size_t n) {
  return pairwise<cplx>(n, [&](std::size_t off, std::size_t len) {
    double re0 = 0, re1 = 0, im0 = 0, im1 = 0;
    std::size_t i = off, end = off + len;
    for (; i + 2 <= end; i += 2) {
      re0 += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
      im0 += a[i].imag() * b[i].real() - a[i].real() * b[i].imag();
      re1 += a[i + 1].real() * b[i + 1].real() + a[i + 1].imag() * b[i + 1].imag();
      im1 += a[i + 1].imag() * b[i + 1].real() - a[i + 1].real() * b[i + 1].imag();
    }
    for (; i < end; ++i) {
      re0 += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
      im0 += a[i].imag() * b[i].real() - a[i].real() * b[i].imag();
    }
    return cplx(re0 + re1, im0 + im1);
  });
}

cplx cdotu_(const cplx* a, const cplx* b, std::size_t n) {
  return pairwise<cplx>(n, [&](std::size_t off, std::size_t len) {
    double re0 = 0, re1 = 0, im0 = 0, im1 = 0;
    std::size_t i = off, end = off + len;
    for (; i + 2 <= end; i += 2) {
      re0 += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
      im0 += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
      re1 += a[i + 1].real() * b[i + 1].real() - a[i + 1].imag() * b[i + 1].imag();
      im1 += a[i + 1].real() * b[i + 1].imag() + a[i + 1].imag() * b[i + 1].real();
    }
    for (; i < end; ++i) {
      re0 += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
      im0 += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return cplx(re0 + re1, im0 + im1);
  });
}

cplx wdot_(const double* w, const cplx* a, const cplx* b, std::size_t n) {
  return pairwise<cplx>(n, [&](std::size_t off, std::size_t len) {
    double re = 0, im = 0;
    for (std::size_t i = off; i < off + len; ++i) {
      re += w[i] * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
      im += w[i] * (a[i].imag() * b[i].real() - a[i].real() * b[i].imag());
    }
    return cplx(re, im);
  });
}

double wnorm2_(const double* w, const cplx* a, std::size_t n) {
  return pairwise<double>(n, [&](std::size_t off, std::size_t len) {
    double s = 0;
    for (std::size_t i = off; i < off + len; ++i)
      s += w[i] * (a[i].real() * a[i].real() + a[i].imag() * a[i].imag());
    return s;
  });
}

double norm2_(const cplx* a, std::size_t n) {
  return pairwise<double>(n, [&](std::size_t off, std::size_t len) {
    double s = 0;
    for (std::size_t i = off; i < off + len; ++i)
      s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
  });
}

void axpy_(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void scal_(cplx alpha, cplx* x, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void hadamard_(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    out[i] = cplx(ar * br - ai * bi, ar * bi + ai * br);
  }
}

void matvec_(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
             std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) y[i] = cdotu_(a + i * cols, x, cols);
}

void matvec_herm_(const cplx* a, const cplx* x, cplx* y, std::size_t rows,
                  std::size_t cols) {
  for (std::size_t j = 0; j < cols; ++j) y[j] = cplx(0, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const cplx* row = a + i * cols;
    const double xr = x[i].real(), xi = x[i].imag();
    for (std::size_t j = 0; j < cols; ++j) {
      // y_j += conj(row_j) * x_i
      const double rr = row[j].real(), ri = row[j].imag();
      y[j] += cplx(rr * xr + ri * xi, rr * xi - ri * xr);
    }
  }
}

}  // namespace

const KernelTable kTable = {sum_,    dot_,  cdot_,    cdotu_,    wdot_,
                            wnorm2_, norm2_, axpy_,   scal_,     hadamard_,
                            matvec_, matvec_herm_};

}  // namespace cesaro::simd::scalar
