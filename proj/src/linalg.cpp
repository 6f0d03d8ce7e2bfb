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

#include "cesaro/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cesaro/simd.hpp"

namespace cesaro::linalg {

LinOp matrix_op(const std::vector<cplx>& a, std::size_t n) {
  if (a.size() != n * n) throw ParameterError("matrix_op: size mismatch");
  LinOp op;
  op.n = n;
  const cplx* p = a.data();
  op.apply = [p, n](const cplx* x, cplx* y) { simd::matvec(p, x, y, n, n); };
  op.apply_adjoint = [p, n](const cplx* x, cplx* y) {
    simd::matvec_herm(p, x, y, n, n);
  };
  return op;
}

namespace {

std::vector<cplx> random_unit_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& z : v) z = cplx(gauss(rng), gauss(rng));
  double nrm = std::sqrt(simd::norm2(v.data(), n));
  simd::scal(cplx(1.0 / nrm, 0.0), v.data(), n);
  return v;
}

}  // namespace

double largest_singular_value(const LinOp& op, double tol, int maxit,
                              std::uint64_t seed) {
  const std::size_t n = op.n;
  std::vector<cplx> v = random_unit_vector(n, seed);
  std::vector<cplx> av(n), w(n);
  double sigma_prev = -1.0;
  for (int it = 0; it < maxit; ++it) {
    op.apply(v.data(), av.data());
    double r = simd::norm2(av.data(), n);  // = v^H (A^H A) v for unit v
    double sigma = std::sqrt(r);
    if (sigma == 0.0) return 0.0;
    if (sigma_prev >= 0 &&
        std::abs(sigma - sigma_prev) <= tol * std::max(1.0, sigma))
      return sigma;
    sigma_prev = sigma;
    op.apply_adjoint(av.data(), w.data());
    double nrm = std::sqrt(simd::norm2(w.data(), n));
    if (nrm == 0.0) return 0.0;
    simd::scal(cplx(1.0 / nrm, 0.0), w.data(), n);
    v.swap(w);
  }
  throw ConvergenceError("power iteration did not settle within max iterations");
}

LuFactors LuFactors::factor(std::vector<cplx> a, std::size_t n) {
  if (a.size() != n * n) throw ParameterError("LU: size mismatch");
  LuFactors f;
  f.n_ = n;
  f.piv_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double m = std::abs(a[i * n + k]);
      if (m > best) {
        best = m;
        p = i;
      }
    }
    if (best == 0.0) throw ConvergenceError("LU: singular matrix");
    f.piv_[k] = p;
    if (p != k)
      std::swap_ranges(a.begin() + k * n, a.begin() + (k + 1) * n,
                       a.begin() + p * n);
    const cplx pivot = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      cplx l = a[i * n + k] / pivot;
      a[i * n + k] = l;
      if (l != cplx(0, 0))
        simd::axpy(-l, a.data() + k * n + k + 1, a.data() + i * n + k + 1,
                   n - k - 1);
    }
  }
  f.lu_ = std::move(a);
  return f;
}

void LuFactors::solve(cplx* b) const {
  const std::size_t n = n_;
  for (std::size_t k = 0; k < n; ++k)
    if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
  for (std::size_t i = 1; i < n; ++i) {
    cplx s = b[i];
    s -= simd::cdotu(lu_.data() + i * n, b, i);
    b[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    cplx s = b[ii];
    s -= simd::cdotu(lu_.data() + ii * n + ii + 1, b + ii + 1, n - ii - 1);
    b[ii] = s / lu_[ii * n + ii];
  }
}

void LuFactors::solve_adjoint(cplx* b) const {
  // A^H = U^H L^H P with PA = LU; U^H is lower, L^H upper unit-diagonal.
  const std::size_t n = n_;
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= std::conj(lu_[j * n + i]) * b[j];
    b[i] = s / std::conj(lu_[i * n + i]);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    cplx s = b[ii];
    for (std::size_t j = ii + 1; j < n; ++j)
      s -= std::conj(lu_[j * n + ii]) * b[j];
    b[ii] = s;
  }
  for (std::size_t k = n; k-- > 0;)
    if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
}

double smallest_singular_value(const std::vector<cplx>& a, std::size_t n,
                               double tol, int maxit, std::uint64_t seed) {
  LuFactors lu = LuFactors::factor(a, n);
  std::vector<cplx> v = random_unit_vector(n, seed);
  double mu_prev = -1.0;
  for (int it = 0; it < maxit; ++it) {
    std::vector<cplx> w = v;
    lu.solve_adjoint(w.data());  // w = A^{-H} v
    lu.solve(w.data());          // w = A^{-1} A^{-H} v = (A^H A)^{-1} v
    double mu = std::sqrt(simd::norm2(w.data(), n));  // -> 1/sigma_min^2
    if (mu == 0.0) throw ConvergenceError("inverse iteration collapsed");
    if (mu_prev >= 0 && std::abs(mu - mu_prev) <= tol * mu)
      return 1.0 / std::sqrt(mu);
    mu_prev = mu;
    simd::scal(cplx(1.0 / mu, 0.0), w.data(), n);
    v.swap(w);
  }
  throw ConvergenceError("inverse power iteration did not settle");
}

bool cholesky_solve(const std::vector<cplx>& g, std::size_t n,
                    std::vector<cplx>& b) {
  std::vector<cplx> l(g);
  for (std::size_t j = 0; j < n; ++j) {
    double d = l[j * n + j].real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l[j * n + k]);
    if (!(d > 0)) return false;
    double dj = std::sqrt(d);
    l[j * n + j] = dj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = l[i * n + j];
      for (std::size_t k = 0; k < j; ++k)
        s -= l[i * n + k] * std::conj(l[j * n + k]);
      l[i * n + j] = s / dj;
    }
  }
  // forward: L y = b
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l[i * n + k] * b[k];
    b[i] = s / l[i * n + i];
  }
  // backward: L^H x = y
  for (std::size_t ii = n; ii-- > 0;) {
    cplx s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k)
      s -= std::conj(l[k * n + ii]) * b[k];
    b[ii] = s / l[ii * n + ii];
  }
  return true;
}

std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& a,
                                          std::size_t n) {
  // real symmetric embedding [[X, -Y], [Y, X]]; every eigenvalue doubles
  const std::size_t m = 2 * n;
  std::vector<double> s(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double x = a[i * n + j].real(), y = a[i * n + j].imag();
      s[i * m + j] = x;
      s[(i + n) * m + (j + n)] = x;
      s[i * m + (j + n)] = -y;
      s[(i + n) * m + j] = y;
    }
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += s[p * m + q] * s[p * m + q];
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        double apq = s[p * m + q];
        if (std::abs(apq) < 1e-300) continue;
        double theta = (s[q * m + q] - s[p * m + p]) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), sn = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          double akp = s[k * m + p], akq = s[k * m + q];
          s[k * m + p] = c * akp - sn * akq;
          s[k * m + q] = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          double apk = s[p * m + k], aqk = s[q * m + k];
          s[p * m + k] = c * apk - sn * aqk;
          s[q * m + k] = sn * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(m);
  for (std::size_t i = 0; i < m; ++i) ev[i] = s[i * m + i];
  std::sort(ev.begin(), ev.end());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (ev[2 * i] + ev[2 * i + 1]);
  return out;
}

}  // namespace cesaro::linalg
