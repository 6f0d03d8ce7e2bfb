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

#include <vector>

#include "cesaro/funcspace.hpp"
#include "cesaro/linalg.hpp"

namespace cesaro::ops {

using funcspace::FunctionRep;
using funcspace::SchemePtr;

// The integral operators on L2(0,1):
//
//   (C f)(x)  = (1/x)     int_0^x f(t)/(1-t) dt      lower-triangular kernel
//   (C* f)(x) = (1/(1-x)) int_x^1 f(t)/t dt          upper-triangular kernel
//   (V f)(x)  =           int_0^x f(t) dt
//   (H f)(x)  = (1/x)     int_0^x f(t) dt
//
// Applies run in O(N) by panel prefix/suffix sums; the partial panel ending
// at the target node is integrated by a local Gauss rule on the panel's own
// degree-(p-1) interpolant, so composition residuals stay near quadrature
// accuracy. Dense matrices exist only for norm and spectrum work.

enum class KernelName { CesaroK, CesaroKStar, Volterra, Hardy };

/// Pointwise kernel value K(x,t), zero off the support triangle.
double kernel_eval(KernelName k, double x, double t);

/// Closed-form kernels of the compositions C C* and C* C; these agree, which
/// is the kernel-level statement that C is normal.
double kernel_CCstar(double x, double t);
double kernel_CstarC(double x, double t);

FunctionRep apply_C(const FunctionRep& f, SchemePtr s = nullptr);
FunctionRep apply_Cstar(const FunctionRep& f, SchemePtr s = nullptr);
FunctionRep apply_V(const FunctionRep& f, SchemePtr s = nullptr);
FunctionRep apply_H(const FunctionRep& f, SchemePtr s = nullptr);

/// Generic weighted cumulative apply used by all four operators and by the
/// closed-form resolvents:
///   prefix: out(x_i) = outer(x_i) * int_0^{x_i} weight(t) f(t) dt
///   suffix: out(x_i) = outer(x_i) * int_{x_i}^1 weight(t) f(t) dt
/// `weight` and `outer` receive (x, 1-x).
FunctionRep weighted_cumulative_apply(
    const FunctionRep& f, const std::function<cplx(double, double)>& weight,
    const std::function<cplx(double, double)>& outer, bool prefix,
    SchemePtr s = nullptr);

struct DiscretizedOperator {
  SchemePtr scheme;
  std::size_t n = 0;
  std::vector<cplx> matrix;  // symmetrized: entries carry sqrt(w_i w_j)

  /// Action in function coordinates (scales by sqrt(w) on the way in/out).
  FunctionRep apply(const FunctionRep& f) const;
  linalg::LinOp linop() const;
};

/// Nystrom matrix of the kernel on the scheme, symmetrized so the discrete
/// adjoint is the conjugate transpose. Rows correct the panel containing the
/// diagonal with the same partial-panel rule the continuous apply uses.
DiscretizedOperator discretize(KernelName k, SchemePtr s);

/// identity - discretized C (used for the ||I - C|| = 1 check).
DiscretizedOperator discretize_I_minus_C(SchemePtr s);

/// Largest singular value by power iteration on op* op.
double operator_norm(const DiscretizedOperator& op, double tol = 1e-10,
                     int maxit = 20000);
double operator_norm(const linalg::LinOp& op, double tol = 1e-10,
                     int maxit = 20000);

struct IdentityReport {
  double imc_imcstar = 0;   // max ||(I-C)(I-C*)f - f||
  double imcstar_imc = 0;   // max ||(I-C*)(I-C)f - f||
  double ccstar_vs_sum = 0; // max ||C C* f - (C+C*) f||
  double commute = 0;       // max ||C* C f - C C* f||
  double max_residual() const;
};

/// Residuals of the algebraic identities over a test set.
IdentityReport verify_identities(SchemePtr s,
                                 const std::vector<FunctionRep>& fs);

/// Coefficients of C^n chi as a power series sum_k c_k x^(k-1): each apply
/// replaces c by its prefix averages, d_k = (sum_{j<=k} c_j)/k. Test oracle
/// for the operator orbit.
std::vector<double> orbit_series_coeffs(int n, int terms);

}  // namespace cesaro::ops
