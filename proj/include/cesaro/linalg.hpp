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

#include <cstdint>
#include <functional>
#include <vector>

#include "cesaro/core.hpp"

namespace cesaro::linalg {

/// A linear map together with its adjoint, both acting on length-n vectors.
struct LinOp {
  std::size_t n = 0;
  std::function<void(const cplx*, cplx*)> apply;
  std::function<void(const cplx*, cplx*)> apply_adjoint;
};

/// Views a row-major dense matrix as a LinOp (the matrix must outlive it).
LinOp matrix_op(const std::vector<cplx>& a, std::size_t n);

/// Largest singular value by power iteration on A^H A with a seeded start
/// vector. Stops when successive estimates agree to `tol` relative; throws
/// ConvergenceError past `maxit`.
double largest_singular_value(const LinOp& op, double tol = 1e-10,
                              int maxit = 20000, std::uint64_t seed = 12345);

/// Dense LU with partial pivoting.
class LuFactors {
 public:
  static LuFactors factor(std::vector<cplx> a, std::size_t n);
  void solve(cplx* b) const;          // A x = b, in place
  void solve_adjoint(cplx* b) const;  // A^H x = b, in place
  std::size_t dim() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<cplx> lu_;
  std::vector<std::size_t> piv_;
};

/// Smallest singular value of a dense matrix: inverse power iteration on
/// (A^H A)^{-1} through an LU factorization.
double smallest_singular_value(const std::vector<cplx>& a, std::size_t n,
                               double tol = 1e-8, int maxit = 5000,
                               std::uint64_t seed = 54321);

/// Solves the Hermitian positive definite system G x = b by Cholesky.
/// Returns false if a pivot collapses (not numerically positive definite).
bool cholesky_solve(const std::vector<cplx>& g, std::size_t n,
                    std::vector<cplx>& b);

/// All eigenvalues of a small Hermitian matrix (cyclic Jacobi on the real
/// symmetric embedding), ascending.
std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& a,
                                          std::size_t n);

}  // namespace cesaro::linalg
