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

#include <functional>
#include <memory>
#include <vector>

#include "cesaro/core.hpp"

namespace cesaro::funcspace {

// Square-integrable functions on the open interval (0,1) and on a truncated
// real line, with the quadrature they are integrated by.
//
// Unit-interval schemes are composite Gauss-Legendre with panels graded
// geometrically toward both endpoints; the kernels of the integral operators
// blow up like 1/x and 1/(1-t) there. Nodes carry their distance to the
// nearer endpoint (xc = 1-x) exactly: panels in the right graded region are
// constructed in the 1-x coordinate, so 1/(1-t) style weights lose no
// precision even when 1-t is far below DBL_EPSILON relative to 1.

struct Interval {
  enum class Kind { Unit, Line };
  Kind kind = Kind::Unit;
  double half_width = 0.0;  // Line only: domain truncated to [-L, L]

  static Interval unit() { return {Kind::Unit, 0.0}; }
  static Interval line(double half) {
    if (!(half > 0)) throw DomainError("line interval needs L > 0");
    return {Kind::Line, half};
  }
  bool operator==(const Interval& o) const {
    return kind == o.kind && half_width == o.half_width;
  }
};

/// Gauss-Legendre rule mapped to [0,1]; weights sum to 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_rule(int n);

struct Panel {
  double lo, hi;      // endpoints in x
  double lo_c, hi_c;  // 1-lo, 1-hi, exact near the right endpoint
  double span() const { return lo >= 0.5 ? lo_c - hi_c : hi - lo; }
};

struct QuadratureScheme {
  Interval interval;
  std::vector<Panel> panels;        // Unit only
  std::vector<double> nodes;        // ascending
  std::vector<double> nodes_c;      // 1-node (Unit); unused for Line
  std::vector<double> weights;
  int nodes_per_panel = 0;

  // Line grids are uniform: node_j = line_origin + j*line_step.
  double line_origin = 0.0;
  double line_step = 0.0;
  // Set by the Fourier transform so the inverse can restore the exact source
  // grid; negative half-width means unset.
  double dual_origin = 0.0;
  bool has_dual = false;

  std::size_t size() const { return nodes.size(); }
  std::size_t panel_of(double x) const;
  std::size_t first_node_of_panel(std::size_t p) const {
    return p * static_cast<std::size_t>(nodes_per_panel);
  }

  // Grading metadata, kept so refined() can deepen the same construction.
  int graded_levels = 0;
  int interior_panels = 0;
  double grading_ratio = 0.5;
};

using SchemePtr = std::shared_ptr<const QuadratureScheme>;

/// Composite Gauss-Legendre on (0,1): `graded_levels` panels shrinking by
/// `ratio` toward each endpoint plus `interior_panels` uniform panels on the
/// middle half. graded_levels = 0 gives a plain uniform scheme.
SchemePtr make_unit_scheme(int graded_levels = 40, int interior_panels = 16,
                           int nodes_per_panel = 8, double ratio = 0.5);

/// Uniform grid of `m` points on [-half_width, half_width). With
/// `centered_origin` the grid contains 0 (FFT output grids); otherwise nodes
/// sit at midpoints and stay strictly interior.
SchemePtr make_line_scheme(double half_width = 40.0, std::size_t m = 1u << 14,
                           bool centered_origin = false);

/// Composite Gauss-Legendre on an arbitrary interval [lo, hi] (no grading).
SchemePtr make_interval_scheme(double lo, double hi, int panels,
                               int nodes_per_panel = 8);

/// Same construction, one step deeper: grading +2 levels, interior doubled
/// (uniform schemes just double).
SchemePtr refined(const QuadratureScheme& s);

SchemePtr default_unit_scheme();
SchemePtr default_line_scheme();

/// Complex-valued evaluator. The second argument carries 1-x to full
/// precision for unit-interval functions; line evaluators may ignore it.
using Evaluator = std::function<cplx(double x, double xc)>;

struct FunctionRep {
  Interval domain;
  Evaluator fn;       // analytic body (null when sampled)
  SchemePtr scheme;   // sampled body
  std::vector<cplx> values;

  bool analytic() const { return static_cast<bool>(fn); }
  bool sampled() const { return static_cast<bool>(scheme); }

  /// Evaluate anywhere on the domain. Sampled bodies interpolate with a
  /// local cubic through four neighbouring nodes; on the unit interval the
  /// window is clamped at the extreme nodes, on the line the value is 0
  /// beyond the grid.
  cplx eval(double x) const;
  cplx eval(double x, double xc) const;

  static FunctionRep analytic_on(Interval dom, Evaluator f);
  static FunctionRep make_sampled(SchemePtr s, std::vector<cplx> vals);
};

/// Wraps a single-argument lambda as an Evaluator.
template <typename F>
Evaluator ev(F&& f) {
  return [g = std::forward<F>(f)](double x, double) -> cplx { return g(x); };
}

/// chi_[0,1], the constant 1.
FunctionRep indicator_unit();

FunctionRep sample(const FunctionRep& f, SchemePtr s);

/// sum_i w_i f(x_i) conj(g(x_i)); conjugate-linear in g. Both operands must
/// live on the same interval; two sampled bodies must share the scheme.
cplx inner_product(const FunctionRep& f, const FunctionRep& g);

double norm(const FunctionRep& f);

/// Norm with a divergence probe: evaluates the analytic body on successively
/// refined schemes and throws IntegrabilityWarning when the value keeps
/// growing instead of settling.
double norm_checked(const FunctionRep& f, int refinements = 2);

// -- interpolation helpers (nodes ascending) ---------------------------------

cplx interp_eval(const std::vector<double>& nodes,
                 const std::vector<cplx>& values, double x, bool zero_outside);
cplx interp_deriv(const std::vector<double>& nodes,
                  const std::vector<cplx>& values, double x);

// -- pointwise algebra on shared-scheme sampled reps -------------------------

FunctionRep lincomb(cplx a, const FunctionRep& f, cplx b, const FunctionRep& g);
double l2_distance(const FunctionRep& f, const FunctionRep& g);

}  // namespace cesaro::funcspace

namespace cesaro {
using funcspace::FunctionRep;
using funcspace::SchemePtr;
}  // namespace cesaro
