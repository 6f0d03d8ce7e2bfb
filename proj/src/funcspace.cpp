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

#include "cesaro/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "cesaro/simd.hpp"

namespace cesaro::funcspace {

namespace {

// Legendre polynomial value and derivative at x via the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

GaussRule compute_gauss_rule(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, Newton to machine precision
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre(n, x);
      double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    auto [p, dp] = legendre(n, x);
    (void)p;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // map [-1,1] -> [0,1]; descending cos guesses give ascending nodes here
    r.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    r.weights[n - 1 - i] = 0.5 * w;
  }
  return r;
}

std::mutex g_rule_mutex;
std::map<int, GaussRule> g_rules;

}  // namespace

const GaussRule& gauss_rule(int n) {
  if (n < 1 || n > 32) throw ParameterError("gauss rule order out of range");
  std::lock_guard<std::mutex> lk(g_rule_mutex);
  auto it = g_rules.find(n);
  if (it == g_rules.end()) it = g_rules.emplace(n, compute_gauss_rule(n)).first;
  return it->second;
}

std::size_t QuadratureScheme::panel_of(double x) const {
  // first panel whose hi is >= x
  std::size_t lo = 0, hi = panels.size();
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (panels[mid].lo <= x) lo = mid;
    else hi = mid;
  }
  return lo;
}

SchemePtr make_unit_scheme(int graded_levels, int interior_panels,
                           int nodes_per_panel, double ratio) {
  if (interior_panels < 1 || nodes_per_panel < 2)
    throw ParameterError("unit scheme needs >= 1 interior panel, >= 2 nodes");
  if (graded_levels < 0 || !(ratio > 0 && ratio < 1))
    throw ParameterError("bad grading parameters");

  auto s = std::make_shared<QuadratureScheme>();
  s->interval = Interval::unit();
  s->nodes_per_panel = nodes_per_panel;
  s->graded_levels = graded_levels;
  s->interior_panels = interior_panels;
  s->grading_ratio = ratio;

  const double b = graded_levels > 0 ? 0.25 : 0.0;  // graded region width
  std::vector<Panel>& panels = s->panels;

  if (graded_levels > 0) {
    // left: breakpoints b*ratio^(G-1-j); the first panel owns the sliver at 0
    std::vector<double> edge(graded_levels);
    for (int j = 0; j < graded_levels; ++j)
      edge[j] = b * std::pow(ratio, graded_levels - 1 - j);
    panels.push_back({0.0, edge[0], 1.0, 1.0 - edge[0]});
    for (int j = 1; j < graded_levels; ++j)
      panels.push_back({edge[j - 1], edge[j], 1.0 - edge[j - 1], 1.0 - edge[j]});
  }
  {
    const double lo = b, hi = 1.0 - b;
    for (int j = 0; j < interior_panels; ++j) {
      double a = lo + (hi - lo) * j / interior_panels;
      double c = lo + (hi - lo) * (j + 1) / interior_panels;
      panels.push_back({a, c, 1.0 - a, 1.0 - c});
    }
  }
  if (graded_levels > 0) {
    // right: mirror of the left region, built in the 1-x coordinate so the
    // small complements are exact; the sliver at 1 is the final panel
    double prev_c = b;
    for (int j = 1; j < graded_levels; ++j) {
      double c = b * std::pow(ratio, j);
      panels.push_back({1.0 - prev_c, 1.0 - c, prev_c, c});
      prev_c = c;
    }
    panels.push_back({1.0 - prev_c, 1.0, prev_c, 0.0});
  }

  const GaussRule& rule = gauss_rule(nodes_per_panel);
  for (const Panel& p : panels) {
    const double span = p.span();
    const bool right = p.lo >= 0.5;
    for (int k = 0; k < nodes_per_panel; ++k) {
      double t, tc;
      if (right) {
        tc = p.lo_c - span * rule.nodes[k];
        t = 1.0 - tc;
      } else {
        t = p.lo + span * rule.nodes[k];
        tc = 1.0 - t;
      }
      s->nodes.push_back(t);
      s->nodes_c.push_back(tc);
      s->weights.push_back(span * rule.weights[k]);
    }
  }

  double total = simd::sum(s->weights.data(), s->weights.size());
  if (std::abs(total - 1.0) > 1e-12)
    throw LabError("unit scheme weights do not sum to the interval length");
  return s;
}

SchemePtr make_line_scheme(double half_width, std::size_t m,
                           bool centered_origin) {
  if (!(half_width > 0) || m < 2)
    throw ParameterError("bad line scheme parameters");
  auto s = std::make_shared<QuadratureScheme>();
  s->interval = Interval::line(half_width);
  s->nodes_per_panel = 1;
  const double step = 2.0 * half_width / static_cast<double>(m);
  const double origin =
      centered_origin ? -0.5 * step * static_cast<double>(m)
                      : -half_width + 0.5 * step;
  s->line_origin = origin;
  s->line_step = step;
  s->nodes.resize(m);
  s->nodes_c.assign(m, 0.0);
  s->weights.assign(m, step);
  for (std::size_t j = 0; j < m; ++j)
    s->nodes[j] = origin + step * static_cast<double>(j);
  return s;
}

SchemePtr make_interval_scheme(double lo, double hi, int panels,
                               int nodes_per_panel) {
  if (!(hi > lo) || panels < 1) throw ParameterError("bad interval scheme");
  auto s = std::make_shared<QuadratureScheme>();
  s->interval = Interval::unit();  // sub-interval of (0,1) in practice
  s->nodes_per_panel = nodes_per_panel;
  const GaussRule& rule = gauss_rule(nodes_per_panel);
  for (int j = 0; j < panels; ++j) {
    double a = lo + (hi - lo) * j / panels;
    double c = lo + (hi - lo) * (j + 1) / panels;
    s->panels.push_back({a, c, 1.0 - a, 1.0 - c});
    for (int k = 0; k < nodes_per_panel; ++k) {
      double t = a + (c - a) * rule.nodes[k];
      s->nodes.push_back(t);
      s->nodes_c.push_back(1.0 - t);
      s->weights.push_back((c - a) * rule.weights[k]);
    }
  }
  return s;
}

SchemePtr refined(const QuadratureScheme& s) {
  if (s.interval.kind == Interval::Kind::Line)
    return make_line_scheme(s.interval.half_width, 2 * s.size(),
                            s.line_origin == -s.interval.half_width);
  int levels = s.graded_levels > 0 ? s.graded_levels + 2 : 0;
  return make_unit_scheme(levels, 2 * s.interior_panels, s.nodes_per_panel,
                          s.grading_ratio);
}

SchemePtr default_unit_scheme() {
  static SchemePtr s = make_unit_scheme();
  return s;
}

SchemePtr default_line_scheme() {
  static SchemePtr s = make_line_scheme();
  return s;
}

FunctionRep FunctionRep::analytic_on(Interval dom, Evaluator f) {
  FunctionRep r;
  r.domain = dom;
  r.fn = std::move(f);
  return r;
}

FunctionRep FunctionRep::make_sampled(SchemePtr s, std::vector<cplx> vals) {
  if (!s || vals.size() != s->size())
    throw DomainError("sampled body needs one value per node");
  FunctionRep r;
  r.domain = s->interval;
  r.scheme = std::move(s);
  r.values = std::move(vals);
  return r;
}

cplx FunctionRep::eval(double x) const { return eval(x, 1.0 - x); }

cplx FunctionRep::eval(double x, double xc) const {
  if (analytic()) return fn(x, xc);
  if (!sampled()) throw DomainError("empty function representation");
  const bool zero_outside = domain.kind == Interval::Kind::Line;
  return interp_eval(scheme->nodes, values, x, zero_outside);
}

FunctionRep indicator_unit() {
  return FunctionRep::analytic_on(Interval::unit(),
                                  [](double, double) { return cplx(1.0, 0.0); });
}

FunctionRep sample(const FunctionRep& f, SchemePtr s) {
  if (!s) throw DomainError("sample needs a scheme");
  if (!(f.domain == s->interval)) throw DomainError("sample: interval mismatch");
  std::vector<cplx> vals(s->size());
  for (std::size_t i = 0; i < s->size(); ++i) {
    vals[i] = f.analytic() ? f.fn(s->nodes[i], s->nodes_c[i])
                           : f.eval(s->nodes[i], s->nodes_c[i]);
    if (!std::isfinite(vals[i].real()) || !std::isfinite(vals[i].imag()))
      throw EvaluationError("non-finite value while sampling", s->nodes[i]);
  }
  return FunctionRep::make_sampled(std::move(s), std::move(vals));
}

namespace {

SchemePtr common_scheme(const FunctionRep& f, const FunctionRep& g) {
  if (!(f.domain == g.domain))
    throw DomainError("operands live on different intervals");
  if (f.sampled() && g.sampled()) {
    if (f.scheme != g.scheme)
      throw DomainError("sampled operands must share a scheme");
    return f.scheme;
  }
  if (f.sampled()) return f.scheme;
  if (g.sampled()) return g.scheme;
  return f.domain.kind == Interval::Kind::Unit
             ? default_unit_scheme()
             : make_line_scheme(f.domain.half_width);
}

}  // namespace

cplx inner_product(const FunctionRep& f, const FunctionRep& g) {
  SchemePtr s = common_scheme(f, g);
  const FunctionRep fs = f.sampled() ? f : sample(f, s);
  const FunctionRep gs = g.sampled() ? g : sample(g, s);
  return simd::wdot(s->weights.data(), fs.values.data(), gs.values.data(),
                    s->size());
}

double norm(const FunctionRep& f) {
  if (f.sampled())
    return std::sqrt(simd::wnorm2(f.scheme->weights.data(), f.values.data(),
                                  f.scheme->size()));
  return std::sqrt(std::abs(inner_product(f, f).real()));
}

double norm_checked(const FunctionRep& f, int refinements) {
  if (!f.analytic()) return norm(f);
  SchemePtr s = f.domain.kind == Interval::Kind::Unit
                    ? default_unit_scheme()
                    : make_line_scheme(f.domain.half_width);
  double prev = norm(sample(f, s));
  bool growing = true;
  double last = prev;
  for (int r = 0; r < refinements; ++r) {
    s = refined(*s);
    double cur = norm(sample(f, s));
    if (cur <= prev * (1.0 + 1e-3)) growing = false;
    prev = cur;
    last = cur;
  }
  if (growing)
    throw IntegrabilityWarning(
        "norm keeps growing under refinement; function does not look "
        "square-integrable");
  return last;
}

cplx interp_eval(const std::vector<double>& nodes,
                 const std::vector<cplx>& values, double x,
                 bool zero_outside) {
  const std::size_t n = nodes.size();
  if (n == 0) throw DomainError("empty sample set");
  if (zero_outside && (x < nodes.front() || x > nodes.back()))
    return cplx(0, 0);
  if (n < 4) {  // linear fallback
    if (x <= nodes.front()) return values.front();
    if (x >= nodes.back()) return values.back();
    auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    std::size_t i = static_cast<std::size_t>(it - nodes.begin());
    double t = (x - nodes[i - 1]) / (nodes[i] - nodes[i - 1]);
    return values[i - 1] * (1.0 - t) + values[i] * t;
  }
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  std::size_t i = static_cast<std::size_t>(it - nodes.begin());
  std::size_t lo = i >= 2 ? i - 2 : 0;
  if (lo + 4 > n) lo = n - 4;
  // cubic Lagrange through nodes lo..lo+3
  cplx acc(0, 0);
  for (std::size_t k = lo; k < lo + 4; ++k) {
    double lk = 1.0;
    for (std::size_t m = lo; m < lo + 4; ++m) {
      if (m == k) continue;
      lk *= (x - nodes[m]) / (nodes[k] - nodes[m]);
    }
    acc += values[k] * lk;
  }
  return acc;
}

cplx interp_deriv(const std::vector<double>& nodes,
                  const std::vector<cplx>& values, double x) {
  const std::size_t n = nodes.size();
  if (n < 4) throw DomainError("need at least 4 nodes to differentiate");
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  std::size_t i = static_cast<std::size_t>(it - nodes.begin());
  std::size_t lo = i >= 2 ? i - 2 : 0;
  if (lo + 4 > n) lo = n - 4;
  cplx acc(0, 0);
  for (std::size_t k = lo; k < lo + 4; ++k) {
    // derivative of the k-th Lagrange basis
    double dlk = 0.0;
    for (std::size_t j = lo; j < lo + 4; ++j) {
      if (j == k) continue;
      double term = 1.0 / (nodes[k] - nodes[j]);
      for (std::size_t m = lo; m < lo + 4; ++m) {
        if (m == k || m == j) continue;
        term *= (x - nodes[m]) / (nodes[k] - nodes[m]);
      }
      dlk += term;
    }
    acc += values[k] * dlk;
  }
  return acc;
}

FunctionRep lincomb(cplx a, const FunctionRep& f, cplx b, const FunctionRep& g) {
  SchemePtr s = common_scheme(f, g);
  const FunctionRep fs = f.sampled() ? f : sample(f, s);
  const FunctionRep gs = g.sampled() ? g : sample(g, s);
  std::vector<cplx> out = gs.values;
  simd::scal(b, out.data(), out.size());
  simd::axpy(a, fs.values.data(), out.data(), out.size());
  return FunctionRep::make_sampled(s, std::move(out));
}

double l2_distance(const FunctionRep& f, const FunctionRep& g) {
  return norm(lincomb(cplx(1, 0), f, cplx(-1, 0), g));
}

}  // namespace cesaro::funcspace
