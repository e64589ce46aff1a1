#include "qlmc/measures.hpp"

#include <cmath>
#include <string>

namespace qlmc {

namespace {

std::vector<double> window_hints(const std::optional<Interval>& window) {
  std::vector<double> hints;
  if (!window) return hints;
  const double lo = window->lo;
  const double w = window->width();
  const int kSplits = 8;
  for (int i = 0; i <= kSplits; ++i) hints.push_back(lo + w * i / kSplits);
  return hints;
}

void check_normalized(const DensityFn& rho, const MeasureOptions& opts) {
  QuadOptions q;
  q.abs_tol = opts.d_abs_tol;
  q.rel_tol = opts.d_rel_tol;
  q.split_hints = window_hints(opts.window);
  const QuadResult norm = integrate(rho, Domain::full_line(), q);
  if (std::abs(norm.value - 1.0) > opts.norm_tol) {
    throw NotNormalized("density integrates to " + std::to_string(norm.value) +
                        ", not 1");
  }
}

}  // namespace

DiscreteDist::DiscreteDist(std::vector<double> probs, int n_states)
    : p(std::move(probs)), N(n_states < 0 ? static_cast<int>(p.size()) : n_states) {
  if (N <= 0) throw std::invalid_argument("DiscreteDist: N must be positive");
  double sum = 0.0;
  for (double pi : p) {
    if (pi < 0.0) throw std::invalid_argument("DiscreteDist: negative probability");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("DiscreteDist: probabilities sum to " +
                                std::to_string(sum));
  }
}

std::pair<double, double> shannon_entropy(const DensityFn& rho,
                                          const MeasureOptions& opts) {
  check_normalized(rho, opts);
  auto integrand = [&rho](double x) {
    const double r = rho(x);
    if (r <= 0.0) return 0.0;  // t ln t -> 0, and clamp FP noise below zero
    return -r * std::log(r);
  };
  QuadOptions q;
  q.abs_tol = opts.s_abs_tol;
  q.rel_tol = opts.s_rel_tol;
  q.split_hints = window_hints(opts.window);
  const QuadResult r = integrate(integrand, Domain::full_line(), q);
  return {r.value, r.abs_error_estimate};
}

std::pair<double, double> disequilibrium(const DensityFn& rho,
                                         const MeasureOptions& opts) {
  check_normalized(rho, opts);
  auto integrand = [&rho](double x) {
    const double r = rho(x);
    return r * r;
  };
  QuadOptions q;
  q.abs_tol = opts.d_abs_tol;
  q.rel_tol = opts.d_rel_tol;
  q.split_hints = window_hints(opts.window);
  const QuadResult r = integrate(integrand, Domain::full_line(), q);
  return {r.value, r.abs_error_estimate};
}

MeasureTriple lmc_complexity(const DensityFn& rho, const MeasureOptions& opts) {
  MeasureTriple t;
  std::tie(t.S, t.err_S) = shannon_entropy(rho, opts);
  std::tie(t.D, t.err_D) = disequilibrium(rho, opts);
  t.C = std::exp(t.S) * t.D;
  return t;
}

double discrete_entropy(const DiscreteDist& d) {
  double s = 0.0;
  for (double pi : d.p) {
    if (pi > 0.0) s -= pi * std::log(pi);
  }
  return s;
}

double discrete_disequilibrium(const DiscreteDist& d) {
  const double u = 1.0 / d.N;
  double sum = 0.0;
  int listed = 0;
  for (double pi : d.p) {
    const double dev = pi - u;
    sum += dev * dev;
    ++listed;
  }
  // States beyond the listed ones carry p_i = 0.
  sum += (d.N - listed) * u * u;
  return sum;
}

}  // namespace qlmc
