#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace qlmc {

/// Integration domain: the whole real line, a half line [a, inf), or a
/// finite interval [a, b].
struct Domain {
  enum class Kind { FullLine, HalfLineFrom, Interval };

  Kind kind = Kind::FullLine;
  double a = 0.0;
  double b = 0.0;

  static Domain full_line() { return {Kind::FullLine, 0.0, 0.0}; }
  static Domain half_line_from(double a) { return {Kind::HalfLineFrom, a, 0.0}; }
  static Domain interval(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("Domain: need a < b");
    return {Kind::Interval, a, b};
  }
};

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  long max_evaluations = 1'000'000;
  // Points (in the integration variable x) forced to be initial segment
  // boundaries; used to seed the subdivision around known features.
  std::vector<double> split_hints;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonFiniteIntegrand : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SupportNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod 7/15 integration.  Unbounded domains are mapped to
/// finite ones first (x = t/(1-t^2) for the full line, x = a + t/(1-t) for a
/// half line); the worst segment is then bisected until the combined error
/// estimate meets max(abs_tol, rel_tol*|value|) or the evaluation budget runs
/// out (NoConvergence).
QuadResult integrate(const std::function<double(double)>& f, const Domain& domain,
                     const QuadOptions& opts = {});

/// Finds, by outward per-side doubling from `center`, the smallest searched
/// interval [L, R] with f < threshold outside it.  Assumes f >= 0 with
/// unimodal tails.  Returns the degenerate interval [center, center] when f
/// is below the threshold everywhere probed; throws SupportNotFound when f is
/// still above the threshold at |x - center| = 1e6.
Interval effective_support(const std::function<double(double)>& f, double center,
                           double threshold);

}  // namespace qlmc
