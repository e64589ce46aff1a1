#pragma once

#include <stdexcept>

namespace qlmc {

/// Deformation parameter q, restricted to (0, 1].  q = 1 is tagged as the
/// classical limit; the deformed formulas are 0/0 there and are never
/// evaluated on that branch.  Values inside (1 - classical_gap, 1) are
/// rejected outright because (1 - q^n)/(1 - q) has no significant digits left.
class QParam {
 public:
  static constexpr double classical_gap = 1e-9;

  explicit QParam(double q);

  double value() const { return q_; }
  bool classical() const { return classical_; }

 private:
  double q_;
  bool classical_;
};

// [n]_q = (1 - q^n)/(1 - q); equals n on the classical branch.
double q_number(int n, const QParam& q);

// [n]_q! = prod_{k=1..n} [k]_q, empty product for n = 0.
double q_factorial(int n, const QParam& q);

// [n]_q!/([k]_q! [n-k]_q!), the Gaussian binomial coefficient.
double q_binomial(int n, int k, const QParam& q);

// Physicists' Hermite polynomial H_n(x).
double hermite_phys(int n, double x);

// Generalized Laguerre polynomial L_n^a(x), real (non-integer) a allowed.
double laguerre_general(int n, double a, double x);

}  // namespace qlmc
