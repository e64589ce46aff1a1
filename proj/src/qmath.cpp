#include "qlmc/qmath.hpp"

#include <cmath>
#include <string>

namespace qlmc {

QParam::QParam(double q) : q_(q), classical_(q == 1.0) {
  if (!(q > 0.0) || q > 1.0) {
    throw std::invalid_argument("QParam: q must lie in (0, 1], got " +
                                std::to_string(q));
  }
  if (!classical_ && q > 1.0 - classical_gap) {
    throw std::invalid_argument(
        "QParam: q too close to classical limit (use q = 1 exactly)");
  }
}

double q_number(int n, const QParam& q) {
  if (n < 0) throw std::domain_error("q_number: n must be nonnegative");
  if (q.classical()) return static_cast<double>(n);
  // -expm1(n log q) = 1 - q^n without cancellation near q = 1; the
  // denominator 1 - q is exact there (Sterbenz).
  return -std::expm1(n * std::log(q.value())) / (1.0 - q.value());
}

double q_factorial(int n, const QParam& q) {
  if (n < 0) throw std::domain_error("q_factorial: n must be nonnegative");
  if (n > 170) throw std::overflow_error("q_factorial: n > 170");
  double p = 1.0;
  for (int k = 1; k <= n; ++k) {
    p *= q_number(k, q);
    if (!std::isfinite(p)) {
      throw std::overflow_error("q_factorial: running product overflowed");
    }
  }
  return p;
}

double q_binomial(int n, int k, const QParam& q) {
  if (k < 0 || n < 0 || k > n) {
    throw std::domain_error("q_binomial: need 0 <= k <= n");
  }
  return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

double hermite_phys(int n, double x) {
  if (n < 0) throw std::domain_error("hermite_phys: n must be nonnegative");
  if (n > 200) throw std::domain_error("hermite_phys: n > 200");
  double hm1 = 0.0;  // H_{k-1}
  double h = 1.0;    // H_k
  for (int k = 0; k < n; ++k) {
    const double hp1 = 2.0 * x * h - 2.0 * k * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

double laguerre_general(int n, double a, double x) {
  if (n < 0) throw std::domain_error("laguerre_general: n must be nonnegative");
  if (n == 0) return 1.0;
  double lm1 = 1.0;           // L_0
  double l = 1.0 + a - x;     // L_1
  for (int k = 1; k < n; ++k) {
    const double lp1 = ((2.0 * k + 1.0 + a - x) * l - (k + a) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

}  // namespace qlmc
