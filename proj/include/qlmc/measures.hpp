#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qlmc/quadrature.hpp"

namespace qlmc {

using DensityFn = std::function<double(double)>;

/// Shannon entropy S, disequilibrium D and the complexity C = e^S * D of one
/// density, together with the quadrature error estimates behind S and D.
struct MeasureTriple {
  double S = 0.0;
  double D = 0.0;
  double C = 0.0;
  double err_S = 0.0;
  double err_D = 0.0;
};

struct DiscreteDist {
  std::vector<double> p;
  int N = 0;

  // N defaults to the number of listed probabilities.
  explicit DiscreteDist(std::vector<double> probs, int n_states = -1);
};

struct MeasureOptions {
  double s_abs_tol = 1e-8;   // the -rho*ln(rho) integrand has mild log kinks
  double s_rel_tol = 1e-9;
  double d_abs_tol = 1e-10;
  double d_rel_tol = 1e-9;
  double norm_tol = 1e-6;
  // Advisory window; seeds the subdivision but never restricts the domain.
  std::optional<Interval> window;
};

class NotNormalized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// -int rho ln(rho) dx over the full line, with the t ln t -> 0 convention at
// density zeros.  Verifies int rho = 1 first (NotNormalized otherwise).
std::pair<double, double> shannon_entropy(const DensityFn& rho,
                                          const MeasureOptions& opts = {});

// int rho^2 dx over the full line; same normalization precondition.
std::pair<double, double> disequilibrium(const DensityFn& rho,
                                         const MeasureOptions& opts = {});

MeasureTriple lmc_complexity(const DensityFn& rho, const MeasureOptions& opts = {});

double discrete_entropy(const DiscreteDist& d);

double discrete_disequilibrium(const DiscreteDist& d);

}  // namespace qlmc
