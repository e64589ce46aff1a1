#pragma once

#include <complex>
#include <vector>

#include "qlmc/qmath.hpp"
#include "qlmc/quadrature.hpp"

namespace qlmc {

/// One eigenstate of the q-deformed harmonic oscillator (hbar = 1).  The
/// deformed branch evaluates the finite k-sum wavefunction with complex
/// arithmetic throughout; the classical branch (q = 1) uses the Hermite
/// functions.  The realized density is checked to integrate to 1 at
/// construction and renormalized (with a diagnostic flag) if the analytic
/// constant drifts.
class QhoState {
 public:
  QhoState(int n, QParam q, double omega = 1.0);

  int n() const { return n_; }
  const QParam& q() const { return q_; }
  double omega() const { return omega_; }
  bool renormalized() const { return renormalized_; }

  std::complex<double> wavefunction(double x) const;

  // The k-sum evaluated term by term exactly as written.  Identical to
  // wavefunction() in exact arithmetic; the primary path runs the
  // algebraically equivalent Rogers-Szego recurrence instead, which stays
  // stable near q = 1 where the termwise sum cancels catastrophically.
  std::complex<double> wavefunction_termwise(double x) const;

  double density(double x) const;

  // omega([n]_q + q^n/2); identical to omega([n]_q + [n+1]_q)/2.
  double energy() const;

  // Closed form (2 - (1+q)q^n)/(2(1-q)); n + 1/2 on the classical branch.
  double uncertainty_product() const;

  // dx*dp from quadrature moments of the density and of the numerically
  // differentiated wavefunction (central differences, one Richardson step).
  double uncertainty_numeric() const;

  // Effective support of the density at threshold 1e-16, padded 10%; the
  // window used for density dumps.
  Interval plot_window() const;

  // Subdivision seeds covering the density's support.
  std::vector<double> support_hints() const;

 private:
  std::complex<double> raw_wavefunction(double x) const;

  int n_;
  QParam q_;
  double omega_;
  std::complex<double> alpha_{0.0, 0.0};
  std::complex<double> prefactor_{0.0, 0.0};
  std::vector<std::complex<double>> coef_;  // k-sum coefficients, deformed branch
  double hermite_norm_ = 0.0;               // classical branch
  double renorm_ = 1.0;
  bool renormalized_ = false;
};

}  // namespace qlmc
