#include "qlmc/morse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qlmc {

namespace {

// CODATA values.
constexpr double kHbar = 1.054571817e-34;      // J s
constexpr double kAmu = 1.66053906660e-27;     // kg
constexpr double kSpeedOfLight = 2.99792458e10;  // cm/s
constexpr double kAngstrom = 1e-10;            // m

}  // namespace

Molecule::Molecule(std::string name_, double a_, double r_e_, double D_e_, double mu_)
    : name(std::move(name_)), a(a_), r_e(r_e_), D_e(D_e_), mu(mu_) {
  if (!(a > 0.0) || !(r_e > 0.0) || !(D_e > 0.0) || !(mu > 0.0)) {
    throw std::invalid_argument("Molecule: all constants must be positive");
  }
}

namespace molecules {

Molecule hcl() { return Molecule("HCl", 1.868, 1.275, 37255.0, 0.980); }
Molecule h2() { return Molecule("H2", 1.944, 0.742, 38266.0, 0.504); }
std::vector<Molecule> builtin() { return {hcl(), h2()}; }

}  // namespace molecules

MorseParams derive_params(const Molecule& mol, const QParam& q) {
  const double alpha = mol.a * mol.r_e;
  const double re_m = mol.r_e * kAngstrom;
  // hbar^2/(2 mu r_e^2) expressed in wavenumbers (divide by h*c).
  const double E0 = kHbar / (4.0 * std::numbers::pi * kSpeedOfLight *
                             (mol.mu * kAmu) * re_m * re_m);
  const double lambda = std::sqrt(mol.D_e / (alpha * alpha * E0));
  if (lambda * q.value() < 0.5) {
    throw NoBoundStates("derive_params: lambda*q < 1/2, no bound states for " +
                        mol.name);
  }
  const int n_max = static_cast<int>(std::floor(lambda * q.value() - 0.5));
  return MorseParams{mol, q, alpha, E0, lambda, n_max};
}

double morse_potential(const MorseParams& p, double x) {
  const double e1 = std::exp(-2.0 * p.alpha * x);
  const double e2 = std::exp(-p.alpha * x);
  return p.molecule.D_e * e1 - 2.0 * p.q.value() * p.molecule.D_e * e2;
}

MorseState::MorseState(const MorseParams& params, int n)
    : params_(params), n_(n), s_(params.lambda * params.q.value() - n - 0.5) {
  if (n < 0 || n > params_.n_max) {
    throw std::domain_error("MorseState: n outside [0, n_max]");
  }
  if (!(s_ > 0.0)) {
    throw std::domain_error("MorseState: lambda*q - n - 1/2 must be positive");
  }

  // Coarse scan for the density peak; seeds the support window.
  const std::vector<double> hints = support_hints();
  const double xl = hints.front();
  const double xr = hints.back();
  double best = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double x = xl + (xr - xl) * i / 4000.0;
    const double v = std::abs(raw_wavefunction(x));
    if (v > best) {
      best = v;
      peak_x_ = x;
    }
  }

  QuadOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-10;
  opts.split_hints = hints;
  const QuadResult norm2 = integrate(
      [this](double x) {
        const double p = raw_wavefunction(x);
        return p * p;
      },
      Domain::full_line(), opts);
  norm_ = 1.0 / std::sqrt(norm2.value);
}

double MorseState::raw_wavefunction(double x) const {
  const double u = -params_.alpha * x;
  if (u > 700.0) return 0.0;  // double-exponential cutoff on the left
  const double log_t = std::log(2.0 * params_.lambda) + u;
  const double t = std::exp(log_t);
  const double log_mag = -params_.alpha * s_ * x - 0.5 * t;
  if (log_mag + n_ * std::max(0.0, log_t) < -700.0) return 0.0;
  return std::exp(log_mag) * laguerre_general(n_, 2.0 * s_, t);
}

double MorseState::wavefunction(double x) const {
  return norm_ * raw_wavefunction(x);
}

double MorseState::density(double x) const {
  const double p = wavefunction(x);
  return p * p;
}

double MorseState::energy() const {
  return -params_.alpha * params_.alpha * params_.E0 * s_ * s_;
}

Interval MorseState::plot_window() const {
  const Interval s = effective_support([this](double x) { return density(x); },
                                       peak_x_, 1e-16);
  const double pad = 0.1 * s.width() / 2.0;
  return Interval{s.lo - pad, s.hi + pad};
}

std::vector<double> MorseState::support_hints() const {
  const double alpha = params_.alpha;
  const double lambda = params_.lambda;
  // Left of xl the e^{-lambda e^{-alpha x}} factor underflows; right of xr
  // the e^{-alpha s x} envelope (with the Laguerre growth margin) does.
  const double xl = -std::log(800.0 / lambda) / alpha - 0.5;
  const double xr =
      (760.0 + 2.0 * n_ * std::max(0.0, std::log(2.0 * lambda))) /
          (2.0 * alpha * s_) +
      1.0;

  std::vector<double> hints;
  for (int i = 0; i <= 32; ++i) hints.push_back(xl + (xr - xl) * i / 32.0);
  // Geometric refinement around the well region, where the peaks live.
  const double x_well = -std::log(std::max(params_.q.value(), 0.05)) / alpha;
  for (double step = 1.0 / 128.0; step <= 8.0; step *= 2.0) {
    if (x_well - step > xl) hints.push_back(x_well - step);
    if (x_well + step < xr) hints.push_back(x_well + step);
  }
  hints.push_back(x_well);
  std::sort(hints.begin(), hints.end());
  return hints;
}

}  // namespace qlmc
