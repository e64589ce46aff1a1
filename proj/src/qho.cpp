#include "qlmc/qho.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qlmc {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

QhoState::QhoState(int n, QParam q, double omega) : n_(n), q_(q), omega_(omega) {
  if (n < 0) throw std::domain_error("QhoState: n must be nonnegative");
  const double pi_quarter = std::pow(std::numbers::pi, 0.25);

  if (q_.classical()) {
    hermite_norm_ = 1.0 / std::sqrt(std::pow(2.0, n_) * factorial(n_) *
                                    std::sqrt(std::numbers::pi));
  } else {
    // alpha = i*sqrt(log(q)/2); log q < 0 makes this a negative real.
    const std::complex<double> log_q(std::log(q_.value()), 0.0);
    alpha_ = kI * std::sqrt(log_q / 2.0);
    const std::complex<double> a2 = alpha_ * alpha_;
    const std::complex<double> root =
        std::pow(1.0 - std::exp(-2.0 * a2), n_ / 2.0);
    prefactor_ = 1.0 / (pi_quarter * std::pow(kI, n_) * root *
                        std::sqrt(q_factorial(n_, q_)));
    coef_.resize(n_ + 1);
    double sign = 1.0;
    for (int k = 0; k <= n_; ++k) {
      coef_[k] = sign * q_binomial(n_, k, q_) * std::exp(-double(k) * a2);
      sign = -sign;
    }
  }

  QuadOptions opts;
  opts.split_hints = support_hints();
  const QuadResult norm = integrate([this](double x) { return density(x); },
                                    Domain::full_line(), opts);
  if (std::abs(norm.value - 1.0) > 1e-6) {
    renorm_ = 1.0 / std::sqrt(norm.value);
    renormalized_ = true;
  }
}

std::complex<double> QhoState::raw_wavefunction(double x) const {
  if (q_.classical()) {
    return hermite_norm_ * hermite_phys(n_, x) * std::exp(-0.5 * x * x);
  }
  // The k-sum equals e^{2 i alpha n x} G_n(w) with w = -e^{-alpha^2}
  // e^{-2 i alpha x} and G_n the Rogers-Szego polynomial, whose three-term
  // recurrence G_{k+1} = (1+w)G_k - (1-q^k) w G_{k-1} avoids the cancellation
  // the termwise sum suffers as q -> 1.
  const std::complex<double> a2 = alpha_ * alpha_;
  const std::complex<double> w = -std::exp(-a2) * std::exp(-2.0 * kI * alpha_ * x);
  std::complex<double> gm1{1.0, 0.0};
  std::complex<double> g = n_ == 0 ? gm1 : 1.0 + w;
  for (int k = 1; k < n_; ++k) {
    const std::complex<double> gp1 =
        (1.0 + w) * g + std::expm1(k * std::log(q_.value())) * w * gm1;
    gm1 = g;
    g = gp1;
  }
  const std::complex<double> sum = std::exp(2.0 * kI * alpha_ * double(n_) * x) * g;
  const std::complex<double> envelope =
      std::exp(-0.5 * x * x + 1.5 * kI * alpha_ * x);
  return prefactor_ * envelope * sum;
}

std::complex<double> QhoState::wavefunction_termwise(double x) const {
  if (q_.classical()) return raw_wavefunction(x) * renorm_;
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k <= n_; ++k) {
    sum += coef_[k] * std::exp(2.0 * kI * alpha_ * double(n_ - k) * x);
  }
  const std::complex<double> envelope =
      std::exp(-0.5 * x * x + 1.5 * kI * alpha_ * x);
  return renorm_ * prefactor_ * envelope * sum;
}

std::complex<double> QhoState::wavefunction(double x) const {
  return renorm_ * raw_wavefunction(x);
}

double QhoState::density(double x) const {
  return std::norm(wavefunction(x));
}

double QhoState::energy() const {
  const double qn = q_number(n_, q_);
  double direct, averaged;
  if (q_.classical()) {
    direct = omega_ * (qn + 0.5);
    averaged = omega_ * (qn + q_number(n_ + 1, q_)) / 2.0;
  } else {
    direct = omega_ * (qn + 0.5 * std::pow(q_.value(), n_));
    averaged = omega_ * (qn + q_number(n_ + 1, q_)) / 2.0;
  }
  if (std::abs(direct - averaged) > 1e-12 * std::max(1.0, std::abs(direct))) {
    throw std::logic_error("qho energy: the two closed forms disagree");
  }
  return direct;
}

double QhoState::uncertainty_product() const {
  if (q_.classical()) return n_ + 0.5;
  const double q = q_.value();
  return (2.0 - (1.0 + q) * std::pow(q, n_)) / (2.0 * (1.0 - q));
}

double QhoState::uncertainty_numeric() const {
  QuadOptions opts;
  opts.abs_tol = 1e-9;
  opts.rel_tol = 1e-8;
  opts.split_hints = support_hints();
  const Domain line = Domain::full_line();

  const double x1 =
      integrate([this](double x) { return x * density(x); }, line, opts).value;
  const double x2 =
      integrate([this](double x) { return x * x * density(x); }, line, opts).value;

  auto dpsi = [this](double x) {
    const double h = 1e-5;
    const std::complex<double> d1 =
        (wavefunction(x + h) - wavefunction(x - h)) / (2.0 * h);
    const std::complex<double> d2 =
        (wavefunction(x + h / 2) - wavefunction(x - h / 2)) / h;
    return (4.0 * d2 - d1) / 3.0;
  };
  const double p2 =
      integrate([&](double x) { return std::norm(dpsi(x)); }, line, opts).value;
  const double p1 =
      integrate([&](double x) { return std::imag(std::conj(wavefunction(x)) * dpsi(x)); },
                line, opts)
          .value;

  const double var_x = x2 - x1 * x1;
  const double var_p = p2 - p1 * p1;
  return std::sqrt(var_x) * std::sqrt(var_p);
}

Interval QhoState::plot_window() const {
  const Interval s =
      effective_support([this](double x) { return density(x); }, 0.0, 1e-16);
  const double pad = 0.1 * s.width() / 2.0;
  return Interval{s.lo - pad, s.hi + pad};
}

std::vector<double> QhoState::support_hints() const {
  const double reach = std::sqrt(2.0 * n_ + 1.0) + 6.0;
  std::vector<double> hints;
  for (double x = -reach; x <= reach; x += 0.5) hints.push_back(x);
  return hints;
}

}  // namespace qlmc
