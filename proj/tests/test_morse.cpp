#include <cmath>

#include "doctest.h"
#include "qlmc/morse.hpp"
#include "qlmc/quadrature.hpp"

using namespace qlmc;

namespace {

int count_sign_changes(const MorseState& st, double lo, double hi, int samples) {
  int changes = 0;
  double prev = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double v = st.wavefunction(x);
    if (std::abs(v) < 1e-12) continue;
    if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++changes;
    prev = v;
  }
  return changes;
}

int count_local_maxima(const MorseState& st, double lo, double hi, int samples) {
  int maxima = 0;
  double prev2 = st.density(lo);
  double prev1 = st.density(lo + (hi - lo) / samples);
  for (int i = 2; i <= samples; ++i) {
    const double x = lo + (hi - lo) * i / samples;
    const double v = st.density(x);
    if (prev1 > prev2 && prev1 > v && prev1 > 1e-10) ++maxima;
    prev2 = prev1;
    prev1 = v;
  }
  return maxima;
}

}  // namespace

TEST_CASE("Molecule validation and registry") {
  CHECK_THROWS_AS(Molecule("bad", -1.0, 1.0, 1.0, 1.0), std::invalid_argument);
  const auto mols = molecules::builtin();
  CHECK(mols.size() == 2);
  CHECK(mols[0].name == "HCl");
  CHECK(mols[1].name == "H2");
  CHECK(molecules::hcl().D_e == doctest::Approx(37255.0));
  CHECK(molecules::h2().mu == doctest::Approx(0.504));
}

TEST_CASE("derive_params from spectroscopic constants") {
  const MorseParams hcl = derive_params(molecules::hcl(), QParam(0.35));
  CHECK(hcl.alpha == doctest::Approx(1.868 * 1.275));
  CHECK(hcl.E0 == doctest::Approx(10.58).epsilon(5e-3));
  CHECK(hcl.lambda == doctest::Approx(24.9).epsilon(2e-3));
  CHECK(hcl.n_max == 8);

  const MorseParams h2 = derive_params(molecules::h2(), QParam(0.35));
  CHECK(h2.n_max == 5);

  // Deep deformation with no remaining bound states.
  CHECK_THROWS_AS(derive_params(molecules::hcl(), QParam(0.01)), NoBoundStates);
}

TEST_CASE("n_max is nondecreasing in q") {
  for (const auto& mol : molecules::builtin()) {
    int prev = -1;
    for (double q = 0.35; q <= 1.0; q += 0.05) {
      const int nm = derive_params(mol, QParam(std::min(q, 1.0))).n_max;
      CHECK(nm >= prev);
      prev = nm;
    }
  }
}

TEST_CASE("potential shape") {
  const MorseParams p1 = derive_params(molecules::hcl(), QParam(1.0));
  CHECK(morse_potential(p1, 0.0) == doctest::Approx(-37255.0));
  CHECK(std::abs(morse_potential(p1, 40.0)) < 1e-30);

  const MorseParams ph = derive_params(molecules::hcl(), QParam(0.5));
  const double x_min = std::log(2.0) / ph.alpha;
  CHECK(morse_potential(ph, x_min) == doctest::Approx(-0.25 * 37255.0));
  // x_min is a minimum
  CHECK(morse_potential(ph, x_min - 1e-3) > morse_potential(ph, x_min));
  CHECK(morse_potential(ph, x_min + 1e-3) > morse_potential(ph, x_min));
  // general minimum position/value: -q^2 De at -ln(q)/alpha
  for (double q : {0.4, 0.75, 1.0}) {
    const MorseParams p = derive_params(molecules::h2(), QParam(q));
    const double xm = -std::log(q) / p.alpha;
    CHECK(morse_potential(p, xm) == doctest::Approx(-q * q * 38266.0));
  }
}

TEST_CASE("state normalization across molecules and q") {
  for (const auto& mol : molecules::builtin()) {
    for (double q : {0.35, 0.6, 1.0}) {
      const MorseParams p = derive_params(mol, QParam(q));
      for (int n = 0; n <= p.n_max; n += 2) {
        const MorseState st(p, n);
        QuadOptions opts;
        opts.split_hints = st.support_hints();
        const auto r = integrate([&](double x) { return st.density(x); },
                                 Domain::full_line(), opts);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("invalid quantum numbers are unconstructible") {
  const MorseParams p = derive_params(molecules::h2(), QParam(0.35));
  CHECK_THROWS_AS(MorseState(p, p.n_max + 1), std::domain_error);
  CHECK_THROWS_AS(MorseState(p, -1), std::domain_error);
}

TEST_CASE("node counts follow the oscillation theorem") {
  for (const auto& mol : molecules::builtin()) {
    const MorseParams p = derive_params(mol, QParam(0.6));
    for (int n = 0; n <= p.n_max; ++n) {
      const MorseState st(p, n);
      const Interval w = st.plot_window();
      CHECK(count_sign_changes(st, w.lo, w.hi, 40000) == n);
    }
  }
}

TEST_CASE("HCl n=1 at q=1: two maxima, one interior zero") {
  const MorseParams p = derive_params(molecules::hcl(), QParam(1.0));
  const MorseState st(p, 1);
  const Interval w = st.plot_window();
  CHECK(count_sign_changes(st, w.lo, w.hi, 40000) == 1);
  CHECK(count_local_maxima(st, w.lo, w.hi, 40000) == 2);
}

TEST_CASE("ground state density is asymmetric with a heavier right tail") {
  const MorseParams p = derive_params(molecules::hcl(), QParam(1.0));
  const MorseState st(p, 0);
  // peak position
  double peak_x = 0.0, peak = 0.0;
  for (double x = -0.5; x <= 0.5; x += 1e-4) {
    if (st.density(x) > peak) {
      peak = st.density(x);
      peak_x = x;
    }
  }
  for (double d : {0.05, 0.1, 0.2}) {
    CHECK(st.density(peak_x + d) > st.density(peak_x - d));
  }
}

TEST_CASE("energies are negative, ordered, and match the closed form") {
  for (double q : {0.35, 0.7, 1.0}) {
    const MorseParams p = derive_params(molecules::hcl(), QParam(q));
    double prev = -1e18;
    for (int n = 0; n <= p.n_max; ++n) {
      const MorseState st(p, n);
      const double e = st.energy();
      CHECK(e < 0.0);
      CHECK(e > prev);
      const double s = p.lambda * q - n - 0.5;
      CHECK(e == doctest::Approx(-p.alpha * p.alpha * p.E0 * s * s));
      prev = e;
    }
  }
}

TEST_CASE("q=1 energies match the textbook Morse formula") {
  const MorseParams p = derive_params(molecules::h2(), QParam(1.0));
  for (int n = 0; n <= p.n_max; ++n) {
    const double s = p.lambda - n - 0.5;
    CHECK(MorseState(p, n).energy() ==
          doctest::Approx(-p.alpha * p.alpha * p.E0 * s * s).epsilon(1e-12));
  }
}

TEST_CASE("orthogonality at fixed molecule and q") {
  for (double q : {0.5, 1.0}) {
    const MorseParams p = derive_params(molecules::h2(), QParam(q));
    std::vector<MorseState> states;
    for (int n = 0; n <= p.n_max; ++n) states.emplace_back(p, n);
    for (size_t m = 0; m < states.size(); ++m) {
      for (size_t n = m + 1; n < states.size(); ++n) {
        QuadOptions opts;
        opts.abs_tol = 1e-9;
        opts.rel_tol = 1e-8;
        opts.split_hints = states[n].support_hints();
        const auto r = integrate(
            [&](double x) {
              return states[m].wavefunction(x) * states[n].wavefunction(x);
            },
            Domain::full_line(), opts);
        CHECK(std::abs(r.value) < 1e-6);
      }
    }
  }
}

TEST_CASE("mass below x = -1 is negligible") {
  for (const auto& mol : molecules::builtin()) {
    for (double q : {0.35, 1.0}) {
      const MorseParams p = derive_params(mol, QParam(q));
      const MorseState st(p, 0);
      const auto r = integrate([&](double x) { return st.density(x); },
                               Domain::interval(-50.0, -1.0));
      CHECK(r.value < 1e-12);
    }
  }
}

TEST_CASE("smaller q spreads the H2 n=4 density") {
  const MorseState tight(derive_params(molecules::h2(), QParam(1.0)), 4);
  const MorseState spread(derive_params(molecules::h2(), QParam(0.5)), 4);
  CHECK(spread.plot_window().width() > tight.plot_window().width());
}

TEST_CASE("density tails vanish on both sides") {
  const MorseParams p = derive_params(molecules::hcl(), QParam(0.7));
  const MorseState st(p, 2);
  CHECK(st.density(-5.0) == 0.0);
  CHECK(st.density(1000.0) < 1e-200);
}
