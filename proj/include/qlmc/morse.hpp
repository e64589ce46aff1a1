#pragma once

#include <string>
#include <vector>

#include "qlmc/qmath.hpp"
#include "qlmc/quadrature.hpp"

namespace qlmc {

/// Spectroscopic constants of a diatomic molecule.
struct Molecule {
  std::string name;
  double a;    // potential range constant, 1/Angstrom
  double r_e;  // equilibrium bond length, Angstrom
  double D_e;  // well depth, 1/cm
  double mu;   // reduced mass, amu

  Molecule(std::string name, double a, double r_e, double D_e, double mu);
};

namespace molecules {
Molecule hcl();
Molecule h2();
std::vector<Molecule> builtin();
}  // namespace molecules

class NoBoundStates : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dimensionless parameters of the deformed Morse problem for one molecule,
/// in the scaled coordinate x = (r - r_e)/r_e.
struct MorseParams {
  Molecule molecule;
  QParam q;
  double alpha;   // a * r_e
  double E0;      // hbar^2/(2 mu r_e^2), in 1/cm
  double lambda;  // sqrt(D_e/(alpha^2 E0))
  int n_max;      // floor(lambda*q - 1/2)
};

// Unit conversion uses CODATA constants; throws NoBoundStates if
// lambda*q < 1/2.
MorseParams derive_params(const Molecule& mol, const QParam& q);

// D_e e^{-2 alpha x} - 2 q D_e e^{-alpha x}, in 1/cm.
double morse_potential(const MorseParams& p, double x);

/// One bound state; the normalization constant is fixed by quadrature of the
/// squared wavefunction over the full real line at construction.
class MorseState {
 public:
  MorseState(const MorseParams& params, int n);

  const MorseParams& params() const { return params_; }
  int n() const { return n_; }
  double norm_constant() const { return norm_; }
  double exponent_s() const { return s_; }  // lambda*q - n - 1/2

  double wavefunction(double x) const;
  double density(double x) const;

  // -alpha^2 E0 (lambda q - n - 1/2)^2, in 1/cm.
  double energy() const;

  // Effective support of the density at threshold 1e-16, padded 10%.
  Interval plot_window() const;

  // Integration bracket [xl, xr] outside which the density underflows, plus
  // interior subdivision seeds.
  std::vector<double> support_hints() const;

 private:
  double raw_wavefunction(double x) const;

  MorseParams params_;
  int n_;
  double s_;
  double norm_ = 1.0;
  double peak_x_ = 0.0;
};

}  // namespace qlmc
