#ifndef QHO_VARIATIONAL_HPP
#define QHO_VARIATIONAL_HPP

#include "qho/core.hpp"

namespace qho {

/* Variable-moment-of-inertia rotor: E(J) = J(J+1)/(2 Theta) +
   C (Theta - theta0)^2 / 2, minimized over Theta at each J. */
struct VmiParams {
  double c = 1.0;      // stiffness
  double theta0 = 1.0; // ground-state moment of inertia
};

/* The minimizing moment of inertia: unique real root of
   C Theta^2 (Theta - theta0) = J(J+1)/2, found by bisection on the
   bracket [theta0, theta0 + (J(J+1)/(2C))^{1/3} + 1] to relative
   tolerance 1e-12. */
double vmi_theta(int j, const VmiParams& p);

/* E(J) evaluated at the minimizing Theta; 0 for J = 0 by convention
   (also covering the theta0 = 0 corner). */
double vmi_energy(int j, const VmiParams& p);

/* Variable-frequency oscillator levels (hbar = 1):
     E(n) = omega0 (n + 1/2) - (n + 1/2)^2 / (2C),
   with level-dependent frequency omega(n) = omega0 - (n + 1/2)/C. */
double vho_spectrum(int n, double c, double omega0);
double vho_omega(int n, double c, double omega0);

/* Morse well V(x) = D (1 - e^{-alpha x})^2. */
struct MorseParams {
  double d = 1.0;     // well depth
  double alpha = 1.0; // inverse range
  double mass = 1.0;
};

double morse_omega(const MorseParams& p);  // alpha sqrt(2D/m)
double morse_xe(const MorseParams& p);     // alpha / (2 sqrt(2 m D))

/* E(n) = omega [(n + 1/2) - x_e (n + 1/2)^2]; identical to vho_spectrum
   under omega0 = morse_omega and C = 1/(2 omega0 x_e). */
double morse_spectrum(int n, const MorseParams& p);

/* Variationally derived anharmonic oscillator on top of the deformed
   spectrum: E'(n,l) = omega00 e_q(n,l) - e_q^2(n,l)/(2C).  This equals
   vfo_energy(energy(qn)) with epsilon = 1/(2 C omega00^2) and
   hbar_omega0 = omega00 — the central cross-check of this module. */
double qvfo_energy(const QuantumNumbers& qn, double tau, double c,
                   double omega00);

/* Level-dependent frequency, in two bookkeeping conventions whose
   energies coincide but whose shifts differ by a factor of 2:

   stationary — omega00 - e_q/C: the frequency at which the variational
   energy functional is stationary (the full shift).

   absorbed — omega00 - e_q/(2C): the effective frequency with the
   quadratic term folded into a single factor, so that
   E' = omega_absorbed * e_q holds identically. */
double qvfo_frequency(const QuantumNumbers& qn, double tau, double c,
                      double omega00);
double qvfo_frequency_absorbed(const QuantumNumbers& qn, double tau, double c,
                               double omega00);

}  // namespace qho

#endif
