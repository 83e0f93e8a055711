#ifndef QHO_CORE_HPP
#define QHO_CORE_HPP

#include <vector>

namespace qho {

/* Model configuration for the deformed oscillator.

   tau         deformation, q = e^tau, real only
   epsilon     anharmonicity of the variable-frequency extension,
               units 1/hbar_omega0
   hbar_omega0 overall energy scale; 1 by default so that energies come out
               in oscillator units */
struct QhoParams {
  double tau = 0.0;
  double epsilon = 0.0;
  double hbar_omega0 = 1.0;
};

/* A single-particle orbital: n vibrational quanta, angular momentum l.
   Valid states have l <= n with n - l even. */
struct QuantumNumbers {
  int n = 0;
  int l = 0;
};

bool valid(const QuantumNumbers& qn);

/* The q-number [x] = (q^x - q^-x)/(q - q^-1) = sinh(tau x)/sinh(tau).
   For |tau| < 1e-6 the sinh ratio is evaluated through its series limit
   x (1 + tau^2 (x^2 - 1)/6) to avoid the 0/0 at tau = 0. */
double q_number(double x, double tau);

/* l values available inside shell n: n, n-2, ..., down to 1 or 0. */
std::vector<int> allowed_l(int n);

/* Dimensionless eigenvalue of the deformed oscillator:
     e_q(n, l) = [n] q^(n+1) - (q (q - q^-1) / [2]) [l][l+1].
   e_q(0,0) = 0 and e_q(1,1) = 1 hold identically in tau; as tau -> 0
   the value reduces to n. */
double e_q(const QuantumNumbers& qn, double tau);

/* e_q scaled to energy units: hbar_omega0 * e_q(qn, tau). */
double energy(const QuantumNumbers& qn, const QhoParams& p);

/* Variable-frequency (anharmonic) correction E' = E - eps E^2.  Monotone
   in E only while E < 1/(2 eps); callers needing order preservation must
   check that bound themselves (the spectrum builder does). */
double vfo_energy(double e, const QhoParams& p);

/* Second-order expansion of e_q in tau (hbar_omega0 = 1 units):
     n - tau (l(l+1) - n(n+1)) - tau^2 (l(l+1) - (1/3) n(n+1)(2n+1)).
   The remainder is O(tau^3). */
double taylor_energy(const QuantumNumbers& qn, double tau);

}  // namespace qho

#endif
