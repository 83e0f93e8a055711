#include "qho/variational.hpp"

#include <cmath>

namespace qho {

double vmi_theta(int j, const VmiParams& p) {
  if (j == 0) return p.theta0;
  const double rhs = j * (j + 1.0) / 2.0;

  /* f is negative at theta0 and positive at the bracket top: the cubic
     term alone already exceeds rhs there, so the root is enclosed */
  const auto f = [&](double theta) {
    return p.c * theta * theta * (theta - p.theta0) - rhs;
  };
  double lo = p.theta0;
  double hi = p.theta0 + std::cbrt(rhs / p.c) + 1.0;

  /* bisect to full double resolution (comfortably past 1e-12 relative) */
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * std::fabs(hi)) break;
  }
  return 0.5 * (lo + hi);
}

double vmi_energy(int j, const VmiParams& p) {
  if (j == 0) return 0.0;
  const double theta = vmi_theta(j, p);
  const double d = theta - p.theta0;
  return j * (j + 1.0) / (2.0 * theta) + 0.5 * p.c * d * d;
}

double vho_spectrum(int n, double c, double omega0) {
  const double k = n + 0.5;
  return omega0 * k - k * k / (2.0 * c);
}

double vho_omega(int n, double c, double omega0) {
  return omega0 - (n + 0.5) / c;
}

double morse_omega(const MorseParams& p) {
  return p.alpha * std::sqrt(2.0 * p.d / p.mass);
}

double morse_xe(const MorseParams& p) {
  return p.alpha / (2.0 * std::sqrt(2.0 * p.mass * p.d));
}

double morse_spectrum(int n, const MorseParams& p) {
  const double k = n + 0.5;
  return morse_omega(p) * (k - morse_xe(p) * k * k);
}

double qvfo_energy(const QuantumNumbers& qn, double tau, double c,
                   double omega00) {
  const double e = e_q(qn, tau);
  return omega00 * e - e * e / (2.0 * c);
}

double qvfo_frequency(const QuantumNumbers& qn, double tau, double c,
                      double omega00) {
  return omega00 - e_q(qn, tau) / c;
}

double qvfo_frequency_absorbed(const QuantumNumbers& qn, double tau, double c,
                               double omega00) {
  return omega00 - e_q(qn, tau) / (2.0 * c);
}

}  // namespace qho
