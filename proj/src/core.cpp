#include "qho/core.hpp"

#include <cmath>

namespace qho {

bool valid(const QuantumNumbers& qn) {
  return qn.n >= 0 && qn.l >= 0 && qn.l <= qn.n && (qn.n - qn.l) % 2 == 0;
}

double q_number(double x, double tau) {
  if (std::fabs(tau) < 1e-6) {
    /* series limit of sinh(tau x)/sinh(tau); the tau^2 term keeps the
       branch accurate to O(tau^4) so it joins smoothly at the threshold */
    return x * (1.0 + tau * tau * (x * x - 1.0) / 6.0);
  }
  return std::sinh(tau * x) / std::sinh(tau);
}

std::vector<int> allowed_l(int n) {
  std::vector<int> out;
  for (int l = n; l >= 0; l -= 2) out.push_back(l);
  return out;
}

double e_q(const QuantumNumbers& qn, double tau) {
  /* q (q - q^-1) / [2]; at tau = 0 this is exactly 0 and the l term drops */
  const double fac =
      std::exp(tau) * (2.0 * std::sinh(tau)) / q_number(2.0, tau);
  const double n = static_cast<double>(qn.n);
  const double l = static_cast<double>(qn.l);
  return q_number(n, tau) * std::exp(tau * (n + 1.0)) -
         fac * q_number(l, tau) * q_number(l + 1.0, tau);
}

double energy(const QuantumNumbers& qn, const QhoParams& p) {
  return p.hbar_omega0 * e_q(qn, p.tau);
}

double vfo_energy(double e, const QhoParams& p) {
  return e - p.epsilon * e * e;
}

double taylor_energy(const QuantumNumbers& qn, double tau) {
  const double ll = qn.l * (qn.l + 1.0);
  const double nn = qn.n * (qn.n + 1.0);
  return qn.n - tau * (ll - nn) - tau * tau * (ll - nn * (2.0 * qn.n + 1.0) / 3.0);
}

}  // namespace qho
