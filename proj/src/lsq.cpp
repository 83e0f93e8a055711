#include "qho/lsq.hpp"

#include <cmath>
#include <sstream>

#include "qho/errors.hpp"

namespace qho {

std::vector<double> least_squares(std::size_t m, std::size_t n,
                                  std::vector<double> a,
                                  std::vector<double> b) {
  if (m < n || a.size() != m * n || b.size() != m) {
    throw RankDeficient("least_squares: need m >= n with matching sizes");
  }

  double anorm = 0.0;
  for (double v : a) anorm += v * v;
  anorm = std::sqrt(anorm);

  /* reduce A to upper-triangular form, applying each reflection to b */
  std::vector<double> v(m);
  for (std::size_t k = 0; k < n; ++k) {
    double norm_x = 0.0;
    for (std::size_t i = k; i < m; ++i) norm_x += a[i * n + k] * a[i * n + k];
    norm_x = std::sqrt(norm_x);
    if (norm_x <= 1e-13 * anorm) {
      std::ostringstream msg;
      msg << "least_squares: column " << k << " is numerically dependent";
      throw RankDeficient(msg.str());
    }

    for (std::size_t i = k; i < m; ++i) v[i] = a[i * n + k];
    v[k] += (v[k] >= 0.0 ? norm_x : -norm_x);
    double norm_v = 0.0;
    for (std::size_t i = k; i < m; ++i) norm_v += v[i] * v[i];
    norm_v = std::sqrt(norm_v);
    for (std::size_t i = k; i < m; ++i) v[i] /= norm_v;

    for (std::size_t j = k; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += v[i] * a[i * n + j];
      for (std::size_t i = k; i < m; ++i) a[i * n + j] -= 2.0 * dot * v[i];
    }
    double dot = 0.0;
    for (std::size_t i = k; i < m; ++i) dot += v[i] * b[i];
    for (std::size_t i = k; i < m; ++i) b[i] -= 2.0 * dot * v[i];
  }

  /* back-substitute R x = Q^T b */
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k * n + j] * x[j];
    x[k] = s / a[k * n + k];
  }
  return x;
}

}  // namespace qho
