#ifndef QHO_LSQ_HPP
#define QHO_LSQ_HPP

#include <cstddef>
#include <vector>

namespace qho {

/* Dense linear least squares min ||A x - b||_2 by Householder QR
   (Trefethen & Bau, Algorithms 10.1-10.2).  a is row-major m x n with
   m >= n and must have full column rank; throws RankDeficient otherwise.
   QR is used instead of normal equations because the intended basis
   (consecutive powers of N^{1/3}) is nearly collinear and squaring its
   condition number would cost half the available digits. */
std::vector<double> least_squares(std::size_t m, std::size_t n,
                                  std::vector<double> a,
                                  std::vector<double> b);

}  // namespace qho

#endif
