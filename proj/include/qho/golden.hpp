#ifndef QHO_GOLDEN_HPP
#define QHO_GOLDEN_HPP

#include <array>
#include <iosfwd>
#include <vector>

namespace qho::golden {

/* Reference outputs for the eight supported (tau, epsilon) parameter sets:
   the magic-number sequences the spectrum walk must reproduce exactly, and
   the liquid-drop fit parameters with their rms deviations.  These back
   the `--golden` self-check and the acceptance suite. */

struct MagicColumn {
  double tau;
  double epsilon;
  int n_max;
  long long n_total;  // capacity of the truncated scheme
  std::vector<long long> entries;
};

struct FitRow {
  double tau;
  double epsilon;
  long long n_cut;
  std::array<double, 6> a;
  double sigma;
};

const std::vector<MagicColumn>& magic_columns();
const std::vector<FitRow>& fit_rows();

/* Recompute everything and diff against the reference values, writing one
   line per check; returns true when every check passes.  Coefficients are
   compared by sign and 20% relative magnitude, sigma within 15%; magic
   sequences and capacities must match exactly. */
bool run_comparison(std::ostream& out);

}  // namespace qho::golden

#endif
