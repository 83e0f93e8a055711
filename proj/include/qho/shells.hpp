#ifndef QHO_SHELLS_HPP
#define QHO_SHELLS_HPP

#include <array>
#include <utility>
#include <vector>

#include "qho/spectrum.hpp"

namespace qho {

/* Cumulative ground-state energy: values[N] is the sum of the N cheapest
   single-particle energies, N = 0..N_cut (values[0] = 0). */
struct EnergySeries {
  std::vector<double> values;
  long long n_cut() const { return static_cast<long long>(values.size()) - 1; }
};

/* Six-term smooth expansion fitted to sampled totals:
     E_av(N) = a1 N^{1/3} + a2 N^{2/3} + a3 N + a4 N^{4/3} + a5 N^{5/3} + a6 N^2.
   sigma is the rms residual sqrt(SSR/m) over the m fitted samples. */
struct LiquidDropFit {
  std::array<double, 6> a{};
  double sigma = 0.0;
  int n_points = 0;
  long long n_cut = 0;
};

struct ShellSample {
  long long n_particles = 0;
  double e_total = 0.0;
  double e_avg = 0.0;
  double e_shell = 0.0;  // e_total - e_avg, exactly
};

struct ShellDecomposition {
  std::vector<ShellSample> samples;
  LiquidDropFit fit;
};

/* Fill the scheme's states in energy order and accumulate.  Each level
   contributes `capacity` states at its energy; partial filling of the
   last level falls out naturally.  Throws CutExceedsScheme when n_cut
   asks for more electrons than the scheme holds. */
EnergySeries total_energy_series(const LevelScheme& scheme, long long n_cut);

/* Centered moving averages: for centers N = start, start+stride, ... emit
   the arithmetic mean of values[N-h .. N+h] with h = (stride-1)/2,
   stopping at the last center whose full window fits inside the series.
   stride must be odd. */
std::vector<std::pair<long long, double>> window_samples(
    const EnergySeries& series, long long start = 6, long long stride = 11);

/* Least-squares fit of the six-term expansion to (N, E) samples.  The
   basis is evaluated as powers of x = N^{1/3} to tame the conditioning;
   no intercept, no weights.  Throws RankDeficient below six distinct
   abscissae. */
LiquidDropFit liquid_drop_fit(
    const std::vector<std::pair<long long, double>>& samples);

/* Evaluate a fit at particle number N. */
double liquid_drop_eval(const LiquidDropFit& fit, long long n_particles);

/* total_energy_series -> window_samples -> liquid_drop_fit, then
   E_shell = sampled E - fitted E_av at each sample abscissa.  The series
   is accumulated up to n_cut + (stride-1)/2 so the centered windows reach
   through n_cut itself; sample abscissae then run 6, 17, ..., up to n_cut. */
ShellDecomposition shell_decomposition(const LevelScheme& scheme,
                                       long long n_cut);

/* Locate the beat node of the shell-energy oscillation: take the strict
   local maxima of |E_shell| as its envelope, find the envelope's own
   strict local maxima (the antinodes), and return the sample N minimizing
   the envelope between the first and last antinode (ties resolve to the
   smallest N).  Throws TooFewExtrema when no interior minimum exists. */
long long beat_node(const ShellDecomposition& dec);

}  // namespace qho

#endif
