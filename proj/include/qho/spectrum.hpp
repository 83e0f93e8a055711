#ifndef QHO_SPECTRUM_HPP
#define QHO_SPECTRUM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qho/core.hpp"

namespace qho {

/* One single-particle level.  energy is the anharmonically corrected value
   E' (in units of hbar_omega0); capacity = 2(2l+1) counts spin times
   magnetic substates. */
struct Level {
  int n = 0;
  int l = 0;
  double energy = 0.0;
  int capacity = 0;
};

/* Sorted, truncated level list for one parameter set.  Levels are ordered
   by (energy, n, l) ascending; total_capacity is the electron number N_max
   the scheme can hold. */
struct LevelScheme {
  QhoParams params;
  int n_max = 0;
  std::vector<Level> levels;
  long long total_capacity = 0;
};

/* Shell closures: entries (i, N_i) with i counting from 1 and N_i the
   cumulative electron count in front of each gap larger than delta. */
struct MagicTable {
  std::vector<std::pair<int, long long>> entries;
  double delta = 0.38;
};

/* Smallest n <= n_limit whose lowest-energy member (by E') is not the
   l = n one, or nothing if no such shell exists.  Exact ties do not count
   as an inversion. */
std::optional<int> detect_inversion(const QhoParams& p, int n_limit);

/* Enumerate all (n, l) with n <= n_max, apply the anharmonic correction,
   keep the levels with E' <= E'(n_max, n_max), and sort.  The cut is
   energy-based: high shells contribute their low-lying members even when
   the shell as a whole is truncated.

   Throws InversionBeforeNmax if the truncation rule is invalid for these
   parameters, and NonMonotoneVfo if any retained level sits at or beyond
   the turning point E = 1/(2 eps) of the anharmonic map. */
LevelScheme build_scheme(const QhoParams& p, int n_max);

/* Walk the sorted levels; after each one except the last, a gap to the
   next level larger than delta closes a shell and records the cumulative
   capacity so far.  The edge beyond the final (truncated) level is never
   treated as a gap. */
MagicTable magic_numbers(const LevelScheme& scheme, double delta = 0.38);

}  // namespace qho

#endif
