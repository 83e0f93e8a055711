#include "qho/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "qho/errors.hpp"

namespace qho {

std::optional<int> detect_inversion(const QhoParams& p, int n_limit) {
  for (int n = 0; n <= n_limit; ++n) {
    const double e_top = vfo_energy(energy({n, n}, p), p);
    for (int l : allowed_l(n)) {
      if (l == n) continue;
      if (vfo_energy(energy({n, l}, p), p) < e_top) return n;
    }
  }
  return std::nullopt;
}

LevelScheme build_scheme(const QhoParams& p, int n_max) {
  if (auto inv = detect_inversion(p, n_max)) {
    std::ostringstream msg;
    msg << "level order inverts at n=" << *inv << " (n_max=" << n_max
        << ", tau=" << p.tau << ", epsilon=" << p.epsilon
        << "); the (n_max, n_max) truncation rule does not apply";
    throw InversionBeforeNmax(msg.str());
  }

  std::vector<Level> all;
  for (int n = 0; n <= n_max; ++n) {
    for (int l : allowed_l(n)) {
      const double ep = vfo_energy(energy({n, l}, p), p);
      all.push_back({n, l, ep, 2 * (2 * l + 1)});
    }
  }

  const double e_boundary = vfo_energy(energy({n_max, n_max}, p), p);

  LevelScheme scheme;
  scheme.params = p;
  scheme.n_max = n_max;
  for (const Level& lev : all) {
    if (lev.energy <= e_boundary) scheme.levels.push_back(lev);
  }
  std::sort(scheme.levels.begin(), scheme.levels.end(),
            [](const Level& a, const Level& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              if (a.n != b.n) return a.n < b.n;
              return a.l < b.l;
            });

  if (p.epsilon > 0.0) {
    const double e_turn = 1.0 / (2.0 * p.epsilon);
    for (const Level& lev : scheme.levels) {
      if (energy({lev.n, lev.l}, p) >= e_turn) {
        std::ostringstream msg;
        msg << "retained level (n=" << lev.n << ", l=" << lev.l
            << ") has bare energy >= 1/(2 epsilon) = " << e_turn
            << "; E - eps E^2 is not order-preserving there";
        throw NonMonotoneVfo(msg.str());
      }
    }
  }

  for (const Level& lev : scheme.levels) scheme.total_capacity += lev.capacity;
  return scheme;
}

MagicTable magic_numbers(const LevelScheme& scheme, double delta) {
  MagicTable table;
  table.delta = delta;
  long long cum = 0;
  int i = 1;
  for (std::size_t k = 0; k < scheme.levels.size(); ++k) {
    cum += scheme.levels[k].capacity;
    if (k + 1 < scheme.levels.size() &&
        scheme.levels[k + 1].energy - scheme.levels[k].energy > delta) {
      table.entries.emplace_back(i++, cum);
    }
  }
  return table;
}

}  // namespace qho
