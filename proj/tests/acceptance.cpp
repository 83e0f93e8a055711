/* Acceptance gate: every release-blocking check in one binary, one line of
   output per criterion.  Exit code is the number of failed criteria, so the
   test harness fails if (and only if) any line reads FAIL.  Checks that are
   known not to hold for this implementation are still run honestly — the
   measured values are printed, not adjusted. */

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qho/core.hpp"
#include "qho/golden.hpp"
#include "qho/orbits.hpp"
#include "qho/shells.hpp"
#include "qho/spectrum.hpp"
#include "qho/variational.hpp"

namespace {

using qho::golden::magic_columns;
using qho::golden::fit_rows;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

int n_max_for(double tau, double epsilon) {
  for (const auto& col : magic_columns()) {
    if (col.tau == tau && col.epsilon == epsilon) return col.n_max;
  }
  return 26;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

/* ---- 1: the eight closure columns, exact, under a second each ---- */

bool magic_columns_exact(std::string& detail) {
  bool ok = true;
  int exact = 0;
  double worst = 0.0;
  std::ostringstream extra;
  for (const auto& col : magic_columns()) {
    const auto t0 = std::chrono::steady_clock::now();
    const qho::LevelScheme scheme =
        qho::build_scheme({col.tau, col.epsilon, 1.0}, col.n_max);
    const qho::MagicTable table = qho::magic_numbers(scheme, 0.38);
    const double dt = seconds_since(t0);
    if (dt > worst) worst = dt;

    bool match = table.entries.size() == col.entries.size();
    for (std::size_t k = 0; match && k < col.entries.size(); ++k) {
      match = table.entries[k].first == static_cast<int>(k) + 1 &&
              table.entries[k].second == col.entries[k];
    }
    if (match) {
      ++exact;
    } else {
      ok = false;
      extra << " tau=" << col.tau << " eps=" << col.epsilon << " differs;";
    }
    if (dt >= 1.0) {
      ok = false;
      extra << " tau=" << col.tau << " eps=" << col.epsilon << " took "
            << fmt(dt) << " s;";
    }
  }
  detail = std::to_string(exact) + "/8 columns exact, slowest " + fmt(worst) +
           " s" + extra.str();
  return ok;
}

/* ---- 2: capacities of the truncated schemes ---- */

bool truncation_capacities(std::string& detail) {
  bool ok = true;
  std::ostringstream got;
  for (const auto& col : magic_columns()) {
    const qho::LevelScheme scheme =
        qho::build_scheme({col.tau, col.epsilon, 1.0}, col.n_max);
    got << (got.str().empty() ? "" : ",") << scheme.total_capacity;
    if (scheme.total_capacity != col.n_total) ok = false;
  }
  detail = "N_max = {" + got.str() + "}";
  return ok;
}

/* ---- 3: the eight smooth-background fits ---- */

bool liquid_drop_fits(std::string& detail) {
  bool ok = true;
  std::ostringstream extra;
  double worst_t = 0.0;
  int good_rows = 0;
  std::vector<double> sigma_eps0(2, 0.0);  // computed sigma at eps = 0
  std::vector<std::pair<double, double>> sigma_rest;  // (tau, sigma), eps > 0

  for (const auto& row : fit_rows()) {
    const auto t0 = std::chrono::steady_clock::now();
    const qho::LevelScheme scheme = qho::build_scheme(
        {row.tau, row.epsilon, 1.0}, n_max_for(row.tau, row.epsilon));
    const qho::ShellDecomposition dec =
        qho::shell_decomposition(scheme, row.n_cut);
    const double dt = seconds_since(t0);
    if (dt > worst_t) worst_t = dt;
    if (dt >= 10.0) {
      ok = false;
      extra << " tau=" << row.tau << " eps=" << row.epsilon << " took "
            << fmt(dt) << " s;";
    }

    if (row.epsilon == 0.0) {
      sigma_eps0[row.tau == 0.05] = dec.fit.sigma;
    } else {
      sigma_rest.emplace_back(row.tau, dec.fit.sigma);
    }

    bool row_ok = true;
    const double sdev = std::fabs(dec.fit.sigma - row.sigma) / row.sigma;
    if (sdev > 0.15) {
      row_ok = false;
      extra << " tau=" << row.tau << " eps=" << row.epsilon << ": sigma "
            << fmt(dec.fit.sigma) << " vs " << fmt(row.sigma) << " (rel "
            << fmt(sdev) << ");";
    }
    for (int j = 0; j < 6; ++j) {
      const double dev = std::fabs(dec.fit.a[j] - row.a[j]) /
                         std::fabs(row.a[j]);
      const bool sign_ok = (dec.fit.a[j] > 0) == (row.a[j] > 0);
      if (!sign_ok || dev > 0.20) {
        row_ok = false;
        extra << " tau=" << row.tau << " eps=" << row.epsilon << ": a"
              << j + 1 << " " << fmt(dec.fit.a[j]) << " vs " << fmt(row.a[j])
              << (sign_ok ? " (rel " + fmt(dev) + " > 0.20);"
                          : " (sign differs);");
      }
    }
    if (row_ok) ++good_rows;
    ok = ok && row_ok;
  }

  bool order_ok = true;
  for (const auto& [tau, sigma] : sigma_rest) {
    if (!(sigma < sigma_eps0[tau == 0.05])) order_ok = false;
  }
  if (!order_ok) {
    ok = false;
    extra << " sigma(eps>0) !< sigma(eps=0);";
  }
  detail = std::to_string(good_rows) +
           "/8 rows within tolerance, sigma(eps>0) < sigma(eps=0) " +
           (order_ok ? "holds" : "violated") + ", slowest " + fmt(worst_t) +
           " s;" + extra.str();
  return ok;
}

/* ---- 4: beat node of the shell-energy envelope ---- */

bool supershell_node(std::string& detail) {
  bool ok = true;
  std::ostringstream got;
  const struct {
    double tau, epsilon;
    long long n_cut;
    long long lo, hi;  // inclusive window; hi = 999 encodes "< 1000"
  } cases[] = {
      {0.038, 0.0, 3009, 800, 1200},
      {0.038, 0.006, 3009, 800, 1200},
      {0.05, 0.0, 2008, 0, 999},
      {0.05, 0.005, 2008, 0, 999},
  };
  for (const auto& c : cases) {
    const qho::LevelScheme scheme = qho::build_scheme(
        {c.tau, c.epsilon, 1.0}, n_max_for(c.tau, c.epsilon));
    const long long node =
        qho::beat_node(qho::shell_decomposition(scheme, c.n_cut));
    const bool in_range = node >= c.lo && node <= c.hi;
    got << " (tau=" << c.tau << ", eps=" << c.epsilon << ") N=" << node
        << (in_range ? "" : c.hi == 999 ? " not < 1000" : " not in [800,1200]")
        << ";";
    ok = ok && in_range;
  }
  detail = "nodes:" + got.str();
  return ok;
}

/* ---- 5: slope of N_i^{1/3} vs i ---- */

bool slope_windows(std::string& detail) {
  bool ok = true;
  std::ostringstream got;

  const auto table_for = [](double tau, double epsilon) {
    const qho::LevelScheme scheme =
        qho::build_scheme({tau, epsilon, 1.0}, n_max_for(tau, epsilon));
    return qho::magic_numbers(scheme, 0.38);
  };

  const qho::MagicTable alkali = table_for(0.038, 0.0);
  const double s1 = qho::fit_cuberoot_line(alkali, 1, 14).slope;
  const bool s1_ok = s1 >= 0.55 && s1 <= 0.67;
  got << " first-supershell slope " << fmt(s1)
      << (s1_ok ? "" : " not in [0.55,0.67]") << ";";
  ok = ok && s1_ok;

  const qho::MagicTable al = table_for(0.05, 0.005);
  const double s2 =
      qho::fit_cuberoot_line(al, 9, al.entries.back().first).slope;
  const bool s2_ok = s2 >= 0.28 && s2 <= 0.36;
  got << " tail slope " << fmt(s2) << (s2_ok ? "" : " not in [0.28,0.36]")
      << ";";
  ok = ok && s2_ok;

  const double base =
      qho::fit_cuberoot_line(alkali, 1, alkali.entries.back().first).slope;
  bool order_ok = true;
  got << " full-column slopes eps=0: " << fmt(base) << ", ";
  for (double eps : {0.006, 0.007, 0.008}) {
    const qho::MagicTable t = table_for(0.038, eps);
    const double s =
        qho::fit_cuberoot_line(t, 1, t.entries.back().first).slope;
    got << fmt(s) << (eps == 0.008 ? "" : ", ");
    order_ok = order_ok && s > base;
  }
  got << (order_ok ? " (each > eps=0)" : " (ordering violated)") << ";";
  ok = ok && order_ok;

  detail = "slopes:" + got.str();
  return ok;
}

/* ---- 6: algebraic identities of the deformed spectrum ---- */

bool algebraic_identities(std::string& detail) {
  bool ok = true;
  std::ostringstream got;

  std::mt19937 rng(20260817u);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst_unit = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double dev = std::fabs(qho::e_q({1, 1}, dist(rng)) - 1.0);
    if (dev > worst_unit) worst_unit = dev;
  }
  const bool unit_ok = worst_unit <= 1e-12;
  got << " max |e_q(1,1)-1| = " << fmt(worst_unit)
      << (unit_ok ? "" : " > 1e-12") << ";";
  ok = ok && unit_ok;

  double worst_limit = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (int l : qho::allowed_l(n)) {
      const double dev = std::fabs(qho::e_q({n, l}, 0.0) - n);
      if (dev > worst_limit) worst_limit = dev;
    }
  }
  const bool limit_ok = worst_limit <= 1e-9;
  got << " max |e_q(n,l;0)-n| = " << fmt(worst_limit)
      << (limit_ok ? "" : " > 1e-9") << ";";
  ok = ok && limit_ok;

  const auto worst_remainder = [](double tau) {
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      for (int l : qho::allowed_l(n)) {
        const double dev =
            std::fabs(qho::e_q({n, l}, tau) - qho::taylor_energy({n, l}, tau));
        if (dev > worst) worst = dev;
      }
    }
    return worst;
  };
  const double ratio = worst_remainder(0.02) / worst_remainder(0.01);
  const bool ratio_ok = ratio >= 7.0 && ratio <= 9.0;
  got << " remainder ratio (0.02/0.01) = " << fmt(ratio)
      << (ratio_ok ? "" : " not in [7,9]") << ";";
  ok = ok && ratio_ok;

  detail = "identities:" + got.str();
  return ok;
}

/* ---- 7: variational equivalences ---- */

bool variational_equivalences(std::string& detail) {
  bool ok = true;
  std::ostringstream got;

  const auto close = [](double a, double b) {
    return a == b ||
           std::fabs(a - b) <= 1e-12 * std::max(std::fabs(a), std::fabs(b));
  };

  double worst_map = 0.0;
  for (double tau : {0.038, 0.05}) {
    for (double c : {50.0, 100.0, 500.0}) {
      const double eps = 1.0 / (2.0 * c);  // omega0 = 1
      const qho::QhoParams p{tau, eps, 1.0};
      for (int n = 0; n <= 10; ++n) {
        for (int l : qho::allowed_l(n)) {
          const double direct = qho::qvfo_energy({n, l}, tau, c, 1.0);
          const double mapped =
              qho::vfo_energy(qho::energy({n, l}, p), p);
          const double rel =
              std::fabs(direct - mapped) /
              std::max(1e-300, std::max(std::fabs(direct), std::fabs(mapped)));
          if (direct != mapped && rel > worst_map) worst_map = rel;
          if (!close(direct, mapped)) ok = false;
        }
      }
    }
  }
  got << " max rel energy-map gap = " << fmt(worst_map)
      << (worst_map <= 1e-12 ? "" : " > 1e-12") << ";";

  bool theta_ok = true;
  for (double theta0 : {0.5, 1.0, 2.7}) {
    for (double c : {1.0, 10.0}) {
      if (qho::vmi_theta(0, {c, theta0}) != theta0) theta_ok = false;
    }
  }
  got << " vmi_theta(0) == theta0 " << (theta_ok ? "exactly" : "violated")
      << ";";
  ok = ok && theta_ok;

  double worst_cubic = 0.0;
  for (double c : {1.0, 10.0}) {
    for (double theta0 : {0.5, 1.0}) {
      for (int j = 0; j <= 10; ++j) {
        const double th = qho::vmi_theta(j, {c, theta0});
        const double res =
            std::fabs(c * th * th * (th - theta0) - j * (j + 1.0) / 2.0);
        if (res > worst_cubic) worst_cubic = res;
      }
    }
  }
  const bool cubic_ok = worst_cubic <= 1e-10;
  got << " max cubic residual = " << fmt(worst_cubic)
      << (cubic_ok ? "" : " > 1e-10") << ";";
  ok = ok && cubic_ok;

  double worst_morse = 0.0;
  for (double d : {1.0, 2.0, 5.0}) {
    for (double alpha : {0.7, 1.0}) {
      const qho::MorseParams mp{d, alpha, 1.2};
      const double omega0 = qho::morse_omega(mp);
      const double c = 1.0 / (2.0 * omega0 * qho::morse_xe(mp));
      for (int n = 0; n <= 10; ++n) {
        const double a = qho::morse_spectrum(n, mp);
        const double b = qho::vho_spectrum(n, c, omega0);
        const double rel = std::fabs(a - b) /
                           std::max(std::fabs(a), std::fabs(b));
        if (a != b && rel > worst_morse) worst_morse = rel;
        if (!close(a, b)) ok = false;
      }
    }
  }
  got << " max rel morse/vho gap = " << fmt(worst_morse)
      << (worst_morse <= 1e-12 ? "" : " > 1e-12") << ";";

  detail = "equivalences:" + got.str();
  return ok;
}

/* ---- 8: brute-force oracle, bit-for-bit ---- */

std::uint64_t bits(double v) {
  std::uint64_t u;
  std::memcpy(&u, &v, sizeof u);
  return u;
}

bool oracle_equivalence(std::string& detail) {
  const qho::QhoParams p{0.038, 0.0, 1.0};
  const int n_max = 3;

  /* explicit state list, built in a different order than the library
     (l ascending) and pruned with the same boundary rule */
  struct State {
    int n, l;
    double e;
    long long cap;
  };
  std::vector<State> states;
  for (int n = 0; n <= n_max; ++n) {
    for (int l = n % 2; l <= n; l += 2) {
      states.push_back({n, l, qho::vfo_energy(qho::energy({n, l}, p), p),
                        2LL * (2 * l + 1)});
    }
  }
  const double boundary = qho::vfo_energy(qho::energy({n_max, n_max}, p), p);
  std::vector<State> kept;
  for (const State& s : states) {
    if (s.e <= boundary) kept.push_back(s);
  }

  /* insertion sort by (energy, n, l) */
  for (std::size_t i = 1; i < kept.size(); ++i) {
    const State key = kept[i];
    std::size_t j = i;
    while (j > 0 &&
           (kept[j - 1].e > key.e ||
            (kept[j - 1].e == key.e &&
             (kept[j - 1].n > key.n ||
              (kept[j - 1].n == key.n && kept[j - 1].l > key.l))))) {
      kept[j] = kept[j - 1];
      --j;
    }
    kept[j] = key;
  }

  long long cap_total = 0;
  for (const State& s : kept) cap_total += s.cap;

  /* naive cumulative sums, one electron at a time */
  std::vector<double> brute(static_cast<std::size_t>(cap_total) + 1, 0.0);
  double acc = 0.0;
  std::size_t idx = 0;
  for (const State& s : kept) {
    for (long long k = 0; k < s.cap; ++k) {
      acc += s.e;
      brute[++idx] = acc;
    }
  }

  /* naive gap walk */
  std::vector<std::pair<int, long long>> brute_magic;
  long long cum = 0;
  int num = 1;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    cum += kept[k].cap;
    if (k + 1 < kept.size() && kept[k + 1].e - kept[k].e > 0.38) {
      brute_magic.emplace_back(num++, cum);
    }
  }

  const qho::LevelScheme scheme = qho::build_scheme(p, n_max);
  const qho::EnergySeries series = qho::total_energy_series(scheme, cap_total);
  const qho::MagicTable magic = qho::magic_numbers(scheme, 0.38);

  bool ok = scheme.total_capacity == cap_total &&
            scheme.levels.size() == kept.size();
  if (ok) {
    for (std::size_t k = 0; k < kept.size(); ++k) {
      ok = ok && scheme.levels[k].n == kept[k].n &&
           scheme.levels[k].l == kept[k].l &&
           bits(scheme.levels[k].energy) == bits(kept[k].e);
    }
  }
  std::size_t series_match = 0;
  if (ok && series.values.size() == brute.size()) {
    for (std::size_t k = 0; k < brute.size(); ++k) {
      if (bits(series.values[k]) == bits(brute[k])) ++series_match;
    }
    ok = ok && series_match == brute.size();
  } else {
    ok = false;
  }
  ok = ok && magic.entries == brute_magic;

  std::ostringstream got;
  got << kept.size() << " levels, capacity " << cap_total << ", "
      << series_match << "/" << cap_total + 1 << " series values bitwise, "
      << brute_magic.size() << " closures"
      << (magic.entries == brute_magic ? " agree" : " DIFFER");
  detail = got.str();
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    bool (*check)(std::string&);
  };
  const Criterion criteria[] = {
      {1, "magic-number columns", magic_columns_exact},
      {2, "truncation capacities", truncation_capacities},
      {3, "liquid-drop fits", liquid_drop_fits},
      {4, "supershell node", supershell_node},
      {5, "slope windows", slope_windows},
      {6, "algebraic identities", algebraic_identities},
      {7, "variational equivalences", variational_equivalences},
      {8, "oracle equivalence", oracle_equivalence},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%d] %-26s %s (%s)\n", c.number, c.name,
                ok ? "PASS" : "FAIL", detail.c_str());
  }
  std::printf("acceptance: %d/8 criteria passed\n",
              8 - failures);
  return failures;
}
