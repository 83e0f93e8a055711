#include "qho/golden.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "qho/shells.hpp"
#include "qho/spectrum.hpp"

namespace qho::golden {

const std::vector<MagicColumn>& magic_columns() {
  static const std::vector<MagicColumn> cols = {
      {0.038, 0, 26, 4658,
       {2, 8, 20, 34, 40, 58, 92, 138, 198, 254, 268, 338, 440, 556, 562, 676, 694,
        832, 912, 1012, 1100, 1206, 1284, 1314, 1410, 1502, 1516, 1660, 1760, 2018,
        2048, 2178, 2334, 2368, 2654, 2672, 2722, 2796, 3028, 3050, 3190, 3404, 3438,
        3464, 3610, 3848, 3886, 4052, 4312, 4326, 4374, 4552}},
      {0.038, 0.006, 26, 4658,
       {2, 8, 20, 34, 40, 58, 92, 138, 198, 254, 338, 440, 676, 832, 912, 1012, 1100,
        1206, 1660, 1760, 2048, 2368, 3028, 3438, 3886, 4052, 4374}},
      {0.038, 0.007, 26, 4658,
       {2, 8, 20, 40, 58, 92, 138, 198, 254, 338, 440, 676, 832, 912, 1012, 1100,
        1206, 1660, 1760, 2048, 2368, 3028, 3438, 3886, 4374}},
      {0.038, 0.008, 25, 4154,
       {2, 8, 20, 40, 58, 92, 138, 198, 254, 338, 440, 676, 832, 912, 1012, 1100,
        1206, 1660, 1760, 2048, 2368, 3028, 3438, 3886}},
      {0.05, 0, 26, 4778,
       {2, 8, 20, 34, 40, 58, 92, 138, 186, 254, 338, 398, 440, 486, 542, 612, 676,
        748, 832, 890, 912, 1006, 1074, 1100, 1206, 1284, 1314, 1410, 1502, 1516,
        1614, 1660, 1734, 1760, 1778, 1940, 2018, 2048, 2178, 2334, 2368, 2510, 2672,
        2684, 2722, 2876, 3028, 3050, 3112, 3190, 3244, 3438, 3464, 3528, 3622, 3680,
        3886, 3916, 3988, 4088, 4156, 4374, 4408, 4462, 4488, 4578, 4596}},
      {0.05, 0.005, 26, 4778,
       {2, 8, 20, 34, 40, 58, 92, 138, 186, 254, 338, 398, 440, 542, 612, 676, 748,
        832, 912, 1006, 1074, 1100, 1284, 1314, 1410, 1502, 1516, 1760, 2018, 2048,
        2178, 2334, 2368, 2510, 2672, 2722, 3028, 3050, 3112, 3438, 3464, 3886, 3916,
        3988, 4374, 4408}},
      {0.05, 0.0053, 25, 4258,
       {2, 8, 20, 34, 40, 58, 92, 138, 186, 254, 338, 398, 440, 542, 612, 676, 748,
        832, 912, 1006, 1074, 1100, 1284, 1314, 1410, 1502, 1760, 2018, 2048, 2178,
        2334, 2368, 2510, 2672, 2722, 3028, 3050, 3112, 3438, 3464, 3886, 3916}},
      {0.05, 0.0055, 25, 4258,
       {2, 8, 20, 34, 40, 58, 92, 138, 186, 254, 338, 398, 440, 542, 612, 676, 748,
        832, 912, 1006, 1074, 1100, 1284, 1410, 1502, 1760, 2018, 2048, 2178, 2334,
        2368, 2510, 2672, 2722, 3028, 3050, 3112, 3438, 3464, 3886, 3916}},
  };
  return cols;
}

const std::vector<FitRow>& fit_rows() {
  static const std::vector<FitRow> rows = {
      {0.038, 0, 3009, {{-21.035, 18.295, -7.295, 1.9521, -0.06082, 0.0040857}}, 8.904},
      {0.038, 0.006, 3009, {{24.756, -20.883, 5.201, 0.0493, 0.07946, -0.0008993}}, 5.758},
      {0.038, 0.007, 3009, {{32.475, -27.496, 7.306, -0.2704, 0.10297, -0.0017326}}, 5.297},
      {0.038, 0.008, 3009, {{39.762, -33.786, 9.329, -0.5806, 0.12597, -0.0025559}}, 4.834},
      {0.05, 0, 2008, {{-24.946, 24.641, -10.384, 2.6117, -0.13, 0.0082558}}, 7.328},
      {0.05, 0.005, 2008, {{14.051, -13.208, 3.323, 0.2409, 0.07006, 0.0006484}}, 5.286},
      {0.05, 0.0053, 2008, {{16.795, -15.857, 4.264, 0.0817, 0.0832, 0.0001634}}, 5.175},
      {0.05, 0.0055, 2008, {{18.589, -17.556, 4.862, -0.0188, 0.0915, -0.0001464}}, 5.098},
  };
  return rows;
}

namespace {

int n_max_for(double tau, double epsilon) {
  for (const MagicColumn& col : magic_columns()) {
    if (col.tau == tau && col.epsilon == epsilon) return col.n_max;
  }
  return 26;
}

}  // namespace

bool run_comparison(std::ostream& out) {
  bool all_ok = true;

  for (const MagicColumn& col : magic_columns()) {
    const LevelScheme scheme =
        build_scheme({col.tau, col.epsilon, 1.0}, col.n_max);
    const MagicTable table = magic_numbers(scheme, 0.38);

    std::ostringstream line;
    line << "magic tau=" << col.tau << " epsilon=" << col.epsilon
         << " n_max=" << col.n_max << ": ";
    bool ok = scheme.total_capacity == col.n_total;
    if (!ok) {
      line << "FAIL (capacity " << scheme.total_capacity << " != "
           << col.n_total << ")";
    } else if (table.entries.size() != col.entries.size()) {
      ok = false;
      line << "FAIL (" << table.entries.size() << " entries, expected "
           << col.entries.size() << ")";
    } else {
      for (std::size_t k = 0; k < col.entries.size(); ++k) {
        if (table.entries[k].second != col.entries[k]) {
          ok = false;
          line << "FAIL (entry " << k + 1 << ": " << table.entries[k].second
               << " != " << col.entries[k] << ")";
          break;
        }
      }
      if (ok) {
        line << "PASS (" << col.entries.size() << " entries, capacity "
             << col.n_total << ")";
      }
    }
    out << line.str() << '\n';
    all_ok = all_ok && ok;
  }

  for (const FitRow& row : fit_rows()) {
    const LevelScheme scheme = build_scheme(
        {row.tau, row.epsilon, 1.0}, n_max_for(row.tau, row.epsilon));
    const ShellDecomposition dec = shell_decomposition(scheme, row.n_cut);

    std::ostringstream line;
    line << "fit tau=" << row.tau << " epsilon=" << row.epsilon
         << " n_cut=" << row.n_cut << ": ";
    bool ok = true;
    std::ostringstream detail;
    const double sig_dev =
        std::fabs(dec.fit.sigma - row.sigma) / std::fabs(row.sigma);
    if (sig_dev > 0.15) {
      ok = false;
      detail << " sigma " << dec.fit.sigma << " vs " << row.sigma
             << " (rel " << sig_dev << " > 0.15);";
    }
    for (std::size_t j = 0; j < 6; ++j) {
      const double dev =
          std::fabs(dec.fit.a[j] - row.a[j]) / std::fabs(row.a[j]);
      const bool sign_ok = (dec.fit.a[j] > 0) == (row.a[j] > 0);
      if (!sign_ok || dev > 0.20) {
        ok = false;
        detail << " a" << j + 1 << " " << dec.fit.a[j] << " vs " << row.a[j]
               << " (rel " << dev << (sign_ok ? " > 0.20" : ", sign differs")
               << ");";
      }
    }
    if (ok) {
      line << "PASS (sigma " << dec.fit.sigma << " vs " << row.sigma << ")";
    } else {
      line << "FAIL (" << detail.str() << ")";
    }
    out << line.str() << '\n';
    all_ok = all_ok && ok;
  }

  out << (all_ok ? "golden comparison: PASS" : "golden comparison: FAIL")
      << '\n';
  return all_ok;
}

}  // namespace qho::golden
