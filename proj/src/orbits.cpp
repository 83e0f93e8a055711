#include "qho/orbits.hpp"

#include <cmath>
#include <sstream>

#include "qho/errors.hpp"

namespace qho {

double cavity_radius(const CavityModel& model, long long n_particles) {
  return model.r_s * std::cbrt(static_cast<double>(n_particles));
}

double orbit_length(const CavityModel& model, long long n_particles,
                    OrbitKind kind) {
  const double r = cavity_radius(model, n_particles);
  switch (kind) {
    case OrbitKind::triangle:
      return 3.0 * std::sqrt(3.0) * r;
    case OrbitKind::square:
    default:
      return 4.0 * std::sqrt(2.0) * r;
  }
}

double balian_bloch_slope(const CavityModel& model) {
  const double prefactor = model.h / (model.m_e * model.v_f * model.r_s);
  return prefactor * 2.0 / (3.0 * std::sqrt(3.0) + 4.0 * std::sqrt(2.0));
}

double balian_bloch_slope() { return 0.605; }

namespace {

void check_range(const MagicTable& magic, int i_from, int i_to) {
  if (magic.entries.empty()) throw RangeOutOfTable("empty magic table");
  const int lo = magic.entries.front().first;
  const int hi = magic.entries.back().first;
  if (i_from < lo || i_to > hi || i_to - i_from < 1) {
    std::ostringstream msg;
    msg << "index range [" << i_from << ", " << i_to
        << "] not contained in table range [" << lo << ", " << hi
        << "] with at least 2 points";
    throw RangeOutOfTable(msg.str());
  }
}

}  // namespace

SlopeFit fit_cuberoot_line(const MagicTable& magic, int i_from, int i_to) {
  check_range(magic, i_from, i_to);

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (const auto& [i, n_i] : magic.entries) {
    if (i < i_from || i > i_to) continue;
    const double x = static_cast<double>(i);
    const double y = std::cbrt(static_cast<double>(n_i));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw RangeOutOfTable("fewer than 2 table entries in range");

  SlopeFit fit;
  const double denom = m * sxx - sx * sx;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  fit.i_from = i_from;
  fit.i_to = i_to;

  double ssr = 0.0;
  for (const auto& [i, n_i] : magic.entries) {
    if (i < i_from || i > i_to) continue;
    const double r = std::cbrt(static_cast<double>(n_i)) -
                     (fit.slope * i + fit.intercept);
    ssr += r * r;
  }
  fit.rms = std::sqrt(ssr / m);
  return fit;
}

double residual_step(const MagicTable& magic, const SlopeFit& fit,
                     int node_i) {
  if (node_i < fit.i_from || node_i >= fit.i_to) {
    throw RangeOutOfTable(
        "residual_step: node must leave points on both sides");
  }
  double before = 0.0, after = 0.0;
  int n_before = 0, n_after = 0;
  for (const auto& [i, n_i] : magic.entries) {
    if (i < fit.i_from || i > fit.i_to) continue;
    const double r = std::cbrt(static_cast<double>(n_i)) -
                     (fit.slope * i + fit.intercept);
    if (i <= node_i) {
      before += r;
      ++n_before;
    } else {
      after += r;
      ++n_after;
    }
  }
  if (n_before == 0 || n_after == 0) {
    throw RangeOutOfTable("residual_step: empty side of the split");
  }
  return after / n_after - before / n_before;
}

}  // namespace qho
