#include "qho/shells.hpp"

#include <cmath>
#include <sstream>

#include "qho/errors.hpp"
#include "qho/lsq.hpp"

namespace qho {

EnergySeries total_energy_series(const LevelScheme& scheme, long long n_cut) {
  if (n_cut > scheme.total_capacity) {
    std::ostringstream msg;
    msg << "requested " << n_cut << " electrons but the scheme holds only "
        << scheme.total_capacity;
    throw CutExceedsScheme(msg.str());
  }
  EnergySeries series;
  series.values.resize(static_cast<std::size_t>(n_cut) + 1);
  series.values[0] = 0.0;
  double acc = 0.0;
  long long filled = 0;
  for (const Level& lev : scheme.levels) {
    for (int s = 0; s < lev.capacity && filled < n_cut; ++s) {
      acc += lev.energy;
      series.values[static_cast<std::size_t>(++filled)] = acc;
    }
    if (filled == n_cut) break;
  }
  return series;
}

std::vector<std::pair<long long, double>> window_samples(
    const EnergySeries& series, long long start, long long stride) {
  const long long h = (stride - 1) / 2;
  const long long last = series.n_cut();
  std::vector<std::pair<long long, double>> out;
  for (long long c = start; c + h <= last; c += stride) {
    if (c - h < 1) continue;
    double sum = 0.0;
    for (long long k = c - h; k <= c + h; ++k) {
      sum += series.values[static_cast<std::size_t>(k)];
    }
    out.emplace_back(c, sum / static_cast<double>(stride));
  }
  return out;
}

LiquidDropFit liquid_drop_fit(
    const std::vector<std::pair<long long, double>>& samples) {
  const std::size_t m = samples.size();
  if (m < 6) {
    throw RankDeficient("liquid_drop_fit: need at least 6 samples");
  }
  std::vector<double> a(m * 6);
  std::vector<double> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double x = std::cbrt(static_cast<double>(samples[i].first));
    double p = x;
    for (std::size_t j = 0; j < 6; ++j) {
      a[i * 6 + j] = p;
      p *= x;
    }
    b[i] = samples[i].second;
  }
  const std::vector<double> coef = least_squares(m, 6, a, b);

  LiquidDropFit fit;
  for (std::size_t j = 0; j < 6; ++j) fit.a[j] = coef[j];
  double ssr = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double pred = 0.0;
    for (std::size_t j = 0; j < 6; ++j) pred += fit.a[j] * a[i * 6 + j];
    const double r = b[i] - pred;
    ssr += r * r;
  }
  fit.sigma = std::sqrt(ssr / static_cast<double>(m));
  fit.n_points = static_cast<int>(m);
  fit.n_cut = samples.back().first;
  return fit;
}

double liquid_drop_eval(const LiquidDropFit& fit, long long n_particles) {
  const double x = std::cbrt(static_cast<double>(n_particles));
  double sum = 0.0;
  double p = x;
  for (std::size_t j = 0; j < 6; ++j) {
    sum += fit.a[j] * p;
    p *= x;
  }
  return sum;
}

ShellDecomposition shell_decomposition(const LevelScheme& scheme,
                                       long long n_cut) {
  const long long h = 5;  // half width of the 11-point window
  const EnergySeries series = total_energy_series(scheme, n_cut + h);
  std::vector<std::pair<long long, double>> samples =
      window_samples(series, 6, 11);

  ShellDecomposition dec;
  dec.fit = liquid_drop_fit(samples);
  dec.fit.n_cut = n_cut;
  for (const auto& [n_particles, e_total] : samples) {
    const double e_avg = liquid_drop_eval(dec.fit, n_particles);
    dec.samples.push_back({n_particles, e_total, e_avg, e_total - e_avg});
  }
  return dec;
}

namespace {

/* indices of strict interior local maxima of a sequence */
std::vector<std::size_t> local_maxima(const std::vector<double>& seq) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (seq[i] > seq[i - 1] && seq[i] > seq[i + 1]) out.push_back(i);
  }
  return out;
}

}  // namespace

long long beat_node(const ShellDecomposition& dec) {
  std::vector<double> mag;
  mag.reserve(dec.samples.size());
  for (const ShellSample& s : dec.samples) mag.push_back(std::fabs(s.e_shell));

  const std::vector<std::size_t> peaks = local_maxima(mag);
  if (peaks.size() < 3) {
    throw TooFewExtrema("beat_node: |E_shell| has fewer than 3 local maxima");
  }
  std::vector<double> env;
  std::vector<long long> env_n;
  for (std::size_t i : peaks) {
    env.push_back(mag[i]);
    env_n.push_back(dec.samples[i].n_particles);
  }
  const std::vector<std::size_t> antinodes = local_maxima(env);
  if (antinodes.size() < 2) {
    throw TooFewExtrema("beat_node: envelope has no interior minimum");
  }
  std::size_t best = antinodes.front();
  for (std::size_t k = antinodes.front(); k <= antinodes.back(); ++k) {
    if (env[k] < env[best]) best = k;
  }
  return env_n[best];
}

}  // namespace qho
