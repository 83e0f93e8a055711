#ifndef QHO_ORBITS_HPP
#define QHO_ORBITS_HPP

#include "qho/spectrum.hpp"

namespace qho {

/* Spherical-cavity model for semiclassical periodic orbits: N electrons
   confined to radius R = r_s N^{1/3}. */
struct CavityModel {
  double r_s = 1.0;  // Wigner-Seitz radius
  double v_f = 1.0;  // Fermi velocity
  double m_e = 1.0;  // electron mass
  double h = 1.0;    // Planck constant
};

enum class OrbitKind { triangle, square };

/* R = r_s N^{1/3} */
double cavity_radius(const CavityModel& model, long long n_particles);

/* Perimeter of the inscribed triangular (3 sqrt(3) R) or square
   (4 sqrt(2) R) orbit, the two families whose interference produces the
   supershell beat. */
double orbit_length(const CavityModel& model, long long n_particles,
                    OrbitKind kind);

/* Slope of the N_i^{1/3} vs i line predicted by periodic-orbit theory:
   (h / (m v_f r_s)) * 2 / (3 sqrt(3) + 4 sqrt(2)). */
double balian_bloch_slope(const CavityModel& model);

/* Calibrated variant: v_f r_s is nearly metal-independent, and folding
   the physical constants into the prefactor gives 0.605. */
double balian_bloch_slope();

/* Ordinary least-squares line through (i, N_i^{1/3}), free intercept. */
struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
  int i_from = 0;
  int i_to = 0;
};

/* Fit over the inclusive index range [i_from, i_to] of the magic table.
   Throws RangeOutOfTable when the range has fewer than 2 points or refers
   to indices the table does not contain. */
SlopeFit fit_cuberoot_line(const MagicTable& magic, int i_from, int i_to);

/* Mean residual against the fitted line after index node_i minus the mean
   residual up to and including it — a numerical report of the half-index
   phase shift expected across a supershell node.  node_i must leave at
   least one point on each side of the fit range. */
double residual_step(const MagicTable& magic, const SlopeFit& fit,
                     int node_i);

}  // namespace qho

#endif
