#ifndef QHO_CLI_HPP
#define QHO_CLI_HPP

#include <iosfwd>
#include <string>

namespace qho::cli {

/* Everything a run needs, filled from flags and the optional config file.
   Flags given on the command line override config-file values. */
struct RunConfig {
  std::string subcommand;
  double tau = 0.0;
  double epsilon = 0.0;
  double delta = 0.38;
  int n_max = 6;
  long long n_cut = 0;
  std::string format = "csv";
  std::string out_path;
  bool plot = false;
  /* slope */
  int i_from = 1;
  int i_to = 0;  // 0 means "through the last table entry"
  /* vmi */
  double vmi_c = 1.0;
  double theta0 = 1.0;
  int j_max = 10;
  /* morse */
  double morse_d = 2.0;
  double morse_alpha = 1.0;
  double morse_mass = 1.0;
  int n_levels = 10;
  /* vfo-derive */
  double vfo_c = 100.0;
  double omega0 = 1.0;
};

/* Parse argv, run the requested subcommand, and write the result table to
   `out` (or the --out file).  Errors go to `err` as a single-line JSON
   record.  Exit codes: 0 success, 1 configuration error, 2 computation
   error, 3 golden-comparison mismatch. */
int execute(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qho::cli

#endif
