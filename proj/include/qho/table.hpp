#ifndef QHO_TABLE_HPP
#define QHO_TABLE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qho/shells.hpp"
#include "qho/spectrum.hpp"

namespace qho {

/* A rectangular numeric result table.  Integer-valued columns (indices,
   particle counts, quantum numbers) are flagged so the writers can render
   them without a fractional part; all cells are stored as doubles, which
   is exact for every integer this artifact produces. */
struct Column {
  std::string name;
  bool integer = false;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  /* optional scalar footer, e.g. fit coefficients and sigma */
  std::vector<std::pair<std::string, double>> footer;
};

/* Shortest exact form: %.17g round-trips every double through strtod. */
std::string format_number(double v);

/* Canonical CSV: header row, comma separator, '.' decimal point, one data
   row per line; a non-empty footer becomes two '#'-prefixed lines (names,
   then values). */
void write_csv(const Table& table, std::ostream& out);

/* JSON mirror: {"config": ..., "columns": [...], "records": [{col: value}],
   "footer": {...}} with the full run configuration embedded for
   reproducibility audits. */
void write_json(const Table& table, const nlohmann::json& config,
                std::ostream& out);

/* Plot-ready projections (cube-root abscissae for the straight-line
   constructions).  Throw EmptyInput on tables with no rows. */
Table plot_data(const MagicTable& magic);
Table plot_data(const ShellDecomposition& dec);

}  // namespace qho

#endif
