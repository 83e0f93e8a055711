#include "qho/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "qho/errors.hpp"
#include "qho/orbits.hpp"

namespace qho {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string format_cell(double v, bool integer) {
  if (integer) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
    return buf;
  }
  return format_number(v);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    out << (j ? "," : "") << table.columns[j].name;
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << format_cell(row[j], table.columns[j].integer);
    }
    out << '\n';
  }
  if (!table.footer.empty()) {
    out << '#';
    for (std::size_t j = 0; j < table.footer.size(); ++j) {
      out << (j ? "," : " ") << table.footer[j].first;
    }
    out << '\n' << '#';
    for (std::size_t j = 0; j < table.footer.size(); ++j) {
      out << (j ? "," : " ") << format_number(table.footer[j].second);
    }
    out << '\n';
  }
}

void write_json(const Table& table, const nlohmann::json& config,
                std::ostream& out) {
  nlohmann::json doc;
  doc["config"] = config;
  nlohmann::json cols = nlohmann::json::array();
  for (const Column& c : table.columns) cols.push_back(c.name);
  doc["columns"] = cols;
  nlohmann::json records = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json rec;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (table.columns[j].integer) {
        rec[table.columns[j].name] =
            static_cast<long long>(std::llround(row[j]));
      } else {
        rec[table.columns[j].name] = row[j];
      }
    }
    records.push_back(rec);
  }
  doc["records"] = records;
  if (!table.footer.empty()) {
    nlohmann::json footer;
    for (const auto& [key, value] : table.footer) footer[key] = value;
    doc["footer"] = footer;
  }
  out << doc.dump(2) << '\n';
}

Table plot_data(const MagicTable& magic) {
  if (magic.entries.empty()) {
    throw EmptyInput("plot_data: magic table has no entries");
  }
  Table t;
  t.columns = {{"i", true}, {"N_cuberoot", false}, {"reference_line", false}};
  const double slope = balian_bloch_slope();
  for (const auto& [i, n_i] : magic.entries) {
    t.rows.push_back({static_cast<double>(i),
                      std::cbrt(static_cast<double>(n_i)), slope * i});
  }
  return t;
}

Table plot_data(const ShellDecomposition& dec) {
  if (dec.samples.empty()) {
    throw EmptyInput("plot_data: shell decomposition has no samples");
  }
  Table t;
  t.columns = {{"N", true}, {"N_cuberoot", false}, {"E_shell", false}};
  for (const ShellSample& s : dec.samples) {
    t.rows.push_back({static_cast<double>(s.n_particles),
                      std::cbrt(static_cast<double>(s.n_particles)),
                      s.e_shell});
  }
  return t;
}

}  // namespace qho
