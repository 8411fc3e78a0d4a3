#include "tsb/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsb/error.hpp"

namespace tsb {
namespace {

using nlohmann::json;

std::string fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// NaN is not representable in JSON; emit null instead.
json number_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

std::string join_ints(const std::vector<long long>& xs, const char* sep) {
  std::string out;
  for (long long x : xs) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs, const char* sep) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += sep;
    out += std::to_string(x);
  }
  return out;
}

std::string applicable_cases(const ClosedCaseBound& cc) {
  std::vector<long long> cases;
  for (int i = 0; i < 4; ++i) {
    if (cc.case_applicable[static_cast<std::size_t>(i)]) cases.push_back(i + 1);
  }
  return join_ints(cases, ",");
}

// Column-aligned pipe table / RFC-style CSV from one grid of cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_md() const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string out = "|";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out += " " + cells[c] + std::string(width[c] - cells[c].size(), ' ') +
               " |";
      }
      return out + "\n";
    };
    std::string out = line(header);
    out += "|";
    for (std::size_t c = 0; c < header.size(); ++c) {
      out += " " + std::string(width[c], '-') + " |";
    }
    out += "\n";
    for (const auto& row : rows) out += line(row);
    return out;
  }

  std::string to_csv() const {
    auto quote = [](const std::string& cell) {
      if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
      std::string out = "\"";
      for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
      std::string out;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) out += ",";
        out += quote(cells[c]);
      }
      return out + "\n";
    };
    std::string out = line(header);
    for (const auto& row : rows) out += line(row);
    return out;
  }

  std::string render(Format format) const {
    return format == Format::csv ? to_csv() : to_md();
  }
};

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "md") return Format::md;
  if (name == "csv") return Format::csv;
  throw InputError("unknown format '" + name +
                   "' (expected json, md, or csv)");
}

std::string render_spectrum(const SeidelSpectrum& spec, Format format) {
  if (format == Format::json) {
    json classes = json::array();
    for (const auto& cls : spec.classes) {
      classes.push_back({{"eigenvalue", cls.value},
                         {"multiplicity", cls.multiplicity},
                         {"main_angle", cls.main_angle},
                         {"is_main", cls.main}});
    }
    return json{{"v", spec.v}, {"classes", classes}}.dump(2) + "\n";
  }

  Table table;
  table.header = {"eigenvalue", "multiplicity", "main_angle", "is_main"};
  for (const auto& cls : spec.classes) {
    table.rows.push_back({fixed(cls.value, 6), std::to_string(cls.multiplicity),
                          fixed(cls.main_angle, 6), yes_no(cls.main)});
  }
  std::string out = table.render(format);
  if (format == Format::md) out = "v: " + std::to_string(spec.v) + "\n\n" + out;
  return out;
}

std::string render_bounds(const std::string& graph, long long v,
                          const BestBound& bounds, Format format) {
  if (format == Format::json) {
    json reports = json::array();
    for (const auto& r : bounds.reports) {
      reports.push_back({{"method", r.method},
                         {"raw_value", number_or_null(r.raw_value)},
                         {"integer_bound", r.integer_bound},
                         {"applicable", r.applicable},
                         {"exact", r.exact},
                         {"notes", r.notes}});
    }
    return json{{"graph", graph},
                {"v", v},
                {"bounds", reports},
                {"best", bounds.best}}
               .dump(2) +
           "\n";
  }

  Table table;
  table.header = {"method", "raw", "bound", "applicable", "exact", "notes"};
  for (const auto& r : bounds.reports) {
    table.rows.push_back(
        {r.method, std::isfinite(r.raw_value) ? fixed(r.raw_value, 6) : "-",
         r.applicable ? std::to_string(r.integer_bound) : "-",
         yes_no(r.applicable), yes_no(r.exact), r.notes});
  }
  std::string out = table.render(format);
  if (format == Format::md) {
    out = "graph: " + graph + "  (v = " + std::to_string(v) + ")\n\n" + out +
          "\nbest bound: " + std::to_string(bounds.best) + "\n";
  } else {
    table.rows.clear();
    table.rows.push_back({"best", "-", std::to_string(bounds.best), "yes", "-",
                          ""});
    // Reuse the CSV quoting for the summary row, dropping the repeated
    // header line.
    std::string summary = table.render(format);
    out += summary.substr(summary.find('\n') + 1);
  }
  return out;
}

std::string render_search(const std::string& graph, const SearchResult& result,
                          Format format) {
  if (format == Format::json) {
    return json{{"graph", graph},
                {"max_size", result.max_size},
                {"witness", result.witness},
                {"nodes_explored", result.nodes_explored},
                {"method", result.method},
                {"time_limited", result.time_limited}}
               .dump(2) +
           "\n";
  }

  Table table;
  table.header = {"graph",          "max_size", "method",
                  "nodes_explored", "time_limited", "witness"};
  table.rows.push_back({graph, std::to_string(result.max_size), result.method,
                        std::to_string(result.nodes_explored),
                        yes_no(result.time_limited),
                        join_ints(result.witness, " ")});
  return table.render(format);
}

std::string render_table1(const std::vector<Table1Row>& rows, Format format) {
  if (format == Format::json) {
    json out = json::array();
    for (const auto& row : rows) {
      out.push_back(
          {{"v", row.v}, {"value", row.value}, {"display", fixed(row.value, 3)}});
    }
    return out.dump(2) + "\n";
  }

  Table table;
  table.header = {"v", "bound"};
  for (const auto& row : rows) {
    table.rows.push_back({std::to_string(row.v), fixed(row.value, 3)});
  }
  return table.render(format);
}

std::string render_table2(const std::vector<Table2Row>& rows, Format format) {
  if (format == Format::json) {
    json out = json::array();
    for (const auto& row : rows) {
      out.push_back({{"v", row.v},
                     {"upper_bound", row.upper_bound},
                     {"maximum", row.maximum},
                     {"paley", row.paley}});
    }
    return out.dump(2) + "\n";
  }

  Table table;
  table.header = {"v", "upper_bound", "maximum", "paley"};
  for (const auto& row : rows) {
    table.rows.push_back({std::to_string(row.v), std::to_string(row.upper_bound),
                          row.maximum, row.paley});
  }
  return table.render(format);
}

BipRow make_bip_row(long long m) {
  BipRow row;
  row.m = m;
  row.v = 4 * m - 1;
  row.hoffman =
      hoffman_regular(std::sqrt(static_cast<double>(row.v)), row.v)
          .integer_bound;
  row.parity = parity_refine(drt_bound_exact(row.v), true).integer_bound;
  row.cases = closed_case_bound(m);
  row.scan = bip_scan(m);
  row.best = std::min(std::min(row.hoffman, row.parity),
                      std::min(row.cases.bound, row.scan.bound));
  return row;
}

std::string render_bip(const std::vector<BipRow>& rows, Format format) {
  if (format == Format::json) {
    json out = json::array();
    for (const auto& row : rows) {
      out.push_back({{"m", row.m},
                     {"v", row.v},
                     {"hoffman", row.hoffman},
                     {"parity_refined", row.parity},
                     {"thm54", row.cases.bound},
                     {"thm54_cases", applicable_cases(row.cases)},
                     {"bip_bound", row.scan.bound},
                     {"bip_violations", row.scan.violations},
                     {"best", row.best}});
    }
    return out.dump(2) + "\n";
  }

  Table table;
  table.header = {"m",     "v",   "hoffman",    "parity", "thm54",
                  "cases", "bip", "violations", "best"};
  for (const auto& row : rows) {
    table.rows.push_back(
        {std::to_string(row.m), std::to_string(row.v),
         std::to_string(row.hoffman), std::to_string(row.parity),
         std::to_string(row.cases.bound), applicable_cases(row.cases),
         std::to_string(row.scan.bound), join_ints(row.scan.violations, " "),
         std::to_string(row.best)});
  }
  return table.render(format);
}

}  // namespace tsb
