#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tsb/bounds.hpp"
#include "tsb/error.hpp"
#include "tsb/graph_io.hpp"
#include "tsb/graph_spec.hpp"
#include "tsb/paley.hpp"
#include "tsb/report.hpp"
#include "tsb/search.hpp"
#include "tsb/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitTimeLimit = 3;
constexpr int kExitNumeric = 4;

const std::vector<long long> kDefaultTableColumns = {7,  11, 15, 19,
                                                     23, 27, 31, 35};

// Accepts plain seconds ("120", "2.5") with an optional trailing 's'.
double parse_time_limit(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.back() == 's') body.pop_back();
  try {
    std::size_t used = 0;
    const double seconds = std::stod(body, &used);
    if (used != body.size() || seconds < 0.0) throw std::invalid_argument("");
    return seconds;
  } catch (const std::exception&) {
    throw tsb::InputError("invalid time limit '" + text +
                          "' (expected seconds, e.g. 120 or 120s)");
  }
}

int thread_count() {
  const char* env = std::getenv("TB_THREADS");
  long long n = 0;
  if (env != nullptr && *env != '\0') {
    try {
      n = std::stoll(env);
    } catch (const std::exception&) {
      throw tsb::InputError("invalid TB_THREADS value '" + std::string(env) +
                            "'");
    }
    if (n < 0) throw tsb::InputError("TB_THREADS must be >= 0");
  }
  if (n == 0) {
    n = static_cast<long long>(std::thread::hardware_concurrency());
    if (n == 0) n = 1;
  }
  return static_cast<int>(n);
}

tsb::GraphSpec pick_graph(const std::string& positional,
                          const std::string& file) {
  if (positional.empty() == file.empty()) {
    throw tsb::InputError(
        "give exactly one graph source: a positional spec (paley:27, "
        "transitive:5, cycle:6, or a path) or --graph-file");
  }
  if (!file.empty()) {
    tsb::GraphSpec spec;
    spec.kind = tsb::GraphSpec::Kind::file;
    spec.path = file;
    return spec;
  }
  return tsb::GraphSpec::parse(positional);
}

// An upper bound usable as a search cutoff, kept cheap: the closed-form
// value for doubly regular tournaments, the full spectral composition for
// small graphs, nothing for large irregular ones.
long long search_cutoff(const tsb::Digraph& g) {
  const tsb::DigraphClass cls = tsb::classify(g);
  if (cls.is_doubly_regular) return tsb::drt_best_bound(g.order()).best;
  if (g.order() <= 512) return tsb::best_bound(g).best;
  return 0;
}

struct Table2Outcome {
  tsb::Table2Row row;
  bool time_limited = false;
};

struct SearchCell {
  long long size = 0;
  bool limited = false;
};

SearchCell exact_maximum(const tsb::Digraph& g, double time_limit,
                         long long cutoff) {
  const tsb::SearchResult result =
      g.order() <= 20 ? tsb::max_transitive_brute(g)
                      : tsb::max_transitive_bb(g, time_limit, cutoff);
  return {result.max_size, result.time_limited};
}

Table2Outcome table2_column(long long v, double time_limit,
                            const std::vector<tsb::Digraph>& external) {
  Table2Outcome out;
  out.row.v = v;
  out.row.upper_bound = tsb::drt_best_bound(v).best;

  std::vector<SearchCell> cells;
  const auto decomposed = tsb::prime_power_decompose(v);
  if (decomposed) {
    const tsb::Digraph g =
        tsb::paley_tournament(decomposed->first, decomposed->second);
    cells.push_back(exact_maximum(g, time_limit, out.row.upper_bound));
    out.row.paley = cells.back().limited
                        ? ">=" + std::to_string(cells.back().size) +
                              " (time limit)"
                        : std::to_string(cells.back().size);
  } else {
    out.row.paley = "n/a";
  }
  for (const tsb::Digraph& g : external) {
    cells.push_back(exact_maximum(g, time_limit, out.row.upper_bound));
  }

  if (cells.empty()) {
    out.row.maximum = "n/a (needs external graph)";
    return out;
  }
  long long best = 0;
  bool limited = false;
  for (const SearchCell& cell : cells) {
    best = std::max(best, cell.size);
    limited = limited || cell.limited;
  }
  // A truncated search only certifies a lower bound, so the aggregate is
  // one too.
  out.row.maximum = limited ? ">=" + std::to_string(best) + " (time limit)"
                            : std::to_string(best);
  out.time_limited = limited;
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Transitive-subtournament bounds and exact search"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string graph_file;
  std::map<CLI::App*, std::string> format_by_cmd;
  std::string method_arg = "all";
  std::string time_limit_arg = "0";
  bool brute = false;
  long long table1_max_v = 35;
  std::vector<std::string> table2_files;
  std::vector<long long> m_list;

  auto add_graph_options = [&](CLI::App* cmd) {
    cmd->add_option("graph", graph_arg,
                    "Graph spec: paley:Q, paley:P^K, transitive:N, cycle:N, "
                    "or a file path");
    cmd->add_option("--graph-file", graph_file,
                    "Read the graph from this file (text or JSON)");
  };
  auto add_format_option = [&](CLI::App* cmd, const char* dflt) {
    auto [slot, inserted] = format_by_cmd.emplace(cmd, dflt);
    (void)inserted;
    cmd->add_option("--format", slot->second,
                    "Output format: json, md, or csv");
  };
  auto format_of = [&](CLI::App* cmd) {
    return tsb::parse_format(format_by_cmd.at(cmd));
  };

  CLI::App* bound_cmd =
      app.add_subcommand("bound", "Upper bounds on transitive subtournaments");
  add_graph_options(bound_cmd);
  bound_cmd->add_option(
      "--method", method_arg,
      "Bound family: interlacing, hoffman, drt, bip, thm54, or all");

  CLI::App* search_cmd =
      app.add_subcommand("search", "Exact maximum transitive subtournament");
  add_graph_options(search_cmd);
  search_cmd->add_flag("--brute", brute,
                       "Exhaustive subset scan (v <= 20) instead of "
                       "branch and bound");
  search_cmd->add_option("--time-limit", time_limit_arg,
                         "Stop the search after this many seconds (0 = none)");

  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "Eigenvalue classes and main angles");
  add_graph_options(spectrum_cmd);

  CLI::App* table1_cmd = app.add_subcommand(
      "table1", "Closed-form interlacing bound per vertex count");
  table1_cmd->add_option("max_v", table1_max_v,
                         "Largest vertex count; rows run 7, 11, ... up to it");

  CLI::App* table2_cmd = app.add_subcommand(
      "table2",
      "Upper bounds vs. exact maxima for doubly regular tournament orders");
  table2_cmd->add_option("--time-limit", time_limit_arg,
                         "Per-column search time limit in seconds (0 = none)");
  table2_cmd->add_option("--graph-file", table2_files,
                         "Extra doubly regular tournaments to search "
                         "(repeatable; text or JSON)");

  CLI::App* bip_cmd = app.add_subcommand(
      "bip", "Intersection-polynomial bounds for doubly regular orders");
  bip_cmd->add_option("m", m_list, "Values of m, v = 4m-1 (default 1..18)");

  // Defaults are per command; register after the option landscape is known.
  add_format_option(bound_cmd, "json");
  add_format_option(search_cmd, "json");
  add_format_option(spectrum_cmd, "json");
  add_format_option(bip_cmd, "json");
  add_format_option(table1_cmd, "md");
  add_format_option(table2_cmd, "md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (bound_cmd->parsed()) {
    const tsb::GraphSpec spec = pick_graph(graph_arg, graph_file);
    const tsb::Digraph g = spec.resolve();
    const tsb::BestBound bounds =
        tsb::best_bound(g, tsb::MethodSet::parse(method_arg));
    std::cout << tsb::render_bounds(spec.describe(), g.order(), bounds,
                                    format_of(bound_cmd));
    return kExitOk;
  }

  if (search_cmd->parsed()) {
    const tsb::GraphSpec spec = pick_graph(graph_arg, graph_file);
    const tsb::Digraph g = spec.resolve();
    const double time_limit = parse_time_limit(time_limit_arg);
    const tsb::SearchResult result =
        brute ? tsb::max_transitive_brute(g)
              : tsb::max_transitive_bb(g, time_limit, search_cutoff(g));
    std::cout << tsb::render_search(spec.describe(), result,
                                    format_of(search_cmd));
    return result.time_limited ? kExitTimeLimit : kExitOk;
  }

  if (spectrum_cmd->parsed()) {
    const tsb::GraphSpec spec = pick_graph(graph_arg, graph_file);
    const tsb::Digraph g = spec.resolve();
    std::cout << tsb::render_spectrum(tsb::spectrum(g),
                                      format_of(spectrum_cmd));
    return kExitOk;
  }

  if (table1_cmd->parsed()) {
    if (table1_max_v < 7) {
      throw tsb::InputError("max_v must be >= 7, got " +
                            std::to_string(table1_max_v));
    }
    std::vector<tsb::Table1Row> rows;
    for (long long v = 7; v <= table1_max_v; v += 4) {
      rows.push_back(
          {v, tsb::interlacing_ratio(std::sqrt(static_cast<double>(v)))});
    }
    std::cout << tsb::render_table1(rows, format_of(table1_cmd));
    return kExitOk;
  }

  if (table2_cmd->parsed()) {
    const double time_limit = parse_time_limit(time_limit_arg);

    std::map<long long, std::vector<tsb::Digraph>> external;
    for (const std::string& path : table2_files) {
      tsb::Digraph g = tsb::read_digraph_file(path);
      if (!tsb::classify(g).is_doubly_regular) {
        throw tsb::InputError("graph in '" + path +
                              "' is not a doubly regular tournament");
      }
      external[g.order()].push_back(std::move(g));
    }
    std::vector<long long> v_list = kDefaultTableColumns;
    for (const auto& [v, graphs] : external) {
      if (std::find(v_list.begin(), v_list.end(), v) == v_list.end()) {
        v_list.push_back(v);
      }
    }
    std::sort(v_list.begin(), v_list.end());

    const int threads =
        std::min<int>(thread_count(), static_cast<int>(v_list.size()));
    const std::vector<tsb::Digraph> no_external;
    std::vector<Table2Outcome> outcomes(v_list.size());
    std::vector<std::exception_ptr> errors(v_list.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < v_list.size();
           i = next.fetch_add(1)) {
        try {
          const auto extra = external.find(v_list[i]);
          outcomes[i] = table2_column(
              v_list[i], time_limit,
              extra == external.end() ? no_external : extra->second);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    bool time_limited = false;
    std::vector<tsb::Table2Row> rows;
    for (const Table2Outcome& outcome : outcomes) {
      rows.push_back(outcome.row);
      time_limited = time_limited || outcome.time_limited;
    }
    std::cout << tsb::render_table2(rows, format_of(table2_cmd));
    return time_limited ? kExitTimeLimit : kExitOk;
  }

  if (m_list.empty()) {
    for (long long m = 1; m <= 18; ++m) m_list.push_back(m);
  }
  std::vector<tsb::BipRow> rows;
  for (long long m : m_list) rows.push_back(tsb::make_bip_row(m));
  std::cout << tsb::render_bip(rows, format_of(bip_cmd));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tsb::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const tsb::NumericError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
