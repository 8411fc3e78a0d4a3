#pragma once

#include <string>
#include <vector>

#include "tsb/bip.hpp"
#include "tsb/bounds.hpp"
#include "tsb/search.hpp"
#include "tsb/spectral.hpp"

namespace tsb {

enum class Format { json, md, csv };

// Accepts "json", "md", "csv"; throws InputError otherwise.
Format parse_format(const std::string& name);

// All renderings of one report are lossless views of the same data; the
// JSON layouts are documented in the README.
std::string render_spectrum(const SeidelSpectrum& spec, Format format);

std::string render_bounds(const std::string& graph, long long v,
                          const BestBound& bounds, Format format);

std::string render_search(const std::string& graph,
                          const SearchResult& result, Format format);

// Rows of the closed-form interlacing table: (v, pi/(2 arccot sqrt(v))).
struct Table1Row {
  long long v = 0;
  double value = 0.0;
};

std::string render_table1(const std::vector<Table1Row>& rows, Format format);

// One column of the transitive-subtournament table.  `maximum` and
// `paley` are preformatted cells ("5", "n/a (needs external graph)", ...)
// because availability, not arithmetic, decides their content.
struct Table2Row {
  long long v = 0;
  long long upper_bound = 0;
  std::string maximum;
  std::string paley;
};

std::string render_table2(const std::vector<Table2Row>& rows, Format format);

// One row of the per-m intersection-polynomial report: the exact integer
// bound, its parity refinement, the closed-case analysis, and the scan.
struct BipRow {
  long long m = 0;
  long long v = 0;
  long long hoffman = 0;
  long long parity = 0;
  ClosedCaseBound cases;
  BipScan scan;
  long long best = 0;
};

BipRow make_bip_row(long long m);
std::string render_bip(const std::vector<BipRow>& rows, Format format);

}  // namespace tsb
