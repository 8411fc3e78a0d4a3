#pragma once

#include <string>

#include "tsb/digraph.hpp"

namespace tsb {

// A graph source given on the command line: either a constructor spec
// ("paley:27", "paley:3^3", "transitive:5", "cycle:6") or a file path
// (text or JSON graph format, sniffed by content).
struct GraphSpec {
  enum class Kind { file, paley, transitive, cycle };

  Kind kind = Kind::file;
  std::string path;      // kind == file
  long long p = 0;       // kind == paley
  int deg = 0;           // kind == paley
  int size = 0;          // kind == transitive / cycle

  static GraphSpec parse(const std::string& text);

  Digraph resolve() const;
  std::string describe() const;
};

}  // namespace tsb
