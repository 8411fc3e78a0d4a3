#pragma once

#include <string>
#include <string_view>

#include "tsb/digraph.hpp"

namespace tsb {

// Text format: line 1 is the decimal vertex count v, lines 2..v+1 hold
// exactly v characters from {0,1} each, character j of line i+1 being
// adj[i][j]; every row ends with a newline.
Digraph read_digraph_text(std::string_view text);
std::string write_digraph_text(const Digraph& g);

// JSON alternative: {"v": <int>, "edges": [[x, y], ...]}.
Digraph read_digraph_json(std::string_view text);
std::string write_digraph_json(const Digraph& g);

// Sniffs the format: leading '{' means JSON, anything else the text format.
Digraph read_digraph(std::string_view text);

Digraph read_digraph_file(const std::string& path);

}  // namespace tsb
