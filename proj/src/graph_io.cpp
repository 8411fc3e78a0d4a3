#include "tsb/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tsb/error.hpp"

namespace tsb {
namespace {

// Guard against absurd allocations from corrupt headers; two dense bit
// matrices at this order stay around 100 MB.
constexpr long long kMaxVertices = 20000;

}  // namespace

Digraph read_digraph_text(std::string_view text) {
  std::size_t pos = 0;

  auto read_line = [&](int line_no) -> std::string_view {
    if (pos >= text.size()) {
      throw ParseError("unexpected end of input", line_no, 1);
    }
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end < text.size() ? end + 1 : end;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  };

  const std::string_view header = read_line(1);
  if (header.empty()) {
    throw ParseError("malformed header: expected vertex count", 1, 1);
  }
  long long v = 0;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const char c = header[i];
    if (c < '0' || c > '9') {
      throw ParseError("malformed header: expected vertex count", 1,
                       static_cast<int>(i) + 1);
    }
    v = v * 10 + (c - '0');
    if (v > kMaxVertices) {
      throw ParseError("vertex count exceeds the supported maximum " +
                           std::to_string(kMaxVertices),
                       1, 1);
    }
  }
  if (v < 1) throw ParseError("vertex count must be positive", 1, 1);

  Digraph::Builder b(static_cast<int>(v));
  for (long long i = 0; i < v; ++i) {
    const int line_no = static_cast<int>(i) + 2;
    const std::string_view row = read_line(line_no);
    if (static_cast<long long>(row.size()) != v) {
      throw ParseError("row length " + std::to_string(row.size()) +
                           " differs from vertex count " + std::to_string(v),
                       line_no,
                       static_cast<int>(std::min<std::size_t>(
                           row.size(), static_cast<std::size_t>(v))) +
                           1);
    }
    for (long long j = 0; j < v; ++j) {
      const char c = row[j];
      if (c == '0') continue;
      if (c != '1') {
        throw ParseError(std::string("invalid character '") + c +
                             "', expected 0 or 1",
                         line_no, static_cast<int>(j) + 1);
      }
      b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  // Only whitespace may follow the last row.
  while (pos < text.size()) {
    const char c = text[pos];
    if (c != '\n' && c != '\r' && c != ' ' && c != '\t') {
      throw ParseError("unexpected trailing content",
                       static_cast<int>(v) + 2, 1);
    }
    ++pos;
  }
  return b.take();
}

std::string write_digraph_text(const Digraph& g) {
  const int v = g.order();
  std::string out;
  out.reserve(static_cast<std::size_t>(v + 1) * (v + 1) + 8);
  out += std::to_string(v);
  out += '\n';
  for (int x = 0; x < v; ++x) {
    for (int y = 0; y < v; ++y) out += g.edge(x, y) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Digraph read_digraph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
  if (!j.is_object() || !j.contains("v") || !j.contains("edges")) {
    throw InputError("graph JSON must be an object with \"v\" and \"edges\"");
  }
  if (!j["v"].is_number_integer()) {
    throw InputError("graph JSON field \"v\" must be an integer");
  }
  const long long v = j["v"].get<long long>();
  if (v < 1 || v > kMaxVertices) {
    throw InputError("graph JSON vertex count out of range: " +
                     std::to_string(v));
  }
  if (!j["edges"].is_array()) {
    throw InputError("graph JSON field \"edges\" must be an array");
  }
  Digraph::Builder b(static_cast<int>(v));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw InputError("graph JSON edges must be [x, y] integer pairs");
    }
    b.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return b.take();
}

std::string write_digraph_json(const Digraph& g) {
  nlohmann::json j;
  j["v"] = g.order();
  auto edges = nlohmann::json::array();
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      if (g.edge(x, y)) edges.push_back({x, y});
    }
  }
  j["edges"] = std::move(edges);
  return j.dump();
}

Digraph read_digraph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() &&
         (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
          text[i] == '\r')) {
    ++i;
  }
  if (i == text.size()) throw ParseError("empty input", 1, 1);
  if (text[i] == '{') return read_digraph_json(text.substr(i));
  return read_digraph_text(text.substr(i));
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("file not found: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw InputError("failed to read file: " + path);
  return read_digraph(buf.str());
}

}  // namespace tsb
