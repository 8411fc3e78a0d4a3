#include "tsb/graph_spec.hpp"

#include <charconv>
#include <string>

#include "tsb/error.hpp"
#include "tsb/finite_field.hpp"
#include "tsb/graph_io.hpp"
#include "tsb/paley.hpp"

namespace tsb {
namespace {

long long parse_number(const std::string& digits, const std::string& spec) {
  long long value = 0;
  const char* first = digits.data();
  const char* last = first + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || digits.empty()) {
    throw InputError("invalid number '" + digits + "' in graph spec '" +
                     spec + "'");
  }
  return value;
}

}  // namespace

GraphSpec GraphSpec::parse(const std::string& text) {
  GraphSpec spec;
  const std::size_t colon = text.find(':');
  const std::string prefix =
      colon == std::string::npos ? std::string() : text.substr(0, colon);

  if (prefix == "paley") {
    spec.kind = Kind::paley;
    const std::string arg = text.substr(colon + 1);
    const std::size_t caret = arg.find('^');
    if (caret != std::string::npos) {
      spec.p = parse_number(arg.substr(0, caret), text);
      spec.deg = static_cast<int>(parse_number(arg.substr(caret + 1), text));
    } else {
      const long long q = parse_number(arg, text);
      const auto decomposed = prime_power_decompose(q);
      if (!decomposed) {
        throw InputError("paley parameter must be a prime power, got " +
                         std::to_string(q));
      }
      spec.p = decomposed->first;
      spec.deg = decomposed->second;
    }
  } else if (prefix == "transitive") {
    spec.kind = Kind::transitive;
    spec.size = static_cast<int>(parse_number(text.substr(colon + 1), text));
  } else if (prefix == "cycle") {
    spec.kind = Kind::cycle;
    spec.size = static_cast<int>(parse_number(text.substr(colon + 1), text));
  } else {
    spec.kind = Kind::file;
    spec.path = text;
  }
  return spec;
}

Digraph GraphSpec::resolve() const {
  switch (kind) {
    case Kind::paley:
      return paley_tournament(p, deg);
    case Kind::transitive:
      return transitive_tournament(size);
    case Kind::cycle:
      return directed_cycle(size);
    case Kind::file:
      break;
  }
  return read_digraph_file(path);
}

std::string GraphSpec::describe() const {
  switch (kind) {
    case Kind::paley:
      return "paley:" + std::to_string(checked_pow(p, deg));
    case Kind::transitive:
      return "transitive:" + std::to_string(size);
    case Kind::cycle:
      return "cycle:" + std::to_string(size);
    case Kind::file:
      break;
  }
  return path;
}

}  // namespace tsb
