#ifndef LATSPEC_DOT_HPP
#define LATSPEC_DOT_HPP

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "latspec/lattice.hpp"
#include "latspec/spectra.hpp"

namespace latspec {

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Strict covering pairs of a preorder given by up-sets; equivalent points
// are linked both ways.
inline std::vector<std::pair<Point, Point>> preorder_edges(const std::vector<PointSet>& up) {
  std::vector<std::pair<Point, Point>> out;
  const std::size_t n = up.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y : up[x]) {
      if (y == x) continue;
      bool between = false;
      for (Point z : up[x]) {
        if (z == x || z == y) continue;
        const bool strict_low = !up[z].contains(x);
        const bool strict_high = !up[y].contains(z);
        if (up[z].contains(y) && strict_low && strict_high) between = true;
      }
      if (!between) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace detail

/// Hasse diagram, bottom to top.
inline std::string to_dot(const FiniteLattice& L) {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote(L.name()) << " {\n  rankdir=BT;\n";
  for (const auto& n : L.names()) out << "  " << detail::dot_quote(n) << ";\n";
  for (const Cover& c : L.covers()) {
    out << "  " << detail::dot_quote(L.element_name(c.lower)) << " -> " << detail::dot_quote(L.element_name(c.upper))
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

/// Points labeled (I;F) with the elements x for which they lie in delta(x)
/// and epsilon(x); solid edges for <=_tau, dashed for <=_sigma.
inline std::string to_dot(const BitopSpectrum& s) {
  const FiniteLattice& L = s.lattice();
  std::ostringstream out;
  out << "digraph " << detail::dot_quote("spec_B(" + L.name() + ")") << " {\n  rankdir=BT;\n";
  for (Point p = 0; p < s.size(); ++p) {
    ElemSet in_delta;
    ElemSet in_epsilon;
    for (Elem x = 0; x < L.size(); ++x) {
      if (s.delta(x).contains(p)) in_delta.insert(x);
      if (s.epsilon(x).contains(p)) in_epsilon.insert(x);
    }
    out << "  p" << p << " [label=" << detail::dot_quote(s.point_name(p) + "\\ndelta: " + L.format(in_delta) +
                                                          "\\neps: " + L.format(in_epsilon))
        << "];\n";
  }
  for (auto [x, y] : detail::preorder_edges(s.space().tau().min_nbhds())) {
    out << "  p" << x << " -> p" << y << " [style=solid];\n";
  }
  for (auto [x, y] : detail::preorder_edges(s.space().sigma().min_nbhds())) {
    out << "  p" << x << " -> p" << y << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const ClassicalSpectrum& s) {
  std::ostringstream out;
  out << "digraph " << detail::dot_quote("spec(" + s.lattice().name() + ")") << " {\n  rankdir=BT;\n";
  for (Point p = 0; p < s.size(); ++p) {
    out << "  p" << p << " [label=" << detail::dot_quote(s.point_names()[p]) << "];\n";
  }
  for (auto [x, y] : detail::preorder_edges(s.space().min_nbhds())) out << "  p" << x << " -> p" << y << ";\n";
  out << "}\n";
  return out.str();
}

/// Syntax check against the subset of the DOT grammar the exporters use:
/// `[strict] (graph|digraph) [ID] { stmt* }` with node, edge, attribute and
/// `ID = ID` statements. Returns a description of the first error.
inline std::optional<std::string> validate_dot(std::string_view text) {
  std::vector<std::string> toks;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') j += text[j] == '\\' ? 2 : 1;
      if (j >= text.size()) return "unterminated string";
      toks.emplace_back("ID");
      i = j + 1;
    } else if (c == '-' && i + 1 < text.size() && (text[i + 1] == '>' || text[i + 1] == '-')) {
      toks.emplace_back(text[i + 1] == '>' ? "->" : "--");
      i += 2;
    } else if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
      toks.emplace_back(1, c);
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' ||
                                 text[j] == '.' || text[j] == '-')) {
        ++j;
      }
      const std::string word(text.substr(i, j - i));
      toks.push_back(word == "digraph" || word == "graph" || word == "strict" || word == "node" || word == "edge"
                         ? word
                         : std::string("ID"));
      i = j;
    } else {
      return std::string("unexpected character '") + c + "'";
    }
  }
  std::size_t k = 0;
  auto peek = [&]() -> std::string { return k < toks.size() ? toks[k] : std::string("<eof>"); };
  auto expect = [&](const std::string& t) -> std::optional<std::string> {
    if (peek() != t) return "expected '" + t + "', found '" + peek() + "'";
    ++k;
    return std::nullopt;
  };
  auto attr_list = [&]() -> std::optional<std::string> {
    while (peek() == "[") {
      ++k;
      while (peek() != "]") {
        if (auto e = expect("ID")) return e;
        if (auto e = expect("=")) return e;
        if (auto e = expect("ID")) return e;
        if (peek() == "," || peek() == ";") ++k;
      }
      ++k;
    }
    return std::nullopt;
  };
  if (peek() == "strict") ++k;
  std::string edge_op;
  if (peek() == "digraph") {
    edge_op = "->";
  } else if (peek() == "graph") {
    edge_op = "--";
  } else {
    return "expected 'graph' or 'digraph'";
  }
  ++k;
  if (peek() == "ID") ++k;
  if (auto e = expect("{")) return e;
  while (peek() != "}") {
    if (peek() == "<eof>") return "missing '}'";
    if (peek() == "graph" || peek() == "node" || peek() == "edge") {
      ++k;
      if (peek() != "[") return "attribute statement without attributes";
      if (auto e = attr_list()) return e;
    } else if (peek() == "ID") {
      ++k;
      if (peek() == "=") {
        ++k;
        if (auto e = expect("ID")) return e;
      } else {
        while (peek() == "->" || peek() == "--") {
          if (peek() != edge_op) return "edge operator '" + peek() + "' does not match the graph kind";
          ++k;
          if (auto e = expect("ID")) return e;
        }
        if (auto e = attr_list()) return e;
      }
    } else {
      return "unexpected '" + peek() + "' in statement list";
    }
    if (peek() == ";") ++k;
  }
  ++k;
  if (k != toks.size()) return "trailing tokens after the graph";
  return std::nullopt;
}

}  // namespace latspec

#endif  // LATSPEC_DOT_HPP
