#ifndef LATSPEC_CATALOG_HPP
#define LATSPEC_CATALOG_HPP

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latspec/lattice.hpp"

namespace latspec {

/// Parsed form of a lattice document, before validation.
struct LatticeDoc {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Splits a line on whitespace, stopping at '#'.
inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

[[noreturn]] inline void parse_fail(std::size_t line, std::size_t column, const std::string& msg) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

inline std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto tokens = tokenize_line(text.substr(pos, end - pos));
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace detail

/// Parses the line-based format:
///
///   lattice <name>
///   elements <name>+
///   cover <lower> <upper>      (any number)
///
/// `#` starts a comment; blank lines are ignored.
inline LatticeDoc parse_lattice_doc(std::string_view text) {
  const auto lines = detail::meaningful_lines(text);
  LatticeDoc doc;
  std::size_t k = 0;
  if (k == lines.size() || lines[k].tokens[0].text != "lattice") {
    detail::parse_fail(k < lines.size() ? lines[k].number : 1, 1, "expected 'lattice <name>'");
  }
  if (lines[k].tokens.size() != 2) detail::parse_fail(lines[k].number, 1, "'lattice' takes exactly one name");
  doc.name = lines[k].tokens[1].text;
  ++k;
  if (k == lines.size() || lines[k].tokens[0].text != "elements") {
    detail::parse_fail(k < lines.size() ? lines[k].number : lines.back().number + 1, 1,
                       "expected 'elements <name>+'");
  }
  if (lines[k].tokens.size() < 2) detail::parse_fail(lines[k].number, 1, "'elements' needs at least one name");
  for (std::size_t t = 1; t < lines[k].tokens.size(); ++t) {
    const auto& tok = lines[k].tokens[t];
    for (const auto& seen : doc.elements) {
      if (seen == tok.text) {
        throw Error(ErrorKind::DuplicateElement, "line " + std::to_string(lines[k].number) + ", column " +
                                                     std::to_string(tok.column) + ": '" + tok.text + "'");
      }
    }
    doc.elements.push_back(tok.text);
  }
  for (++k; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens[0].text != "cover") {
      detail::parse_fail(line.number, line.tokens[0].column, "unexpected '" + line.tokens[0].text + "'");
    }
    if (line.tokens.size() != 3) detail::parse_fail(line.number, 1, "'cover' takes a lower and an upper element");
    for (std::size_t t = 1; t < 3; ++t) {
      const auto& tok = line.tokens[t];
      if (std::find(doc.elements.begin(), doc.elements.end(), tok.text) == doc.elements.end()) {
        throw Error(ErrorKind::UnknownElement, "line " + std::to_string(line.number) + ", column " +
                                                   std::to_string(tok.column) + ": '" + tok.text + "'");
      }
    }
    if (line.tokens[1].text == line.tokens[2].text) {
      detail::parse_fail(line.number, line.tokens[2].column, "reflexive cover '" + line.tokens[1].text + "'");
    }
    doc.covers.emplace_back(line.tokens[1].text, line.tokens[2].text);
  }
  return doc;
}

inline FiniteLattice build_lattice(const LatticeDoc& doc) {
  std::vector<Cover> covers;
  auto index = [&](const std::string& s) {
    return static_cast<Elem>(std::find(doc.elements.begin(), doc.elements.end(), s) - doc.elements.begin());
  };
  for (const auto& [lo, hi] : doc.covers) covers.push_back({index(lo), index(hi)});
  return FiniteLattice::from_covers(doc.name, doc.elements, covers);
}

inline FiniteLattice parse_lattice(std::string_view text) { return build_lattice(parse_lattice_doc(text)); }

/// Canonical document: elements in carrier order, Hasse covers sorted.
inline std::string render_lattice(const FiniteLattice& L) {
  std::ostringstream out;
  out << "lattice " << L.name() << "\nelements";
  for (const auto& n : L.names()) out << ' ' << n;
  out << '\n';
  for (const Cover& c : L.covers()) out << "cover " << L.element_name(c.lower) << ' ' << L.element_name(c.upper) << '\n';
  return out.str();
}

/// Header of a homomorphism document: `hom <name> from <lattice> to <lattice>`.
struct HomDoc {
  std::string name;
  std::string from;
  std::string to;
  std::vector<std::pair<std::string, std::string>> maps;
};

inline HomDoc parse_hom_doc(std::string_view text) {
  const auto lines = detail::meaningful_lines(text);
  if (lines.empty() || lines[0].tokens[0].text != "hom") {
    detail::parse_fail(lines.empty() ? 1 : lines[0].number, 1, "expected 'hom <name> from <lattice> to <lattice>'");
  }
  const auto& head = lines[0].tokens;
  if (head.size() != 6 || head[2].text != "from" || head[4].text != "to") {
    detail::parse_fail(lines[0].number, 1, "expected 'hom <name> from <lattice> to <lattice>'");
  }
  HomDoc doc{head[1].text, head[3].text, head[5].text, {}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens[0].text != "map") {
      detail::parse_fail(line.number, line.tokens[0].column, "unexpected '" + line.tokens[0].text + "'");
    }
    if (line.tokens.size() != 3) detail::parse_fail(line.number, 1, "'map' takes a source and a target element");
    doc.maps.emplace_back(line.tokens[1].text, line.tokens[2].text);
  }
  return doc;
}

/// Parses and validates a homomorphism between two already-built lattices.
inline LatticeHom parse_hom(std::string_view text, const LatticePtr& source, const LatticePtr& target) {
  const HomDoc doc = parse_hom_doc(text);
  if (doc.from != source->name() || doc.to != target->name()) {
    throw Error(ErrorKind::InvalidArgument, "hom '" + doc.name + "' is declared from '" + doc.from + "' to '" +
                                                doc.to + "' but was given '" + source->name() + "' and '" +
                                                target->name() + "'");
  }
  constexpr Elem kUnset = static_cast<Elem>(-1);
  std::vector<Elem> map(source->size(), kUnset);
  for (const auto& [from, to] : doc.maps) {
    const auto x = source->find(from);
    if (!x) throw Error(ErrorKind::UnknownElement, "'" + from + "' is not an element of '" + source->name() + "'");
    const auto y = target->find(to);
    if (!y) throw Error(ErrorKind::UnknownElement, "'" + to + "' is not an element of '" + target->name() + "'");
    if (map[*x] != kUnset) throw Error(ErrorKind::ParseError, "'" + from + "' is mapped twice");
    map[*x] = *y;
  }
  for (Elem x = 0; x < map.size(); ++x) {
    if (map[x] == kUnset) throw Error(ErrorKind::MissingMapping, "'" + source->element_name(x) + "' has no image");
  }
  return check_hom(source, target, std::move(map));
}

inline std::string render_hom(const std::string& name, const LatticeHom& f) {
  std::ostringstream out;
  out << "hom " << name << " from " << f.source->name() << " to " << f.target->name() << '\n';
  for (Elem x = 0; x < f.map.size(); ++x) {
    out << "map " << f.source->element_name(x) << ' ' << f.target->element_name(f(x)) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Named lattices

inline FiniteLattice chain(std::size_t n, std::string name = {}) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "a chain needs at least one element");
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back(std::to_string(k));
    if (k > 0) covers.push_back({k - 1, k});
  }
  return FiniteLattice::from_covers(name.empty() ? "chain" + std::to_string(n) : std::move(name), names, covers);
}

inline FiniteLattice lattice_m5() {
  const std::vector<Cover> c{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FiniteLattice::from_covers("M5", {"0", "a", "b", "c", "1"}, c);
}

/// 0 < a < c < 1 and 0 < b < 1.
inline FiniteLattice lattice_n5() {
  const std::vector<Cover> c{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return FiniteLattice::from_covers("N5", {"0", "a", "b", "c", "1"}, c);
}

inline FiniteLattice lattice_diamond() {
  const std::vector<Cover> c{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FiniteLattice::from_covers("diamond", {"0", "a", "b", "1"}, c);
}

inline FiniteLattice lattice_b3() {
  return product(product(chain(2), chain(2)), chain(2), "B3");
}

/// M5 with the atom c replaced by a two-element arm c1 < c2.
inline FiniteLattice lattice_m5_arm() {
  const std::vector<Cover> c{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {1, 5}, {2, 5}, {4, 5}};
  return FiniteLattice::from_covers("M5arm", {"0", "a", "b", "c1", "c2", "1"}, c);
}

/// Two disjoint two-element arms between 0 and 1.
inline FiniteLattice lattice_hexagon() {
  const std::vector<Cover> c{{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
  return FiniteLattice::from_covers("hexagon", {"0", "a1", "a2", "b1", "b2", "1"}, c);
}

/// The fixed named catalog, in a stable order.
inline std::vector<FiniteLattice> catalog() {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 1; n <= 5; ++n) out.push_back(chain(n));
  out.push_back(lattice_diamond());
  out.push_back(lattice_b3());
  out.push_back(lattice_m5());
  out.push_back(lattice_n5());
  out.push_back(lattice_m5_arm());
  out.push_back(lattice_hexagon());
  out.push_back(product(chain(2), chain(3), "chain2xchain3"));
  out.push_back(product(chain(3), chain(3), "chain3xchain3"));
  out.push_back(product(lattice_diamond(), chain(3), "diamondxchain3"));
  out.push_back(product(chain(2), lattice_m5(), "chain2xM5"));
  out.push_back(product(chain(2), lattice_n5(), "chain2xN5"));
  out.push_back(product(lattice_n5(), chain(3), "N5xchain3"));
  return out;
}

inline std::optional<FiniteLattice> catalog_lookup(std::string_view name) {
  for (auto& L : catalog()) {
    if (L.name() == name) return L;
  }
  return std::nullopt;
}

}  // namespace latspec

#endif  // LATSPEC_CATALOG_HPP
