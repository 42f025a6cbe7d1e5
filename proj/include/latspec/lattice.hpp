#ifndef LATSPEC_LATTICE_HPP
#define LATSPEC_LATTICE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latspec/bits.hpp"
#include "latspec/error.hpp"

namespace latspec {

using Elem = std::size_t;
using ElemSet = Bits;

struct Cover {
  Elem lower;
  Elem upper;
  bool operator==(const Cover&) const = default;
  auto operator<=>(const Cover&) const = default;
};

/// A finite lattice on the index carrier {0, ..., n-1} with display names.
///
/// Construction validates the order and derives complete meet/join tables; an
/// instance is immutable afterwards. The only way to obtain tables that are not
/// the true glb/lub is `with_meet_entry`, which exists for fault injection.
class FiniteLattice {
 public:
  /// Builds the lattice whose order is the reflexive-transitive closure of the
  /// given cover pairs (redundant pairs are allowed).
  static FiniteLattice from_covers(std::string name, std::vector<std::string> names,
                                   std::span<const Cover> covers) {
    const std::size_t n = names.size();
    check_names(names);
    std::vector<ElemSet> above(n);
    for (const Cover& c : covers) {
      if (c.lower >= n || c.upper >= n) {
        throw Error(ErrorKind::InvalidArgument, "cover references an element outside the carrier");
      }
      if (c.lower == c.upper) {
        throw Error(ErrorKind::CyclicCovers, "reflexive cover on '" + names[c.lower] + "'");
      }
      above[c.lower].insert(c.upper);
    }
    // Transitive closure by repeated relaxation; n <= 64 keeps this cheap.
    std::vector<ElemSet> up(n);
    for (Elem x = 0; x < n; ++x) up[x] = above[x] | ElemSet::single(x);
    for (bool changed = true; changed;) {
      changed = false;
      for (Elem x = 0; x < n; ++x) {
        ElemSet next = up[x];
        for (Elem y : up[x]) next |= up[y];
        if (next != up[x]) {
          up[x] = next;
          changed = true;
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y : up[x]) {
        if (y != x && up[y].contains(x)) {
          throw Error(ErrorKind::CyclicCovers,
                      "covers form a cycle through '" + names[x] + "' and '" + names[y] + "'");
        }
      }
    }
    return from_order(std::move(name), std::move(names), std::move(up));
  }

  /// Builds a lattice from its full order relation; `up[x]` = {y : x <= y}.
  static FiniteLattice from_order(std::string name, std::vector<std::string> names,
                                  std::vector<ElemSet> up) {
    const std::size_t n = names.size();
    check_names(names);
    if (up.size() != n) throw Error(ErrorKind::InvalidArgument, "order relation size mismatch");
    FiniteLattice lat;
    lat.name_ = std::move(name);
    lat.names_ = std::move(names);
    lat.up_ = std::move(up);
    lat.down_.assign(n, ElemSet{});
    for (Elem x = 0; x < n; ++x) {
      if (!lat.up_[x].contains(x)) {
        throw Error(ErrorKind::InvalidArgument, "order is not reflexive at '" + lat.names_[x] + "'");
      }
      if (!lat.up_[x].subset_of(ElemSet::full(n))) {
        throw Error(ErrorKind::InvalidArgument, "order relation leaves the carrier");
      }
      for (Elem y : lat.up_[x]) lat.down_[y].insert(x);
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y : lat.up_[x]) {
        if (y != x && lat.up_[y].contains(x)) {
          throw Error(ErrorKind::InvalidArgument, "order is not antisymmetric on '" + lat.names_[x] +
                                                      "' and '" + lat.names_[y] + "'");
        }
        if (!lat.up_[y].subset_of(lat.up_[x])) {
          throw Error(ErrorKind::InvalidArgument, "order is not transitive through '" + lat.names_[y] + "'");
        }
      }
    }
    lat.meet_.assign(n * n, 0);
    lat.join_.assign(n * n, 0);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x; y < n; ++y) {
        const Elem m = lat.extremal(lat.down_[x] & lat.down_[y], /*greatest=*/true, x, y, "greatest lower bound");
        const Elem j = lat.extremal(lat.up_[x] & lat.up_[y], /*greatest=*/false, x, y, "least upper bound");
        lat.meet_[x * n + y] = lat.meet_[y * n + x] = m;
        lat.join_[x * n + y] = lat.join_[y * n + x] = j;
      }
    }
    // Pairwise bounds exist, so the whole carrier has a least and greatest element.
    lat.top_ = lat.extremal(ElemSet::full(n), /*greatest=*/true, 0, 0, "top");
    lat.bottom_ = lat.extremal(ElemSet::full(n), /*greatest=*/false, 0, 0, "bottom");
    return lat;
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& element_name(Elem x) const { return names_.at(x); }
  std::optional<Elem> find(std::string_view element) const {
    for (Elem x = 0; x < names_.size(); ++x) {
      if (names_[x] == element) return x;
    }
    return std::nullopt;
  }

  ElemSet carrier() const { return ElemSet::full(size()); }
  bool leq(Elem x, Elem y) const { return up_[x].contains(y); }
  ElemSet up(Elem x) const { return up_[x]; }
  ElemSet down(Elem x) const { return down_[x]; }
  Elem meet(Elem x, Elem y) const { return meet_[x * size() + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * size() + y]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// Meet of a nonempty subset (left fold over ascending indices).
  Elem meet_of(ElemSet s) const {
    if (s.empty()) throw Error(ErrorKind::EmptyInput, "meet of the empty set");
    Elem acc = s.lowest();
    for (Elem x : s) acc = meet(acc, x);
    return acc;
  }
  Elem join_of(ElemSet s) const {
    if (s.empty()) throw Error(ErrorKind::EmptyInput, "join of the empty set");
    Elem acc = s.lowest();
    for (Elem x : s) acc = join(acc, x);
    return acc;
  }

  /// Covering pairs of the Hasse diagram, sorted.
  std::vector<Cover> covers() const {
    std::vector<Cover> out;
    for (Elem x = 0; x < size(); ++x) {
      for (Elem y : up_[x]) {
        if (y == x) continue;
        // y covers x iff nothing lies strictly between them.
        if ((up_[x] & down_[y]) == (ElemSet::single(x) | ElemSet::single(y))) out.push_back({x, y});
      }
    }
    return out;
  }

  std::string format(ElemSet s) const { return format_set(s, names_); }

  FiniteLattice renamed(std::string name) const {
    FiniteLattice copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  /// Copy whose meet table entry (x, y) is overwritten with `value`, without
  /// revalidation. Only for mutation tests of the verification suites.
  FiniteLattice with_meet_entry(Elem x, Elem y, Elem value) const {
    FiniteLattice copy = *this;
    copy.meet_.at(x * size() + y) = value;
    return copy;
  }

  /// Structural equality: same names, same order, same tables.
  bool operator==(const FiniteLattice& o) const {
    return names_ == o.names_ && up_ == o.up_ && meet_ == o.meet_ && join_ == o.join_;
  }

 private:
  FiniteLattice() = default;

  static void check_names(const std::vector<std::string>& names) {
    if (names.empty()) throw Error(ErrorKind::InvalidArgument, "a lattice needs at least one element");
    if (names.size() > Bits::kCapacity) {
      throw Error(ErrorKind::CarrierTooLarge, "at most 64 elements are supported");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& s : names) {
      if (!seen.insert(s).second) throw Error(ErrorKind::DuplicateElement, "element '" + s + "' declared twice");
    }
  }

  // The unique greatest (or least) element of `bounds`, or NotALattice.
  Elem extremal(ElemSet bounds, bool greatest, Elem x, Elem y, const char* what) const {
    for (Elem c : bounds) {
      const ElemSet reach = greatest ? down_[c] : up_[c];
      if (bounds.subset_of(reach)) return c;
    }
    throw Error(ErrorKind::NotALattice, std::string("no ") + what + " for '" + names_[x] + "' and '" +
                                            names_[y] + "'");
  }

  std::string name_;
  std::vector<std::string> names_;
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

inline LatticePtr share(FiniteLattice lattice) {
  return std::make_shared<const FiniteLattice>(std::move(lattice));
}

// ---------------------------------------------------------------------------
// Ideals and filters

struct Ideal {
  ElemSet members;
  bool operator==(const Ideal&) const = default;
  auto operator<=>(const Ideal&) const = default;
};

struct Filter {
  ElemSet members;
  bool operator==(const Filter&) const = default;
  auto operator<=>(const Filter&) const = default;
};

/// An ideal whose complement is a filter.
struct PrimeIdeal {
  ElemSet members;
  bool operator==(const PrimeIdeal&) const = default;
  auto operator<=>(const PrimeIdeal&) const = default;
};

inline bool is_ideal(const FiniteLattice& L, ElemSet s) {
  if (s.empty() || !s.subset_of(L.carrier())) return false;
  for (Elem x : s) {
    if (!L.down(x).subset_of(s)) return false;
    for (Elem y : s) {
      if (!s.contains(L.join(x, y))) return false;
    }
  }
  return true;
}

inline bool is_filter(const FiniteLattice& L, ElemSet s) {
  if (s.empty() || !s.subset_of(L.carrier())) return false;
  for (Elem x : s) {
    if (!L.up(x).subset_of(s)) return false;
    for (Elem y : s) {
      if (!s.contains(L.meet(x, y))) return false;
    }
  }
  return true;
}

inline bool is_prime_ideal(const FiniteLattice& L, ElemSet s) {
  return is_ideal(L, s) && is_filter(L, s.complement(L.size()));
}

inline Ideal principal_ideal(const FiniteLattice& L, Elem x) { return Ideal{L.down(x)}; }
inline Filter principal_filter(const FiniteLattice& L, Elem x) { return Filter{L.up(x)}; }

namespace detail {

// Alternates order closure with binary-operation closure until stable.
template <class OrderClosure, class Op>
ElemSet close_under(ElemSet s, OrderClosure order_closure, Op op) {
  for (;;) {
    ElemSet next = s;
    for (Elem x : s) next |= order_closure(x);
    for (Elem x : next) {
      for (Elem y : next) next.insert(op(x, y));
    }
    if (next == s) return s;
    s = next;
  }
}

}  // namespace detail

/// Smallest ideal containing a nonempty set.
inline Ideal generated_ideal(const FiniteLattice& L, ElemSet s) {
  if (s.empty()) throw Error(ErrorKind::EmptyGeneratorSet, "cannot generate an ideal from the empty set");
  return Ideal{detail::close_under(
      s, [&](Elem x) { return L.down(x); }, [&](Elem x, Elem y) { return L.join(x, y); })};
}

/// Smallest filter containing a nonempty set.
inline Filter generated_filter(const FiniteLattice& L, ElemSet s) {
  if (s.empty()) throw Error(ErrorKind::EmptyGeneratorSet, "cannot generate a filter from the empty set");
  return Filter{detail::close_under(
      s, [&](Elem x) { return L.up(x); }, [&](Elem x, Elem y) { return L.meet(x, y); })};
}

// A finite ideal is closed under the join of all its members, so it is the
// principal ideal of that join; enumeration is therefore linear in n.
inline std::vector<Ideal> all_ideals(const FiniteLattice& L) {
  std::vector<Ideal> out;
  out.reserve(L.size());
  for (Elem x = 0; x < L.size(); ++x) out.push_back(principal_ideal(L, x));
  return out;
}

inline std::vector<Filter> all_filters(const FiniteLattice& L) {
  std::vector<Filter> out;
  out.reserve(L.size());
  for (Elem x = 0; x < L.size(); ++x) out.push_back(principal_filter(L, x));
  return out;
}

inline std::vector<PrimeIdeal> prime_ideals(const FiniteLattice& L) {
  std::vector<PrimeIdeal> out;
  for (const Ideal& I : all_ideals(L)) {
    if (is_filter(L, I.members.complement(L.size()))) out.push_back(PrimeIdeal{I.members});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distributivity

/// A 5-element sublattice isomorphic to M5 or N5.
///
/// `elements` is (bottom, a, b, c, top); for N5 the chain is a < c and b is
/// incomparable to both.
struct ForbiddenSublattice {
  enum class Kind { M5, N5 };
  Kind kind;
  std::array<Elem, 5> elements;
};

struct DistributivityReport {
  bool distributive = true;
  std::optional<std::array<Elem, 3>> violating_triple;  // x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)
  std::optional<ForbiddenSublattice> sublattice;

  bool detectors_agree() const { return violating_triple.has_value() == sublattice.has_value(); }
};

inline std::optional<std::array<Elem, 3>> find_distributivity_violation(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return std::array<Elem, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

/// Searches for a sublattice isomorphic to M5 or N5 (closed under the meet and
/// join of `L`). Candidates are a bottom u < top v and three elements strictly
/// between them.
inline std::optional<ForbiddenSublattice> find_forbidden_sublattice(const FiniteLattice& L) {
  const std::size_t n = L.size();
  for (Elem u = 0; u < n; ++u) {
    for (Elem v : L.up(u)) {
      if (v == u) continue;
      const ElemSet between = (L.up(u) & L.down(v)) - ElemSet::single(u) - ElemSet::single(v);
      for (Elem a : between) {
        for (Elem b : between) {
          if (b == a) continue;
          for (Elem c : between) {
            if (c == a || c == b) continue;
            const bool ab = L.leq(a, b) || L.leq(b, a);
            const bool ac = L.leq(a, c) || L.leq(c, a);
            const bool bc = L.leq(b, c) || L.leq(c, b);
            // M5: three pairwise incomparable elements with pairwise meets u and joins v.
            if (!ab && !ac && !bc && a < b && b < c) {
              bool ok = true;
              for (auto [p, q] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
                ok = ok && L.meet(p, q) == u && L.join(p, q) == v;
              }
              if (ok) return ForbiddenSublattice{ForbiddenSublattice::Kind::M5, {u, a, b, c, v}};
            }
            // N5: a < c, b incomparable to both, b meets to u and joins to v.
            if (L.leq(a, c) && !ab && !bc) {
              if (L.meet(b, c) == u && L.meet(a, b) == u && L.join(a, b) == v && L.join(b, c) == v) {
                return ForbiddenSublattice{ForbiddenSublattice::Kind::N5, {u, a, b, c, v}};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline DistributivityReport is_distributive(const FiniteLattice& L) {
  DistributivityReport r;
  r.violating_triple = find_distributivity_violation(L);
  r.sublattice = find_forbidden_sublattice(L);
  r.distributive = !r.violating_triple.has_value();
  return r;
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// A total map between two lattices preserving meet and join.
struct LatticeHom {
  LatticePtr source;
  LatticePtr target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }

  ElemSet image(ElemSet s) const {
    ElemSet out;
    for (Elem x : s) out.insert(map[x]);
    return out;
  }

  ElemSet preimage(ElemSet s) const {
    ElemSet out;
    for (Elem x = 0; x < map.size(); ++x) {
      if (s.contains(map[x])) out.insert(x);
    }
    return out;
  }
};

/// First pair on which `map` fails to preserve meet or join, as a readable message.
inline std::optional<std::string> hom_violation(const FiniteLattice& S, const FiniteLattice& T,
                                                const std::vector<Elem>& map) {
  for (Elem x = 0; x < S.size(); ++x) {
    for (Elem y = 0; y < S.size(); ++y) {
      const auto& sx = S.element_name(x);
      const auto& sy = S.element_name(y);
      if (map[S.join(x, y)] != T.join(map[x], map[y])) {
        return "f(" + sx + " v " + sy + ") = " + T.element_name(map[S.join(x, y)]) + " but f(" + sx + ") v f(" +
               sy + ") = " + T.element_name(T.join(map[x], map[y]));
      }
      if (map[S.meet(x, y)] != T.meet(map[x], map[y])) {
        return "f(" + sx + " ^ " + sy + ") = " + T.element_name(map[S.meet(x, y)]) + " but f(" + sx + ") ^ f(" +
               sy + ") = " + T.element_name(T.meet(map[x], map[y]));
      }
    }
  }
  return std::nullopt;
}

inline LatticeHom check_hom(LatticePtr source, LatticePtr target, std::vector<Elem> map) {
  if (map.size() != source->size()) {
    throw Error(ErrorKind::MissingMapping, "map is not total on '" + source->name() + "'");
  }
  for (Elem y : map) {
    if (y >= target->size()) throw Error(ErrorKind::InvalidArgument, "map leaves the target carrier");
  }
  if (auto v = hom_violation(*source, *target, map)) throw Error(ErrorKind::NotAHom, *v);
  return LatticeHom{std::move(source), std::move(target), std::move(map)};
}

inline LatticeHom identity_hom(const LatticePtr& L) {
  std::vector<Elem> map(L->size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = x;
  return LatticeHom{L, L, std::move(map)};
}

/// g ∘ f
inline LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  std::vector<Elem> map(f.map.size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = g.map[f.map[x]];
  return LatticeHom{f.source, g.target, std::move(map)};
}

/// Every homomorphism between two lattices, by exhaustive search over maps
/// with order-preservation pruning.
inline std::vector<LatticeHom> all_homs(const LatticePtr& S, const LatticePtr& T) {
  std::vector<LatticeHom> out;
  const std::size_t n = S->size();
  std::vector<Elem> map(n, 0);
  auto rec = [&](auto&& self, Elem x) -> void {
    if (x == n) {
      if (!hom_violation(*S, *T, map)) out.push_back(LatticeHom{S, T, map});
      return;
    }
    for (Elem y = 0; y < T->size(); ++y) {
      bool monotone = true;
      for (Elem z = 0; z < x && monotone; ++z) {
        if (S->leq(z, x) && !T->leq(map[z], y)) monotone = false;
        if (S->leq(x, z) && !T->leq(y, map[z])) monotone = false;
      }
      if (!monotone) continue;
      map[x] = y;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice axioms on the stored tables

/// Exhaustively re-checks the tables against the order: meet/join are the
/// glb/lub, commutative, associative, absorptive, and x <= y iff x ∧ y = x.
/// Returns a description of the first violation.
inline std::optional<std::string> lattice_axiom_violation(const FiniteLattice& L) {
  const std::size_t n = L.size();
  const auto& nm = L.names();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem m = L.meet(x, y);
      const Elem j = L.join(x, y);
      const std::string pair = nm[x] + "," + nm[y];
      if (m >= n || j >= n) return "table entry out of range at (" + pair + ")";
      if (m != L.meet(y, x)) return "meet not commutative at (" + pair + ")";
      if (j != L.join(y, x)) return "join not commutative at (" + pair + ")";
      if (!L.leq(m, x) || !L.leq(m, y)) return "meet(" + pair + ") = " + nm[m] + " is not a lower bound";
      if (!L.leq(x, j) || !L.leq(y, j)) return "join(" + pair + ") = " + nm[j] + " is not an upper bound";
      if (!(L.down(x) & L.down(y)).subset_of(L.down(m))) {
        return "meet(" + pair + ") = " + nm[m] + " is not the greatest lower bound";
      }
      if (!(L.up(x) & L.up(y)).subset_of(L.up(j))) {
        return "join(" + pair + ") = " + nm[j] + " is not the least upper bound";
      }
      if (L.meet(x, L.join(x, y)) != x) return "absorption x ^ (x v y) = x fails at (" + pair + ")";
      if (L.join(x, L.meet(x, y)) != x) return "absorption x v (x ^ y) = x fails at (" + pair + ")";
      if (L.leq(x, y) != (m == x)) return "x <= y iff x ^ y = x fails at (" + pair + ")";
      for (Elem z = 0; z < n; ++z) {
        if (L.meet(L.meet(x, y), z) != L.meet(x, L.meet(y, z))) {
          return "meet not associative at (" + pair + "," + nm[z] + ")";
        }
        if (L.join(L.join(x, y), z) != L.join(x, L.join(y, z))) {
          return "join not associative at (" + pair + "," + nm[z] + ")";
        }
      }
    }
  }
  return std::nullopt;
}

/// Cartesian product with componentwise order; element names are `(x,y)`.
inline FiniteLattice product(const FiniteLattice& A, const FiniteLattice& B, std::string name = {}) {
  const std::size_t m = B.size();
  std::vector<std::string> names;
  for (Elem a = 0; a < A.size(); ++a) {
    for (Elem b = 0; b < m; ++b) names.push_back("(" + A.element_name(a) + "," + B.element_name(b) + ")");
  }
  std::vector<ElemSet> up(names.size());
  for (Elem a = 0; a < A.size(); ++a) {
    for (Elem b = 0; b < m; ++b) {
      for (Elem a2 : A.up(a)) {
        for (Elem b2 : B.up(b)) up[a * m + b].insert(a2 * m + b2);
      }
    }
  }
  if (name.empty()) name = A.name() + "x" + B.name();
  return FiniteLattice::from_order(std::move(name), std::move(names), std::move(up));
}

}  // namespace latspec

#endif  // LATSPEC_LATTICE_HPP
