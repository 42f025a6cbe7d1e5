#ifndef LATSPEC_TOPOLOGY_HPP
#define LATSPEC_TOPOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latspec/bits.hpp"
#include "latspec/error.hpp"

namespace latspec {

using Point = std::size_t;
using PointSet = Bits;

/// Duplicate-free family of subsets of a carrier, in insertion order.
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(std::size_t carrier) : carrier_(carrier) {}
  SetFamily(std::size_t carrier, std::span<const PointSet> members) : carrier_(carrier) {
    for (PointSet s : members) add(s);
  }

  /// Adds a member; returns false if it was already present.
  bool add(PointSet s) {
    if (!s.subset_of(PointSet::full(carrier_))) {
      throw Error(ErrorKind::InvalidArgument, "family member leaves the carrier");
    }
    if (!index_.insert(s).second) return false;
    members_.push_back(s);
    return true;
  }

  bool contains(PointSet s) const { return index_.contains(s); }
  std::size_t size() const { return members_.size(); }
  std::size_t carrier_size() const { return carrier_; }
  const std::vector<PointSet>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Same carrier and same members, regardless of order.
  bool same_members(const SetFamily& o) const {
    if (carrier_ != o.carrier_ || size() != o.size()) return false;
    return std::all_of(members_.begin(), members_.end(), [&](PointSet s) { return o.contains(s); });
  }

  /// Members ordered by (cardinality, word); the canonical order used in reports.
  SetFamily sorted() const {
    std::vector<PointSet> v = members_;
    std::sort(v.begin(), v.end(), [](PointSet a, PointSet b) {
      return a.count() != b.count() ? a.count() < b.count() : a < b;
    });
    return SetFamily(carrier_, v);
  }

 private:
  std::size_t carrier_ = 0;
  std::vector<PointSet> members_;
  std::unordered_set<PointSet, BitsHash> index_;
};

/// A topology on a finite carrier.
///
/// A finite topology is closed under arbitrary unions and intersections, so it
/// is determined by the minimal open neighbourhood of each point; that vector is
/// the stored representation. Opens are exactly the up-sets of the
/// specialization preorder and are enumerated on demand.
class FiniteTopology {
 public:
  /// Smallest topology containing every member of `family`.
  static FiniteTopology from_subbasis(std::size_t n, std::span<const PointSet> family) {
    check_size(n);
    FiniteTopology t;
    t.nbhd_.assign(n, PointSet::full(n));
    for (PointSet s : family) {
      if (!s.subset_of(PointSet::full(n))) throw Error(ErrorKind::InvalidArgument, "subbasis member leaves the carrier");
      for (Point x : s) t.nbhd_[x] &= s;
    }
    return t;
  }
  static FiniteTopology from_subbasis(const SetFamily& family) {
    return from_subbasis(family.carrier_size(), family.members());
  }

  /// Accepts a family that must already be a topology (contains ∅ and the
  /// carrier, closed under pairwise union and intersection).
  static FiniteTopology from_opens(const SetFamily& opens) {
    const std::size_t n = opens.carrier_size();
    check_size(n);
    if (!opens.contains(PointSet{}) || !opens.contains(PointSet::full(n))) {
      throw Error(ErrorKind::InvalidArgument, "a topology must contain the empty set and the carrier");
    }
    for (PointSet a : opens) {
      for (PointSet b : opens) {
        if (!opens.contains(a | b) || !opens.contains(a & b)) {
          throw Error(ErrorKind::InvalidArgument, "family is not closed under union and intersection");
        }
      }
    }
    return from_subbasis(opens);
  }

  static FiniteTopology discrete(std::size_t n) {
    check_size(n);
    FiniteTopology t;
    for (Point x = 0; x < n; ++x) t.nbhd_.push_back(PointSet::single(x));
    return t;
  }
  static FiniteTopology indiscrete(std::size_t n) { return from_subbasis(n, {}); }

  /// Topology whose minimal neighbourhoods are given directly; `nbhd[x]` must
  /// contain x and be closed (y in nbhd[x] implies nbhd[y] subset of nbhd[x]).
  static FiniteTopology from_min_neighbourhoods(std::vector<PointSet> nbhd) {
    check_size(nbhd.size());
    for (Point x = 0; x < nbhd.size(); ++x) {
      if (!nbhd[x].contains(x)) throw Error(ErrorKind::InvalidArgument, "neighbourhood misses its point");
      for (Point y : nbhd[x]) {
        if (y >= nbhd.size() || !nbhd[y].subset_of(nbhd[x])) {
          throw Error(ErrorKind::InvalidArgument, "neighbourhoods are not transitively closed");
        }
      }
    }
    FiniteTopology t;
    t.nbhd_ = std::move(nbhd);
    return t;
  }

  std::size_t size() const { return nbhd_.size(); }
  PointSet carrier() const { return PointSet::full(size()); }
  PointSet min_nbhd(Point x) const { return nbhd_[x]; }
  const std::vector<PointSet>& min_nbhds() const { return nbhd_; }

  /// Specialization preorder: x <= y iff x is in the closure of {y}, i.e.
  /// every open containing x contains y.
  bool leq(Point x, Point y) const { return nbhd_[x].contains(y); }

  /// Points above some member of A (smallest open superset).
  PointSet up_closure(PointSet a) const {
    PointSet out;
    for (Point x : a) out |= nbhd_[x];
    return out;
  }
  /// Points below some member of A; this is the topological closure.
  PointSet down_closure(PointSet a) const {
    PointSet out;
    for (Point x = 0; x < size(); ++x) {
      if (nbhd_[x].intersects(a)) out.insert(x);
    }
    return out;
  }
  PointSet closure(PointSet a) const { return down_closure(a); }
  /// Largest open subset.
  PointSet interior(PointSet a) const {
    PointSet out;
    for (Point x : a) {
      if (nbhd_[x].subset_of(a)) out.insert(x);
    }
    return out;
  }
  bool is_open(PointSet u) const { return u.subset_of(carrier()) && up_closure(u) == u; }

  /// All open sets, in discovery order. Throws CarrierTooLarge past `limit`.
  SetFamily opens(std::size_t limit = std::size_t{1} << 20) const {
    SetFamily out(size());
    out.add(PointSet{});
    for (Point x = 0; x < size(); ++x) {
      const std::size_t current = out.size();
      for (std::size_t k = 0; k < current; ++k) {
        out.add(out.members()[k] | nbhd_[x]);
        if (out.size() > limit) throw Error(ErrorKind::CarrierTooLarge, "too many open sets to enumerate");
      }
    }
    return out;
  }

  bool is_t0() const { return !t0_violation().has_value(); }
  std::optional<std::pair<Point, Point>> t0_violation() const {
    for (Point x = 0; x < size(); ++x) {
      for (Point y = x + 1; y < size(); ++y) {
        if (leq(x, y) && leq(y, x)) return std::pair{x, y};
      }
    }
    return std::nullopt;
  }

  bool operator==(const FiniteTopology&) const = default;

 private:
  FiniteTopology() = default;

  static void check_size(std::size_t n) {
    if (n > Bits::kCapacity) throw Error(ErrorKind::CarrierTooLarge, "carrier exceeds 64 points");
  }

  std::vector<PointSet> nbhd_;
};

inline FiniteTopology topology_from_subbasis(std::size_t n, std::span<const PointSet> family) {
  return FiniteTopology::from_subbasis(n, family);
}

/// Specialization preorder as up-sets: result[x] = {y : x <= y}.
inline std::vector<PointSet> specialization(const FiniteTopology& t) { return t.min_nbhds(); }

/// The same preorder computed from a subbasis alone: x <= y iff every subbasis
/// member containing x also contains y.
inline std::vector<PointSet> specialization_from_subbasis(std::size_t n, std::span<const PointSet> family) {
  std::vector<PointSet> out(n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      bool all = true;
      for (PointSet s : family) {
        if (s.contains(x) && !s.contains(y)) all = false;
      }
      if (all) out[x].insert(y);
    }
  }
  return out;
}

/// Greedy finite subcover of A drawn from `cover` (indices into `cover`).
///
/// Repeatedly takes the member covering most still-uncovered points of A
/// (lowest index on ties), then drops members made redundant. Every subset of a
/// finite space is compact, so this always succeeds once `cover` is a genuine
/// open cover of A.
inline std::vector<std::size_t> is_compact_subset(const FiniteTopology& t, PointSet a,
                                                  std::span<const PointSet> cover) {
  PointSet covered;
  for (PointSet u : cover) {
    if (!t.is_open(u)) throw Error(ErrorKind::NotACover, "cover member is not open");
    covered |= u;
  }
  if (!a.subset_of(covered)) throw Error(ErrorKind::NotACover, "cover does not contain the subset");
  std::vector<std::size_t> chosen;
  PointSet left = a;
  while (!left.empty()) {
    std::size_t best = 0;
    std::size_t gain = 0;
    for (std::size_t k = 0; k < cover.size(); ++k) {
      const std::size_t g = (cover[k] & left).count();
      if (g > gain) {
        gain = g;
        best = k;
      }
    }
    chosen.push_back(best);
    left -= cover[best];
  }
  for (std::size_t k = chosen.size(); k-- > 0;) {
    PointSet rest;
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      if (j != k) rest |= cover[chosen[j]];
    }
    if (a.subset_of(rest)) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

/// Whether ∅ is fundamental: every collection of compact-open sets with the
/// finite intersection property has nonempty intersection.
///
/// On a finite carrier every collection is finite, so it is its own finite
/// subcollection; FIP then already asserts that its intersection is nonempty.
/// The clause holds for every finite space.
inline bool empty_set_is_fundamental(const FiniteTopology&) { return true; }

/// Fundamental subsets: ∅ (when fundamental) followed by every nonempty open
/// set (nonempty compact-opens; compactness is automatic on finite carriers).
inline SetFamily fundamental_subsets(const FiniteTopology& t) {
  SetFamily out(t.size());
  if (empty_set_is_fundamental(t)) out.add(PointSet{});
  for (PointSet u : t.opens().sorted()) {
    if (!u.empty()) out.add(u);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bitopological spaces

enum class Side { Tau, Sigma };

/// A carrier with two topologies and optional display names for its points.
class BitopSpace {
 public:
  BitopSpace(FiniteTopology tau, FiniteTopology sigma, std::vector<std::string> names = {})
      : tau_(std::move(tau)), sigma_(std::move(sigma)), names_(std::move(names)) {
    if (tau_.size() != sigma_.size()) throw Error(ErrorKind::InvalidArgument, "topologies on different carriers");
    if (names_.empty()) {
      for (Point x = 0; x < tau_.size(); ++x) names_.push_back("p" + std::to_string(x));
    }
    if (names_.size() != tau_.size()) throw Error(ErrorKind::InvalidArgument, "point name count mismatch");
  }

  const FiniteTopology& tau() const { return tau_; }
  const FiniteTopology& sigma() const { return sigma_; }
  const FiniteTopology& topology(Side s) const { return s == Side::Tau ? tau_ : sigma_; }
  std::size_t size() const { return tau_.size(); }
  PointSet carrier() const { return tau_.carrier(); }
  const std::vector<std::string>& point_names() const { return names_; }
  std::string format(PointSet s) const { return format_set(s, names_); }

  bool leq_tau(Point x, Point y) const { return tau_.leq(x, y); }
  bool leq_sigma(Point x, Point y) const { return sigma_.leq(x, y); }
  bool tau_increasing(PointSet a) const { return tau_.up_closure(a) == a; }
  bool sigma_increasing(PointSet a) const { return sigma_.up_closure(a) == a; }

  /// i(A) = {x : a <=_tau x for some a in A}.
  PointSet op_i(PointSet a) const { return tau_.up_closure(a); }
  /// d(A) = {x : x <=_sigma y implies y in A}.
  PointSet op_d(PointSet a) const { return sigma_.interior(a); }

  /// Same topologies; point names are display-only.
  bool same_topologies(const BitopSpace& o) const { return tau_ == o.tau_ && sigma_ == o.sigma_; }

 private:
  FiniteTopology tau_;
  FiniteTopology sigma_;
  std::vector<std::string> names_;
};

inline PointSet op_i(const BitopSpace& s, PointSet a) { return s.op_i(a); }
inline PointSet op_d(const BitopSpace& s, PointSet a) { return s.op_d(a); }

/// Pairwise T0: distinct x, y are separated by a tau-open containing x but not
/// y, or a sigma-open containing y but not x. Witness is an inseparable pair.
struct SeparationVerdict {
  bool holds = true;
  std::optional<std::pair<Point, Point>> witness;
};

inline SeparationVerdict is_pairwise_t0(const BitopSpace& s) {
  for (Point x = 0; x < s.size(); ++x) {
    for (Point y = 0; y < s.size(); ++y) {
      if (x != y && s.leq_tau(x, y) && s.leq_sigma(y, x)) return {false, std::pair{x, y}};
    }
  }
  return {};
}

inline bool is_stable(const BitopSpace& s, PointSet a) {
  if (!s.tau_increasing(a)) throw Error(ErrorKind::NotIncreasing, s.format(a) + " is not tau-increasing");
  return s.op_i(s.op_d(a)) == a;
}

inline bool is_costable(const BitopSpace& s, PointSet b) {
  if (!s.sigma_increasing(b)) throw Error(ErrorKind::NotIncreasing, s.format(b) + " is not sigma-increasing");
  return s.op_d(s.op_i(b)) == b;
}

/// Nonempty A: tau-compact (always, finite), tau-increasing and stable, with
/// d(A) sigma-open. ∅ is essential iff it is sigma-fundamental.
inline bool is_essential(const BitopSpace& s, PointSet a) {
  if (a.empty()) return empty_set_is_fundamental(s.sigma());
  if (!a.subset_of(s.carrier()) || !s.tau_increasing(a)) return false;
  const PointSet da = s.op_d(a);
  return s.sigma().is_open(da) && s.op_i(da) == a;
}

/// Essential subsets in canonical (cardinality, word) order.
///
/// A nonempty essential A satisfies A = i(d(A)) with d(A) a union of minimal
/// sigma-neighbourhoods, and i preserves unions; so A is a union of the sets
/// i(N_sigma(x)). Only those unions are tested.
inline SetFamily essential_subsets(const BitopSpace& s) {
  SetFamily candidates(s.size());
  candidates.add(PointSet{});
  for (Point x = 0; x < s.size(); ++x) {
    const PointSet piece = s.op_i(s.sigma().min_nbhd(x));
    const std::size_t current = candidates.size();
    for (std::size_t k = 0; k < current; ++k) candidates.add(candidates.members()[k] | piece);
  }
  SetFamily out(s.size());
  for (PointSet a : candidates.sorted()) {
    if (is_essential(s, a)) out.add(a);
  }
  return out;
}

inline constexpr std::size_t kBruteForceCarrierLimit = 12;

/// Cross-check of `essential_subsets` over every subset of the carrier.
inline SetFamily essential_subsets_brute_force(const BitopSpace& s) {
  if (s.size() > kBruteForceCarrierLimit) {
    throw Error(ErrorKind::CarrierTooLarge, "brute-force essential search is limited to 12 points");
  }
  const std::uint64_t limit = std::uint64_t{1} << s.size();
  std::vector<PointSet> found;
  for (std::uint64_t w = 0; w < limit; ++w) {
    if (is_essential(s, PointSet{w})) found.push_back(PointSet{w});
  }
  return SetFamily(s.size(), found).sorted();
}

// ---------------------------------------------------------------------------
// Axiom checkers

enum class PbdAxiom { PairwiseT0 = 1, EssentialSubbasis = 2, DBasis = 3, EssentialClosure = 4, DBirreducible = 5 };

inline const char* axiom_label(PbdAxiom a) {
  switch (a) {
    case PbdAxiom::PairwiseT0: return "(i) pairwise T0";
    case PbdAxiom::EssentialSubbasis: return "(ii) essential sets are a subbasis for tau";
    case PbdAxiom::DBasis: return "(iii) d-images form an intersection-closed basis for sigma";
    case PbdAxiom::EssentialClosure: return "(iv) essential sets closed under union and i(d(A cap B))";
    case PbdAxiom::DBirreducible: return "(v) essential sets are d-birreducible";
  }
  return "?";
}

struct PbdVerdict {
  bool holds = true;
  std::optional<PbdAxiom> failed;
  std::string witness;
};

namespace detail {

// Calls fn(mask) for every nonempty subset of {0..m-1} with at most k members.
template <class Fn>
void for_small_subsets(std::size_t m, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      Bits mask;
      for (std::size_t i : pick) mask.insert(i);
      fn(mask);
    }
    if (pick.size() == k) return;
    for (std::size_t i = start; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Checks axioms (i)-(v) in order and reports the first failure.
///
/// (v) is literally satisfiable on finite carriers by V1 = V, W1 = W, so the
/// check enforces the witness form instead: for subfamilies V, W of at most
/// `family_bound` essential sets with ∩ d(V) ⊆ ∪ W, the lattice meet
/// i(∩ d(V)) and the union ∪ W are essential and nested.
inline PbdVerdict is_pairwise_bd(const BitopSpace& s, std::size_t family_bound = 2) {
  if (auto t0 = is_pairwise_t0(s); !t0.holds) {
    const auto [x, y] = *t0.witness;
    return {false, PbdAxiom::PairwiseT0,
            "points " + s.point_names()[x] + " and " + s.point_names()[y] + " are not separated"};
  }
  const SetFamily ess = essential_subsets(s);
  if (FiniteTopology::from_subbasis(ess) != s.tau()) {
    for (Point x = 0; x < s.size(); ++x) {
      PointSet generated = s.carrier();
      for (PointSet a : ess) {
        if (a.contains(x)) generated &= a;
      }
      if (generated != s.tau().min_nbhd(x)) {
        return {false, PbdAxiom::EssentialSubbasis,
                "minimal tau-neighbourhood of " + s.point_names()[x] + " is " + s.format(s.tau().min_nbhd(x)) +
                    " but essential sets only generate " + s.format(generated)};
      }
    }
  }
  SetFamily dimages(s.size());
  for (PointSet a : ess) dimages.add(s.op_d(a));
  for (PointSet u : dimages) {
    if (!s.sigma().is_open(u)) return {false, PbdAxiom::DBasis, s.format(u) + " is not sigma-open"};
  }
  for (Point x = 0; x < s.size(); ++x) {
    if (!dimages.contains(s.sigma().min_nbhd(x))) {
      return {false, PbdAxiom::DBasis,
              "sigma-open " + s.format(s.sigma().min_nbhd(x)) + " is not a union of d-images of essential sets"};
    }
  }
  for (PointSet u : dimages) {
    for (PointSet v : dimages) {
      if (!dimages.contains(u & v)) {
        return {false, PbdAxiom::DBasis,
                "intersection of " + s.format(u) + " and " + s.format(v) + " is not a d-image"};
      }
    }
  }
  for (PointSet a : ess) {
    for (PointSet b : ess) {
      if (!ess.contains(a | b)) {
        return {false, PbdAxiom::EssentialClosure, s.format(a) + " cup " + s.format(b) + " is not essential"};
      }
      const PointSet m = s.op_i(s.op_d(a & b));
      if (!ess.contains(m)) {
        return {false, PbdAxiom::EssentialClosure,
                "i(d(" + s.format(a) + " cap " + s.format(b) + ")) = " + s.format(m) + " is not essential"};
      }
    }
  }
  const auto& members = ess.members();
  std::optional<std::string> failure;
  detail::for_small_subsets(members.size(), family_bound, [&](Bits vmask) {
    if (failure) return;
    PointSet dv = s.carrier();
    for (std::size_t k : vmask) dv &= s.op_d(members[k]);
    detail::for_small_subsets(members.size(), family_bound, [&](Bits wmask) {
      if (failure) return;
      PointSet uw;
      for (std::size_t k : wmask) uw |= members[k];
      if (!dv.subset_of(uw)) return;
      const PointSet z = s.op_i(dv);
      if (!ess.contains(z) || !ess.contains(uw) || !z.subset_of(uw)) {
        failure = "intersection of d-images " + s.format(dv) + " lies in " + s.format(uw) +
                  " without an essential witness between them";
      }
    });
  });
  if (failure) return {false, PbdAxiom::DBirreducible, *failure};
  return {};
}

struct BdVerdict {
  bool holds = true;
  std::string failure;
};

/// T0, coherent (fundamental sets form an intersection-closed basis) and
/// birreducible in witness form: for small subfamilies W, V of fundamental
/// sets with ∩W ⊆ ∪V, both ∩W and ∪V are fundamental.
inline BdVerdict is_bd_space(const FiniteTopology& t, std::size_t family_bound = 2) {
  if (auto v = t.t0_violation()) {
    return {false, "not T0: p" + std::to_string(v->first) + " and p" + std::to_string(v->second) +
                       " have the same neighbourhoods"};
  }
  const SetFamily fund = fundamental_subsets(t);
  for (PointSet u : fund) {
    if (!t.is_open(u)) return {false, "fundamental set is not open"};
  }
  for (Point x = 0; x < t.size(); ++x) {
    if (!fund.contains(t.min_nbhd(x))) return {false, "fundamental sets are not a basis at p" + std::to_string(x)};
  }
  for (PointSet a : fund) {
    for (PointSet b : fund) {
      if (!fund.contains(a & b)) return {false, "fundamental sets are not closed under intersection"};
    }
  }
  const auto& members = fund.members();
  std::optional<std::string> failure;
  detail::for_small_subsets(members.size(), family_bound, [&](Bits wmask) {
    if (failure) return;
    PointSet iw = t.carrier();
    for (std::size_t k : wmask) iw &= members[k];
    detail::for_small_subsets(members.size(), family_bound, [&](Bits vmask) {
      if (failure) return;
      PointSet uv;
      for (std::size_t k : vmask) uv |= members[k];
      if (iw.subset_of(uv) && (!fund.contains(iw) || !fund.contains(uv))) {
        failure = "fundamental family is not birreducible";
      }
    });
  });
  if (failure) return {false, *failure};
  return {};
}

inline bool is_doubly_bd(const BitopSpace& s) {
  if (auto v = is_pairwise_bd(s); !v.holds) {
    throw Error(ErrorKind::NotPairwiseBD, std::string(axiom_label(*v.failed)) + ": " + v.witness);
  }
  return s.tau() == s.sigma();
}

/// Bounded: (X, tau) compact and ∅ sigma-fundamental. The first clause always
/// holds on a finite carrier.
inline bool is_bounded_pbd(const BitopSpace& s) {
  if (auto v = is_pairwise_bd(s); !v.holds) {
    throw Error(ErrorKind::NotPairwiseBD, std::string(axiom_label(*v.failed)) + ": " + v.witness);
  }
  (void)is_compact_subset(s.tau(), s.carrier(), s.tau().min_nbhds());
  return empty_set_is_fundamental(s.sigma());
}

}  // namespace latspec

#endif  // LATSPEC_TOPOLOGY_HPP
