#ifndef LATSPEC_SPECTRA_HPP
#define LATSPEC_SPECTRA_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latspec/lattice.hpp"
#include "latspec/topology.hpp"

namespace latspec {

/// A disjoint (ideal, filter) pair, each maximal with respect to being
/// disjoint from the other. Points of the bitopological spectrum.
struct ComaximalPair {
  ElemSet ideal;
  ElemSet filter;
  bool operator==(const ComaximalPair&) const = default;
  auto operator<=>(const ComaximalPair&) const = default;
};

inline bool is_comaximal(const FiniteLattice& L, ElemSet ideal, ElemSet filter) {
  if (!is_ideal(L, ideal) || !is_filter(L, filter) || ideal.intersects(filter)) return false;
  // Every ideal/filter is principal, so strictly larger ones are (x] with x
  // above the current generator.
  for (const Ideal& J : all_ideals(L)) {
    if (ideal.subset_of(J.members) && J.members != ideal && !J.members.intersects(filter)) return false;
  }
  for (const Filter& K : all_filters(L)) {
    if (filter.subset_of(K.members) && K.members != filter && !K.members.intersects(ideal)) return false;
  }
  return true;
}

/// All comaximal pairs, ordered by (ideal word, filter word).
inline std::vector<ComaximalPair> comaximal_pairs(const FiniteLattice& L) {
  std::vector<ComaximalPair> out;
  const auto ideals = all_ideals(L);
  const auto filters = all_filters(L);
  for (const Ideal& I : ideals) {
    for (const Filter& F : filters) {
      if (!I.members.intersects(F.members) && is_comaximal(L, I.members, F.members)) {
        out.push_back({I.members, F.members});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Extends a disjoint ideal/filter pair to a comaximal pair containing it.
///
/// The ideal grows first, absorbing elements in ascending index order whenever
/// the generated ideal stays disjoint from the filter; then the filter grows
/// the same way against the final ideal. One pass suffices for each because a
/// rejected element stays rejected as the set grows.
inline ComaximalPair extend_to_comaximal(const FiniteLattice& L, const Ideal& I, const Filter& F) {
  if (!is_ideal(L, I.members)) throw Error(ErrorKind::InvalidArgument, L.format(I.members) + " is not an ideal");
  if (!is_filter(L, F.members)) throw Error(ErrorKind::InvalidArgument, L.format(F.members) + " is not a filter");
  if (I.members.intersects(F.members)) {
    throw Error(ErrorKind::NotDisjoint, L.format(I.members) + " meets " + L.format(F.members));
  }
  ElemSet ideal = I.members;
  for (Elem e = 0; e < L.size(); ++e) {
    if (ideal.contains(e)) continue;
    const ElemSet grown = generated_ideal(L, ideal | ElemSet::single(e)).members;
    if (!grown.intersects(F.members)) ideal = grown;
  }
  ElemSet filter = F.members;
  for (Elem e = 0; e < L.size(); ++e) {
    if (filter.contains(e)) continue;
    const ElemSet grown = generated_filter(L, filter | ElemSet::single(e)).members;
    if (!grown.intersects(ideal)) filter = grown;
  }
  return {ideal, filter};
}

inline std::string format_pair(const FiniteLattice& L, const ComaximalPair& p) {
  return "(" + L.format(p.ideal) + ";" + L.format(p.filter) + ")";
}

// ---------------------------------------------------------------------------
// The bitopological spectrum

/// Comaximal pairs of L with delta(x) = {p : x not in p.ideal} generating the
/// sup-topology tau and epsilon(x) = {p : x in p.filter} generating the
/// inf-topology sigma.
class BitopSpectrum {
 public:
  explicit BitopSpectrum(FiniteLattice lattice)
      : lattice_(std::move(lattice)), points_(comaximal_pairs(lattice_)), space_(build_space()) {}

  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<ComaximalPair>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const BitopSpace& space() const { return space_; }
  PointSet delta(Elem x) const { return delta_[x]; }
  PointSet epsilon(Elem x) const { return epsilon_[x]; }
  const std::vector<PointSet>& delta_image() const { return delta_; }
  const std::vector<PointSet>& epsilon_image() const { return epsilon_; }

  std::optional<Point> index_of(const ComaximalPair& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return std::nullopt;
    return static_cast<Point>(it - points_.begin());
  }
  const std::string& point_name(Point p) const { return space_.point_names()[p]; }
  std::string format(PointSet s) const { return space_.format(s); }

 private:
  BitopSpace build_space() {
    if (points_.size() > Bits::kCapacity) {
      throw Error(ErrorKind::CarrierTooLarge,
                  "spectrum of '" + lattice_.name() + "' has " + std::to_string(points_.size()) + " points");
    }
    delta_.assign(lattice_.size(), PointSet{});
    epsilon_.assign(lattice_.size(), PointSet{});
    std::vector<std::string> names;
    for (Point p = 0; p < points_.size(); ++p) {
      names.push_back(format_pair(lattice_, points_[p]));
      for (Elem x = 0; x < lattice_.size(); ++x) {
        if (!points_[p].ideal.contains(x)) delta_[x].insert(p);
        if (points_[p].filter.contains(x)) epsilon_[x].insert(p);
      }
    }
    const std::size_t n = points_.size();
    return BitopSpace(FiniteTopology::from_subbasis(n, delta_), FiniteTopology::from_subbasis(n, epsilon_),
                      std::move(names));
  }

  FiniteLattice lattice_;
  std::vector<ComaximalPair> points_;
  std::vector<PointSet> delta_;
  std::vector<PointSet> epsilon_;
  BitopSpace space_;
};

inline BitopSpectrum build_bitop_spectrum(const FiniteLattice& L) { return BitopSpectrum(L); }

// ---------------------------------------------------------------------------
// The classical (prime ideal) spectrum

/// Prime ideals with the Zariski topology generated by d(x) = {P : x not in P}.
///
/// For a non-distributive lattice the image of d need not be closed under
/// intersection; the topology is still the one generated by it and
/// `basis_property()` reports the failure.
class ClassicalSpectrum {
 public:
  explicit ClassicalSpectrum(FiniteLattice lattice)
      : lattice_(std::move(lattice)), points_(prime_ideals(lattice_)), space_(build_space()) {}

  const FiniteLattice& lattice() const { return lattice_; }
  const std::vector<PrimeIdeal>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const FiniteTopology& space() const { return space_; }
  PointSet dmap(Elem x) const { return dmap_[x]; }
  const std::vector<PointSet>& dmap_image() const { return dmap_; }
  const std::vector<std::string>& point_names() const { return names_; }
  bool basis_property() const {
    SetFamily image(size(), dmap_);
    for (PointSet a : image) {
      for (PointSet b : image) {
        if (!image.contains(a & b)) return false;
      }
    }
    return true;
  }
  std::optional<Point> index_of(ElemSet prime) const {
    for (Point p = 0; p < points_.size(); ++p) {
      if (points_[p].members == prime) return p;
    }
    return std::nullopt;
  }

 private:
  FiniteTopology build_space() {
    if (points_.size() > Bits::kCapacity) throw Error(ErrorKind::CarrierTooLarge, "too many prime ideals");
    dmap_.assign(lattice_.size(), PointSet{});
    for (Point p = 0; p < points_.size(); ++p) {
      names_.push_back(lattice_.format(points_[p].members));
      for (Elem x = 0; x < lattice_.size(); ++x) {
        if (!points_[p].members.contains(x)) dmap_[x].insert(p);
      }
    }
    return FiniteTopology::from_subbasis(points_.size(), dmap_);
  }

  FiniteLattice lattice_;
  std::vector<PrimeIdeal> points_;
  std::vector<PointSet> dmap_;
  std::vector<std::string> names_;
  FiniteTopology space_;
};

inline ClassicalSpectrum build_classical_spectrum(const FiniteLattice& L) { return ClassicalSpectrum(L); }

/// P -> (P, P^c) from prime ideals into comaximal pairs.
struct BMap {
  std::vector<Point> image;
  bool injective = true;
  bool surjective = false;
  /// Bijective, and carries the Zariski topology onto tau.
  bool homeomorphism = false;
};

inline BMap b_map(const ClassicalSpectrum& spec, const BitopSpectrum& bitop) {
  BMap out;
  const std::size_t n = spec.lattice().size();
  PointSet hit;
  for (const PrimeIdeal& P : spec.points()) {
    auto idx = bitop.index_of({P.members, P.members.complement(n)});
    if (!idx) throw Error(ErrorKind::InvalidArgument, "(P, P^c) is not comaximal for " + spec.lattice().format(P.members));
    if (hit.contains(*idx)) out.injective = false;
    hit.insert(*idx);
    out.image.push_back(*idx);
  }
  out.surjective = hit == PointSet::full(bitop.size());
  if (out.injective && out.surjective) {
    out.homeomorphism = true;
    for (Point p = 0; p < spec.size(); ++p) {
      PointSet moved;
      for (Point q : spec.space().min_nbhd(p)) moved.insert(out.image[q]);
      if (moved != bitop.space().tau().min_nbhd(out.image[p])) out.homeomorphism = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reduction witnesses

/// z with meet(V1) <= z <= join(W1) for nonempty V1 ⊆ V, W1 ⊆ W.
struct GbdWitness {
  Elem z;
  ElemSet v1;
  ElemSet w1;
};

using GbdResult = std::variant<GbdWitness, ComaximalPair>;

/// Decides whether ∩_{x in V} epsilon(x) ⊆ ∪_{y in W} delta(y) algebraically.
///
/// When meet(V) <= join(W) a reduced witness is returned: elements are removed
/// greedily (ascending index, V first) while the inequality survives.
/// Otherwise (W] and [V) are disjoint and their comaximal extension is a point
/// in the left side outside the right side.
inline GbdResult gbd_witness(const FiniteLattice& L, ElemSet v, ElemSet w) {
  if (v.empty() || w.empty()) throw Error(ErrorKind::EmptyInput, "V and W must be nonempty");
  if (!L.leq(L.meet_of(v), L.join_of(w))) {
    return extend_to_comaximal(L, generated_ideal(L, w), generated_filter(L, v));
  }
  ElemSet v1 = v;
  ElemSet w1 = w;
  for (Elem x : v) {
    const ElemSet trial = v1 - ElemSet::single(x);
    if (!trial.empty() && L.leq(L.meet_of(trial), L.join_of(w1))) v1 = trial;
  }
  for (Elem y : w) {
    const ElemSet trial = w1 - ElemSet::single(y);
    if (!trial.empty() && L.leq(L.meet_of(v1), L.join_of(trial))) w1 = trial;
  }
  return GbdWitness{L.meet_of(v1), v1, w1};
}

namespace detail {

inline PointSet meet_of_epsilons(const BitopSpectrum& s, ElemSet v) {
  PointSet out = PointSet::full(s.size());
  for (Elem x : v) out &= s.epsilon(x);
  return out;
}

inline PointSet join_of_deltas(const BitopSpectrum& s, ElemSet w) {
  PointSet out;
  for (Elem y : w) out |= s.delta(y);
  return out;
}

}  // namespace detail

/// Pointwise check that `result` certifies the correct branch for (V, W).
inline bool gbd_certifies(const BitopSpectrum& s, ElemSet v, ElemSet w, const GbdResult& result) {
  const FiniteLattice& L = s.lattice();
  const bool contained = detail::meet_of_epsilons(s, v).subset_of(detail::join_of_deltas(s, w));
  if (const auto* wit = std::get_if<GbdWitness>(&result)) {
    if (!contained || wit->v1.empty() || wit->w1.empty()) return false;
    if (!wit->v1.subset_of(v) || !wit->w1.subset_of(w)) return false;
    if (!L.leq(L.meet_of(wit->v1), wit->z) || !L.leq(wit->z, L.join_of(wit->w1))) return false;
    return detail::meet_of_epsilons(s, wit->v1).subset_of(detail::join_of_deltas(s, wit->w1));
  }
  const auto& pair = std::get<ComaximalPair>(result);
  if (contained || !w.subset_of(pair.ideal) || !v.subset_of(pair.filter)) return false;
  const auto idx = s.index_of(pair);
  if (!idx) return false;
  return detail::meet_of_epsilons(s, v).contains(*idx) && !detail::join_of_deltas(s, w).contains(*idx);
}

using DeltaCompactnessResult = std::variant<ElemSet, ComaximalPair>;

/// Finite V1 ⊆ V with delta(x) ⊆ ∪ delta(V1) (x <= join(V1)), or a comaximal
/// pair in delta(x) outside every delta(y), y in V.
inline DeltaCompactnessResult delta_compactness_check(const FiniteLattice& L, Elem x, ElemSet v) {
  if (v.empty()) throw Error(ErrorKind::EmptyInput, "V must be nonempty");
  if (!L.leq(x, L.join_of(v))) {
    return extend_to_comaximal(L, generated_ideal(L, v), principal_filter(L, x));
  }
  ElemSet v1 = v;
  for (Elem y : v) {
    const ElemSet trial = v1 - ElemSet::single(y);
    if (!trial.empty() && L.leq(x, L.join_of(trial))) v1 = trial;
  }
  return v1;
}

inline bool delta_compactness_certifies(const BitopSpectrum& s, Elem x, ElemSet v,
                                        const DeltaCompactnessResult& result) {
  const bool contained = s.delta(x).subset_of(detail::join_of_deltas(s, v));
  if (const auto* v1 = std::get_if<ElemSet>(&result)) {
    return contained && !v1->empty() && v1->subset_of(v) && s.delta(x).subset_of(detail::join_of_deltas(s, *v1));
  }
  const auto& pair = std::get<ComaximalPair>(result);
  const auto idx = s.index_of(pair);
  return !contained && idx && s.delta(x).contains(*idx) && !detail::join_of_deltas(s, v).contains(*idx);
}

// ---------------------------------------------------------------------------
// Prime points and boundedness

/// Points whose tau-closure equals their sigma-closure.
inline std::vector<Point> prime_points(const BitopSpace& s) {
  std::vector<Point> out;
  for (Point p = 0; p < s.size(); ++p) {
    const PointSet single = PointSet::single(p);
    if (s.tau().closure(single) == s.sigma().closure(single)) out.push_back(p);
  }
  return out;
}

/// Prime points by closure comparison and by primality of the ideal.
///
/// Equal closures force a prime ideal. The converse fails in general: in N5
/// the pair ((b],[a)) has a prime ideal but its sigma-closure also holds
/// ((a],[c)), whose filter [c) lies inside [a).
struct PrimePointReport {
  std::vector<Point> by_closure;
  std::vector<Point> by_prime_ideal;
  bool agree() const { return by_closure == by_prime_ideal; }
  bool closure_implies_prime() const {
    return std::includes(by_prime_ideal.begin(), by_prime_ideal.end(), by_closure.begin(), by_closure.end());
  }
};

inline PrimePointReport prime_points(const BitopSpectrum& s) {
  PrimePointReport r;
  r.by_closure = prime_points(s.space());
  for (Point p = 0; p < s.size(); ++p) {
    if (is_prime_ideal(s.lattice(), s.points()[p].ideal)) r.by_prime_ideal.push_back(p);
  }
  return r;
}

struct TopWitness {
  bool compact = false;
  ElemSet cover;  // elements whose deltas form the reduced subcover
  Elem join = 0;
  bool agrees = false;  // join of the cover is the top element
};

/// The delta-cover of the whole spectrum reduced to a finite subcover; its
/// join must be the top. On the empty spectrum (one-element lattice) any
/// single delta already covers, and the lowest-index element is used.
inline TopWitness has_top_via_compactness(const BitopSpectrum& s) {
  TopWitness w;
  const auto chosen = is_compact_subset(s.space().tau(), s.space().carrier(), s.delta_image());
  w.compact = true;
  for (std::size_t k : chosen) w.cover.insert(k);
  if (w.cover.empty()) w.cover.insert(0);
  w.join = s.lattice().join_of(w.cover);
  w.agrees = w.join == s.lattice().top() && s.delta(w.join) == s.space().carrier();
  return w;
}

struct BottomWitness {
  bool empty_fundamental = false;
  ElemSet family;  // elements whose epsilons already have empty intersection
  Elem meet = 0;
  bool agrees = false;  // meet of the family is the bottom element
};

/// ∩_x epsilon(x) = ∅ reduced to a finite subfamily with empty intersection,
/// chosen greedily by smallest remaining intersection; its meet must be the
/// bottom.
inline BottomWitness has_bottom_via_fundamental(const BitopSpectrum& s) {
  BottomWitness w;
  w.empty_fundamental = empty_set_is_fundamental(s.space().sigma());
  const FiniteLattice& L = s.lattice();
  PointSet left = s.space().carrier();
  while (!left.empty()) {
    Elem best = 0;
    std::size_t best_count = left.count() + 1;
    for (Elem x = 0; x < L.size(); ++x) {
      const std::size_t c = (left & s.epsilon(x)).count();
      if (c < best_count) {
        best_count = c;
        best = x;
      }
    }
    if (best_count == left.count()) break;  // no progress: intersection is nonempty
    w.family.insert(best);
    left &= s.epsilon(best);
  }
  if (!left.empty()) return w;
  if (w.family.empty()) w.family.insert(0);
  w.meet = L.meet_of(w.family);
  w.agrees = w.meet == L.bottom() && s.epsilon(w.meet).empty();
  return w;
}

struct EssentialDeltaReport {
  bool holds = false;
  std::size_t essential_count = 0;
  std::vector<PointSet> not_delta;       // essential sets outside Im(delta)
  std::vector<Elem> delta_not_essential; // elements whose delta is not essential
};

/// Compares the essential family of spec_B(L) with {delta(x)}.
inline EssentialDeltaReport essential_equals_delta(const BitopSpectrum& s) {
  EssentialDeltaReport r;
  const SetFamily ess = essential_subsets(s.space());
  const SetFamily deltas(s.size(), s.delta_image());
  r.essential_count = ess.size();
  for (PointSet a : ess) {
    if (!deltas.contains(a)) r.not_delta.push_back(a);
  }
  for (Elem x = 0; x < s.lattice().size(); ++x) {
    if (!ess.contains(s.delta(x))) r.delta_not_essential.push_back(x);
  }
  r.holds = r.not_delta.empty() && r.delta_not_essential.empty() && deltas.size() == s.lattice().size();
  return r;
}

}  // namespace latspec

#endif  // LATSPEC_SPECTRA_HPP
