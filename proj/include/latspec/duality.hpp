#ifndef LATSPEC_DUALITY_HPP
#define LATSPEC_DUALITY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latspec/lattice.hpp"
#include "latspec/spectra.hpp"
#include "latspec/topology.hpp"

namespace latspec {

using SpacePtr = std::shared_ptr<const BitopSpace>;

inline SpacePtr share(BitopSpace s) { return std::make_shared<const BitopSpace>(std::move(s)); }

namespace detail {

// Family ordered by inclusion as a lattice; names are prefix + index.
inline FiniteLattice inclusion_lattice(const std::string& name, const std::string& prefix,
                                       const std::vector<PointSet>& sets) {
  std::vector<std::string> names;
  std::vector<ElemSet> up(sets.size());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    names.push_back(prefix + std::to_string(k));
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[k].subset_of(sets[j])) up[k].insert(j);
    }
  }
  return FiniteLattice::from_order(name, std::move(names), std::move(up));
}

inline std::optional<std::size_t> find_set(const std::vector<PointSet>& sets, PointSet s) {
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (sets[k] == s) return k;
  }
  return std::nullopt;
}

inline PointSet preimage(const std::vector<Point>& map, PointSet s) {
  PointSet out;
  for (Point x = 0; x < map.size(); ++x) {
    if (s.contains(map[x])) out.insert(x);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The lattice of essential sets

/// Essential sets of a bitopological space ordered by inclusion; element k
/// is named "e<k>" and stands for `set(k)` (canonical order, so e0 = ∅).
class EssentialLattice {
 public:
  explicit EssentialLattice(BitopSpace space, std::string name = "E(X)")
      : space_(std::move(space)),
        sets_(essential_subsets(space_).members()),
        lattice_(detail::inclusion_lattice(name, "e", sets_)) {}

  const BitopSpace& space() const { return space_; }
  const FiniteLattice& lattice() const { return lattice_; }
  LatticePtr shared_lattice() const { return share(lattice_); }
  std::size_t size() const { return sets_.size(); }
  const std::vector<PointSet>& sets() const { return sets_; }
  PointSet set(Elem e) const { return sets_[e]; }
  std::optional<Elem> index_of(PointSet s) const { return detail::find_set(sets_, s); }

  /// First pair where the order-derived join is not A ∪ B or the meet is not
  /// i(d(A ∩ B)).
  std::optional<std::string> operation_violation() const {
    for (Elem a = 0; a < size(); ++a) {
      for (Elem b = 0; b < size(); ++b) {
        const PointSet u = sets_[a] | sets_[b];
        const PointSet m = space_.op_i(space_.op_d(sets_[a] & sets_[b]));
        if (sets_[lattice_.join(a, b)] != u) {
          return "join of " + space_.format(sets_[a]) + " and " + space_.format(sets_[b]) + " is not their union";
        }
        if (sets_[lattice_.meet(a, b)] != m) {
          return "meet of " + space_.format(sets_[a]) + " and " + space_.format(sets_[b]) + " is not i(d(cap))";
        }
      }
    }
    return std::nullopt;
  }

 private:
  BitopSpace space_;
  std::vector<PointSet> sets_;
  FiniteLattice lattice_;
};

// ---------------------------------------------------------------------------
// Morphisms of pairwise BD spaces

/// A point map X -> Y with the morphism conditions evaluated.
///
/// `commutes_i` is checked on essential sets and on their d-images; the
/// latter is what makes the inverse image preserve i(d(A ∩ B)).
struct PBDMorphism {
  SpacePtr source;
  SpacePtr target;
  std::vector<Point> map;
  bool bicontinuous = false;
  bool strongly_bicontinuous = false;
  bool commutes_d = false;
  bool commutes_i = false;
  std::optional<std::string> failure;

  bool valid() const { return bicontinuous && strongly_bicontinuous && commutes_d && commutes_i; }
  Point operator()(Point x) const { return map[x]; }
  PointSet preimage(PointSet s) const { return detail::preimage(map, s); }
};

inline PBDMorphism make_pbd_morphism(SpacePtr source, SpacePtr target, std::vector<Point> map) {
  if (map.size() != source->size()) throw Error(ErrorKind::MissingMapping, "point map is not total");
  for (Point y : map) {
    if (y >= target->size()) throw Error(ErrorKind::InvalidArgument, "point map leaves the target");
  }
  PBDMorphism m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.map = std::move(map);
  const BitopSpace& X = *m.source;
  const BitopSpace& Y = *m.target;
  auto note = [&](std::string msg) {
    if (!m.failure) m.failure = std::move(msg);
  };

  m.bicontinuous = true;
  for (Side side : {Side::Tau, Side::Sigma}) {
    for (PointSet u : Y.topology(side).min_nbhds()) {
      if (!X.topology(side).is_open(m.preimage(u))) {
        m.bicontinuous = false;
        note(std::string(side == Side::Tau ? "tau" : "sigma") + "-open " + Y.format(u) +
             " has a non-open preimage");
      }
    }
  }
  const SetFamily ex = essential_subsets(X);
  const SetFamily ey = essential_subsets(Y);
  m.strongly_bicontinuous = m.bicontinuous;
  m.commutes_d = true;
  m.commutes_i = true;
  for (PointSet a : ey) {
    const PointSet pa = m.preimage(a);
    if (!ex.contains(pa)) {
      m.strongly_bicontinuous = false;
      note("preimage of essential " + Y.format(a) + " is " + X.format(pa) + ", not essential");
    }
    if (m.preimage(Y.op_d(a)) != X.op_d(pa)) {
      m.commutes_d = false;
      note("f^-1(d(" + Y.format(a) + ")) differs from d(f^-1(" + Y.format(a) + "))");
    }
    for (PointSet b : {a, Y.op_d(a)}) {
      if (m.preimage(Y.op_i(b)) != X.op_i(m.preimage(b))) {
        m.commutes_i = false;
        note("f^-1(i(" + Y.format(b) + ")) differs from i(f^-1(" + Y.format(b) + "))");
      }
    }
  }
  return m;
}

inline PBDMorphism identity_morphism(const SpacePtr& X) {
  std::vector<Point> map(X->size());
  for (Point x = 0; x < map.size(); ++x) map[x] = x;
  return make_pbd_morphism(X, X, std::move(map));
}

/// g ∘ f
inline PBDMorphism compose(const PBDMorphism& g, const PBDMorphism& f) {
  std::vector<Point> map(f.map.size());
  for (Point x = 0; x < map.size(); ++x) map[x] = g.map[f.map[x]];
  return make_pbd_morphism(f.source, g.target, std::move(map));
}

/// Same point map between the same topologies.
inline bool same_morphism(const PBDMorphism& a, const PBDMorphism& b) {
  return a.map == b.map && a.source->same_topologies(*b.source) && a.target->same_topologies(*b.target);
}

// ---------------------------------------------------------------------------
// Homomorphism classes

struct HomClassification {
  LatticeHom hom;
  bool is_proper = false;
  /// Proper only because the target has no prime ideals.
  bool vacuously_proper = false;
  bool is_quasi_proper = false;
  std::optional<PrimeIdeal> proper_witness;          // target prime with non-prime preimage
  std::optional<ComaximalPair> quasi_proper_witness; // target pair with non-comaximal preimage
  std::string witness;
};

inline HomClassification classify_hom(const LatticeHom& f) {
  const FiniteLattice& S = *f.source;
  const FiniteLattice& T = *f.target;
  HomClassification c;
  c.hom = f;
  const auto primes = prime_ideals(T);
  c.is_proper = true;
  c.vacuously_proper = primes.empty();
  for (const PrimeIdeal& P : primes) {
    if (!is_prime_ideal(S, f.preimage(P.members))) {
      c.is_proper = false;
      c.proper_witness = P;
      c.witness = "preimage of prime " + T.format(P.members) + " is " + S.format(f.preimage(P.members));
      break;
    }
  }
  c.is_quasi_proper = true;
  for (const ComaximalPair& p : comaximal_pairs(T)) {
    const ElemSet I = f.preimage(p.ideal);
    const ElemSet F = f.preimage(p.filter);
    if (!is_comaximal(S, I, F)) {
      c.is_quasi_proper = false;
      c.quasi_proper_witness = p;
      const std::string w = "preimage of " + format_pair(T, p) + " is (" + S.format(I) + ";" + S.format(F) +
                            "), not comaximal";
      c.witness = c.witness.empty() ? w : c.witness + "; " + w;
      break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Functors on morphisms

/// spec_B(f) : spec_B(N) -> spec_B(L) for quasi-proper f : L -> N, together
/// with the spectra it connects.
struct SpecBMorphism {
  std::shared_ptr<const BitopSpectrum> source;  // spec_B(N)
  std::shared_ptr<const BitopSpectrum> target;  // spec_B(L)
  PBDMorphism morphism;
  /// spec_B(f)^-1(delta_L(x)) = delta_N(f(x)) and the epsilon analogue.
  bool preimage_identities = false;
  std::optional<std::string> failure;
  bool valid() const { return preimage_identities && morphism.valid(); }
};

inline SpecBMorphism spec_b_on_hom(const LatticeHom& f, std::shared_ptr<const BitopSpectrum> spec_l,
                                   std::shared_ptr<const BitopSpectrum> spec_n) {
  const auto c = classify_hom(f);
  if (!c.is_quasi_proper) throw Error(ErrorKind::NotQuasiProper, c.witness);
  std::vector<Point> map;
  for (const ComaximalPair& p : spec_n->points()) {
    const auto idx = spec_l->index_of({f.preimage(p.ideal), f.preimage(p.filter)});
    if (!idx) throw Error(ErrorKind::NotQuasiProper, "preimage of " + format_pair(*f.target, p) + " is not a point");
    map.push_back(*idx);
  }
  SpecBMorphism out;
  out.source = spec_n;
  out.target = spec_l;
  out.morphism = make_pbd_morphism(share(spec_n->space()), share(spec_l->space()), std::move(map));
  out.preimage_identities = true;
  for (Elem x = 0; x < f.source->size(); ++x) {
    if (out.morphism.preimage(spec_l->delta(x)) != spec_n->delta(f(x)) ||
        out.morphism.preimage(spec_l->epsilon(x)) != spec_n->epsilon(f(x))) {
      out.preimage_identities = false;
      out.failure = "preimage identity fails at " + f.source->element_name(x);
      break;
    }
  }
  if (!out.failure) out.failure = out.morphism.failure;
  return out;
}

inline SpecBMorphism spec_b_on_hom(const LatticeHom& f) {
  return spec_b_on_hom(f, std::make_shared<const BitopSpectrum>(*f.source),
                       std::make_shared<const BitopSpectrum>(*f.target));
}

/// 𝔈(m) = m^-1 : 𝔈(Y) -> 𝔈(X).
struct EssentialHom {
  std::shared_ptr<const EssentialLattice> source;  // 𝔈(Y)
  std::shared_ptr<const EssentialLattice> target;  // 𝔈(X)
  LatticeHom hom;
  bool quasi_proper = false;
  /// 𝔈(m)^-1(I(x)) = I(m(x)) and 𝔈(m)^-1(F(x)) = F(m(x)) for every x in X.
  bool pair_identities = false;
  std::optional<std::string> failure;
  bool valid() const { return quasi_proper && pair_identities && !failure; }
};

namespace detail {

inline ElemSet ideal_of_point(const EssentialLattice& E, Point x) {
  ElemSet out;
  for (Elem a = 0; a < E.size(); ++a) {
    if (!E.set(a).contains(x)) out.insert(a);
  }
  return out;
}

inline ElemSet filter_of_point(const EssentialLattice& E, Point x) {
  ElemSet out;
  for (Elem a = 0; a < E.size(); ++a) {
    if (E.space().op_d(E.set(a)).contains(x)) out.insert(a);
  }
  return out;
}

}  // namespace detail

inline EssentialHom essential_functor_on_morphism(const PBDMorphism& m) {
  auto ey = std::make_shared<const EssentialLattice>(*m.target, "E(Y)");
  auto ex = std::make_shared<const EssentialLattice>(*m.source, "E(X)");
  std::vector<Elem> map;
  for (Elem a = 0; a < ey->size(); ++a) {
    const auto idx = ex->index_of(m.preimage(ey->set(a)));
    if (!idx) {
      throw Error(ErrorKind::InvalidArgument,
                  "preimage of essential " + m.target->format(ey->set(a)) + " is not essential");
    }
    map.push_back(*idx);
  }
  const LatticePtr ly = ey->shared_lattice();
  const LatticePtr lx = ex->shared_lattice();
  EssentialHom out;
  out.source = ey;
  out.target = ex;
  out.hom = LatticeHom{ly, lx, map};
  if (auto v = hom_violation(*ly, *lx, map)) out.failure = *v;
  if (!out.failure) out.quasi_proper = classify_hom(out.hom).is_quasi_proper;
  out.pair_identities = true;
  for (Point x = 0; x < m.source->size(); ++x) {
    if (out.hom.preimage(detail::ideal_of_point(*ex, x)) != detail::ideal_of_point(*ey, m(x)) ||
        out.hom.preimage(detail::filter_of_point(*ex, x)) != detail::filter_of_point(*ey, m(x))) {
      out.pair_identities = false;
      if (!out.failure) out.failure = "pair identity fails at " + m.source->point_names()[x];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reconstruction of points

struct CharMaxPairReport {
  std::shared_ptr<const EssentialLattice> essential;
  std::vector<ComaximalPair> pairs;  // (I(x), F(x)) per point
  bool lemma_d_images_empty = false; // ∩ d(A) over 𝔈(X) is ∅
  bool lemma_sets_empty = false;     // ∩ A over 𝔈(X) is ∅
  bool all_comaximal = false;
  bool injective = false;
  bool exhaustive = false;
  std::optional<std::string> failure;
  bool holds() const { return lemma_d_images_empty && lemma_sets_empty && all_comaximal && injective && exhaustive; }
};

/// x -> (I(x), F(x)) with I(x) = {A : x not in A}, F(x) = {A : x in d(A)}.
inline CharMaxPairReport char_comaximal_of_essential(const BitopSpace& s) {
  CharMaxPairReport r;
  r.essential = std::make_shared<const EssentialLattice>(s);
  const EssentialLattice& E = *r.essential;
  const FiniteLattice& L = E.lattice();
  PointSet all_d = s.carrier();
  PointSet all_a = s.carrier();
  for (PointSet a : E.sets()) {
    all_d &= s.op_d(a);
    all_a &= a;
  }
  r.lemma_d_images_empty = all_d.empty();
  r.lemma_sets_empty = all_a.empty();
  r.all_comaximal = true;
  for (Point x = 0; x < s.size(); ++x) {
    ComaximalPair p{detail::ideal_of_point(E, x), detail::filter_of_point(E, x)};
    if (!is_comaximal(L, p.ideal, p.filter)) {
      r.all_comaximal = false;
      if (!r.failure) r.failure = "(I(x),F(x)) is not comaximal for x = " + s.point_names()[x];
    }
    r.pairs.push_back(p);
  }
  std::vector<ComaximalPair> sorted = r.pairs;
  std::sort(sorted.begin(), sorted.end());
  r.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!r.injective && !r.failure) r.failure = "two points give the same comaximal pair";
  const auto all = comaximal_pairs(L);
  r.exhaustive = true;
  for (const ComaximalPair& p : all) {
    if (!std::binary_search(sorted.begin(), sorted.end(), p)) {
      r.exhaustive = false;
      if (!r.failure) r.failure = "comaximal pair " + format_pair(L, p) + " is not of the form (I(x),F(x))";
    }
  }
  return r;
}

/// H_X : X -> spec_B(𝔈(X)).
struct BigHReport {
  std::shared_ptr<const EssentialLattice> essential;
  std::shared_ptr<const BitopSpectrum> spectrum;
  std::vector<Point> map;
  bool bijective = false;
  bool tau_identity = false;    // H^-1(delta(A)) = A
  bool sigma_identity = false;  // H^-1(epsilon(A)) = d(A)
  bool bihomeomorphism = false;
  bool pbd_isomorphism = false;
  std::optional<std::string> failure;
  bool holds() const { return bijective && tau_identity && sigma_identity && bihomeomorphism && pbd_isomorphism; }
};

inline BigHReport big_h_map(const BitopSpace& s) {
  if (auto v = is_pairwise_bd(s); !v.holds) {
    throw Error(ErrorKind::NotPairwiseBD, std::string(axiom_label(*v.failed)) + ": " + v.witness);
  }
  BigHReport r;
  const auto cm = char_comaximal_of_essential(s);
  r.essential = cm.essential;
  const EssentialLattice& E = *r.essential;
  r.spectrum = std::make_shared<const BitopSpectrum>(E.lattice());
  const BitopSpectrum& S = *r.spectrum;
  auto note = [&](std::string msg) {
    if (!r.failure) r.failure = std::move(msg);
  };
  PointSet hit;
  r.bijective = cm.holds() && S.size() == s.size();
  for (Point x = 0; x < s.size(); ++x) {
    const auto idx = S.index_of(cm.pairs[x]);
    if (!idx) {
      r.bijective = false;
      note("H(" + s.point_names()[x] + ") is not a point of spec_B(E(X))");
      r.map.push_back(0);
      continue;
    }
    if (hit.contains(*idx)) r.bijective = false;
    hit.insert(*idx);
    r.map.push_back(*idx);
  }
  if (!r.bijective) {
    note("H_X is not bijective");
    return r;
  }
  r.tau_identity = true;
  r.sigma_identity = true;
  for (Elem a = 0; a < E.size(); ++a) {
    if (detail::preimage(r.map, S.delta(a)) != E.set(a)) {
      r.tau_identity = false;
      note("H^-1(delta(" + s.format(E.set(a)) + ")) differs from the set");
    }
    if (detail::preimage(r.map, S.epsilon(a)) != s.op_d(E.set(a))) {
      r.sigma_identity = false;
      note("H^-1(epsilon(" + s.format(E.set(a)) + ")) differs from its d-image");
    }
  }
  r.bihomeomorphism = true;
  for (Side side : {Side::Tau, Side::Sigma}) {
    for (Point x = 0; x < s.size(); ++x) {
      PointSet moved;
      for (Point y : s.topology(side).min_nbhd(x)) moved.insert(r.map[y]);
      if (moved != S.space().topology(side).min_nbhd(r.map[x])) {
        r.bihomeomorphism = false;
        note("H_X does not carry the neighbourhoods of " + s.point_names()[x]);
      }
    }
  }
  const auto m = make_pbd_morphism(share(s), share(S.space()), r.map);
  r.pbd_isomorphism = m.valid() && r.bihomeomorphism;
  if (m.failure) note(*m.failure);
  return r;
}

// ---------------------------------------------------------------------------
// Naturality of delta

struct DeltaNaturality {
  bool delta_source_iso = false;  // delta_L : L -> 𝔈(spec_B(L))
  bool delta_target_iso = false;  // delta_N : N -> 𝔈(spec_B(N))
  bool square_commutes = false;
  std::optional<std::string> failure;
  bool holds() const { return delta_source_iso && delta_target_iso && square_commutes; }
};

/// delta as a map into the essential lattice of the spectrum, checked to be a
/// lattice isomorphism. Returns the first failure.
inline std::optional<std::string> delta_iso_violation(const BitopSpectrum& S, const EssentialLattice& E) {
  const FiniteLattice& L = S.lattice();
  if (E.size() != L.size()) {
    return "E(spec_B(" + L.name() + ")) has " + std::to_string(E.size()) + " elements, L has " +
           std::to_string(L.size());
  }
  std::vector<Elem> map;
  for (Elem x = 0; x < L.size(); ++x) {
    const auto idx = E.index_of(S.delta(x));
    if (!idx) return "delta(" + L.element_name(x) + ") is not essential";
    map.push_back(*idx);
  }
  std::vector<Elem> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "delta is not injective";
  for (Elem x = 0; x < L.size(); ++x) {
    for (Elem y = 0; y < L.size(); ++y) {
      if (E.set(map[L.meet(x, y)]) != S.space().op_i(S.space().op_d(S.delta(x) & S.delta(y)))) {
        return "delta(" + L.element_name(x) + " ^ " + L.element_name(y) + ") is not i(d(delta cap delta))";
      }
    }
  }
  if (auto v = hom_violation(L, E.lattice(), map)) return "delta: " + *v;
  return std::nullopt;
}

inline DeltaNaturality delta_natural_iso_check(const LatticeHom& f) {
  const auto sl = std::make_shared<const BitopSpectrum>(*f.source);
  const auto sn = std::make_shared<const BitopSpectrum>(*f.target);
  const SpecBMorphism m = spec_b_on_hom(f, sl, sn);
  DeltaNaturality r;
  const EssentialLattice el(sl->space());
  const EssentialLattice en(sn->space());
  auto vs = delta_iso_violation(*sl, el);
  auto vt = delta_iso_violation(*sn, en);
  r.delta_source_iso = !vs;
  r.delta_target_iso = !vt;
  if (vs) r.failure = *vs;
  if (vt && !r.failure) r.failure = *vt;
  r.square_commutes = true;
  for (Elem x = 0; x < f.source->size(); ++x) {
    if (m.morphism.preimage(sl->delta(x)) != sn->delta(f(x))) {
      r.square_commutes = false;
      if (!r.failure) r.failure = "naturality square fails at " + f.source->element_name(x);
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Classical track

/// Fundamental sets of a topology as a lattice under inclusion, element k
/// named "f<k>".
struct FundamentalLattice {
  std::vector<PointSet> sets;
  FiniteLattice lattice;
};

inline FundamentalLattice fundamental_lattice(const FiniteTopology& t) {
  auto sets = fundamental_subsets(t).sorted().members();
  auto lattice = detail::inclusion_lattice("F(X)", "f", sets);
  return {std::move(sets), std::move(lattice)};
}

/// h_X : X -> spec(𝔉(X)), x -> I_x = {A : x not in A}.
struct ClassicalHReport {
  std::shared_ptr<const FundamentalLattice> fundamental;
  std::shared_ptr<const ClassicalSpectrum> spectrum;
  std::vector<Point> map;
  bool all_prime = false;
  bool bijective = false;
  bool homeomorphism = false;
  std::optional<std::string> failure;
  bool holds() const { return all_prime && bijective && homeomorphism; }
};

inline ClassicalHReport h_map_classical(const FiniteTopology& t) {
  if (auto v = is_bd_space(t); !v.holds) throw Error(ErrorKind::NotBDSpace, v.failure);
  ClassicalHReport r;
  r.fundamental = std::make_shared<const FundamentalLattice>(fundamental_lattice(t));
  const FundamentalLattice& F = *r.fundamental;
  r.spectrum = std::make_shared<const ClassicalSpectrum>(F.lattice);
  const ClassicalSpectrum& S = *r.spectrum;
  r.all_prime = true;
  PointSet hit;
  bool injective = true;
  for (Point x = 0; x < t.size(); ++x) {
    ElemSet ix;
    for (Elem a = 0; a < F.sets.size(); ++a) {
      if (!F.sets[a].contains(x)) ix.insert(a);
    }
    const auto idx = S.index_of(ix);
    if (!idx) {
      r.all_prime = false;
      if (!r.failure) r.failure = "I_x is not prime for x = p" + std::to_string(x);
      r.map.push_back(0);
      continue;
    }
    if (hit.contains(*idx)) injective = false;
    hit.insert(*idx);
    r.map.push_back(*idx);
  }
  r.bijective = r.all_prime && injective && hit == PointSet::full(S.size());
  if (!r.bijective) {
    if (!r.failure) r.failure = "h_X is not bijective";
    return r;
  }
  r.homeomorphism = true;
  for (Point x = 0; x < t.size(); ++x) {
    PointSet moved;
    for (Point y : t.min_nbhd(x)) moved.insert(r.map[y]);
    if (moved != S.space().min_nbhd(r.map[x])) {
      r.homeomorphism = false;
      if (!r.failure) r.failure = "h_X does not carry the neighbourhood of p" + std::to_string(x);
    }
  }
  return r;
}

/// Stone duality at object level for a distributive lattice: 𝔉(spec(L)) has
/// |L| members, d_L : L -> 𝔉(spec(L)) is an isomorphism, b_L is a
/// homeomorphism onto (M(L), tau_L) and h_X works on the Zariski space.
struct StoneReport {
  bool fundamental_count = false;
  bool d_iso = false;
  bool b_homeomorphism = false;
  bool h_map = false;
  std::optional<std::string> failure;
  bool holds() const { return fundamental_count && d_iso && b_homeomorphism && h_map; }
};

inline StoneReport stone_check(const FiniteLattice& L) {
  StoneReport r;
  auto note = [&](std::string msg) {
    if (!r.failure) r.failure = std::move(msg);
  };
  const ClassicalSpectrum spec(L);
  const FundamentalLattice F = fundamental_lattice(spec.space());
  r.fundamental_count = F.sets.size() == L.size();
  if (!r.fundamental_count) note("F(spec(L)) has " + std::to_string(F.sets.size()) + " members");
  std::vector<Elem> map;
  r.d_iso = r.fundamental_count;
  for (Elem x = 0; x < L.size() && r.d_iso; ++x) {
    const auto idx = detail::find_set(F.sets, spec.dmap(x));
    if (!idx) {
      r.d_iso = false;
      note("d(" + L.element_name(x) + ") is not fundamental");
    } else {
      map.push_back(*idx);
    }
  }
  if (r.d_iso) {
    if (auto v = hom_violation(L, F.lattice, map)) {
      r.d_iso = false;
      note("d_L: " + *v);
    }
    std::vector<Elem> sorted = map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      r.d_iso = false;
      note("d_L is not injective");
    }
  }
  const BitopSpectrum bitop(L);
  r.b_homeomorphism = b_map(spec, bitop).homeomorphism;
  if (!r.b_homeomorphism) note("b_L is not a homeomorphism");
  try {
    const auto h = h_map_classical(spec.space());
    r.h_map = h.holds();
    if (!r.h_map) note(h.failure.value_or("h_X failed"));
  } catch (const Error& e) {
    note(e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------
// The O / D bridge between BD spaces and doubly BD spaces

/// 𝒟(X, tau) = (X, tau, tau).
inline BitopSpace double_topology(const FiniteTopology& t) {
  if (auto v = is_bd_space(t); !v.holds) throw Error(ErrorKind::NotBDSpace, v.failure);
  return BitopSpace(t, t);
}

/// 𝒪(X, tau, sigma) = (X, tau) on doubly BD spaces.
inline FiniteTopology forget_sigma(const BitopSpace& s) {
  if (!is_doubly_bd(s)) throw Error(ErrorKind::NotDoublyBD, "tau and sigma differ");
  return s.tau();
}

struct OdBridgeReport {
  bool doubled_is_pbd = false;
  bool doubled_is_doubly_bd = false;
  bool forgotten_is_bd = false;
  bool round_trip_od = false;  // 𝒪(𝒟(X)) = X
  bool round_trip_do = false;  // 𝒟(𝒪(𝒟(X))) = 𝒟(X)
  bool essential_equals_fundamental = false;
  bool holds() const {
    return doubled_is_pbd && doubled_is_doubly_bd && forgotten_is_bd && round_trip_od && round_trip_do &&
           essential_equals_fundamental;
  }
};

inline OdBridgeReport o_d_bridge(const FiniteTopology& t) {
  OdBridgeReport r;
  const BitopSpace d = double_topology(t);
  r.doubled_is_pbd = is_pairwise_bd(d).holds;
  if (!r.doubled_is_pbd) return r;
  r.doubled_is_doubly_bd = is_doubly_bd(d);
  const FiniteTopology o = forget_sigma(d);
  r.forgotten_is_bd = is_bd_space(o).holds;
  r.round_trip_od = o == t;
  r.round_trip_do = double_topology(o).same_topologies(d);
  r.essential_equals_fundamental = essential_subsets(d).same_members(fundamental_subsets(t));
  return r;
}

/// A continuous map between BD spaces transported by 𝒟 is a PBD morphism, and
/// 𝒪 gives back the same map.
inline bool transport_preserves_morphism(const FiniteTopology& x, const FiniteTopology& y,
                                         const std::vector<Point>& map) {
  const auto dm = make_pbd_morphism(share(double_topology(x)), share(double_topology(y)), map);
  if (!dm.valid()) return false;
  const SetFamily fx = fundamental_subsets(x);
  for (PointSet u : fundamental_subsets(y)) {
    if (!fx.contains(detail::preimage(map, u))) return false;
  }
  return true;
}

/// spec(f) : spec(N) -> spec(L), P -> f^-1(P), for proper f : L -> N.
inline std::vector<Point> classical_spec_map(const LatticeHom& f, const ClassicalSpectrum& sl,
                                             const ClassicalSpectrum& sn) {
  std::vector<Point> map;
  for (const PrimeIdeal& P : sn.points()) {
    const auto idx = sl.index_of(f.preimage(P.members));
    if (!idx) throw Error(ErrorKind::InvalidArgument, "homomorphism is not proper");
    map.push_back(*idx);
  }
  return map;
}

/// b_L ∘ spec(f) = spec_B(f) ∘ b_N for a proper f between distributive
/// lattices, with both b maps homeomorphisms.
struct BNaturality {
  bool b_source_homeomorphism = false;
  bool b_target_homeomorphism = false;
  bool square_commutes = false;
  bool holds() const { return b_source_homeomorphism && b_target_homeomorphism && square_commutes; }
};

inline BNaturality b_natural_check(const LatticeHom& f) {
  BNaturality r;
  const ClassicalSpectrum cl(*f.source);
  const ClassicalSpectrum cn(*f.target);
  const auto bl_spec = std::make_shared<const BitopSpectrum>(*f.source);
  const auto bn_spec = std::make_shared<const BitopSpectrum>(*f.target);
  const BMap bl = b_map(cl, *bl_spec);
  const BMap bn = b_map(cn, *bn_spec);
  r.b_source_homeomorphism = bl.homeomorphism;
  r.b_target_homeomorphism = bn.homeomorphism;
  const auto sf = classical_spec_map(f, cl, cn);
  const SpecBMorphism bf = spec_b_on_hom(f, bl_spec, bn_spec);
  r.square_commutes = true;
  for (Point p = 0; p < cn.size(); ++p) {
    if (bl.image[sf[p]] != bf.morphism(bn.image[p])) r.square_commutes = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Distributive characterization

struct DisCharReport {
  bool doubly_bd = false;          // (i) tau = sigma
  bool distributive = false;       // (ii) 𝔈(X) distributive
  bool spectrum_of_distributive = false;  // (iii) with L := 𝔈(X)
  bool all_points_prime = false;   // (iv)
  std::vector<Point> prime;
  bool agree() const {
    return doubly_bd == distributive && distributive == spectrum_of_distributive &&
           spectrum_of_distributive == all_points_prime;
  }
};

inline DisCharReport dischar_equivalences(const BitopSpace& s) {
  DisCharReport r;
  r.doubly_bd = is_doubly_bd(s);
  const EssentialLattice E(s);
  r.distributive = is_distributive(E.lattice()).distributive;
  r.spectrum_of_distributive = r.distributive && big_h_map(s).holds();
  r.prime = prime_points(s);
  r.all_points_prime = r.prime.size() == s.size();
  return r;
}

}  // namespace latspec

#endif  // LATSPEC_DUALITY_HPP
