#ifndef LATSPEC_SUITES_HPP
#define LATSPEC_SUITES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "latspec/duality.hpp"
#include "latspec/report.hpp"

namespace latspec {

struct SuiteOptions {
  std::uint64_t gbd_seed = 20240601;
  std::size_t gbd_samples = 200;
  /// Carriers up to this size get exhaustive adjunction checks.
  std::size_t adjunction_exhaustive_limit = 10;
};

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Runs one property; an exception becomes a FAIL carrying its message.
inline void run_property(Report& r, const std::string& subject, const std::string& property,
                         const std::function<Verdict()>& body) {
  try {
    Verdict v = body();
    v.subject = subject;
    v.property = property;
    r.add(std::move(v));
  } catch (const std::exception& e) {
    r.fail(subject, property, std::string("exception: ") + e.what());
  }
}

inline Verdict pass(std::string detail = {}) { return {{}, {}, Status::Pass, std::move(detail)}; }
inline Verdict fail(std::string witness) { return {{}, {}, Status::Fail, std::move(witness)}; }
inline Verdict skip(std::string reason) { return {{}, {}, Status::Skip, std::move(reason)}; }

// Increasing sets used by the transition checks: all opens on small
// carriers, otherwise unions of at most two minimal neighbourhoods.
inline std::vector<PointSet> increasing_sets(const FiniteTopology& t, std::size_t exhaustive_limit) {
  if (t.size() <= exhaustive_limit) return t.opens().members();
  SetFamily out(t.size());
  out.add(PointSet{});
  out.add(t.carrier());
  for (Point x = 0; x < t.size(); ++x) {
    for (Point y = x; y < t.size(); ++y) out.add(t.min_nbhd(x) | t.min_nbhd(y));
  }
  return out.members();
}

}  // namespace detail

/// Every per-lattice property suite, in a fixed order.
inline Report verify_lattice(const FiniteLattice& L, const SuiteOptions& opt = {}) {
  Report r;
  const std::string& who = L.name();
  using detail::fail;
  using detail::pass;
  using detail::skip;

  detail::run_property(r, who, "LatticeAxioms", [&] {
    if (auto v = lattice_axiom_violation(L)) return fail(*v);
    return pass();
  });

  bool distributive = false;
  detail::run_property(r, who, "Distributivity", [&] {
    const auto d = is_distributive(L);
    distributive = d.distributive;
    if (!d.detectors_agree()) return fail("triple law and sublattice search disagree");
    if (d.distributive) return pass("distributive");
    const auto& s = *d.sublattice;
    ElemSet members;
    for (Elem e : s.elements) members.insert(e);
    return pass(std::string(s.kind == ForbiddenSublattice::Kind::M5 ? "M5" : "N5") + " sublattice " +
                L.format(members));
  });

  detail::run_property(r, who, "PrimeIdeals", [&] {
    const auto primes = prime_ideals(L);
    for (const auto& P : primes) {
      for (Elem x = 0; x < L.size(); ++x) {
        for (Elem y = 0; y < L.size(); ++y) {
          if (P.members.contains(L.meet(x, y)) && !P.members.contains(x) && !P.members.contains(y)) {
            return fail(L.format(P.members) + " contains " + L.element_name(x) + " ^ " + L.element_name(y));
          }
        }
      }
    }
    if (distributive && L.size() >= 2 && primes.empty()) return fail("distributive lattice without prime ideals");
    return pass(std::to_string(primes.size()) + " prime ideals");
  });

  std::shared_ptr<const BitopSpectrum> S;
  detail::run_property(r, who, "Spectrum", [&] {
    S = std::make_shared<const BitopSpectrum>(L);
    if (L.size() >= 2 && S->size() == 0) return fail("no comaximal pairs on a lattice with two elements");
    for (const auto& p : S->points()) {
      if (!is_comaximal(L, p.ideal, p.filter)) return fail(format_pair(L, p) + " is not comaximal");
    }
    return pass(std::to_string(S->size()) + " comaximal pairs");
  });
  if (!S) return r;
  const BitopSpace& X = S->space();

  detail::run_property(r, who, "Copies", [&] {
    for (Elem x = 0; x < L.size(); ++x) {
      if (!S->epsilon(x).subset_of(S->delta(x))) return fail("epsilon(" + L.element_name(x) + ") not in delta");
      for (Elem y = 0; y < L.size(); ++y) {
        const std::string pair = L.element_name(x) + "," + L.element_name(y);
        if (S->delta(L.join(x, y)) != (S->delta(x) | S->delta(y))) return fail("delta join at " + pair);
        if (S->epsilon(L.meet(x, y)) != (S->epsilon(x) & S->epsilon(y))) return fail("epsilon meet at " + pair);
        if (x != y && L.size() >= 2) {
          if (S->delta(x) == S->delta(y)) return fail("delta not injective at " + pair);
          if (S->epsilon(x) == S->epsilon(y)) return fail("epsilon not injective at " + pair);
        }
      }
    }
    return pass();
  });

  detail::run_property(r, who, "TopDis", [&] {
    const bool equal = S->delta_image() == S->epsilon_image();
    if (equal != distributive) {
      return fail(std::string("delta = epsilon is ") + (equal ? "true" : "false") + " but distributive is " +
                  (distributive ? "true" : "false"));
    }
    return pass(equal ? "delta = epsilon" : "delta != epsilon");
  });

  detail::run_property(r, who, "PCLat", [&] {
    const ClassicalSpectrum C(L);
    const BMap b = b_map(C, *S);
    if (!b.injective) return fail("b_L is not injective");
    const bool bijective = b.surjective;
    if (bijective != distributive) return fail(std::string("b_L bijective is ") + (bijective ? "true" : "false"));
    if (distributive && !b.homeomorphism) return fail("b_L is not a homeomorphism onto tau");
    if (distributive && !C.basis_property()) return fail("Im(d_L) is not intersection-closed");
    return pass(bijective ? "b_L bijective" : "b_L injective, not surjective");
  });

  detail::run_property(r, who, "DelComp", [&] {
    const std::size_t n = L.size();
    const std::size_t bound = n <= 8 ? n : 3;
    std::size_t checked = 0;
    std::optional<std::string> failure;
    detail::for_small_subsets(n, bound, [&](Bits v) {
      for (Elem x = 0; x < n && !failure; ++x) {
        const auto res = delta_compactness_check(L, x, v);
        if (!delta_compactness_certifies(*S, x, v, res)) {
          failure = "x = " + L.element_name(x) + ", V = " + L.format(v);
        }
        ++checked;
      }
    });
    if (failure) return fail(*failure);
    return pass(std::to_string(checked) + " cases");
  });

  detail::run_property(r, who, "GBD", [&] {
    std::mt19937_64 rng(opt.gbd_seed ^ detail::fnv1a(L.name()));
    const std::size_t n = L.size();
    std::size_t witnesses = 0;
    for (std::size_t k = 0; k < opt.gbd_samples; ++k) {
      Bits v;
      Bits w;
      while (v.empty()) v = Bits{rng() & Bits::full(n).word()};
      while (w.empty()) w = Bits{rng() & Bits::full(n).word()};
      const auto res = gbd_witness(L, v, w);
      if (!gbd_certifies(*S, v, w, res)) return fail("V = " + L.format(v) + ", W = " + L.format(w));
      if (std::holds_alternative<GbdWitness>(res)) ++witnesses;
    }
    return pass(std::to_string(witnesses) + " witnesses, " + std::to_string(opt.gbd_samples - witnesses) +
                " separating pairs");
  });

  detail::run_property(r, who, "Ord", [&] {
    for (Point p = 0; p < S->size(); ++p) {
      for (Point q = 0; q < S->size(); ++q) {
        const auto& a = S->points()[p];
        const auto& b = S->points()[q];
        if (X.leq_tau(p, q) != b.ideal.subset_of(a.ideal)) {
          return fail("tau order at " + S->point_name(p) + ", " + S->point_name(q));
        }
        if (X.leq_sigma(p, q) != a.filter.subset_of(b.filter)) {
          return fail("sigma order at " + S->point_name(p) + ", " + S->point_name(q));
        }
      }
    }
    const auto t0 = is_pairwise_t0(X);
    if (!t0.holds) {
      return fail("not pairwise T0 at " + S->point_name(t0.witness->first) + ", " +
                  S->point_name(t0.witness->second));
    }
    if (specialization_from_subbasis(S->size(), S->delta_image()) != specialization(X.tau())) {
      return fail("subbasis specialization differs from the topology");
    }
    return pass("pairwise T0");
  });

  detail::run_property(r, who, "Bounds", [&] {
    const auto top = has_top_via_compactness(*S);
    if (!top.agrees) return fail("cover join is " + L.element_name(top.join) + ", not the top");
    const auto bottom = has_bottom_via_fundamental(*S);
    if (!bottom.empty_fundamental || !bottom.agrees) return fail("no epsilon family meeting to the bottom");
    return pass("cover " + L.format(top.cover) + ", family " + L.format(bottom.family));
  });

  detail::run_property(r, who, "BCPrimal", [&] {
    const auto pp = prime_points(*S);
    if (!pp.closure_implies_prime()) return fail("a point with equal closures has a non-prime ideal");
    const bool all = pp.by_closure.size() == S->size();
    if (all != distributive) return fail(std::string("all points prime is ") + (all ? "true" : "false"));
    std::string detail = std::to_string(pp.by_closure.size()) + " of " + std::to_string(S->size()) + " points prime";
    if (!pp.agree()) {
      detail += "; " + std::to_string(pp.by_prime_ideal.size() - pp.by_closure.size()) +
                " prime-ideal points with unequal closures";
    }
    return pass(detail);
  });

  detail::run_property(r, who, "Transition", [&] {
    const auto sig = detail::increasing_sets(X.sigma(), opt.adjunction_exhaustive_limit);
    const auto tau = detail::increasing_sets(X.tau(), opt.adjunction_exhaustive_limit);
    for (PointSet a : sig) {
      for (PointSet b : tau) {
        if (X.op_i(a).subset_of(b) != a.subset_of(X.op_d(b))) {
          return fail("adjunction at A = " + X.format(a) + ", B = " + X.format(b));
        }
      }
    }
    for (Elem x = 0; x < L.size(); ++x) {
      const std::string e = L.element_name(x);
      if (X.op_d(S->delta(x)) != S->epsilon(x)) return fail("d(delta(" + e + ")) != epsilon(" + e + ")");
      if (X.op_i(S->epsilon(x)) != S->delta(x)) return fail("i(epsilon(" + e + ")) != delta(" + e + ")");
      if (!is_stable(X, S->delta(x))) return fail("delta(" + e + ") is not stable");
      if (!is_costable(X, S->epsilon(x))) return fail("epsilon(" + e + ") is not co-stable");
    }
    return pass(std::to_string(sig.size() * tau.size()) + " adjunction pairs");
  });

  detail::run_property(r, who, "RepTh", [&] {
    const auto rep = essential_equals_delta(*S);
    if (!rep.holds) {
      if (!rep.not_delta.empty()) return fail("essential set " + X.format(rep.not_delta.front()) + " outside Im(delta)");
      if (!rep.delta_not_essential.empty()) {
        return fail("delta(" + L.element_name(rep.delta_not_essential.front()) + ") is not essential");
      }
      return fail("delta is not injective");
    }
    if (X.size() <= kBruteForceCarrierLimit &&
        !essential_subsets_brute_force(X).same_members(essential_subsets(X))) {
      return fail("brute-force essential family differs");
    }
    return pass(std::to_string(rep.essential_count) + " essential sets = Im(delta)");
  });

  detail::run_property(r, who, "PBD", [&] {
    const auto v = is_pairwise_bd(X);
    if (!v.holds) return fail(std::string(axiom_label(*v.failed)) + ": " + v.witness);
    if (!is_bounded_pbd(X)) return fail("not bounded");
    if (is_doubly_bd(X) != distributive) return fail("doubly BD does not match distributivity");
    return pass(distributive ? "doubly BD" : "pairwise BD, not doubly BD");
  });

  detail::run_property(r, who, "CharMaxPair", [&] {
    const auto c = char_comaximal_of_essential(X);
    if (!c.holds()) return fail(c.failure.value_or("auxiliary lemma fails"));
    return pass(std::to_string(c.pairs.size()) + " points = comaximal pairs of E(X)");
  });

  detail::run_property(r, who, "HX", [&] {
    const auto h = big_h_map(X);
    if (!h.holds()) return fail(h.failure.value_or("H_X is not a PBD isomorphism"));
    return pass("H_X is a PBD isomorphism");
  });

  detail::run_property(r, who, "DualRoundTrip", [&] {
    const EssentialLattice E(X);
    if (auto v = E.operation_violation()) return fail(*v);
    if (auto v = delta_iso_violation(*S, E)) return fail(*v);
    return pass("delta_L : L = E(spec_B(L))");
  });

  detail::run_property(r, who, "DisChar", [&] {
    const auto d = dischar_equivalences(X);
    if (!d.agree() || d.doubly_bd != distributive) {
      return fail(std::string("clauses (") + (d.doubly_bd ? "T" : "F") + "," + (d.distributive ? "T" : "F") + "," +
                  (d.spectrum_of_distributive ? "T" : "F") + "," + (d.all_points_prime ? "T" : "F") + ")");
    }
    const std::string v = distributive ? "T" : "F";
    return pass("(" + v + "," + v + "," + v + "," + v + ")");
  });

  detail::run_property(r, who, "StoneDual", [&] {
    if (!distributive) return skip("not distributive");
    const auto s = stone_check(L);
    if (!s.holds()) return fail(s.failure.value_or("Stone duality check failed"));
    return pass("F(spec(L)) = L, b_L homeomorphism");
  });

  detail::run_property(r, who, "ODBridge", [&] {
    if (!distributive) return skip("not distributive");
    const ClassicalSpectrum C(L);
    const auto o = o_d_bridge(C.space());
    if (!o.holds()) return fail("O/D round trip fails on the Zariski space");
    if (!(forget_sigma(X) == X.tau())) return fail("O(spec_B(L)) differs from tau");
    return pass("O(D(X)) = X, D(O(D(X))) = D(X)");
  });

  return r;
}

/// Per-lattice suites over a list, in parallel, output in input order.
inline Report verify_lattices(const std::vector<FiniteLattice>& lattices, const SuiteOptions& opt = {}) {
  const auto parts = parallel_map(lattices, [&](const FiniteLattice& L) { return verify_lattice(L, opt); });
  Report r;
  for (const auto& p : parts) r.merge(p);
  return r;
}

// ---------------------------------------------------------------------------
// Morphism corpus

struct CorpusEntry {
  LatticeHom hom;
  HomClassification classification;
  std::string label;
};

/// Every homomorphism between every ordered pair of the given lattices.
inline std::vector<CorpusEntry> morphism_corpus(const std::vector<LatticePtr>& lattices) {
  std::vector<CorpusEntry> out;
  for (const auto& a : lattices) {
    for (const auto& b : lattices) {
      std::size_t k = 0;
      for (auto& f : all_homs(a, b)) {
        auto c = classify_hom(f);
        out.push_back({std::move(f), std::move(c), a->name() + "->" + b->name() + "#" + std::to_string(++k)});
      }
    }
  }
  return out;
}

/// Classification, functor actions, functor laws and naturality over the
/// corpus of all homomorphisms between the given lattices.
inline Report verify_morphisms(const std::vector<FiniteLattice>& lattices) {
  Report r;
  std::vector<LatticePtr> ptrs;
  for (const auto& L : lattices) ptrs.push_back(share(L));
  const auto corpus = morphism_corpus(ptrs);
  const std::string who = "corpus(" + std::to_string(lattices.size()) + " lattices, " +
                          std::to_string(corpus.size()) + " homs)";

  std::map<const FiniteLattice*, std::shared_ptr<const BitopSpectrum>> spectra;
  std::map<const FiniteLattice*, bool> distributive;
  for (const auto& p : ptrs) {
    spectra[p.get()] = std::make_shared<const BitopSpectrum>(*p);
    distributive[p.get()] = is_distributive(*p).distributive;
  }

  detail::run_property(r, who, "QuasiProperImpliesProper", [&] {
    std::size_t qp = 0;
    for (const auto& e : corpus) {
      if (e.classification.is_quasi_proper && !e.classification.is_proper) {
        return detail::fail(e.label + ": " + e.classification.witness);
      }
      qp += e.classification.is_quasi_proper;
    }
    return detail::pass(std::to_string(qp) + " quasi-proper of " + std::to_string(corpus.size()));
  });

  detail::run_property(r, who, "ProperIffQuasiProperDistributive", [&] {
    std::size_t n = 0;
    for (const auto& e : corpus) {
      if (!distributive[e.hom.source.get()] || !distributive[e.hom.target.get()]) continue;
      ++n;
      if (e.classification.is_proper != e.classification.is_quasi_proper) {
        return detail::fail(e.label + ": " + e.classification.witness);
      }
    }
    return detail::pass(std::to_string(n) + " distributive-to-distributive homs");
  });

  std::vector<std::pair<const CorpusEntry*, SpecBMorphism>> specb;
  detail::run_property(r, who, "SpecBMorphisms", [&] {
    for (const auto& e : corpus) {
      if (!e.classification.is_quasi_proper) continue;
      auto m = spec_b_on_hom(e.hom, spectra[e.hom.source.get()], spectra[e.hom.target.get()]);
      if (!m.valid()) return detail::fail(e.label + ": " + m.failure.value_or("not a PBD morphism"));
      specb.emplace_back(&e, std::move(m));
    }
    return detail::pass(std::to_string(specb.size()) + " PBD morphisms");
  });

  detail::run_property(r, who, "EssentialFunctor", [&] {
    for (const auto& [e, m] : specb) {
      const auto h = essential_functor_on_morphism(m.morphism);
      if (!h.valid()) return detail::fail(e->label + ": " + h.failure.value_or("not quasi-proper"));
    }
    return detail::pass(std::to_string(specb.size()) + " quasi-proper images");
  });

  detail::run_property(r, who, "FunctorLaws", [&] {
    for (const auto& p : ptrs) {
      const auto id = spec_b_on_hom(identity_hom(p), spectra[p.get()], spectra[p.get()]);
      if (!same_morphism(id.morphism, identity_morphism(id.morphism.source))) {
        return detail::fail("spec_B(id) is not the identity on " + p->name());
      }
      const auto eid = essential_functor_on_morphism(id.morphism);
      for (Elem x = 0; x < eid.hom.map.size(); ++x) {
        if (eid.hom.map[x] != x) return detail::fail("E(id) is not the identity on " + p->name());
      }
    }
    std::size_t pairs = 0;
    for (const auto& [ef, mf] : specb) {
      for (const auto& [eg, mg] : specb) {
        if (ef->hom.target != eg->hom.source) continue;
        ++pairs;
        const LatticeHom gf = compose(eg->hom, ef->hom);
        const auto mgf = spec_b_on_hom(gf, spectra[gf.source.get()], spectra[gf.target.get()]);
        // spec_B(g ∘ f) = spec_B(f) ∘ spec_B(g)
        const auto composite = compose(mf.morphism, mg.morphism);
        if (mgf.morphism.map != composite.map) {
          return detail::fail("spec_B(" + eg->label + " o " + ef->label + ") differs from the composite");
        }
        // E(m_f ∘ m_g) = E(m_g) ∘ E(m_f)
        const auto e_comp = essential_functor_on_morphism(composite);
        const auto e_f = essential_functor_on_morphism(mf.morphism);
        const auto e_g = essential_functor_on_morphism(mg.morphism);
        if (e_comp.hom.map != compose(e_g.hom, e_f.hom).map) {
          return detail::fail("E does not respect composition at " + eg->label + " o " + ef->label);
        }
      }
    }
    return detail::pass(std::to_string(pairs) + " composable pairs");
  });

  detail::run_property(r, who, "DeltaNaturality", [&] {
    for (const auto& [e, m] : specb) {
      const auto n = delta_natural_iso_check(e->hom);
      if (!n.holds()) return detail::fail(e->label + ": " + n.failure.value_or("square fails"));
    }
    return detail::pass(std::to_string(specb.size()) + " squares");
  });

  detail::run_property(r, who, "NatIso", [&] {
    std::size_t n = 0;
    for (const auto& e : corpus) {
      if (!distributive[e.hom.source.get()] || !distributive[e.hom.target.get()] || !e.classification.is_proper) {
        continue;
      }
      ++n;
      if (!b_natural_check(e.hom).holds()) return detail::fail(e.label + ": b_L square fails");
    }
    return detail::pass(std::to_string(n) + " squares");
  });

  detail::run_property(r, who, "ODTransport", [&] {
    std::size_t n = 0;
    for (const auto& e : corpus) {
      if (!distributive[e.hom.source.get()] || !distributive[e.hom.target.get()] || !e.classification.is_proper) {
        continue;
      }
      const ClassicalSpectrum cl(*e.hom.source);
      const ClassicalSpectrum cn(*e.hom.target);
      const auto map = classical_spec_map(e.hom, cl, cn);
      ++n;
      if (!transport_preserves_morphism(cn.space(), cl.space(), map)) {
        return detail::fail(e.label + ": D(spec(f)) is not a PBD morphism");
      }
    }
    return detail::pass(std::to_string(n) + " transported maps");
  });

  return r;
}

}  // namespace latspec

#endif  // LATSPEC_SUITES_HPP
