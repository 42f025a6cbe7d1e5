#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace latspec;
using testing_support::at;
using testing_support::error_kind_of;
using testing_support::set_of;

namespace {

std::vector<FiniteLattice> all_small(std::size_t max_size) {
  GeneratorConfig cfg;
  cfg.max_size = max_size;
  return enumerate_lattices(cfg);
}

LatticeHom diamond_onto_chain2(const LatticePtr& dia, const LatticePtr& c2) {
  return check_hom(dia, c2, {0, 1, 0, 1});  // 0->0, a->1, b->0, 1->1
}

}  // namespace

TEST(Duality, IdentityIsProperAndQuasiProper) {
  for (const auto& L : catalog()) {
    const auto c = classify_hom(identity_hom(share(L)));
    EXPECT_TRUE(c.is_proper && c.is_quasi_proper) << L.name();
  }
}

TEST(Duality, AtomInclusionsIntoM5) {
  const LatticePtr c2 = share(chain(2));
  const LatticePtr m5 = share(lattice_m5());
  std::size_t not_quasi = 0;
  for (const char* atom : {"a", "b", "c"}) {
    const auto f = check_hom(c2, m5, {at(*m5, "0"), at(*m5, atom)});
    const auto c = classify_hom(f);
    EXPECT_TRUE(c.is_proper);
    EXPECT_TRUE(c.vacuously_proper);
    if (!c.is_quasi_proper) {
      ++not_quasi;
      ASSERT_TRUE(c.quasi_proper_witness.has_value());
      const auto& p = *c.quasi_proper_witness;
      EXPECT_FALSE(is_comaximal(*c2, f.preimage(p.ideal), f.preimage(p.filter)));
      EXPECT_FALSE(c.witness.empty());
    }
  }
  EXPECT_GE(not_quasi, 1U);
}

TEST(Duality, QuasiProperImpliesProperOnSmallHoms) {
  std::vector<LatticePtr> ls;
  for (const auto& L : all_small(4)) ls.push_back(share(L));
  for (const auto& e : morphism_corpus(ls)) {
    const auto& c = e.classification;
    if (c.is_quasi_proper) {
      EXPECT_TRUE(c.is_proper) << e.label;
    }
    if (is_distributive(*e.hom.source).distributive && is_distributive(*e.hom.target).distributive) {
      EXPECT_EQ(c.is_proper, c.is_quasi_proper) << e.label;
    }
  }
}

TEST(Duality, SpecBOnIdentityIsIdentity) {
  const LatticePtr m5 = share(lattice_m5());
  const auto m = spec_b_on_hom(identity_hom(m5));
  EXPECT_TRUE(m.valid());
  for (Point p = 0; p < m.morphism.map.size(); ++p) EXPECT_EQ(m.morphism.map[p], p);
}

TEST(Duality, SpecBOnSurjection) {
  const LatticePtr dia = share(lattice_diamond());
  const LatticePtr c2 = share(chain(2));
  const auto f = diamond_onto_chain2(dia, c2);
  EXPECT_TRUE(classify_hom(f).is_quasi_proper);
  const auto m = spec_b_on_hom(f);
  EXPECT_TRUE(m.valid());
  EXPECT_EQ(m.source->size(), 1U);
  EXPECT_EQ(m.target->size(), 2U);
  EXPECT_TRUE(m.preimage_identities);
  // The single point ({0};{1}) pulls back to ((b],[a)).
  const auto& q = m.target->points()[m.morphism.map[0]];
  EXPECT_EQ(q.ideal, set_of(*dia, {"0", "b"}));
  EXPECT_EQ(q.filter, set_of(*dia, {"a", "1"}));
}

TEST(Duality, SpecBRejectsNonQuasiProper) {
  const LatticePtr c2 = share(chain(2));
  const LatticePtr m5 = share(lattice_m5());
  for (const char* atom : {"a", "b", "c"}) {
    const auto f = check_hom(c2, m5, {0, at(*m5, atom)});
    if (classify_hom(f).is_quasi_proper) continue;
    EXPECT_EQ(error_kind_of([&] { spec_b_on_hom(f); }), ErrorKind::NotQuasiProper);
  }
}

TEST(Duality, EssentialFunctorOnSurjection) {
  const LatticePtr dia = share(lattice_diamond());
  const LatticePtr c2 = share(chain(2));
  const auto m = spec_b_on_hom(diamond_onto_chain2(dia, c2));
  const auto e = essential_functor_on_morphism(m.morphism);
  EXPECT_TRUE(e.valid());
  EXPECT_EQ(e.source->size(), 4U);
  EXPECT_EQ(e.target->size(), 2U);
  const auto id = essential_functor_on_morphism(identity_morphism(share(BitopSpectrum(*dia).space())));
  for (Elem x = 0; x < id.hom.map.size(); ++x) EXPECT_EQ(id.hom.map[x], x);
}

TEST(Duality, FunctorLawsOnComposableHoms) {
  std::vector<LatticePtr> ls;
  for (const auto& L : all_small(4)) ls.push_back(share(L));
  std::size_t checked = 0;
  for (const auto& f : ls) {
    for (const auto& g : ls) {
      for (const auto& h : ls) {
        for (const auto& ff : all_homs(f, g)) {
          if (!classify_hom(ff).is_quasi_proper) continue;
          for (const auto& gg : all_homs(g, h)) {
            if (!classify_hom(gg).is_quasi_proper) continue;
            const auto gf = compose(gg, ff);
            const auto s_gf = spec_b_on_hom(gf);
            const auto s_f = spec_b_on_hom(ff);
            const auto s_g = spec_b_on_hom(gg);
            EXPECT_EQ(s_gf.morphism.map, compose(s_f.morphism, s_g.morphism).map);
            const auto e_gf = essential_functor_on_morphism(s_gf.morphism);
            const auto e_f = essential_functor_on_morphism(s_f.morphism);
            const auto e_g = essential_functor_on_morphism(s_g.morphism);
            std::vector<Elem> composed(e_gf.hom.map.size());
            for (Elem x = 0; x < composed.size(); ++x) composed[x] = e_g.hom.map[e_f.hom.map[x]];
            EXPECT_EQ(e_gf.hom.map, composed);
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 100U);
}

TEST(Duality, CharComaximalOfEssential) {
  const BitopSpace one(FiniteTopology::indiscrete(1), FiniteTopology::indiscrete(1));
  const auto r1 = char_comaximal_of_essential(one);
  EXPECT_TRUE(r1.holds());
  ASSERT_EQ(r1.pairs.size(), 1U);
  EXPECT_EQ(r1.pairs[0].ideal.count(), 1U);
  EXPECT_EQ(r1.pairs[0].filter.count(), 1U);
  const auto r = char_comaximal_of_essential(BitopSpectrum(lattice_m5()).space());
  EXPECT_TRUE(r.holds());
  EXPECT_EQ(r.pairs.size(), 6U);
  EXPECT_TRUE(r.lemma_d_images_empty);
  EXPECT_TRUE(r.lemma_sets_empty);
}

TEST(Duality, RoundTripsOnAllSmallLattices) {
  for (const auto& L : all_small(6)) {
    const BitopSpectrum s(L);
    const EssentialLattice E(s.space());
    EXPECT_FALSE(delta_iso_violation(s, E).has_value()) << L.name();
    EXPECT_FALSE(E.operation_violation().has_value()) << L.name();
    const auto h = big_h_map(s.space());
    EXPECT_TRUE(h.holds()) << L.name() << ": " << h.failure.value_or("");
  }
}

TEST(Duality, BigHOnTwoChainAndM5) {
  EXPECT_EQ(big_h_map(BitopSpectrum(chain(2)).space()).map.size(), 1U);
  const auto h = big_h_map(BitopSpectrum(lattice_m5()).space());
  EXPECT_TRUE(h.holds());
  EXPECT_EQ(h.map.size(), 6U);
}

TEST(Duality, BigHRejectsNonPbdSpace) {
  const std::vector<PointSet> sub{PointSet::single(0)};
  const BitopSpace broken(FiniteTopology::from_subbasis(2, sub), FiniteTopology::discrete(2));
  EXPECT_EQ(error_kind_of([&] { big_h_map(broken); }), ErrorKind::NotPairwiseBD);
}

TEST(Duality, DeltaNaturality) {
  const LatticePtr m5 = share(lattice_m5());
  EXPECT_TRUE(delta_natural_iso_check(identity_hom(m5)).holds());
  const LatticePtr dia = share(lattice_diamond());
  const LatticePtr c2 = share(chain(2));
  EXPECT_TRUE(delta_natural_iso_check(diamond_onto_chain2(dia, c2)).holds());
  std::vector<LatticePtr> ls;
  for (const auto& L : catalog()) {
    if (L.size() <= 5) ls.push_back(share(L));
  }
  for (const auto& e : morphism_corpus(ls)) {
    if (!e.classification.is_quasi_proper) continue;
    EXPECT_TRUE(delta_natural_iso_check(e.hom).holds()) << e.label;
  }
}

TEST(Duality, ClassicalHAndStone) {
  EXPECT_EQ(h_map_classical(ClassicalSpectrum(chain(2)).space()).map.size(), 1U);
  const auto hd = h_map_classical(ClassicalSpectrum(lattice_diamond()).space());
  EXPECT_TRUE(hd.holds());
  EXPECT_EQ(hd.map.size(), 2U);
  for (const auto& L : all_small(6)) {
    if (!is_distributive(L).distributive) continue;
    EXPECT_TRUE(h_map_classical(ClassicalSpectrum(L).space()).holds()) << L.name();
    EXPECT_TRUE(stone_check(L).holds()) << L.name();
    EXPECT_EQ(fundamental_lattice(ClassicalSpectrum(L).space()).lattice.size(), L.size());
  }
  EXPECT_EQ(error_kind_of([] { h_map_classical(FiniteTopology::indiscrete(2)); }), ErrorKind::NotBDSpace);
}

TEST(Duality, ODBridge) {
  const FiniteTopology z = ClassicalSpectrum(lattice_diamond()).space();
  const BitopSpace d = double_topology(z);
  EXPECT_TRUE(is_pairwise_bd(d).holds);
  EXPECT_TRUE(is_doubly_bd(d));
  EXPECT_EQ(forget_sigma(d), z);
  for (const auto& L : catalog()) {
    if (!is_distributive(L).distributive) continue;
    EXPECT_TRUE(o_d_bridge(ClassicalSpectrum(L).space()).holds()) << L.name();
  }
  EXPECT_EQ(error_kind_of([] { forget_sigma(BitopSpectrum(lattice_m5()).space()); }), ErrorKind::NotDoublyBD);
  EXPECT_EQ(error_kind_of([] { double_topology(FiniteTopology::indiscrete(2)); }), ErrorKind::NotBDSpace);
}

TEST(Duality, BNaturalityOnDistributiveHoms) {
  std::vector<LatticePtr> ls;
  for (const auto& L : all_small(4)) {
    if (is_distributive(L).distributive) ls.push_back(share(L));
  }
  for (const auto& e : morphism_corpus(ls)) {
    if (!e.classification.is_proper) continue;
    EXPECT_TRUE(b_natural_check(e.hom).holds()) << e.label;
  }
}

TEST(Duality, DisCharClauses) {
  const auto d = dischar_equivalences(BitopSpectrum(lattice_diamond()).space());
  EXPECT_TRUE(d.agree() && d.doubly_bd);
  const auto m = dischar_equivalences(BitopSpectrum(lattice_m5()).space());
  EXPECT_TRUE(m.agree());
  EXPECT_FALSE(m.doubly_bd);
  const auto n = dischar_equivalences(BitopSpectrum(lattice_n5()).space());
  EXPECT_FALSE(n.doubly_bd || n.distributive || n.spectrum_of_distributive || n.all_points_prime);
  // Two points carry prime ideals but only ((c],[b)) has equal closures.
  ASSERT_EQ(n.prime.size(), 1U);
  const BitopSpectrum sn(lattice_n5());
  EXPECT_EQ(sn.points()[n.prime[0]].ideal, set_of(sn.lattice(), {"0", "a", "c"}));
  EXPECT_EQ(prime_points(sn).by_prime_ideal.size(), 2U);
  for (const auto& L : all_small(6)) {
    const auto r = dischar_equivalences(BitopSpectrum(L).space());
    EXPECT_TRUE(r.agree()) << L.name();
    EXPECT_EQ(r.doubly_bd, is_distributive(L).distributive) << L.name();
  }
}

TEST(Duality, PbdMorphismRejectsNonContinuousMap) {
  const SpacePtr X = share(BitopSpectrum(lattice_m5()).space());
  std::vector<Point> swap(X->size());
  for (Point p = 0; p < swap.size(); ++p) swap[p] = (p + 1) % swap.size();
  const auto m = make_pbd_morphism(X, X, swap);
  EXPECT_FALSE(m.valid());
  EXPECT_TRUE(m.failure.has_value());
}
