// Invariants over every lattice with at most six elements, each checked
// against a definition-level oracle.
#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace latspec;

namespace {

const std::vector<FiniteLattice>& all_small() {
  static const std::vector<FiniteLattice> lattices = [] {
    GeneratorConfig cfg;
    cfg.max_size = 6;
    return enumerate_lattices(cfg);
  }();
  return lattices;
}

std::vector<oracle::Word> words(const std::vector<PointSet>& v) {
  std::vector<oracle::Word> out;
  for (PointSet s : v) out.push_back(s.word());
  return out;
}

// delta and epsilon straight from membership.
PointSet delta_of(const BitopSpectrum& s, Elem x) {
  PointSet out;
  for (Point p = 0; p < s.size(); ++p) {
    if (!s.points()[p].ideal.contains(x)) out.insert(p);
  }
  return out;
}

PointSet epsilon_of(const BitopSpectrum& s, Elem x) {
  PointSet out;
  for (Point p = 0; p < s.size(); ++p) {
    if (s.points()[p].filter.contains(x)) out.insert(p);
  }
  return out;
}

std::vector<PointSet> up_sets(const std::set<oracle::Word>& opens) {
  std::vector<PointSet> out;
  for (auto w : opens) out.emplace_back(w);
  return out;
}

}  // namespace

TEST(Properties, CopiesOfTheLattice) {
  for (const auto& L : all_small()) {
    const BitopSpectrum s(L);
    for (Elem x = 0; x < L.size(); ++x) {
      ASSERT_EQ(s.delta(x), delta_of(s, x));
      ASSERT_EQ(s.epsilon(x), epsilon_of(s, x));
      EXPECT_TRUE(s.epsilon(x).subset_of(s.delta(x))) << L.name();
      for (Elem y = 0; y < L.size(); ++y) {
        EXPECT_EQ(s.delta(L.join(x, y)), s.delta(x) | s.delta(y)) << L.name();
        EXPECT_EQ(s.epsilon(L.meet(x, y)), s.epsilon(x) & s.epsilon(y)) << L.name();
        if (x != y) {
          EXPECT_NE(s.delta(x), s.delta(y)) << L.name();
          EXPECT_NE(s.epsilon(x), s.epsilon(y)) << L.name();
        }
      }
    }
  }
}

// tau_L = sigma_L exactly when L is distributive.
TEST(Properties, TopologiesCoincideIffDistributive) {
  for (const auto& L : all_small()) {
    const BitopSpectrum s(L);
    const auto tau = oracle::topology(s.size(), words(s.delta_image()));
    const auto sigma = oracle::topology(s.size(), words(s.epsilon_image()));
    EXPECT_EQ(tau == sigma, is_distributive(L).distributive) << L.name();
  }
}

// p <=_tau q iff I_q is inside I_p; p <=_sigma q iff F_p is inside F_q.
TEST(Properties, SpecializationOrdersFromIdealsAndFilters) {
  for (const auto& L : all_small()) {
    const BitopSpectrum s(L);
    const auto tau = oracle::topology(s.size(), words(s.delta_image()));
    const auto sigma = oracle::topology(s.size(), words(s.epsilon_image()));
    for (Point p = 0; p < s.size(); ++p) {
      for (Point q = 0; q < s.size(); ++q) {
        const auto& a = s.points()[p];
        const auto& b = s.points()[q];
        EXPECT_EQ(oracle::specialization_leq(tau, p, q), b.ideal.subset_of(a.ideal)) << L.name();
        EXPECT_EQ(oracle::specialization_leq(sigma, p, q), a.filter.subset_of(b.filter)) << L.name();
        EXPECT_EQ(s.space().leq_tau(p, q), b.ideal.subset_of(a.ideal)) << L.name();
        EXPECT_EQ(s.space().leq_sigma(p, q), a.filter.subset_of(b.filter)) << L.name();
        if (p != q) {
          const bool separated = !(s.space().leq_tau(p, q) && s.space().leq_tau(q, p)) ||
                                 !(s.space().leq_sigma(p, q) && s.space().leq_sigma(q, p));
          EXPECT_TRUE(separated) << L.name();
        }
      }
    }
  }
}

// i(A) <= B iff A <= d(B) for sigma-increasing A and tau-increasing B.
TEST(Properties, TransitionOperatorAdjunction) {
  for (const auto& L : all_small()) {
    const BitopSpectrum s(L);
    if (s.size() > 10) continue;
    const BitopSpace& X = s.space();
    const auto tau = up_sets(oracle::topology(s.size(), words(s.delta_image())));
    const auto sigma = up_sets(oracle::topology(s.size(), words(s.epsilon_image())));
    for (PointSet a : sigma) {
      for (PointSet b : tau) {
        ASSERT_EQ(X.op_i(a).subset_of(b), a.subset_of(X.op_d(b))) << L.name();
      }
    }
    for (Elem x = 0; x < L.size(); ++x) {
      EXPECT_EQ(X.op_d(s.delta(x)), s.epsilon(x)) << L.name();
      EXPECT_EQ(X.op_i(s.epsilon(x)), s.delta(x)) << L.name();
      EXPECT_TRUE(is_stable(X, s.delta(x))) << L.name();
      EXPECT_TRUE(is_costable(X, s.epsilon(x))) << L.name();
    }
  }
}

// d is the largest sigma-open set inside its argument; i the smallest tau-open
// set containing it.
TEST(Properties, TransitionOperatorsFromOpenSets) {
  for (const auto& L : all_small()) {
    const BitopSpectrum s(L);
    const auto tau = up_sets(oracle::topology(s.size(), words(s.delta_image())));
    const auto sigma = up_sets(oracle::topology(s.size(), words(s.epsilon_image())));
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << s.size()); ++w) {
      const PointSet a{w};
      PointSet interior;
      for (PointSet u : sigma) {
        if (u.subset_of(a)) interior |= u;
      }
      PointSet hull = s.space().carrier();
      for (PointSet u : tau) {
        if (a.subset_of(u)) hull &= u;
      }
      ASSERT_EQ(s.space().op_d(a), interior) << L.name();
      ASSERT_EQ(s.space().op_i(a), hull) << L.name();
    }
  }
}

TEST(Properties, PairwiseBalbesDwingerOnEverySpectrum) {
  for (const auto& L : all_small()) {
    const auto v = is_pairwise_bd(BitopSpectrum(L).space());
    EXPECT_TRUE(v.holds) << L.name() << ": " << v.witness;
  }
}
