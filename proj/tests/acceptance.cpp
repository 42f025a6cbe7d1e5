// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <sys/wait.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace latspec;
using testing_support::at;
using testing_support::pair_of;
using testing_support::set_of;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

// Verdicts grouped by property name; the first FAIL per property is kept.
class PropertyTable {
 public:
  explicit PropertyTable(const Report& r) {
    for (const auto& v : r.items()) {
      auto& e = table_[v.property];
      if (v.status == Status::Pass) ++e.pass;
      if (v.status == Status::Skip) ++e.skip;
      if (v.status == Status::Fail && e.fail++ == 0) e.first = v.subject + ": " + v.detail;
    }
  }
  void require_clean(Outcome& out, const std::string& property) const {
    const auto it = table_.find(property);
    if (it == table_.end()) return out.require(false, property + " was never checked");
    out.require(it->second.fail == 0, property + " failed on " + it->second.first);
    out.require(it->second.pass > 0, property + " has no passing subject");
  }
  std::size_t passes(const std::string& property) const {
    const auto it = table_.find(property);
    return it == table_.end() ? 0 : it->second.pass;
  }

 private:
  struct Entry {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skip = 0;
    std::string first;
  };
  std::map<std::string, Entry> table_;
};

std::vector<FiniteLattice> lattices_up_to(std::size_t n) {
  GeneratorConfig cfg;
  cfg.max_size = n;
  return enumerate_lattices(cfg);
}

std::pair<int, std::string> run(const std::string& command) {
  std::string out;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome counterexample_facts() {
  Outcome o;
  const FiniteLattice m5 = lattice_m5();
  const FiniteLattice n5 = lattice_n5();
  o.require(ClassicalSpectrum(m5).size() == 0, "spec(M5) is not empty");
  o.require(comaximal_pairs(m5).size() == 6, "M5 does not have 6 comaximal pairs");
  o.require(oracle::comaximal_pairs(m5).size() == 6, "maximality scan disagrees on M5");
  o.require(comaximal_pairs(chain(2)).size() == 1, "the 2-chain does not have 1 comaximal pair");
  const auto primes = prime_ideals(n5);
  o.require(primes.size() == 2 && primes[0].members == principal_ideal(n5, at(n5, "b")).members &&
                primes[1].members == principal_ideal(n5, at(n5, "c")).members,
            "spec(N5) is not {(b], (c]}");
  if (o.ok) o.detail = "spec(M5) empty, 6 and 1 comaximal pairs, spec(N5) = {(b], (c]}";
  return o;
}

}  // namespace

int main() {
  const auto small = lattices_up_to(6);
  const PropertyTable exhaustive(verify_lattices(small));
  const PropertyTable cat(verify_lattices(catalog()));
  const auto corpus_lattices = lattices_up_to(4);
  const PropertyTable corpus(verify_morphisms(corpus_lattices));

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("counterexample lattice facts", counterexample_facts);

  criteria.emplace_back("copies of L in the spectrum (all lattices <= 6)", [&] {
    Outcome o;
    exhaustive.require_clean(o, "Copies");
    if (o.ok) o.detail = std::to_string(exhaustive.passes("Copies")) + " lattices";
    return o;
  });

  criteria.emplace_back("topologies and prime points versus distributivity", [&] {
    Outcome o;
    exhaustive.require_clean(o, "TopDis");
    exhaustive.require_clean(o, "BCPrimal");
    for (const auto& L : {lattice_m5(), lattice_n5()}) {
      const BitopSpectrum s(L);
      o.require(!(s.space().tau() == s.space().sigma()), L.name() + " has tau = sigma");
      o.require(prime_points(s).by_closure.size() < s.size(), L.name() + " has only prime points");
    }
    for (const auto& L : catalog()) {
      if (!is_distributive(L).distributive) continue;
      const BitopSpectrum s(L);
      o.require(s.space().tau() == s.space().sigma(), L.name() + " has tau != sigma");
      o.require(prime_points(s).by_closure.size() == s.size(), L.name() + " has a non-prime point");
    }
    if (o.ok) o.detail = "agreement on " + std::to_string(exhaustive.passes("TopDis")) + " lattices";
    return o;
  });

  criteria.emplace_back("specialization orders and pairwise T0", [&] {
    Outcome o;
    exhaustive.require_clean(o, "Ord");
    return o;
  });

  criteria.emplace_back("transition operators", [&] {
    Outcome o;
    exhaustive.require_clean(o, "Transition");
    return o;
  });

  criteria.emplace_back("essential sets are exactly Im(delta)", [&] {
    Outcome o;
    exhaustive.require_clean(o, "RepTh");
    for (const auto& L : small) {
      const BitopSpectrum s(L);
      if (s.size() > kBruteForceCarrierLimit) continue;
      const SetFamily deltas(s.size(), s.delta_image());
      o.require(essential_subsets_brute_force(s.space()).same_members(deltas), L.name() + ": brute force differs");
      o.require(deltas.size() == L.size(), L.name() + ": delta is not injective");
    }
    return o;
  });

  criteria.emplace_back("generalized separation on seeded triples", [&] {
    Outcome o;
    cat.require_clean(o, "GBD");
    std::mt19937_64 rng(20240601);
    std::size_t checked = 0;
    for (const auto& L : catalog()) {
      const BitopSpectrum s(L);
      for (int k = 0; k < 200; ++k) {
        ElemSet v{rng() & L.carrier().word()};
        ElemSet w{rng() & L.carrier().word()};
        v.insert(rng() % L.size());
        w.insert(rng() % L.size());
        const auto r = gbd_witness(L, v, w);
        PointSet meet_eps = s.space().carrier();
        for (Elem x : v) meet_eps &= s.epsilon(x);
        PointSet join_del;
        for (Elem y : w) join_del |= s.delta(y);
        const bool contained = meet_eps.subset_of(join_del);
        o.require(std::holds_alternative<GbdWitness>(r) == contained, L.name() + ": wrong branch");
        o.require(gbd_certifies(s, v, w, r), L.name() + ": result does not certify");
        ++checked;
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " triples";
    return o;
  });

  criteria.emplace_back("duality round trips, functor laws, naturality", [&] {
    Outcome o;
    for (const char* p : {"DualRoundTrip", "HX", "CharMaxPair", "PBD"}) exhaustive.require_clean(o, p);
    for (const char* p : {"SpecBMorphisms", "EssentialFunctor", "FunctorLaws", "DeltaNaturality"}) {
      corpus.require_clean(o, p);
    }
    return o;
  });

  criteria.emplace_back("distributive unification", [&] {
    Outcome o;
    exhaustive.require_clean(o, "DisChar");
    exhaustive.require_clean(o, "StoneDual");
    exhaustive.require_clean(o, "ODBridge");
    corpus.require_clean(o, "NatIso");
    corpus.require_clean(o, "ODTransport");
    for (const auto& L : small) {
      if (!is_distributive(L).distributive) continue;
      const auto d = dischar_equivalences(BitopSpectrum(L).space());
      o.require(d.agree() && d.doubly_bd, L.name() + ": a clause is false");
      const auto b = b_map(ClassicalSpectrum(L), BitopSpectrum(L));
      o.require(b.homeomorphism, L.name() + ": b_L is not a homeomorphism");
    }
    return o;
  });

  criteria.emplace_back("homomorphism classification", [&] {
    Outcome o;
    corpus.require_clean(o, "QuasiProperImpliesProper");
    corpus.require_clean(o, "ProperIffQuasiProperDistributive");
    const LatticePtr c2 = share(chain(2));
    const LatticePtr m5 = share(lattice_m5());
    std::string witness;
    for (const char* atom : {"a", "b", "c"}) {
      const auto c = classify_hom(check_hom(c2, m5, {0, at(*m5, atom)}));
      if (c.is_proper && !c.is_quasi_proper && witness.empty()) {
        witness = std::string("0->0, 1->") + atom + ": " + c.witness;
      }
    }
    o.require(!witness.empty(), "every atom inclusion into M5 is quasi-proper");
    if (o.ok) o.detail = witness;
    return o;
  });

  criteria.emplace_back("command-line contract", [&] {
    Outcome o;
    std::size_t expected = 0;
    for (std::size_t n = 1; n <= 5; ++n) expected += oracle::lattice_count(n);
    const std::string cli = LATSPEC_CLI_PATH;
    const auto [code, out] = run("'" + cli + "' verify --exhaustive 5");
    o.require(code == 0, "verify --exhaustive 5 exited " + std::to_string(code));
    o.require(out.find("lattices: " + std::to_string(expected) + " ") != std::string::npos,
              "reported count differs from " + std::to_string(expected));
    // Every single wrong meet entry of every small catalog lattice must be caught.
    std::size_t mutants = 0;
    for (const auto& L : catalog()) {
      if (L.size() > 6) continue;
      for (Elem x = 0; x < L.size(); ++x) {
        for (Elem y = 0; y < L.size(); ++y) {
          for (Elem z = 0; z < L.size(); ++z) {
            if (z == L.meet(x, y)) continue;
            const Report r = verify_lattice(L.with_meet_entry(x, y, z));
            ++mutants;
            bool witnessed = false;
            for (const auto& v : r.items()) witnessed |= v.status == Status::Fail && !v.detail.empty();
            o.require(r.exit_code() == 1 && witnessed,
                      L.name() + ": meet(" + L.element_name(x) + "," + L.element_name(y) + ") := " +
                          L.element_name(z) + " went unnoticed");
          }
        }
      }
    }
    const std::string m5 = std::string(LATSPEC_DATA_DIR) + "/m5.lat";
    const auto [mcode, mout] = run("'" + cli + "' verify '" + m5 + "' --inject-meet-fault a b a");
    o.require(mcode == 1, "mutated CLI run exited " + std::to_string(mcode));
    o.require(mout.find(": FAIL (") != std::string::npos, "mutated CLI run printed no witness");
    if (o.ok) {
      o.detail = std::to_string(expected) + " lattices, " + std::to_string(mutants) + " meet mutants all caught";
    }
    return o;
  });

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all &= o.ok;
    std::cout << "criterion " << (k + 1) << " " << (o.ok ? "PASS" : "FAIL") << ": " << criteria[k].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
