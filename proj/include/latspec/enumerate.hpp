#ifndef LATSPEC_ENUMERATE_HPP
#define LATSPEC_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "latspec/lattice.hpp"

namespace latspec {

struct GeneratorConfig {
  enum class Mode { Exhaustive, Random };
  Mode mode = Mode::Exhaustive;
  std::size_t min_size = 1;
  std::size_t max_size = 4;
  std::optional<std::uint64_t> seed;
  std::size_t count = 0;  // random mode only
};

inline constexpr std::size_t kExhaustiveSizeLimit = 6;
/// Comaximal pairs number at most n(n-1), so size 8 keeps every spectrum
/// within the 64-point carrier.
inline constexpr std::size_t kRandomSizeLimit = 8;

namespace detail {

inline std::vector<std::string> element_names(std::size_t n) {
  if (n == 1) return {"0"};
  std::vector<std::string> names{"0"};
  for (std::size_t k = 1; k + 1 < n; ++k) names.push_back(std::string(1, static_cast<char>('a' + k - 1)));
  names.push_back("1");
  return names;
}

// Up-sets of the bounded poset: 0 below everything, n-1 above everything, and
// the middle elements 1..n-2 ordered by `mid_up` (indices relative to 1).
inline std::vector<ElemSet> bounded_order(std::size_t n, const std::vector<ElemSet>& mid_up) {
  std::vector<ElemSet> up(n);
  up[0] = ElemSet::full(n);
  if (n == 1) return up;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    up[k + 1] = ElemSet::single(n - 1);
    for (Elem j : mid_up[k]) up[k + 1].insert(j + 1);
  }
  up[n - 1] = ElemSet::single(n - 1);
  return up;
}

// True when every pair of the finite bounded poset has a join; meets then
// exist as well.
inline bool has_all_joins(const std::vector<ElemSet>& up) {
  const std::size_t n = up.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      const ElemSet ub = up[x] & up[y];
      bool found = false;
      for (Elem c : ub) {
        if (ub.subset_of(up[c])) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

// Order matrix as a row-major bit string, for lexicographic comparison.
inline std::vector<bool> order_code(const std::vector<ElemSet>& up, const std::vector<std::size_t>& perm) {
  const std::size_t n = up.size();
  std::vector<bool> code(n * n);
  // perm[new] = old
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) code[i * n + j] = up[perm[i]].contains(perm[j]);
  }
  return code;
}

}  // namespace detail

/// Canonical form of a finite poset given by its up-sets.
///
/// Elements are first sorted by the invariant (|down|, |up|); only
/// permutations inside each invariant class are tried, and the
/// lexicographically least order matrix wins. Two posets are isomorphic iff
/// their canonical codes agree.
inline std::vector<bool> canonical_code(const std::vector<ElemSet>& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> down_count(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y : up[x]) ++down_count[y];
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  auto key = [&](std::size_t x) { return std::pair{down_count[x], up[x].count()}; };
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < n;) {
    std::size_t e = s;
    while (e < n && key(perm[e]) == key(perm[s])) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  std::optional<std::vector<bool>> best;
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      auto code = detail::order_code(up, perm);
      if (!best || code < *best) best = std::move(code);
      return;
    }
    const auto [s, e] = blocks[b];
    std::sort(perm.begin() + static_cast<std::ptrdiff_t>(s), perm.begin() + static_cast<std::ptrdiff_t>(e));
    do {
      self(self, b + 1);
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(s),
                                   perm.begin() + static_cast<std::ptrdiff_t>(e)));
  };
  rec(rec, 0);
  return *best;
}

inline std::vector<ElemSet> order_of(const FiniteLattice& L) {
  std::vector<ElemSet> up;
  for (Elem x = 0; x < L.size(); ++x) up.push_back(L.up(x));
  return up;
}

inline bool isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return a.size() == b.size() && canonical_code(order_of(a)) == canonical_code(order_of(b));
}

namespace detail {

// Every lattice of exactly n elements up to isomorphism, in canonical-code
// order. Middle posets are enumerated over naturally labeled strict orders
// (i < j in the order only if i < j as indices), which reach every
// isomorphism class through a linear extension.
inline std::vector<FiniteLattice> lattices_of_size(std::size_t n) {
  if (n == 1) return {FiniteLattice::from_order("L1_1", element_names(1), {ElemSet::single(0)})};
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  std::map<std::vector<bool>, std::vector<ElemSet>> classes;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t w = 0; w < limit; ++w) {
    std::vector<ElemSet> mid(m);
    for (std::size_t k = 0; k < m; ++k) mid[k].insert(k);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((w >> p) & 1U) mid[pairs[p].first].insert(pairs[p].second);
    }
    bool transitive = true;
    for (std::size_t k = 0; k < m && transitive; ++k) {
      for (Elem j : mid[k]) {
        if (!mid[j].subset_of(mid[k])) transitive = false;
      }
    }
    if (!transitive) continue;
    auto up = bounded_order(n, mid);
    if (!has_all_joins(up)) continue;
    classes.emplace(canonical_code(up), std::move(up));
  }
  std::vector<FiniteLattice> out;
  std::size_t index = 0;
  for (auto& [code, up] : classes) {
    out.push_back(FiniteLattice::from_order("L" + std::to_string(n) + "_" + std::to_string(++index),
                                            element_names(n), up));
  }
  return out;
}

// Portable draw in [0, bound): plain modulo of the raw engine output, which
// is fully specified by the standard unlike the distribution classes.
inline std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

}  // namespace detail

/// Calls `fn` on each generated lattice in deterministic order.
///
/// Exhaustive mode visits every lattice with min_size..max_size elements once
/// up to isomorphism (max_size <= 6). Random mode draws `count` lattices from
/// a seeded poset sampler: a size, then each naturally labeled strict relation
/// with probability 1/2, then transitive closure; non-lattices are rejected.
inline void for_each_lattice(const GeneratorConfig& cfg, const std::function<void(const FiniteLattice&)>& fn) {
  if (cfg.min_size == 0 || cfg.min_size > cfg.max_size) {
    throw Error(ErrorKind::InvalidArgument, "size range must satisfy 1 <= min <= max");
  }
  if (cfg.mode == GeneratorConfig::Mode::Exhaustive) {
    if (cfg.max_size > kExhaustiveSizeLimit) {
      throw Error(ErrorKind::SizeBoundExceeded, "exhaustive enumeration is limited to " +
                                                    std::to_string(kExhaustiveSizeLimit) + " elements");
    }
    for (std::size_t n = cfg.min_size; n <= cfg.max_size; ++n) {
      for (const auto& L : detail::lattices_of_size(n)) fn(L);
    }
    return;
  }
  if (!cfg.seed) throw Error(ErrorKind::InvalidArgument, "random enumeration requires a seed");
  if (cfg.max_size > kRandomSizeLimit) {
    throw Error(ErrorKind::SizeBoundExceeded,
                "random enumeration is limited to " + std::to_string(kRandomSizeLimit) + " elements");
  }
  std::mt19937_64 rng(*cfg.seed);
  for (std::size_t produced = 0; produced < cfg.count;) {
    const std::size_t n = cfg.min_size + detail::draw(rng, cfg.max_size - cfg.min_size + 1);
    std::vector<ElemSet> mid(n >= 2 ? n - 2 : 0);
    for (std::size_t k = 0; k < mid.size(); ++k) mid[k].insert(k);
    for (std::size_t i = 0; i < mid.size(); ++i) {
      for (std::size_t j = i + 1; j < mid.size(); ++j) {
        if (detail::draw(rng, 2) == 1) mid[i].insert(j);
      }
    }
    for (std::size_t i = mid.size(); i-- > 0;) {
      ElemSet closed = mid[i];
      for (Elem j : mid[i]) closed |= mid[j];
      mid[i] = closed;
    }
    auto up = detail::bounded_order(n, mid);
    if (!detail::has_all_joins(up)) continue;
    ++produced;
    fn(FiniteLattice::from_order("R" + std::to_string(produced) + "_n" + std::to_string(n),
                                 detail::element_names(n), std::move(up)));
  }
}

inline std::vector<FiniteLattice> enumerate_lattices(const GeneratorConfig& cfg) {
  std::vector<FiniteLattice> out;
  for_each_lattice(cfg, [&](const FiniteLattice& L) { out.push_back(L); });
  return out;
}

}  // namespace latspec

#endif  // LATSPEC_ENUMERATE_HPP
