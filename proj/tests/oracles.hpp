// Brute-force reference implementations. Each one works from definitions
// over raw subsets and never calls the library routine it is compared with.
#ifndef LATSPEC_TESTS_ORACLES_HPP
#define LATSPEC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "latspec.hpp"

namespace oracle {

using latspec::Elem;
using latspec::FiniteLattice;
using Word = std::uint64_t;

inline bool has(Word s, std::size_t i) { return (s >> i) & 1U; }

inline bool is_down_set(const FiniteLattice& L, Word s) {
  for (Elem x = 0; x < L.size(); ++x) {
    if (!has(s, x)) continue;
    for (Elem y = 0; y < L.size(); ++y) {
      if (L.leq(y, x) && !has(s, y)) return false;
    }
  }
  return true;
}

inline bool is_up_set(const FiniteLattice& L, Word s) {
  for (Elem x = 0; x < L.size(); ++x) {
    if (!has(s, x)) continue;
    for (Elem y = 0; y < L.size(); ++y) {
      if (L.leq(x, y) && !has(s, y)) return false;
    }
  }
  return true;
}

// Join and meet recomputed from leq alone.
inline Elem lub(const FiniteLattice& L, Elem x, Elem y) {
  for (Elem z = 0; z < L.size(); ++z) {
    if (!L.leq(x, z) || !L.leq(y, z)) continue;
    bool least = true;
    for (Elem w = 0; w < L.size(); ++w) {
      if (L.leq(x, w) && L.leq(y, w) && !L.leq(z, w)) least = false;
    }
    if (least) return z;
  }
  return L.size();
}

inline Elem glb(const FiniteLattice& L, Elem x, Elem y) {
  for (Elem z = 0; z < L.size(); ++z) {
    if (!L.leq(z, x) || !L.leq(z, y)) continue;
    bool greatest = true;
    for (Elem w = 0; w < L.size(); ++w) {
      if (L.leq(w, x) && L.leq(w, y) && !L.leq(w, z)) greatest = false;
    }
    if (greatest) return z;
  }
  return L.size();
}

inline std::vector<Word> ideals(const FiniteLattice& L) {
  std::vector<Word> out;
  for (Word s = 1; s < (Word{1} << L.size()); ++s) {
    if (!is_down_set(L, s)) continue;
    bool closed = true;
    for (Elem x = 0; x < L.size(); ++x) {
      for (Elem y = 0; y < L.size(); ++y) {
        if (has(s, x) && has(s, y) && !has(s, lub(L, x, y))) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

inline std::vector<Word> filters(const FiniteLattice& L) {
  std::vector<Word> out;
  for (Word s = 1; s < (Word{1} << L.size()); ++s) {
    if (!is_up_set(L, s)) continue;
    bool closed = true;
    for (Elem x = 0; x < L.size(); ++x) {
      for (Elem y = 0; y < L.size(); ++y) {
        if (has(s, x) && has(s, y) && !has(s, glb(L, x, y))) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

inline std::vector<Word> prime_ideals(const FiniteLattice& L) {
  const Word full = (Word{1} << L.size()) - 1;
  std::vector<Word> out;
  for (Word s : ideals(L)) {
    if (s == full) continue;
    bool prime = true;
    for (Elem x = 0; x < L.size(); ++x) {
      for (Elem y = 0; y < L.size(); ++y) {
        if (has(s, glb(L, x, y)) && !has(s, x) && !has(s, y)) prime = false;
      }
    }
    if (prime) out.push_back(s);
  }
  return out;
}

// Disjoint ideal/filter pairs not strictly below another disjoint pair.
inline std::set<std::pair<Word, Word>> comaximal_pairs(const FiniteLattice& L) {
  const auto is = ideals(L);
  const auto fs = filters(L);
  std::set<std::pair<Word, Word>> out;
  for (Word i : is) {
    for (Word f : fs) {
      if (i & f) continue;
      bool maximal = true;
      for (Word j : is) {
        for (Word k : fs) {
          if ((j & k) == 0 && (i & ~j) == 0 && (f & ~k) == 0 && (i != j || f != k)) maximal = false;
        }
      }
      if (maximal) out.insert({i, f});
    }
  }
  return out;
}

// Every open set: unions of finite intersections of the subbasis, closed by
// iteration until nothing new appears.
inline std::set<Word> topology(std::size_t n, const std::vector<Word>& subbasis) {
  const Word full = n == 64 ? ~Word{0} : (Word{1} << n) - 1;
  std::set<Word> opens{0, full};
  opens.insert(subbasis.begin(), subbasis.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Word> now(opens.begin(), opens.end());
    for (Word a : now) {
      for (Word b : now) {
        grew |= opens.insert(a & b).second;
        grew |= opens.insert(a | b).second;
      }
    }
  }
  return opens;
}

// x <= y iff every open set containing x also contains y.
inline bool specialization_leq(const std::set<Word>& opens, std::size_t x, std::size_t y) {
  for (Word u : opens) {
    if (has(u, x) && !has(u, y)) return false;
  }
  return true;
}

// Canonical form of a partial order given as leq[x] bitmasks: the lexicographically
// least adjacency word over all n! relabelings.
inline std::vector<bool> canonical_by_permutation(const std::vector<Word>& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) code.push_back(has(up[perm[i]], perm[j]));
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Unlabeled lattices with n elements: every partial order on n labeled
// points, kept when all pairs have a least upper bound and a greatest lower
// bound, counted up to isomorphism. Feasible for n <= 5.
inline std::size_t lattice_count(std::size_t n) {
  if (n == 0) return 0;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) cells.emplace_back(i, j);
    }
  }
  std::set<std::vector<bool>> seen;
  for (Word mask = 0; mask < (Word{1} << cells.size()); ++mask) {
    std::vector<Word> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = Word{1} << i;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (has(mask, k)) up[cells[k].first] |= Word{1} << cells[k].second;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (has(up[i], j) && has(up[j], i)) ok = false;
      }
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j : latspec::Bits{up[i]}) {
        if ((up[j] & ~up[i]) != 0) ok = false;
      }
    }
    if (!ok) continue;
    auto bound_exists = [&](std::size_t x, std::size_t y, bool upper) {
      Word common = 0;
      for (std::size_t z = 0; z < n; ++z) {
        const bool above = has(up[x], z) && has(up[y], z);
        const bool below = has(up[z], x) && has(up[z], y);
        if (upper ? above : below) common |= Word{1} << z;
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (!has(common, z)) continue;
        Word reach = 0;
        for (std::size_t w = 0; w < n; ++w) {
          if (upper ? has(up[z], w) : has(up[w], z)) reach |= Word{1} << w;
        }
        if ((common & ~reach) == 0) return true;
      }
      return false;
    };
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = bound_exists(i, j, true) && bound_exists(i, j, false);
    }
    if (ok) seen.insert(canonical_by_permutation(up));
  }
  return seen.size();
}

}  // namespace oracle

#endif  // LATSPEC_TESTS_ORACLES_HPP
