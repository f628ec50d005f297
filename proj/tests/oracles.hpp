#pragma once

// Brute-force references. Nothing here touches StandardForm: codes are plain
// sets of codeword indices built by closing generators under R-linear
// combinations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "ringcount/code.hpp"
#include "ringcount/ring.hpp"

namespace oracle {

using ringcount::ChainRing;
using ringcount::Elem;
using ringcount::Vec;

using Index = std::uint32_t;
using CodeSet = std::vector<Index>;  // sorted codeword indices

inline Index index_of(const ChainRing& R, const Vec& v) {
  Index x = 0;
  for (std::size_t i = v.size(); i-- > 0;) x = x * static_cast<Index>(R.size()) + v[i];
  return x;
}

inline Vec vector_of(const ChainRing& R, std::size_t l, Index x) {
  Vec v(l);
  for (std::size_t i = 0; i < l; ++i) {
    v[i] = static_cast<Elem>(x % R.size());
    x /= static_cast<Index>(R.size());
  }
  return v;
}

inline Vec axpy(const ChainRing& R, const Vec& x, Elem r, const Vec& g) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = R.add(x[i], R.mul(r, g[i]));
  return out;
}

inline CodeSet span(const ChainRing& R, std::size_t l, const std::vector<Vec>& gens) {
  std::set<Index> cur{0};
  for (const auto& g : gens) {
    std::set<Index> next;
    for (Index x : cur) {
      const Vec v = vector_of(R, l, x);
      for (Elem r = 0; r < R.size(); ++r) next.insert(index_of(R, axpy(R, v, r, g)));
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

inline CodeSet codeword_set(const ringcount::LinearCode& c) {
  CodeSet out;
  for (const auto& w : c.codewords()) out.push_back(index_of(*c.ring(), w));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Every submodule of R^l, grown one vector at a time from {0}.
inline std::set<CodeSet> all_submodules(const ChainRing& R, std::size_t l) {
  const Index n = static_cast<Index>(ipow(R.size(), l));
  std::set<CodeSet> seen{{0}};
  std::vector<CodeSet> todo{{0}};
  while (!todo.empty()) {
    CodeSet m = std::move(todo.back());
    todo.pop_back();
    for (Index x = 0; x < n; ++x) {
      if (std::binary_search(m.begin(), m.end(), x)) continue;
      // span(M + x) = { y + r x }
      std::set<Index> grown;
      const Vec v = vector_of(R, l, x);
      for (Index y : m) {
        const Vec w = vector_of(R, l, y);
        for (Elem r = 0; r < R.size(); ++r) grown.insert(index_of(R, axpy(R, w, r, v)));
      }
      CodeSet g(grown.begin(), grown.end());
      if (seen.insert(g).second) todo.push_back(std::move(g));
    }
  }
  return seen;
}

/// M is free of rank k iff |M| = |R|^k and theta^(s-1) M has q^k elements.
inline bool is_free_of_rank(const ChainRing& R, std::size_t l, const CodeSet& m, std::size_t k) {
  if (m.size() != ipow(R.size(), k)) return false;
  const Elem t = R.theta_pow(R.s() - 1);
  std::set<Index> low;
  for (Index x : m) {
    Vec v = vector_of(R, l, x);
    for (auto& e : v) e = R.mul(t, e);
    low.insert(index_of(R, v));
  }
  return low.size() == ipow(R.q(), k);
}

inline std::size_t count_free(const ChainRing& R, std::size_t l, std::size_t k) {
  std::size_t n = 0;
  for (const auto& m : all_submodules(R, l)) n += is_free_of_rank(R, l, m, k);
  return n;
}

/// k-subspaces of F_q^l counted as (ordered independent k-tuples) / |GL_k|,
/// both numbers found by walking tuples.
inline std::uint64_t gaussian_by_tuples(const ChainRing& F, std::size_t l, std::size_t k) {
  const Index n = static_cast<Index>(ipow(F.size(), l));
  std::uint64_t tuples = 0;
  std::vector<Vec> chosen;
  std::function<void()> walk = [&] {
    if (chosen.size() == k) {
      ++tuples;
      return;
    }
    const CodeSet sp = span(F, l, chosen);
    for (Index x = 0; x < n; ++x) {
      if (std::binary_search(sp.begin(), sp.end(), x)) continue;
      chosen.push_back(vector_of(F, l, x));
      walk();
      chosen.pop_back();
    }
  };
  walk();
  std::uint64_t gl = 1;
  for (std::size_t i = 0; i < k; ++i) gl *= ipow(F.size(), k) - ipow(F.size(), i);
  return tuples / gl;
}

inline Vec random_vec(const ChainRing& R, std::size_t l, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(R.size() - 1));
  Vec v(l);
  for (auto& e : v) e = d(rng);
  return v;
}

inline std::vector<Vec> random_rows(const ChainRing& R, std::size_t l, std::size_t rows, std::mt19937& rng) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < rows; ++i) out.push_back(random_vec(R, l, rng));
  return out;
}

}  // namespace oracle
