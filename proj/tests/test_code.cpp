#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ringcount/code.hpp"
#include "ringcount/enumerate.hpp"

using namespace ringcount;

namespace {

struct Case {
  const char* name;
  ExtPtr ext;
  std::size_t max_len;
};

std::vector<Case> cases() {
  return {
      {"F4|F2", GaloisExtension::make(ChainRing::make(Family::galois_ring, 2, 1, 1), 2), 3},
      {"F8|F2", GaloisExtension::make(ChainRing::make(Family::galois_ring, 2, 1, 1), 3), 2},
      {"F9|F3", GaloisExtension::make(ChainRing::make(Family::galois_ring, 3, 1, 1), 2), 2},
      {"GR(4,2)|Z4", GaloisExtension::make(ChainRing::make(Family::galois_ring, 2, 2, 1), 2), 2},
      {"F4[u]|F2[u]", GaloisExtension::make(ChainRing::make(Family::truncated_poly, 2, 2, 1), 2), 2},
  };
}

oracle::CodeSet restriction_oracle(const GaloisExtension& ext, const LinearCode& b) {
  const ChainRing& R = *ext.base();
  oracle::CodeSet out;
  for (const auto& w : b.codewords()) {
    if (std::all_of(w.begin(), w.end(), [&](Elem x) { return ext.in_base(x); })) out.push_back(oracle::index_of(R, w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

oracle::CodeSet trace_oracle(const GaloisExtension& ext, const LinearCode& b) {
  std::set<oracle::Index> out;
  for (auto w : b.codewords()) {
    for (auto& x : w) x = ext.trace(x);
    out.insert(oracle::index_of(*ext.base(), w));
  }
  return {out.begin(), out.end()};
}

oracle::CodeSet dual_oracle(const LinearCode& c) {
  const ChainRing& R = *c.ring();
  const auto rows = c.rows();
  oracle::CodeSet out;
  for (oracle::Index x = 0; x < oracle::ipow(R.size(), c.length()); ++x) {
    const Vec v = oracle::vector_of(R, c.length(), x);
    bool ok = true;
    for (const auto& r : rows) {
      Elem acc = 0;
      for (std::size_t i = 0; i < v.size(); ++i) acc = R.add(acc, R.mul(r[i], v[i]));
      ok = ok && acc == 0;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(LinearCode, CodewordsAreTheSpan) {
  std::mt19937 rng(1);
  for (const auto& c : cases()) {
    const RingPtr& S = c.ext->ext();
    for (std::size_t l = 1; l <= c.max_len; ++l) {
      for (int t = 0; t < 10; ++t) {
        const auto rows = oracle::random_rows(*S, l, 1 + rng() % l, rng);
        const LinearCode code = LinearCode::from_generators(S, l, rows);
        const auto words = oracle::codeword_set(code);
        EXPECT_EQ(words, oracle::span(*S, l, rows)) << c.name;
        EXPECT_EQ(BigInt(words.size()), code.size());
        EXPECT_EQ(code.codewords().size(), words.size()) << "codeword listing has repeats";
      }
    }
  }
}

TEST(LinearCode, DualAndSum) {
  std::mt19937 rng(2);
  for (const auto& c : cases()) {
    for (const RingPtr& R : {c.ext->base(), c.ext->ext()}) {
      for (std::size_t l = 1; l <= c.max_len; ++l) {
        for (int t = 0; t < 6; ++t) {
          const LinearCode a = LinearCode::from_generators(R, l, oracle::random_rows(*R, l, 1 + rng() % l, rng));
          const LinearCode b = LinearCode::from_generators(R, l, oracle::random_rows(*R, l, 1, rng));
          const LinearCode d = dual(a);
          EXPECT_EQ(oracle::codeword_set(d), dual_oracle(a)) << c.name;
          EXPECT_EQ(dual(d), a);
          EXPECT_EQ(a.size() * d.size(), ipow(BigInt(R->size()), l));
          const LinearCode ab = sum_codes(a, b);
          EXPECT_TRUE(ab.contains(a));
          EXPECT_TRUE(ab.contains(b));
          auto gens = a.rows();
          for (const auto& r : b.rows()) gens.push_back(r);
          EXPECT_EQ(oracle::codeword_set(ab), oracle::span(*R, l, gens));
        }
      }
    }
  }
}

TEST(Restriction, BothRoutesMatchTheOracleOnRandomCodes) {
  std::mt19937 rng(3);
  for (const auto& c : cases()) {
    const RingPtr& S = c.ext->ext();
    for (std::size_t l = 1; l <= c.max_len; ++l) {
      for (int t = 0; t < 12; ++t) {
        const LinearCode b = LinearCode::from_generators(S, l, oracle::random_rows(*S, l, 1 + rng() % l, rng));
        const LinearCode r1 = restriction_by_intersection(*c.ext, b);
        const LinearCode r2 = restriction_by_delsarte(*c.ext, b);
        EXPECT_EQ(r1, r2) << c.name;
        EXPECT_EQ(oracle::codeword_set(r1), restriction_oracle(*c.ext, b)) << c.name;
        EXPECT_EQ(oracle::codeword_set(trace_code(*c.ext, b)), trace_oracle(*c.ext, b)) << c.name;
      }
    }
  }
}

TEST(Restriction, RankBoundOverEveryFreeCode) {
  // l - m(l - k) <= rank Res(B) <= k
  for (const auto& c : cases()) {
    const long m = c.ext->degree();
    for (std::size_t l = 1; l <= c.max_len; ++l) {
      for (std::size_t k = 0; k <= l; ++k) {
        for (const auto& b : enum_free_codes(c.ext->ext(), l, k)) {
          const LinearCode r = restriction(*c.ext, b);
          const long lo = static_cast<long>(l) - m * static_cast<long>(l - k);
          EXPECT_GE(static_cast<long>(r.rank()), lo) << c.name;
          EXPECT_LE(r.rank(), k) << c.name;
          EXPECT_TRUE(b.contains(extension(*c.ext, r)));
          // over a field Res(B) is a subspace; over Z4 it can pick up theta-torsion
          if (c.ext->base()->s() == 1) {
            EXPECT_TRUE(r.is_free()) << c.name;
          }
        }
      }
    }
  }
}

TEST(Extension, SpanOverTheBigRing) {
  std::mt19937 rng(4);
  for (const auto& c : cases()) {
    const RingPtr& R = c.ext->base();
    for (std::size_t l = 1; l <= c.max_len; ++l) {
      const LinearCode code = LinearCode::from_generators(R, l, oracle::random_rows(*R, l, 1 + rng() % l, rng));
      const LinearCode e = extension(*c.ext, code);
      EXPECT_EQ(oracle::codeword_set(e), oracle::span(*c.ext->ext(), l, code.rows())) << c.name;
      EXPECT_TRUE(is_galois_invariant(*c.ext, e));
      EXPECT_EQ(restriction(*c.ext, e), code);
    }
  }
}

TEST(GaloisInvariance, InvariantIffExtensionOfRestriction) {
  for (const auto& c : cases()) {
    for (std::size_t l = 1; l <= std::min<std::size_t>(2, c.max_len); ++l) {
      for (std::size_t k = 0; k <= l; ++k) {
        for (const auto& b : enum_free_codes(c.ext->ext(), l, k)) {
          const bool inv = frobenius_image(*c.ext, b) == b;
          EXPECT_EQ(is_galois_invariant(*c.ext, b), inv);
          EXPECT_EQ(inv, extension(*c.ext, restriction(*c.ext, b)) == b) << c.name;
        }
      }
    }
  }
}

TEST(Decompose, SplitsNonInvariantFreeCodes) {
  for (const auto& c : cases()) {
    if (c.ext->base()->s() != 1) continue;
    for (std::size_t l = 1; l <= c.max_len; ++l) {
      for (std::size_t k = 1; k <= l; ++k) {
        for (const auto& b : enum_free_codes(c.ext->ext(), l, k)) {
          if (is_galois_invariant(*c.ext, b)) continue;
          const Decomposition d = decompose(*c.ext, b);
          EXPECT_EQ(d.b0, extension(*c.ext, restriction(*c.ext, b)));
          EXPECT_EQ(d.b0.rank() + d.b1.rank(), b.rank());
          EXPECT_EQ(d.b0.size() * d.b1.size(), b.size());
          EXPECT_EQ(sum_codes(d.b0, d.b1), b);
          EXPECT_TRUE(restriction(*c.ext, d.b1).is_zero());
        }
      }
    }
  }
}

TEST(Counterexample, RestrictionOfTheTwoDimensionalCode) {
  const ExtPtr ext = GaloisExtension::make(ChainRing::make(Family::galois_ring, 2, 1, 1), 2);
  const Elem a = ext->xi();
  const Elem b = ext->ext()->mul(a, a);
  const LinearCode code = LinearCode::from_generators(ext->ext(), 3, {{1, 0, a}, {0, 1, b}});
  const LinearCode r = restriction(*ext, code);
  EXPECT_EQ(r.size(), 2);
  EXPECT_TRUE(r.contains(Vec{1, 1, 1}));
}
