#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ringcount/io.hpp"
#include "ringcount/pir.hpp"

using namespace ringcount;

namespace {

using IntVec = std::vector<std::uint64_t>;

PirPtr z6() { return parse_ring_spec("crt:(zps:2:1,zps:3:1)").pir; }
PirPtr z12() { return parse_ring_spec("crt:(zps:2:2,zps:3:1)").pir; }

std::uint64_t encode(const IntVec& v, std::uint64_t N) {
  std::uint64_t x = 0;
  for (std::size_t i = v.size(); i-- > 0;) x = x * N + v[i];
  return x;
}

IntVec decode(std::uint64_t x, std::size_t l, std::uint64_t N) {
  IntVec v(l);
  for (auto& e : v) {
    e = x % N;
    x /= N;
  }
  return v;
}

// Z/N-span of integer vectors
std::set<std::uint64_t> int_span(const std::vector<IntVec>& gens, std::size_t l, std::uint64_t N) {
  std::set<std::uint64_t> cur{0};
  for (const auto& g : gens) {
    std::set<std::uint64_t> next;
    for (auto x : cur) {
      const IntVec v = decode(x, l, N);
      for (std::uint64_t r = 0; r < N; ++r) {
        IntVec w(l);
        for (std::size_t i = 0; i < l; ++i) w[i] = (v[i] + r * g[i]) % N;
        next.insert(encode(w, N));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::set<std::uint64_t> int_words(const PirCode& c) {
  const PirRing& R = *c.ring();
  std::set<std::uint64_t> out;
  for (const auto& w : c.codewords()) {
    IntVec v;
    for (const auto& e : w) v.push_back(R.phi_inverse(e));
    out.insert(encode(v, R.modulus()));
  }
  return out;
}

PirVec to_pir(const PirRing& R, const IntVec& v) {
  PirVec out;
  for (auto x : v) out.push_back(R.phi(x));
  return out;
}

IntVec random_int_vec(std::size_t l, std::uint64_t N, std::mt19937& rng) {
  IntVec v(l);
  for (auto& e : v) e = rng() % N;
  return v;
}

// free of rank k over Z/N: k vectors in C span C and |C| = N^k
bool int_free(const std::set<std::uint64_t>& c, std::size_t l, std::uint64_t N, std::size_t k) {
  if (c.size() != oracle::ipow(N, k)) return false;
  if (k == 0) return true;
  std::vector<std::uint64_t> words(c.begin(), c.end());
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<IntVec> gens;
    for (auto i : idx) gens.push_back(decode(words[i], l, N));
    if (int_span(gens, l, N) == c) return true;
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == words.size()) idx[pos++] = 0;
    if (pos == k) return false;
  }
}

}  // namespace

TEST(PirRing, PhiIsARingIsomorphism) {
  for (const PirPtr& R : {z6(), z12()}) {
    ASSERT_TRUE(R->has_integer_model());
    const std::uint64_t N = R->modulus();
    EXPECT_EQ(N, R->size());
    std::set<PirElem> image;
    for (std::uint64_t a = 0; a < N; ++a) {
      EXPECT_EQ(R->phi_inverse(R->phi(a)), a);
      image.insert(R->phi(a));
      EXPECT_EQ(R->from_index(R->index_of(R->phi(a))), R->phi(a));
      for (std::uint64_t b = 0; b < N; ++b) {
        EXPECT_EQ(R->add(R->phi(a), R->phi(b)), R->phi((a + b) % N));
        EXPECT_EQ(R->mul(R->phi(a), R->phi(b)), R->phi(a * b % N));
      }
    }
    EXPECT_EQ(image.size(), N);
  }
  EXPECT_EQ(z6()->name(), "Z6");
}

TEST(PirRing, NoIntegerModelWithRepeatedPrimes) {
  const PirPtr R = parse_ring_spec("crt:(zps:2:1,gf:4)").pir;
  EXPECT_FALSE(R->has_integer_model());
  EXPECT_EQ(R->size(), 8u);
}

TEST(PirCode, SpanMatchesIntegerSpan) {
  std::mt19937 rng(21);
  for (const PirPtr& R : {z6(), z12()}) {
    const std::uint64_t N = R->modulus();
    for (std::size_t l = 1; l <= 2; ++l) {
      for (int t = 0; t < 30; ++t) {
        std::vector<IntVec> gens;
        for (std::size_t i = 0; i < 1 + rng() % 2; ++i) gens.push_back(random_int_vec(l, N, rng));
        std::vector<PirVec> rows;
        for (const auto& g : gens) rows.push_back(to_pir(*R, g));
        const PirCode c = pir_code_from_generators(R, l, rows);
        const auto expect = int_span(gens, l, N);
        EXPECT_EQ(int_words(c), expect);
        EXPECT_EQ(c.size(), expect.size());
        for (std::uint64_t x = 0; x < oracle::ipow(N, l); ++x) {
          ASSERT_EQ(c.contains(to_pir(*R, decode(x, l, N))), expect.count(x) == 1);
        }
        EXPECT_EQ(crt_combine(R, crt_split(c)), c);
      }
    }
  }
}

TEST(PirCode, OperationsCommuteWithTheSplit) {
  std::mt19937 rng(22);
  for (const PirPtr& R : {z6(), z12()}) {
    const std::uint64_t N = R->modulus();
    const PirExtPtr ext = PirExtension::make(R, 2);
    for (std::size_t l = 1; l <= 2; ++l) {
      for (int t = 0; t < 20; ++t) {
        const PirCode a = pir_code_from_generators(R, l, {to_pir(*R, random_int_vec(l, N, rng))});
        const PirCode b = pir_code_from_generators(R, l, {to_pir(*R, random_int_vec(l, N, rng))});
        const PirCode d = pir_dual(a);
        const PirCode s = pir_sum(a, b);
        // dual against the integer dot product
        std::set<std::uint64_t> expect;
        const auto aw = int_words(a);
        for (std::uint64_t x = 0; x < oracle::ipow(N, l); ++x) {
          const IntVec v = decode(x, l, N);
          bool ok = true;
          for (auto y : aw) {
            const IntVec w = decode(y, l, N);
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < l; ++i) dot += v[i] * w[i];
            ok = ok && dot % N == 0;
          }
          if (ok) expect.insert(x);
        }
        EXPECT_EQ(int_words(d), expect);
        for (std::size_t i = 0; i < R->count(); ++i) {
          EXPECT_EQ(d.components()[i], dual(a.components()[i]));
          EXPECT_EQ(s.components()[i], sum_codes(a.components()[i], b.components()[i]));
        }
        // codes over S from random coordinates
        const PirRing& S = *ext->ext();
        PirVec row;
        for (std::size_t i = 0; i < l; ++i) {
          row.push_back(ext->from_coordinates({R->phi(rng() % N), R->phi(rng() % N)}));
        }
        const PirCode big = pir_code_from_generators(ext->ext(), l, {row});
        const PirCode res = pir_restriction(*ext, big);
        const PirCode tr = pir_trace_code(*ext, big);
        for (std::size_t i = 0; i < S.count(); ++i) {
          EXPECT_EQ(res.components()[i], restriction(*ext->components()[i], big.components()[i]));
          EXPECT_EQ(tr.components()[i], trace_code(*ext->components()[i], big.components()[i]));
        }
      }
    }
  }
}

TEST(PirExtension, IntegerModelOfTheQuadraticExtension) {
  for (const PirPtr& R : {z6(), z12()}) {
    const std::uint64_t N = R->modulus();
    const PirExtPtr ext = PirExtension::make(R, 2);
    const auto f = ext->integer_modulus();
    ASSERT_TRUE(f.has_value());
    ASSERT_EQ(f->size(), 3u);
    EXPECT_EQ((*f)[2], 1u);
    const PirRing& S = *ext->ext();
    auto elem = [&](std::uint64_t a, std::uint64_t b) { return ext->from_coordinates({R->phi(a), R->phi(b)}); };
    for (std::uint64_t a = 0; a < N; ++a) {
      for (std::uint64_t b = 0; b < N; ++b) {
        for (std::uint64_t c = 0; c < N; c += 1 + N / 6) {
          for (std::uint64_t d = 0; d < N; ++d) {
            // (a + bX)(c + dX) mod X^2 + f1 X + f0
            const std::uint64_t x2 = b * d % N;
            const std::uint64_t c0 = (a * c + (N - x2) * (*f)[0]) % N;
            const std::uint64_t c1 = (a * d + b * c + (N - x2) * (*f)[1]) % N;
            ASSERT_EQ(S.mul(elem(a, b), elem(c, d)), elem(c0, c1));
          }
        }
      }
    }
  }
  const auto f6 = PirExtension::make(z6(), 2)->integer_modulus();
  EXPECT_EQ(*f6, (std::vector<std::uint64_t>{1, 3, 1}));
}

TEST(PirFree, ComponentCriterionMatchesIntegerFreeness) {
  const PirPtr R = z6();
  const std::uint64_t N = 6;
  std::set<std::set<std::uint64_t>> seen;
  // every code of Z6^2 has two generators
  for (std::uint64_t x = 0; x < N * N; ++x) {
    for (std::uint64_t y = x; y < N * N; ++y) {
      const PirCode c = pir_code_from_generators(R, 2, {to_pir(*R, decode(x, 2, N)), to_pir(*R, decode(y, 2, N))});
      const auto words = int_words(c);
      if (!seen.insert(words).second) continue;
      bool free_any = false;
      for (std::size_t k = 0; k <= 2; ++k) free_any = free_any || int_free(words, 2, N, k);
      EXPECT_EQ(is_free_pir_code(c), free_any) << x << " " << y;
    }
  }
  EXPECT_EQ(seen.size(), 30u);
}

TEST(PirBinomial, CountsFreeCodesOverIntegers) {
  for (const PirPtr& R : {z6(), z12()}) {
    const std::uint64_t N = R->modulus();
    std::set<std::set<std::uint64_t>> free1;
    for (std::uint64_t x = 0; x < N * N; ++x) {
      const auto sp = int_span({decode(x, 2, N)}, 2, N);
      if (sp.size() == N) free1.insert(sp);
    }
    EXPECT_EQ(pir_chain_binomial(*R, 2, 1), free1.size());
  }
  EXPECT_EQ(pir_chain_binomial(*z6(), 2, 1), 12);
}

TEST(OmegaHat, ProductOfComponentCounts) {
  const PirExtPtr ext = PirExtension::make(z6(), 2);
  const PirOmegaHistogram walk = pir_omega_bruteforce(*ext, 2, 1);
  EXPECT_EQ(walk.total, pir_chain_binomial(*ext->ext(), 2, 1));
  for (std::size_t kp = 0; kp <= 1; ++kp) {
    const OmegaHat oh = omega_hat(*ext, 2, 1, kp);
    BigInt prod = 1;
    for (const auto& f : oh.factors) prod *= f;
    EXPECT_EQ(oh.value, prod);
    EXPECT_EQ(oh.value, walk.uniform_rank.at(kp));
  }
  // max-rank bucketing also collects the mixed tuples
  EXPECT_EQ(walk.max_rank.at(0), 12);
  EXPECT_EQ(walk.max_rank.at(1), 38);
  BigInt sum = 0;
  for (const auto& [k, v] : walk.max_rank) sum += v;
  EXPECT_EQ(sum, walk.total);
}
