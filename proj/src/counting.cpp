#include "ringcount/counting.hpp"

#include <sstream>
#include <unordered_set>

#include "ringcount/errors.hpp"

namespace ringcount {

BigInt gaussian_binomial(std::int64_t k, std::int64_t kp, const BigInt& q) {
  if (q < 2) throw ParameterError("gaussian binomial needs q >= 2");
  if (k < 0 || kp < 0) throw ParameterError("gaussian binomial needs k, k' >= 0");
  if (kp > k) return 0;
  if (kp == 0) return 1;
  BigInt num = 1, den = 1;
  const BigInt qk = ipow(q, static_cast<unsigned long>(k));
  const BigInt qkp = ipow(q, static_cast<unsigned long>(kp));
  for (std::int64_t i = 0; i < kp; ++i) {
    const BigInt qi = ipow(q, static_cast<unsigned long>(i));
    num *= qk - qi;
    den *= qkp - qi;
  }
  if (num % den != 0) throw InternalFault("gaussian binomial is not integral");
  return num / den;
}

BigInt chain_binomial(std::int64_t k, std::int64_t kp, const BigInt& q, std::uint32_t s) {
  if (s < 1) throw ParameterError("chain binomial needs s >= 1");
  const BigInt g = gaussian_binomial(k, kp, q);
  if (g == 0) return 0;
  return ipow(q, static_cast<unsigned long>((s - 1) * (k - kp) * kp)) * g;
}

std::size_t kappa(std::size_t l, std::size_t m) {
  if (l < 1 || m < 1) throw ParameterError("kappa needs l, m >= 1");
  return (l + m - 1) / m;
}

bool full_trace_direct(const GaloisExtension& ext, const LinearCode& code) {
  const LinearCode t = trace_code(ext, code);
  return t.is_free() && t.rank() == code.length();
}

bool full_trace_test(const GaloisExtension& ext, const LinearCode& code) {
  const GaloisExtension& res = ext.residue_extension();
  const LinearCode pi = residue_code(code);
  const bool by_residue = trace_code(res, pi).rank() == code.length();
  if (by_residue != full_trace_direct(ext, code)) {
    throw InternalFault("full trace: residue criterion and direct trace code disagree");
  }
  return by_residue;
}

MinimalSet minimal_full_trace_codes(const GaloisExtension& ext, std::size_t l, Budget budget) {
  const RingPtr& S = ext.ext();
  MinimalSet set;
  set.length = l;
  set.kappa = kappa(l, ext.degree());

  for (std::size_t r = 0; r < set.kappa; ++r) {
    auto hist = parallel_histogram(free_codes_plan(S, l, r, budget),
                                   [&](const LinearCode& c) { return full_trace_test(ext, c) ? 0L : -1L; });
    if (!hist.empty()) {
      throw InternalFault("a free code of rank below kappa has full trace");
    }
  }

  set.members = parallel_collect(free_codes_plan(S, l, set.kappa, budget),
                                 [&](const LinearCode& c) { return full_trace_test(ext, c); });

  const auto subs = enum_all_submodules(S, set.kappa, budget);
  for (const auto& member : set.members) {
    for (const auto& x : subs) {
      if (x.rank() == set.kappa && x.is_free()) continue;  // the whole of S^kappa
      const LinearCode sub = LinearCode::from_matrix(x.generator() * member.generator());
      if (full_trace_test(ext, sub)) throw InternalFault("minimal set member has a proper full-trace subcode");
    }
  }
  return set;
}

std::vector<LinearCode> minimal_full_trace_by_submodules(const GaloisExtension& ext, std::size_t l,
                                                         Budget budget) {
  auto all = parallel_collect(all_submodules_plan(ext.ext(), l, budget),
                              [&](const LinearCode& c) { return full_trace_test(ext, c); });
  std::vector<LinearCode> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < all.size() && minimal; ++j) {
      if (i != j && all[i].contains(all[j])) minimal = false;
    }
    if (minimal) out.push_back(all[i]);
  }
  return out;
}

std::map<std::size_t, std::vector<LinearCode>> m_sets(const MinimalSet& set, Budget budget) {
  // Closing E under "+ e" gives exactly the distinct nonempty subset sums.
  std::unordered_set<LinearCode, LinearCodeHash> seen;
  std::vector<LinearCode> order;
  for (const auto& e : set.members) {
    if (seen.insert(e).second) order.push_back(e);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& e : set.members) {
      if (order[i].contains(e)) continue;
      LinearCode sum = sum_codes(order[i], e);
      if (seen.insert(sum).second) {
        order.push_back(std::move(sum));
        check_guard(order.size(), budget, "m-set closure");
      }
    }
  }
  std::map<std::size_t, std::vector<LinearCode>> out;
  for (auto& c : order) {
    if (c.is_free()) out[c.rank()].push_back(std::move(c));
  }
  return out;
}

std::map<std::size_t, std::size_t> m_set_sizes(const MinimalSet& set, Budget budget) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& [u, codes] : m_sets(set, budget)) out[u] = codes.size();
  return out;
}

std::map<std::size_t, std::size_t> m_set_sizes_by_subsets(const MinimalSet& set, Budget budget) {
  const std::size_t n = set.members.size();
  if (n >= 63) throw GuardExceeded("m-set subsets: 2^|E| is out of range");
  check_guard(BigInt(1) << n, budget, "m-set subsets");
  std::vector<LinearCode> sums;
  sums.reserve(std::size_t{1} << n);
  sums.emplace_back(set.members.empty() ? RingPtr{} : set.members[0].ring(), set.length);
  std::unordered_set<LinearCode, LinearCodeHash> distinct;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    sums.push_back(sum_codes(sums[mask & (mask - 1)], set.members[low]));
    distinct.insert(sums.back());
  }
  std::map<std::size_t, std::size_t> out;
  for (const auto& c : distinct) {
    if (c.is_free()) ++out[c.rank()];
  }
  return out;
}

BigInt aleph_formula(const GaloisExtension& ext, const MinimalSet& set, std::size_t k, Budget budget) {
  if (k < set.kappa) return 0;
  const auto sizes = m_set_sizes(set, budget);
  const BigInt qm = ext.ext()->q();
  const std::uint32_t s = ext.ext()->s();
  BigInt total = 0;
  for (std::size_t u = set.kappa; u <= k; ++u) {
    const auto it = sizes.find(u);
    if (it == sizes.end()) continue;
    BigInt term = BigInt(it->second) * chain_binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(u), qm, s);
    if ((u - set.kappa) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

BigInt aleph_formula(const GaloisExtension& ext, std::size_t l, std::size_t k, Budget budget) {
  if (k < kappa(l, ext.degree())) return 0;
  return aleph_formula(ext, minimal_full_trace_codes(ext, l, budget), k, budget);
}

BigInt aleph_bruteforce(const GaloisExtension& ext, std::size_t l, std::size_t k, Budget budget) {
  auto hist = parallel_histogram(free_codes_plan(ext.ext(), l, k, budget),
                                 [&](const LinearCode& c) { return full_trace_test(ext, c) ? 0L : -1L; });
  return hist.empty() ? BigInt(0) : hist[0];
}

BigInt count_free_supercodes(const GaloisExtension& ext, const LinearCode& d, std::size_t k, Budget budget) {
  if (d.ring() != ext.ext()) throw RingMismatch("supercode count: D is not over S");
  if (d.rank() > k || k > d.length()) throw ParameterError("supercode count needs rank(D) <= k <= l");
  auto hist = parallel_histogram(free_codes_plan(ext.ext(), d.length(), k, budget),
                                 [&](const LinearCode& c) { return c.contains(d) ? 0L : -1L; });
  return hist.empty() ? BigInt(0) : hist[0];
}

std::string to_string(AlephSource source) { return source == AlephSource::oracle ? "oracle" : "eq4"; }

namespace {

void check_range(std::size_t l, std::size_t k, std::size_t kp) {
  if (kp > k || k > l) throw ParameterError("need 0 <= k' <= k <= l");
}

}  // namespace

BigInt omega_formula(const GaloisExtension& ext, std::size_t l, std::size_t k, std::size_t kp,
                     AlephSource source, Budget budget) {
  check_range(l, k, kp);
  const std::size_t a = l - k + kp;
  BigInt aleph = 0;
  if (a >= kappa(l, ext.degree())) {
    aleph = source == AlephSource::oracle ? aleph_bruteforce(ext, l, a, budget) : aleph_formula(ext, l, a, budget);
  }
  const ChainRing& R = *ext.base();
  return aleph * chain_binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(kp), R.q(), R.s());
}

std::map<std::size_t, BigInt> omega_bruteforce(const GaloisExtension& ext, std::size_t l, std::size_t k,
                                               Budget budget) {
  if (k > l) throw ParameterError("need k <= l");
  auto hist = parallel_histogram(free_codes_plan(ext.ext(), l, k, budget), [&](const LinearCode& c) {
    return static_cast<long>(restriction(ext, c).rank());
  });
  std::map<std::size_t, BigInt> out;
  for (auto& [key, v] : hist) out[static_cast<std::size_t>(key)] = v;
  return out;
}

BigInt lyle_formula(std::size_t l, std::size_t m, std::size_t k, std::size_t kp, const BigInt& q) {
  check_range(l, k, kp);
  if (m < 1) throw ParameterError("m must be >= 1");
  return gaussian_binomial(static_cast<std::int64_t>(l - kp), static_cast<std::int64_t>(l - k),
                           ipow(q, static_cast<unsigned long>(m)));
}

BigInt fixed_subcode_count(const GaloisExtension& ext, const LinearCode& c, std::size_t k, Budget budget) {
  if (c.ring() != ext.base()) throw RingMismatch("fixed subcode: C is not over R");
  if (!c.is_free()) throw PreconditionError("fixed subcode: C is not free");
  check_range(c.length(), k, c.rank());
  auto hist = parallel_histogram(free_codes_plan(ext.ext(), c.length(), k, budget),
                                 [&](const LinearCode& b) { return restriction(ext, b) == c ? 0L : -1L; });
  return hist.empty() ? BigInt(0) : hist[0];
}

std::string CountReport::params_string() const {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ' ';
    out += key + "=" + value;
  }
  return out;
}

CountReport make_report(std::string formula, std::vector<std::pair<std::string, std::string>> params,
                        BigInt formula_value, BigInt oracle_value, std::string notes) {
  CountReport r;
  r.formula = std::move(formula);
  r.params = std::move(params);
  r.match = formula_value == oracle_value;
  r.formula_value = std::move(formula_value);
  r.oracle_value = std::move(oracle_value);
  r.notes = std::move(notes);
  return r;
}

namespace {

std::string rows_string(const LinearCode& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (i) os << ',';
    os << '[';
    const auto row = c.generator().row(i);
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::vector<CountReport> comparison_report(const GaloisExtension& ext, const std::string& ring_spec,
                                           std::size_t l, std::size_t k, std::size_t kp, Budget budget) {
  check_range(l, k, kp);
  const ChainRing& R = *ext.base();
  const ChainRing& S = *ext.ext();
  const std::size_t m = ext.degree();
  const std::size_t a = l - k + kp;
  using Params = std::vector<std::pair<std::string, std::string>>;
  const auto base_params = [&](std::size_t kk) {
    return Params{{"ring", ring_spec}, {"m", std::to_string(m)}, {"l", std::to_string(l)}, {"k", std::to_string(kk)}};
  };
  auto full_params = base_params(k);
  full_params.emplace_back("k'", std::to_string(kp));

  // Every free rank-k S-code with its subring subcode.
  struct Entry {
    LinearCode code;
    LinearCode res;
  };
  std::vector<Entry> codes;
  for (auto& b : parallel_collect(free_codes_plan(ext.ext(), l, k, budget), [](const LinearCode&) { return true; })) {
    LinearCode res = restriction(ext, b);
    codes.push_back({std::move(b), std::move(res)});
  }
  std::map<std::size_t, BigInt> hist;
  for (const auto& e : codes) hist[e.res.rank()] += 1;
  const BigInt omega_oracle = hist.count(kp) ? hist[kp] : BigInt(0);

  const MinimalSet set = minimal_full_trace_codes(ext, l, budget);
  const auto msets = m_sets(set, budget);
  const std::string below_kappa = "rank below kappa: no full-trace code exists, value taken as 0";

  std::vector<CountReport> out;
  BigInt aleph_k = 0;
  for (const auto& e : codes) {
    if (full_trace_test(ext, e.code)) aleph_k += 1;
  }
  out.push_back(make_report("aleph_formula", base_params(k), aleph_formula(ext, set, k, budget), aleph_k,
                            k < set.kappa ? below_kappa : ""));
  const BigInt aleph_a = a == k ? aleph_k : aleph_bruteforce(ext, l, a, budget);
  if (a != k) {
    out.push_back(make_report("aleph_formula", base_params(a), aleph_formula(ext, set, a, budget), aleph_a,
                              a < set.kappa ? below_kappa : ""));
  }

  const BigInt binom_r = chain_binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(kp), R.q(), R.s());
  const BigInt aleph_a_formula = aleph_formula(ext, set, a, budget);
  out.push_back(make_report("omega_formula[aleph=oracle]", full_params, aleph_a * binom_r, omega_oracle));
  out.push_back(make_report("omega_formula[aleph=eq4]", full_params, aleph_a_formula * binom_r, omega_oracle));

  if (R.s() == 1) {
    const BigInt lyle = lyle_formula(l, m, k, kp, R.q());
    out.push_back(make_report("lyle_formula", full_params, lyle, omega_oracle,
                              "oracle: free rank-k codes whose subring subcode has rank k'"));
    out.push_back(make_report("lyle_formula_vs_aleph", full_params, lyle, aleph_a,
                              "oracle: aleph(l, m, l-k+k') by enumeration"));
  }

  // Corollary: each free rank-k' R-code C is the subcode of aleph(l,m,l-k+k')
  // free rank-k S-codes.
  const auto cs = enum_free_codes(ext.base(), l, kp, budget);
  std::vector<BigInt> per_c;
  for (const auto& c : cs) {
    BigInt n = 0;
    for (const auto& e : codes) {
      if (e.res == c) n += 1;
    }
    per_c.push_back(n);
  }
  bool independent = true;
  for (const auto& n : per_c) independent = independent && n == per_c.front();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto params = full_params;
    params.emplace_back("C", rows_string(cs[i]));
    out.push_back(make_report("fixed_subcode_count", params, aleph_a, per_c[i],
                              independent ? "oracle independent of C" : "oracle depends on C"));
  }

  // Proof of the aleph theorem: |[D; ->)^(k)| claimed to be [|k u|]_(q^m, s).
  for (const auto& [u, bucket] : msets) {
    if (u > k || bucket.empty()) continue;
    const LinearCode& d = bucket.front();
    BigInt n = 0;
    for (const auto& e : codes) {
      if (e.code.contains(d)) n += 1;
    }
    auto params = base_params(k);
    params.emplace_back("u", std::to_string(u));
    params.emplace_back("D", rows_string(d));
    out.push_back(make_report("free_supercodes", params,
                              chain_binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(u), S.q(), S.s()),
                              n));
  }
  return out;
}

}  // namespace ringcount
