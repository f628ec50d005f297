#include "ringcount/verify.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "ringcount/counting.hpp"
#include "ringcount/errors.hpp"
#include "ringcount/io.hpp"
#include "ringcount/pir.hpp"

namespace ringcount {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      why << msg;
    }
  }
};

std::vector<LinearCode> all_free_codes(const RingPtr& ring, std::size_t l, const Budget& budget) {
  std::vector<LinearCode> out;
  for (std::size_t k = 0; k <= l; ++k) {
    auto codes = enum_free_codes(ring, l, k, budget);
    out.insert(out.end(), codes.begin(), codes.end());
  }
  return out;
}

// ---- 1 -------------------------------------------------------------------

CriterionResult counterexample(const Budget&) {
  Check c;
  const auto g = gaussian_binomial(3, 2, 4);
  c.expect(g == 21, "gaussian_binomial(3,2,4) = " + to_string(g));

  const RingSpec f2 = parse_ring_spec("gf:2");
  const ExtPtr ext = extension_for(f2, 2);
  const RingPtr S = ext->ext();
  const LinearCode b = LinearCode::from_generators(S, 3, parse_rows(*S, "(1,0,a);(0,1,b)"));
  const LinearCode res = restriction(*ext, b);
  const LinearCode expected = LinearCode::from_generators(f2.chain, 3, {{1, 1, 1}});
  c.expect(res == expected, "restriction is " + format_codewords(res));

  // every codeword of B with all entries in F2
  std::set<Vec> in_base;
  const auto words = b.codewords();
  for (const auto& w : words) {
    if (std::all_of(w.begin(), w.end(), [&](Elem x) { return ext->in_base(x); })) in_base.insert(w);
  }
  c.expect(words.size() == 16, "B has " + std::to_string(words.size()) + " codewords");
  c.expect(in_base == std::set<Vec>{{0, 0, 0}, {1, 1, 1}}, "codewords of B inside F2^3 differ from {000, 111}");
  return {1, "counterexample reproduction", c.ok,
          c.ok ? "[3 2]_4 = 21; Res(<(1,0,a),(0,1,b)>) = {000, 111} over 16 codewords" : c.why.str()};
}

// ---- 2 -------------------------------------------------------------------

const std::vector<std::string>& chain_test_rings() {
  static const std::vector<std::string> specs = {"gf:2", "gf:3", "gf:4", "zps:2:2", "zps:2:3",
                                                 "zps:3:2", "gr:2:2:2", "tp:2:2"};
  return specs;
}

CriterionResult subcode_theorem(const Budget& budget) {
  Check c;
  std::size_t checked = 0;
  for (const auto& spec_text : chain_test_rings()) {
    const RingPtr R = parse_ring_spec(spec_text).chain;
    for (std::size_t l = 0; l <= 3 && c.ok; ++l) {
      for (std::size_t k = 0; k <= l && c.ok; ++k) {
        const auto parents = l == 0 ? std::vector<LinearCode>{LinearCode(R, 0)} : enum_free_codes(R, l, k, budget);
        const BigInt expect_parents = chain_binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(k), R->q(), R->s());
        c.expect(parents.size() == expect_parents, spec_text + ": free codes of rank " + std::to_string(k) +
                                                       " in length " + std::to_string(l) + " = " +
                                                       std::to_string(parents.size()));
        for (std::size_t kp = 0; kp <= k && c.ok; ++kp) {
          const BigInt want = chain_binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(kp), R->q(), R->s());
          for (const auto& parent : parents) {
            const auto subs = enum_free_subcodes(parent, kp, budget);
            std::set<std::vector<Elem>> distinct;
            bool inside = true;
            for (const auto& s : subs) {
              distinct.insert(s.generator().data());
              inside = inside && parent.contains(s) && s.is_free() && s.rank() == kp;
            }
            ++checked;
            if (subs.size() != want || distinct.size() != subs.size() || !inside) {
              c.expect(false, spec_text + " l=" + std::to_string(l) + " k=" + std::to_string(k) + " k'=" +
                                  std::to_string(kp) + ": " + std::to_string(subs.size()) + " subcodes, formula " +
                                  to_string(want));
              break;
            }
          }
        }
      }
    }
  }
  return {2, "subcode-count theorem", c.ok,
          c.ok ? std::to_string(checked) + " parent codes over 8 rings, l <= 3, all counts equal [|k k'|]_(q,s)"
               : c.why.str()};
}

// ---- 3 -------------------------------------------------------------------

CriterionResult delsarte(const Budget& budget) {
  Check c;
  std::size_t checked = 0;
  const std::vector<std::pair<std::string, std::size_t>> cases = {{"gf:2", 1}, {"gf:2", 2}, {"gf:2", 3}, {"zps:2:2", 1}, {"zps:2:2", 2}};
  for (const auto& [spec, lmax] : cases) {
    const ExtPtr ext = extension_for(parse_ring_spec(spec), 2);
    for (const auto& b : all_free_codes(ext->ext(), lmax, budget)) {
      const LinearCode lhs = dual(trace_code(*ext, b));
      const LinearCode rhs = restriction_by_intersection(*ext, dual(b));
      const LinearCode via_delsarte = restriction_by_delsarte(*ext, b);
      const LinearCode direct = restriction_by_intersection(*ext, b);
      ++checked;
      c.expect(lhs == rhs, spec + ": Tr(B)^perp != Res(B^perp) for B = " + format_rows(b));
      c.expect(via_delsarte == direct, spec + ": restriction routes disagree for B = " + format_rows(b));
      if (!c.ok) break;
    }
  }
  return {3, "Delsarte identity", c.ok,
          c.ok ? std::to_string(checked) + " free codes over F4|F2 (l <= 3) and GR(4,2)|Z4 (l <= 2)" : c.why.str()};
}

// ---- 4 -------------------------------------------------------------------

CriterionResult minimality(const Budget& budget) {
  Check c;
  std::ostringstream summary;
  const std::vector<std::pair<std::string, std::size_t>> cases = {{"gf:2", 2}, {"gf:2", 3}, {"gf:2", 4}, {"gf:3", 2}, {"gf:3", 3}};
  for (const auto& [spec, l] : cases) {
    const ExtPtr ext = extension_for(parse_ring_spec(spec), 2);
    const MinimalSet set = minimal_full_trace_codes(*ext, l, budget);
    const auto by_walk = minimal_full_trace_by_submodules(*ext, l, budget);
    std::set<std::vector<Elem>> a, b;
    for (const auto& m : set.members) {
      a.insert(m.generator().data());
      c.expect(m.is_free() && m.rank() == kappa(l, 2), spec + ": member of rank " + std::to_string(m.rank()));
    }
    for (const auto& m : by_walk) {
      b.insert(m.generator().data());
      c.expect(m.is_free() && m.rank() == kappa(l, 2),
               spec + " l=" + std::to_string(l) + ": minimal full-trace submodule " + format_rows(m) +
                   " is not free of rank kappa");
    }
    c.expect(a == b, spec + " l=" + std::to_string(l) + ": minimal set differs from the submodule walk");
    summary << ext->ext()->name() << "|" << ext->base()->name() << " l=" << l << ": " << set.members.size()
            << " members; ";
  }
  return {4, "minimality theorems", c.ok, c.ok ? summary.str() + "all free of rank ceil(l/m)" : c.why.str()};
}

// ---- 5 -------------------------------------------------------------------

CriterionResult decomposition(const Budget& budget) {
  Check c;
  const ExtPtr ext = extension_for(parse_ring_spec("gf:2"), 2);
  std::size_t n = 0;
  for (const auto& b : all_free_codes(ext->ext(), 3, budget)) {
    if (is_galois_invariant(*ext, b)) continue;
    const Decomposition d = decompose(*ext, b);
    const LinearCode meet = dual(sum_codes(dual(d.b0), dual(d.b1)));
    c.expect(d.b0 == extension(*ext, restriction(*ext, b)), "B0 != Ext(Res(B)) for " + format_rows(b));
    c.expect(d.b0.rank() + d.b1.rank() == b.rank(), "ranks do not add up for " + format_rows(b));
    c.expect(meet.is_zero(), "B0 and B1 intersect for " + format_rows(b));
    c.expect(sum_codes(d.b0, d.b1) == b, "B0 + B1 != B for " + format_rows(b));
    c.expect(restriction(*ext, d.b1).is_zero(), "Res(B1) != 0 for " + format_rows(b));
    ++n;
    if (!c.ok) break;
  }
  return {5, "decomposition theorem", c.ok,
          c.ok ? std::to_string(n) + " non-invariant free codes over F4|F2, l = 3" : c.why.str()};
}

// ---- 6 -------------------------------------------------------------------

std::string histogram_string(const std::map<std::size_t, BigInt>& h) {
  std::string out = "{";
  for (const auto& [k, v] : h) out += (out.size() > 1 ? ", " : "") + std::to_string(k) + ": " + to_string(v);
  return out + "}";
}

CriterionResult partition(const Budget& budget) {
  Check c;
  const std::vector<std::pair<std::string, std::size_t>> cases = {{"gf:2", 1}, {"gf:2", 2}, {"gf:2", 3}, {"gf:3", 2}, {"zps:2:2", 2}};
  std::size_t n = 0;
  std::string anchor;
  for (const auto& [spec, l] : cases) {
    const ExtPtr ext = extension_for(parse_ring_spec(spec), 2);
    const ChainRing& S = *ext->ext();
    for (std::size_t k = 0; k <= l; ++k) {
      const auto h = omega_bruteforce(*ext, l, k, budget);
      BigInt total = 0;
      for (const auto& kv : h) total += kv.second;
      const BigInt want = chain_binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(k), S.q(), S.s());
      c.expect(total == want, spec + " l=" + std::to_string(l) + " k=" + std::to_string(k) + ": histogram total " +
                                  to_string(total) + " != " + to_string(want));
      if (spec == "gf:2" && l == 3 && k == 2) {
        anchor = histogram_string(h);
        c.expect(h == std::map<std::size_t, BigInt>{{1, 14}, {2, 7}}, "F4|F2 l=3 k=2 histogram is " + anchor);
      }
      ++n;
    }
  }
  return {6, "histogram partition identity", c.ok,
          c.ok ? std::to_string(n) + " histograms sum to [|l k|]_(q^m,s); F4|F2 l=3 k=2: " + anchor : c.why.str()};
}

// ---- 7 -------------------------------------------------------------------

CriterionResult lyle(const Budget& budget) {
  Check c;
  const ExtPtr ext = extension_for(parse_ring_spec("gf:2"), 2);
  std::vector<std::string> flagged;
  bool saw_match = false;
  for (std::size_t kp = 0; kp <= 2; ++kp) {
    for (const auto& r : comparison_report(*ext, "gf:2", 3, 2, kp, budget)) {
      c.expect(r.match == (r.formula_value == r.oracle_value), "verdict inconsistent for " + r.formula);
      saw_match = saw_match || r.match;
      if (r.formula == "lyle_formula" && !r.match) {
        flagged.push_back("k'=" + std::to_string(kp) + " (" + to_string(r.formula_value) + " vs " +
                          to_string(r.oracle_value) + ")");
      }
    }
  }
  c.expect(!flagged.empty(), "no lyle_formula mismatch reported");
  c.expect(saw_match, "no match verdict anywhere in the report");
  std::string det = "lyle mismatch at";
  for (const auto& f : flagged) det += " " + f;
  return {7, "Lyle refutation detected", c.ok, c.ok ? det : c.why.str()};
}

// ---- 8 -------------------------------------------------------------------

CriterionResult report_matrix(const Budget& budget, const std::map<int, bool>& prior) {
  Check c;
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"gf:2", 1}, {"gf:2", 2}, {"gf:2", 3}, {"gf:3", 1}, {"gf:3", 2}, {"zps:2:2", 1}, {"zps:2:2", 2}, {"tp:2:2", 2}};
  std::size_t reports = 0, matches = 0;
  for (const auto& [spec, l] : cases) {
    const ExtPtr ext = extension_for(parse_ring_spec(spec), 2);
    const std::size_t kap = kappa(l, 2);
    for (std::size_t k = 0; k <= l; ++k) {
      for (std::size_t kp = 0; kp <= k; ++kp) {
        const auto first = comparison_report(*ext, spec, l, k, kp, budget);
        const auto again = comparison_report(*ext, spec, l, k, kp, budget);
        const std::string where = spec + " l=" + std::to_string(l) + " k=" + std::to_string(k) + " k'=" + std::to_string(kp);
        c.expect(first == again, where + ": rerun differs");
        std::set<std::string> names;
        for (const auto& r : first) {
          names.insert(r.formula);
          c.expect(r.match == (r.formula_value == r.oracle_value), where + ": verdict inconsistent");
          matches += r.match;
        }
        reports += first.size();
        for (const char* need : {"aleph_formula", "omega_formula[aleph=oracle]", "omega_formula[aleph=eq4]",
                                 "fixed_subcode_count"}) {
          c.expect(names.count(need) == 1, where + ": missing " + need);
        }
        if (ext->base()->s() == 1) c.expect(names.count("lyle_formula") == 1, where + ": missing lyle_formula");
        if (k >= kap) c.expect(names.count("free_supercodes") == 1, where + ": missing free_supercodes");
      }
    }
  }
  for (int dep : {2, 3, 6}) {
    auto it = prior.find(dep);
    if (it != prior.end()) c.expect(it->second, "oracle self-consistency: criterion " + std::to_string(dep) + " failed");
  }
  std::ostringstream det;
  det << reports << " reports over 8 (ring, l) settings, " << matches << " match / " << reports - matches
      << " mismatch, reruns identical";
  return {8, "formula-vs-oracle report matrix", c.ok, c.ok ? det.str() : c.why.str()};
}

// ---- 9 -------------------------------------------------------------------

// All Z/N-linear combinations of the rows (closure under addition and scaling).
std::set<std::vector<std::uint64_t>> integer_span(const std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t n,
                                                  std::size_t l) {
  std::set<std::vector<std::uint64_t>> span{std::vector<std::uint64_t>(l, 0)};
  std::vector<std::vector<std::uint64_t>> frontier(span.begin(), span.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& v : frontier) {
      for (const auto& r : rows) {
        std::vector<std::uint64_t> w(l);
        for (std::size_t j = 0; j < l; ++j) w[j] = (v[j] + r[j]) % n;
        if (span.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return span;
}

std::set<std::vector<std::uint64_t>> pir_codewords_as_integers(const PirCode& code) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& w : code.codewords()) {
    std::vector<std::uint64_t> v;
    for (const auto& x : w) v.push_back(code.ring()->phi_inverse(x));
    out.insert(v);
  }
  return out;
}

// Free of rank r over Z/N: r generators whose span has N^r elements.
bool integer_free(const std::set<std::vector<std::uint64_t>>& words, std::uint64_t n, std::size_t l) {
  std::vector<std::vector<std::uint64_t>> list(words.begin(), words.end());
  std::uint64_t power = 1;
  for (std::size_t r = 0; r <= l; ++r, power *= n) {
    if (words.size() != power) continue;
    if (r == 0) return true;
    // try r-subsets of codewords as a generating set
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<std::vector<std::uint64_t>> gens;
      for (auto i : idx) gens.push_back(list[i]);
      if (integer_span(gens, n, l).size() == words.size()) return true;
      std::size_t pos = 0;
      while (pos < r && ++idx[pos] == list.size()) idx[pos++] = 0;
      if (pos == r) break;
    }
  }
  return false;
}

CriterionResult pir_layer(const Budget& budget) {
  Check c;
  const RingSpec z6 = parse_ring_spec("crt:(zps:2:1,zps:3:1)");
  const PirRing& R = *z6.pir;
  const PirExtPtr ext = pir_extension_for(z6, 2);

  c.expect(ext->integer_modulus() == std::vector<std::uint64_t>{1, 3, 1}, "combined f is not X^2+3X+1");
  const auto& c2 = ext->components()[0]->modulus();
  const auto& c3 = ext->components()[1]->modulus();
  c.expect(c2 == Poly{1, 1, 1} && c3 == Poly{1, 0, 1}, "component moduli are not X^2+X+1 and X^2+1");

  for (std::uint64_t a = 0; a < R.modulus(); ++a) c.expect(R.phi_inverse(R.phi(a)) == a, "phi round trip fails");
  for (std::uint64_t i = 0; i < R.size(); ++i) {
    c.expect(R.phi(R.phi_inverse(R.from_index(i))) == R.from_index(i), "phi inverse round trip fails");
  }
  // S = Z6[X]/(X^2+3X+1): integer multiplication against the componentwise one
  for (std::uint64_t x = 0; x < 36 && c.ok; ++x) {
    for (std::uint64_t y = 0; y < 36; ++y) {
      const std::uint64_t a = x % 6, b = x / 6, cc = y % 6, d = y / 6;
      // (a + bX)(c + dX) with X^2 = -3X - 1
      const std::uint64_t x2 = b * d % 6;
      const std::uint64_t c0 = (a * cc + 6 * 6 - x2) % 6;
      const std::uint64_t c1 = (a * d + b * cc + 6 * 6 - 3 * x2 % 6) % 6;
      const PirElem px = ext->from_coordinates({R.phi(a), R.phi(b)});
      const PirElem py = ext->from_coordinates({R.phi(cc), R.phi(d)});
      const PirElem pz = ext->from_coordinates({R.phi(c0), R.phi(c1)});
      c.expect(ext->ext()->mul(px, py) == pz, "S multiplication disagrees with Z6[X]/(f)");
    }
  }

  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 40 && c.ok; ++trial) {
    const std::size_t l = 1 + trial % 3;
    const std::size_t nrows = 1 + trial % 2;
    std::vector<std::vector<std::uint64_t>> rows(nrows, std::vector<std::uint64_t>(l));
    std::vector<PirVec> prow;
    for (auto& r : rows) {
      PirVec pv;
      for (auto& e : r) {
        e = rng() % 6;
        pv.push_back(R.phi(e));
      }
      prow.push_back(std::move(pv));
    }
    const PirCode code = pir_code_from_generators(z6.pir, l, prow);
    c.expect(crt_combine(z6.pir, crt_split(code)) == code, "crt split/combine round trip fails");
    c.expect(pir_codewords_as_integers(code) == integer_span(rows, 6, l), "PIR code differs from its Z6 span");
    c.expect(code.size() == integer_span(rows, 6, l).size(), "|C| differs from the product of component sizes");
  }

  // is_free against the direct criterion over every code of Z6^2
  const auto subs2 = enum_all_submodules(R.components()[0], 2, budget);
  const auto subs3 = enum_all_submodules(R.components()[1], 2, budget);
  std::size_t free_rank1 = 0;
  for (const auto& a : subs2) {
    for (const auto& b : subs3) {
      const PirCode code = crt_combine(z6.pir, {a, b});
      const bool lemma = is_free_pir_code(code);
      const bool direct = integer_free(pir_codewords_as_integers(code), 6, 2);
      c.expect(lemma == direct, "is_free_pir_code disagrees with the direct check on " + format_rows(a) + " x " +
                                    format_rows(b));
      if (lemma && code.rank() == 1) ++free_rank1;
    }
  }

  // free rank-1 codes of Z6^2 by spans of single vectors
  std::set<std::set<std::vector<std::uint64_t>>> cyclic;
  for (std::uint64_t v = 0; v < 36; ++v) {
    const auto span = integer_span({{v % 6, v / 6}}, 6, 2);
    if (span.size() == 6) cyclic.insert(span);
  }
  const BigInt pcb = pir_chain_binomial(R, 2, 1);
  c.expect(pcb == 12 && cyclic.size() == 12 && free_rank1 == 12,
           "pir_chain_binomial = " + to_string(pcb) + ", direct = " + std::to_string(cyclic.size()));

  // omega_hat against the tuple walk
  const PirOmegaHistogram walk = pir_omega_bruteforce(*ext, 2, 1, budget);
  c.expect(walk.total == 50, "tuple walk visited " + to_string(walk.total) + " codes, expected 50");
  std::ostringstream det;
  bool max_rank_ok = true, uniform_ok = true;
  for (std::size_t kp = 0; kp <= 1; ++kp) {
    const OmegaHat oh = omega_hat(*ext, 2, 1, kp, OmegaFactor::oracle, budget);
    const BigInt by_max = walk.max_rank.count(kp) ? walk.max_rank.at(kp) : BigInt(0);
    const BigInt by_uniform = walk.uniform_rank.count(kp) ? walk.uniform_rank.at(kp) : BigInt(0);
    max_rank_ok = max_rank_ok && oh.value == by_max;
    uniform_ok = uniform_ok && oh.value == by_uniform;
    det << " k'=" << kp << ": omega_hat " << oh.value << " (" << oh.factors[0] << "*" << oh.factors[1]
        << "), max-rank walk " << by_max << ", equal-rank walk " << by_uniform << ";";
  }
  c.expect(uniform_ok, "omega_hat differs from the equal-rank tuple count:" + det.str());
  c.expect(max_rank_ok, "omega_hat differs from the max-rank histogram:" + det.str());
  return {9, "CRT/PIR layer", c.ok, c.ok ? "phi, is_free, [|2 1|] = 12 and omega_hat all agree;" + det.str() : c.why.str()};
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(2)
     << r.seconds << "s): " << r.detail;
  return os.str();
}

std::vector<CriterionResult> run_acceptance(const Budget& budget, const std::set<int>& only,
                                            const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  std::map<int, bool> passed;
  auto run = [&](int id, const std::function<CriterionResult()>& fn) {
    if (!only.empty() && !only.count(id)) return;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    passed[id] = r.pass;
    if (progress) progress(r);
    out.push_back(std::move(r));
  };
  run(1, [&] { return counterexample(budget); });
  run(2, [&] { return subcode_theorem(budget); });
  run(3, [&] { return delsarte(budget); });
  run(4, [&] { return minimality(budget); });
  run(5, [&] { return decomposition(budget); });
  run(6, [&] { return partition(budget); });
  run(7, [&] { return lyle(budget); });
  run(8, [&] { return report_matrix(budget, passed); });
  run(9, [&] { return pir_layer(budget); });
  return out;
}

}  // namespace ringcount
