#include "ringcount/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ringcount/errors.hpp"

namespace ringcount {

namespace {

struct Pattern {
  std::vector<std::size_t> pivots;    // sorted columns
  std::vector<std::uint32_t> exponents;
};

// k-subsets of [0, n) in colex order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // colex successor: bump the lowest entry that can move up
    std::size_t i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : n)) ++i;
    if (i == k) break;
    ++cur[i];
    for (std::size_t j = 0; j < i; ++j) cur[j] = j;
  }
  return out;
}

std::vector<Pattern> build_patterns(const EnumerationPlan& plan) {
  std::vector<Pattern> out;
  if (plan.target == Target::all_submodules) {
    const std::uint32_t s = plan.ring->s();
    for (std::size_t r = 0; r <= plan.length; ++r) {
      for (auto& piv : colex_subsets(plan.length, r)) {
        std::vector<std::uint32_t> e(r, 0);
        while (true) {
          out.push_back({piv, e});
          std::size_t pos = 0;
          while (pos < r && ++e[pos] == s) e[pos++] = 0;
          if (pos == r) break;
        }
      }
    }
    return out;
  }
  const std::size_t n = plan.target == Target::free_subcodes ? plan.code->rank() : plan.length;
  for (auto& piv : colex_subsets(n, plan.rank)) {
    out.push_back({std::move(piv), std::vector<std::uint32_t>(plan.rank, 0)});
  }
  return out;
}

RingPtr enumeration_ring(const EnumerationPlan& plan) {
  return plan.target == Target::free_subcodes ? plan.code->ring() : plan.ring;
}

std::size_t enumeration_width(const EnumerationPlan& plan) {
  return plan.target == Target::free_subcodes ? plan.code->rank() : plan.length;
}

struct Cell {
  std::size_t index;               // into the row-major template
  std::vector<Elem> domain;
};

struct Layout {
  std::vector<Elem> fixed;  // template with fixed entries filled in
  std::vector<Cell> cells;  // free entries, row-major
};

std::vector<Elem> ring_elements_with_valuation_at_least(const ChainRing& R, std::uint32_t v) {
  if (v >= R.s()) return {0};
  return R.ideal_elements(v);
}

Layout layout_for(const ChainRing& R, std::size_t width, const Pattern& pat) {
  const std::size_t r = pat.pivots.size();
  Layout lay;
  lay.fixed.assign(r * width, 0);
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(pat.exponents[x], pat.pivots[x]) < std::pair(pat.exponents[y], pat.pivots[y]);
  });
  std::vector<std::size_t> rank_of(r);
  for (std::size_t i = 0; i < r; ++i) rank_of[order[i]] = i;
  std::vector<long> pivot_row(width, -1);
  for (std::size_t i = 0; i < r; ++i) pivot_row[pat.pivots[i]] = static_cast<long>(i);

  for (std::size_t i = 0; i < r; ++i) {
    const std::uint32_t a = pat.exponents[i];
    const std::size_t own = pat.pivots[i];
    for (std::size_t c = 0; c < width; ++c) {
      const std::size_t idx = i * width + c;
      if (c == own) {
        lay.fixed[idx] = R.theta_pow(a);
        continue;
      }
      const std::uint32_t floor = c < own ? a + 1 : a;
      std::vector<Elem> dom;
      if (pivot_row[c] >= 0) {
        const auto j = static_cast<std::size_t>(pivot_row[c]);
        if (rank_of[j] < rank_of[i]) continue;  // eliminated: stays 0
        const std::uint32_t aj = pat.exponents[j];
        for (Elem x : ring_elements_with_valuation_at_least(R, floor)) {
          if (R.reduce_mod_theta(x, aj) == x) dom.push_back(x);
        }
      } else {
        dom = ring_elements_with_valuation_at_least(R, floor);
      }
      if (dom.size() == 1) {
        lay.fixed[idx] = dom[0];
      } else {
        lay.cells.push_back({idx, std::move(dom)});
      }
    }
  }
  return lay;
}

BigInt layout_size(const Layout& lay, std::uint64_t digit_lo, std::uint64_t digit_hi) {
  BigInt total = 1;
  for (std::size_t i = 0; i < lay.cells.size(); ++i) {
    std::uint64_t n = lay.cells[i].domain.size();
    if (i + 1 == lay.cells.size()) {
      const std::uint64_t hi = std::min<std::uint64_t>(digit_hi, n);
      n = hi > digit_lo ? hi - digit_lo : 0;
    }
    total *= n;
  }
  return total;
}

std::size_t pattern_end(const EnumerationPlan& plan, std::size_t n) { return std::min(plan.pattern_hi, n); }

bool single_pattern(const EnumerationPlan& plan, std::size_t n) {
  return pattern_end(plan, n) == plan.pattern_lo + 1;
}

}  // namespace

void check_guard(const BigInt& estimate, const Budget& budget, const char* what) {
  if (!budget.override_guard && estimate > budget.guard) {
    throw GuardExceeded(std::string(what) + ": estimated " + to_string(estimate) + " exceeds guard " +
                        std::to_string(budget.guard));
  }
}

EnumerationPlan free_codes_plan(RingPtr ring, std::size_t length, std::size_t k, Budget budget) {
  if (k > length) throw ParameterError("rank k exceeds length");
  EnumerationPlan p;
  p.ring = std::move(ring);
  p.length = length;
  p.target = Target::free_codes;
  p.rank = k;
  p.budget = budget;
  return p;
}

EnumerationPlan all_submodules_plan(RingPtr ring, std::size_t length, Budget budget) {
  EnumerationPlan p;
  p.ring = std::move(ring);
  p.length = length;
  p.target = Target::all_submodules;
  p.budget = budget;
  return p;
}

EnumerationPlan free_subcodes_plan(const LinearCode& code, std::size_t k, Budget budget) {
  if (!code.is_free()) throw PreconditionError("free subcodes requested of a code that is not free");
  if (k > code.rank()) throw ParameterError("subcode rank exceeds code rank");
  EnumerationPlan p;
  p.ring = code.ring();
  p.length = code.length();
  p.target = Target::free_subcodes;
  p.rank = k;
  p.code = std::make_shared<const LinearCode>(code);
  p.budget = budget;
  return p;
}

BigInt estimated_count(const EnumerationPlan& plan) {
  const auto pats = build_patterns(plan);
  const RingPtr ring = enumeration_ring(plan);
  const std::size_t width = enumeration_width(plan);
  const std::size_t hi = pattern_end(plan, pats.size());
  const bool single = single_pattern(plan, pats.size());
  BigInt total = 0;
  for (std::size_t t = plan.pattern_lo; t < hi; ++t) {
    const Layout lay = layout_for(*ring, width, pats[t]);
    total += single ? layout_size(lay, plan.digit_lo, plan.digit_hi) : layout_size(lay, 0, UINT64_MAX);
  }
  return total;
}

std::vector<EnumerationPlan> split(const EnumerationPlan& plan, std::size_t ways) {
  const auto pats = build_patterns(plan);
  const std::size_t lo = plan.pattern_lo;
  const std::size_t hi = pattern_end(plan, pats.size());
  if (ways <= 1 || hi <= lo) return {plan};
  const RingPtr ring = enumeration_ring(plan);
  const std::size_t width = enumeration_width(plan);

  if (hi - lo == 1) {
    const Layout lay = layout_for(*ring, width, pats[lo]);
    if (lay.cells.empty()) return {plan};
    const std::uint64_t d_lo = plan.digit_lo;
    const std::uint64_t d_hi = std::min<std::uint64_t>(plan.digit_hi, lay.cells.back().domain.size());
    if (d_hi <= d_lo + 1) return {plan};
    const std::uint64_t len = d_hi - d_lo;
    const std::uint64_t parts = std::min<std::uint64_t>(ways, len);
    std::vector<EnumerationPlan> out;
    for (std::uint64_t i = 0; i < parts; ++i) {
      EnumerationPlan sub = plan;
      sub.digit_lo = d_lo + len * i / parts;
      sub.digit_hi = d_lo + len * (i + 1) / parts;
      out.push_back(std::move(sub));
    }
    return out;
  }

  std::vector<BigInt> weight;
  BigInt total = 0;
  for (std::size_t t = lo; t < hi; ++t) {
    weight.push_back(layout_size(layout_for(*ring, width, pats[t]), 0, UINT64_MAX));
    total += weight.back();
  }

  auto slice = [&](std::size_t a, std::size_t b) {
    EnumerationPlan sub = plan;
    sub.pattern_lo = a;
    sub.pattern_hi = b;
    sub.digit_lo = 0;
    sub.digit_hi = UINT64_MAX;
    return sub;
  };

  std::vector<EnumerationPlan> out;
  const std::size_t n = hi - lo;
  if (n >= ways) {
    std::size_t start = lo;
    BigInt cum = 0;
    std::size_t t = lo;
    for (std::size_t c = 0; c + 1 < ways; ++c) {
      const BigInt target = total * (c + 1) / ways;
      const std::size_t max_end = hi - (ways - c - 1);
      std::size_t end = std::max(start + 1, t);
      while (t < end) cum += weight[t++ - lo];
      while (end < max_end && cum < target) {
        cum += weight[t++ - lo];
        ++end;
      }
      out.push_back(slice(start, end));
      start = end;
    }
    out.push_back(slice(start, hi));
    return out;
  }

  // Fewer patterns than ways: one plan per pattern, spare ways spent on the
  // heavier patterns' slowest digit.
  for (std::size_t t = lo; t < hi; ++t) {
    std::size_t share = 1;
    if (total > 0) {
      share = std::max<std::size_t>(1, static_cast<std::size_t>(BigInt(weight[t - lo] * ways / total)));
    }
    for (auto& sub : split(slice(t, t + 1), share)) out.push_back(std::move(sub));
  }
  return out;
}

struct CodeStream::State {
  EnumerationPlan plan;
  RingPtr ring;  // ring of the enumerated matrices
  std::size_t width = 0;
  std::vector<Pattern> patterns;
  std::size_t cur = 0;
  std::size_t end = 0;
  bool single = false;

  bool loaded = false;
  Layout layout;
  std::vector<std::size_t> idx;
  std::size_t first_lo = 0;  // range of the slowest digit
  std::size_t first_hi = 0;

  bool load() {
    while (cur < end) {
      layout = layout_for(*ring, width, patterns[cur]);
      idx.assign(layout.cells.size(), 0);
      first_lo = 0;
      first_hi = layout.cells.empty() ? 1 : layout.cells.back().domain.size();
      if (single) {
        first_lo = static_cast<std::size_t>(std::min<std::uint64_t>(plan.digit_lo, first_hi));
        first_hi = static_cast<std::size_t>(std::min<std::uint64_t>(plan.digit_hi, first_hi));
      }
      if (first_lo < first_hi) {
        if (!idx.empty()) idx.back() = first_lo;
        loaded = true;
        return true;
      }
      ++cur;
    }
    return false;
  }

  // Advances the odometer; false when the current pattern is exhausted.
  bool advance() {
    if (idx.empty()) return false;
    const std::size_t top = idx.size() - 1;
    for (std::size_t pos = 0; pos < top; ++pos) {
      if (++idx[pos] < layout.cells[pos].domain.size()) return true;
      idx[pos] = 0;
    }
    return ++idx[top] < first_hi;
  }

  std::optional<StandardForm> candidate() {
    const Pattern& pat = patterns[cur];
    std::vector<Elem> data = layout.fixed;
    for (std::size_t i = 0; i < layout.cells.size(); ++i) data[layout.cells[i].index] = layout.cells[i].domain[idx[i]];
    RingMatrix m(ring, pat.pivots.size(), width);
    for (std::size_t i = 0; i < data.size(); ++i) m.at(i / width, i % width) = data[i];
    if (plan.target == Target::all_submodules) {
      StandardForm sf = standard_form(m);
      if (!(sf.matrix == m)) return std::nullopt;
      return sf;
    }
    StandardForm sf{std::move(m), {}};
    for (std::size_t i = 0; i < pat.pivots.size(); ++i) sf.pivots.push_back({pat.pivots[i], 0});
    return sf;
  }
};

CodeStream::CodeStream(EnumerationPlan plan) : state_(std::make_unique<State>()) {
  check_guard(estimated_count(plan), plan.budget, "enumeration");
  State& st = *state_;
  st.ring = enumeration_ring(plan);
  st.width = enumeration_width(plan);
  st.patterns = build_patterns(plan);
  st.cur = plan.pattern_lo;
  st.end = pattern_end(plan, st.patterns.size());
  st.single = single_pattern(plan, st.patterns.size());
  st.plan = std::move(plan);
}

CodeStream::~CodeStream() = default;
CodeStream::CodeStream(CodeStream&&) noexcept = default;
CodeStream& CodeStream::operator=(CodeStream&&) noexcept = default;

std::optional<LinearCode> CodeStream::next() {
  State& st = *state_;
  while (true) {
    if (!st.loaded) {
      if (!st.load()) return std::nullopt;
    }
    std::optional<StandardForm> sf = st.candidate();
    if (!st.advance()) {
      st.loaded = false;
      ++st.cur;
    }
    if (!sf) continue;
    if (st.plan.target == Target::free_subcodes) {
      return LinearCode::from_matrix(sf->matrix * st.plan.code->generator());
    }
    return LinearCode::from_canonical(std::move(*sf));
  }
}

namespace {

std::vector<LinearCode> drain(EnumerationPlan plan) {
  std::vector<LinearCode> out;
  CodeStream stream(std::move(plan));
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

// Runs fn(sub_plan_index, stream) for every sub-plan on budget.jobs threads.
void run_parallel(const EnumerationPlan& plan, const std::function<void(std::size_t, CodeStream&)>& fn,
                  std::size_t& plan_count) {
  check_guard(estimated_count(plan), plan.budget, "enumeration");
  const unsigned jobs = std::max(1u, plan.budget.jobs);
  std::vector<EnumerationPlan> subs = jobs == 1 ? std::vector<EnumerationPlan>{plan} : split(plan, jobs * 4);
  for (auto& s : subs) s.budget.override_guard = true;
  plan_count = subs.size();

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= subs.size()) return;
        CodeStream stream(subs[i]);
        fn(i, stream);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = subs.size();
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, subs.size()); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<LinearCode> enum_free_codes(RingPtr ring, std::size_t length, std::size_t k, Budget budget) {
  return drain(free_codes_plan(std::move(ring), length, k, budget));
}

std::vector<LinearCode> enum_all_submodules(RingPtr ring, std::size_t length, Budget budget) {
  return drain(all_submodules_plan(std::move(ring), length, budget));
}

std::vector<LinearCode> enum_free_subcodes(const LinearCode& code, std::size_t k, Budget budget) {
  return drain(free_subcodes_plan(code, k, budget));
}

std::map<long, BigInt> parallel_histogram(const EnumerationPlan& plan,
                                          const std::function<long(const LinearCode&)>& key) {
  std::map<long, BigInt> total;
  std::mutex mu;
  std::size_t n = 0;
  run_parallel(plan, [&](std::size_t, CodeStream& stream) {
    std::map<long, std::uint64_t> local;
    while (auto c = stream.next()) {
      const long k = key(*c);
      if (k >= 0) ++local[k];
    }
    std::lock_guard lock(mu);
    for (auto& [k, v] : local) total[k] += v;
  }, n);
  return total;
}

std::vector<LinearCode> parallel_collect(const EnumerationPlan& plan,
                                         const std::function<bool(const LinearCode&)>& keep) {
  std::vector<std::vector<LinearCode>> parts;
  std::mutex mu;
  std::size_t n = 0;
  // sized lazily once the split is known
  run_parallel(plan, [&](std::size_t i, CodeStream& stream) {
    std::vector<LinearCode> local;
    while (auto c = stream.next()) {
      if (keep(*c)) local.push_back(std::move(*c));
    }
    std::lock_guard lock(mu);
    if (parts.size() <= i) parts.resize(i + 1);
    parts[i] = std::move(local);
  }, n);
  std::vector<LinearCode> out;
  for (auto& p : parts) {
    for (auto& c : p) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ringcount
