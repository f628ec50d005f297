#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ringcount/bigint.hpp"
#include "ringcount/code.hpp"

namespace ringcount {

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

enum class Target { free_codes, all_submodules, free_subcodes };

/// Limits shared by every brute-force routine.
struct Budget {
  std::uint64_t guard = kDefaultGuard;
  bool override_guard = false;
  unsigned jobs = 1;
};

/// One enumeration job. A plan walks a list of patterns (pivot sets for free
/// codes, pivot set plus exponents for all submodules); `pattern_lo/hi`
/// restrict it to a slice of that list and `digit_lo/hi` restrict the last
/// (slowest) free entry of a single-pattern slice, so sub-plans concatenate
/// in stream order.
struct EnumerationPlan {
  RingPtr ring;
  std::size_t length = 0;
  Target target = Target::free_codes;
  std::size_t rank = 0;                    // k for free codes, k' for subcodes
  std::shared_ptr<const LinearCode> code;  // parent code for free_subcodes
  Budget budget;

  std::size_t pattern_lo = 0;
  std::size_t pattern_hi = SIZE_MAX;
  std::uint64_t digit_lo = 0;
  std::uint64_t digit_hi = UINT64_MAX;
};

EnumerationPlan free_codes_plan(RingPtr ring, std::size_t length, std::size_t k, Budget budget = {});
EnumerationPlan all_submodules_plan(RingPtr ring, std::size_t length, Budget budget = {});
EnumerationPlan free_subcodes_plan(const LinearCode& code, std::size_t k, Budget budget = {});

/// Number of codes the plan will emit (exact for free targets, an upper bound
/// for all submodules).
BigInt estimated_count(const EnumerationPlan& plan);

/// Disjoint sub-plans covering `plan`. May return fewer than `ways` plans
/// when the plan cannot be cut that finely.
std::vector<EnumerationPlan> split(const EnumerationPlan& plan, std::size_t ways);

/// Pull-based stream over a plan. Throws GuardExceeded on construction when
/// the estimate is above the guard and no override is set.
class CodeStream {
 public:
  explicit CodeStream(EnumerationPlan plan);
  ~CodeStream();
  CodeStream(CodeStream&&) noexcept;
  CodeStream& operator=(CodeStream&&) noexcept;

  std::optional<LinearCode> next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

std::vector<LinearCode> enum_free_codes(RingPtr ring, std::size_t length, std::size_t k, Budget budget = {});
std::vector<LinearCode> enum_all_submodules(RingPtr ring, std::size_t length, Budget budget = {});
std::vector<LinearCode> enum_free_subcodes(const LinearCode& code, std::size_t k, Budget budget = {});

/// Runs `plan` on budget.jobs worker threads. `key` maps each code to a
/// histogram bucket; a negative key drops the code.
std::map<long, BigInt> parallel_histogram(const EnumerationPlan& plan,
                                          const std::function<long(const LinearCode&)>& key);

/// Codes accepted by `keep`, in stream order regardless of job count.
std::vector<LinearCode> parallel_collect(const EnumerationPlan& plan,
                                         const std::function<bool(const LinearCode&)>& keep);

void check_guard(const BigInt& estimate, const Budget& budget, const char* what);

}  // namespace ringcount
