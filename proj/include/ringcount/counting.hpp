#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ringcount/bigint.hpp"
#include "ringcount/code.hpp"
#include "ringcount/enumerate.hpp"

namespace ringcount {

BigInt gaussian_binomial(std::int64_t k, std::int64_t kp, const BigInt& q);
/// q^((s-1)(k-k')k') * [k k']_q
BigInt chain_binomial(std::int64_t k, std::int64_t kp, const BigInt& q, std::uint32_t s);
std::size_t kappa(std::size_t l, std::size_t m);

/// Membership in E_R(l, m): Tr(B) = R^l. Decided on residues and
/// cross-checked against the trace code itself.
bool full_trace_test(const GaloisExtension& ext, const LinearCode& code);
/// Direct test only: trace_code(B) == R^l.
bool full_trace_direct(const GaloisExtension& ext, const LinearCode& code);

struct MinimalSet {
  std::size_t length = 0;
  std::size_t kappa = 0;
  std::vector<LinearCode> members;
};

/// Free rank-kappa codes with full trace, after checking each is minimal and
/// that no free code of smaller rank has full trace.
MinimalSet minimal_full_trace_codes(const GaloisExtension& ext, std::size_t l, Budget budget = {});

/// Minimal elements (under inclusion) of all submodules of S^l with full
/// trace, found by walking every submodule.
std::vector<LinearCode> minimal_full_trace_by_submodules(const GaloisExtension& ext, std::size_t l,
                                                         Budget budget = {});

/// Distinct sums of nonempty subsets of the minimal set, bucketed by rank;
/// sums that are not free are dropped.
std::map<std::size_t, std::vector<LinearCode>> m_sets(const MinimalSet& set, Budget budget = {});
std::map<std::size_t, std::size_t> m_set_sizes(const MinimalSet& set, Budget budget = {});
/// Same map, by literally walking all 2^|E| - 1 subsets.
std::map<std::size_t, std::size_t> m_set_sizes_by_subsets(const MinimalSet& set, Budget budget = {});

/// The printed inclusion-exclusion sum; 0 when k < kappa.
BigInt aleph_formula(const GaloisExtension& ext, const MinimalSet& set, std::size_t k, Budget budget = {});
BigInt aleph_formula(const GaloisExtension& ext, std::size_t l, std::size_t k, Budget budget = {});
/// Free rank-k S-codes with full trace, counted by enumeration.
BigInt aleph_bruteforce(const GaloisExtension& ext, std::size_t l, std::size_t k, Budget budget = {});

/// Free rank-k codes containing D, by enumeration.
BigInt count_free_supercodes(const GaloisExtension& ext, const LinearCode& d, std::size_t k, Budget budget = {});

enum class AlephSource { oracle, formula };
std::string to_string(AlephSource source);

/// aleph(l, m, l-k+k') * [|l k'|]_(q,s); the aleph factor is 0 when
/// l-k+k' < kappa.
BigInt omega_formula(const GaloisExtension& ext, std::size_t l, std::size_t k, std::size_t kp,
                     AlephSource source = AlephSource::oracle, Budget budget = {});
/// Histogram of rank(Res(B)) over all free rank-k S-codes B.
std::map<std::size_t, BigInt> omega_bruteforce(const GaloisExtension& ext, std::size_t l, std::size_t k,
                                               Budget budget = {});

BigInt lyle_formula(std::size_t l, std::size_t m, std::size_t k, std::size_t kp, const BigInt& q);

/// Free rank-k S-codes B with Res(B) = C exactly.
BigInt fixed_subcode_count(const GaloisExtension& ext, const LinearCode& c, std::size_t k, Budget budget = {});

struct CountReport {
  std::string formula;
  std::vector<std::pair<std::string, std::string>> params;
  BigInt formula_value;
  BigInt oracle_value;
  bool match = false;
  std::string notes;

  std::string verdict() const { return match ? "match" : "mismatch"; }
  std::string params_string() const;
  bool operator==(const CountReport&) const = default;
};

CountReport make_report(std::string formula, std::vector<std::pair<std::string, std::string>> params,
                        BigInt formula_value, BigInt oracle_value, std::string notes = {});

std::vector<CountReport> comparison_report(const GaloisExtension& ext, const std::string& ring_spec,
                                           std::size_t l, std::size_t k, std::size_t kp, Budget budget = {});

}  // namespace ringcount
