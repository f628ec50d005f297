#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringcount/counting.hpp"

namespace ringcount {

/// Element of a PIR in CRT coordinates: one chain-ring element per component.
using PirElem = std::vector<Elem>;
using PirVec = std::vector<PirElem>;

class PirRing;
using PirPtr = std::shared_ptr<const PirRing>;

/// R = R_1 x ... x R_u with each R_t a chain ring.
class PirRing {
 public:
  static PirPtr make(std::vector<RingPtr> components);

  const std::vector<RingPtr>& components() const { return components_; }
  std::size_t count() const { return components_.size(); }
  std::uint64_t size() const { return size_; }
  std::string name() const;

  /// Z/N model, present when every component is Z/p^s and the primes differ.
  bool has_integer_model() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }
  PirElem phi(std::uint64_t a) const;
  std::uint64_t phi_inverse(const PirElem& x) const;

  /// Mixed-radix index of a tuple, first component fastest.
  std::uint64_t index_of(const PirElem& x) const;
  PirElem from_index(std::uint64_t i) const;

  PirElem add(const PirElem& a, const PirElem& b) const;
  PirElem mul(const PirElem& a, const PirElem& b) const;

 private:
  struct Private {};

 public:
  PirRing(Private, std::vector<RingPtr> components);

 private:
  std::vector<RingPtr> components_;
  std::uint64_t size_ = 1;
  std::uint64_t modulus_ = 0;
};

/// A code over a PIR held as its component codes.
class PirCode {
 public:
  PirCode(PirPtr ring, std::vector<LinearCode> components);

  const PirPtr& ring() const { return ring_; }
  std::size_t length() const { return components_.front().length(); }
  const std::vector<LinearCode>& components() const { return components_; }

  /// Rank over the PIR: the largest component rank.
  std::size_t rank() const;
  BigInt size() const;
  bool contains(const PirVec& v) const;
  std::vector<PirVec> codewords() const;

  bool operator==(const PirCode& o) const { return ring_ == o.ring_ && components_ == o.components_; }

 private:
  PirPtr ring_;
  std::vector<LinearCode> components_;
};

PirCode crt_combine(const PirPtr& ring, std::vector<LinearCode> components);
std::vector<LinearCode> crt_split(const PirCode& code);
PirCode pir_code_from_generators(const PirPtr& ring, std::size_t length, const std::vector<PirVec>& rows);
PirCode pir_zero_code(const PirPtr& ring, std::size_t length);

/// Every component free and all component ranks equal.
bool is_free_pir_code(const PirCode& code);

PirCode pir_dual(const PirCode& code);
PirCode pir_sum(const PirCode& a, const PirCode& b);

BigInt pir_chain_binomial(const PirRing& ring, std::int64_t k, std::int64_t kp);

/// Componentwise Galois extensions of a common degree m.
class PirExtension {
 public:
  static std::shared_ptr<const PirExtension> make(const PirPtr& base, unsigned degree);

  const PirPtr& base() const { return base_; }
  const PirPtr& ext() const { return ext_; }
  unsigned degree() const { return degree_; }
  const std::vector<ExtPtr>& components() const { return components_; }
  /// Coefficients of f in CRT coordinates, constant term first.
  const std::vector<PirElem>& modulus() const { return modulus_; }
  /// Coefficients of f in the integer model, when there is one.
  std::optional<std::vector<std::uint64_t>> integer_modulus() const;

  PirElem frobenius(const PirElem& x) const;
  PirElem trace(const PirElem& x) const;
  /// S element from its coordinates over R (each coordinate in the base's
  /// CRT form).
  PirElem from_coordinates(const std::vector<PirElem>& coords) const;

 private:
  PirPtr base_;
  PirPtr ext_;
  unsigned degree_ = 1;
  std::vector<ExtPtr> components_;
  std::vector<PirElem> modulus_;
};

using PirExtPtr = std::shared_ptr<const PirExtension>;

PirCode pir_trace_code(const PirExtension& ext, const PirCode& code);
PirCode pir_restriction(const PirExtension& ext, const PirCode& code);

enum class OmegaFactor { oracle, formula_oracle_aleph, formula_eq4 };
std::string to_string(OmegaFactor f);

struct OmegaHat {
  BigInt value;
  std::vector<BigInt> factors;
};

OmegaHat omega_hat(const PirExtension& ext, std::size_t l, std::size_t k, std::size_t kp,
                   OmegaFactor source = OmegaFactor::oracle, Budget budget = {});

struct PirOmegaHistogram {
  /// k' = max of the component restriction ranks.
  std::map<std::size_t, BigInt> max_rank;
  /// Tuples whose component restrictions all have rank k'.
  std::map<std::size_t, BigInt> uniform_rank;
  BigInt total;
  std::vector<std::map<std::size_t, BigInt>> component_histograms;
  /// Component histograms are supported on different rank sets.
  bool shapes_differ = false;
};

/// Walks every tuple of free rank-k component codes (the free PIR codes).
PirOmegaHistogram pir_omega_bruteforce(const PirExtension& ext, std::size_t l, std::size_t k, Budget budget = {});

}  // namespace ringcount
