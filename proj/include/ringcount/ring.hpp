#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringcount/errors.hpp"

namespace ringcount {

/// Canonical code of a ring element. Elements are coefficient vectors packed
/// little-endian in mixed radix; equal elements have equal codes.
using Elem = std::uint32_t;

enum class Family { galois_ring, truncated_poly };

class ChainRing;
using RingPtr = std::shared_ptr<const ChainRing>;

/// A finite chain ring with invariants (q, s), built as a tower
///
///   B = Z/p^s  or  F_p[u]/(u^s)       (leaf level, residue field F_p)
///   B[X]/(g_1)[Y]/(g_2) ...           (monic basic irreducible moduli)
///
/// Every level is a free module over the one below with monomial basis, so an
/// element is the vector of its coefficients over the level below. The
/// uniformizer theta lives in the leaf (p, resp. u), which makes valuation,
/// division by theta^a and reduction mod theta^a coefficientwise.
///
/// Rings are immutable after construction and may be shared across threads.
class ChainRing : public std::enable_shared_from_this<ChainRing> {
  struct Private {};

 public:
  ChainRing(Private, Family family, std::uint32_t p, std::uint32_t s);
  ChainRing(Private, RingPtr base, std::vector<Elem> modulus);

  /// GR(p^s, n) or F_{p^n}[u]/(u^s). The degree-n modulus is the monic
  /// polynomial with the smallest coefficient code whose residue is
  /// irreducible over F_p.
  static RingPtr make(Family family, std::uint32_t p, std::uint32_t s, std::uint32_t n);

  /// base[X]/(modulus). `modulus` lists coefficients c_0..c_d with c_d = 1;
  /// its residue must be irreducible over the residue field of `base`.
  static RingPtr adjoin(RingPtr base, std::vector<Elem> modulus);

  Family family() const { return family_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t s() const { return s_; }
  /// Residue field degree over F_p.
  std::uint32_t n() const { return n_; }
  /// Residue field size q = p^n.
  std::uint64_t q() const { return q_; }
  std::uint64_t size() const { return size_; }

  bool is_leaf() const { return base_ == nullptr; }
  bool is_field() const { return s_ == 1; }
  const RingPtr& base() const { return base_; }
  /// Degree of this level over its base (1 for a leaf).
  std::uint32_t level_degree() const { return degree_; }
  /// Monic modulus of this level over its base, c_0..c_d (empty for a leaf).
  const std::vector<Elem>& modulus() const { return modulus_; }
  /// Number of tower levels above the leaf.
  std::uint32_t depth() const { return base_ ? base_->depth() + 1 : 0; }

  const ChainRing& residue_field() const { return residue_ ? *residue_ : *this; }
  RingPtr residue_field_ptr() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Generator of the maximal ideal; zero in a field.
  Elem theta() const { return s_ == 1 ? 0 : p_; }
  /// Generator of this level over its base (the class of X).
  Elem generator() const;
  Elem from_integer(std::int64_t v) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem theta_pow(std::uint32_t a) const;

  bool is_unit(Elem a) const { return valuation(a) == 0; }
  /// Throws UnitRequired for non-units.
  Elem inverse(Elem a) const;

  /// Largest i with a in (theta^i); valuation(0) = s.
  std::uint32_t valuation(Elem a) const;
  /// Some y with theta^a * y = x. Requires valuation(x) >= a. The returned y is
  /// the canonical one (reduced mod theta^(s-a)).
  Elem divide_theta(Elem x, std::uint32_t a) const;
  /// Canonical representative of x + (theta^a).
  Elem reduce_mod_theta(Elem x, std::uint32_t a) const;

  /// Projection onto the residue field (code in residue_field()).
  Elem residue(Elem x) const;
  /// Set-theoretic section of residue(): residue(lift(y)) == y.
  Elem lift(Elem y) const;

  /// Coefficients over the level below.
  std::vector<Elem> coefficients(Elem x) const;
  Elem from_coefficients(const std::vector<Elem>& coeffs) const;
  /// Little-endian leaf coefficients (integers in [0, p^s)), n of them.
  std::vector<std::uint32_t> leaf_digits(Elem x) const;
  Elem from_leaf_digits(const std::vector<std::uint32_t>& digits) const;

  /// Elements with valuation >= a, in increasing code order.
  std::vector<Elem> ideal_elements(std::uint32_t a) const;

  /// Human-readable name, e.g. "GR(4,2)", "F4", "F2[u]/(u^2)".
  std::string name() const;

 private:
  Elem add_raw(Elem a, Elem b) const;
  Elem neg_raw(Elem a) const;
  Elem mul_raw(Elem a, Elem b) const;
  std::uint32_t valuation_raw(Elem a) const;
  void build_tables();

  Family family_;
  std::uint32_t p_ = 0;
  std::uint32_t s_ = 0;
  std::uint32_t n_ = 1;
  std::uint64_t q_ = 0;
  std::uint64_t size_ = 0;
  std::uint32_t degree_ = 1;
  std::uint64_t p_pow_s_ = 0;  // leaf size
  RingPtr base_;
  std::vector<Elem> modulus_;
  RingPtr residue_;  // null when this ring is its own residue field

  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<std::uint8_t> val_table_;
};

/// Value type pairing a ring handle with an element code. Arithmetic on
/// elements from different handles throws RingMismatch.
class RingElement {
 public:
  RingElement(RingPtr ring, Elem code);

  const RingPtr& ring() const { return ring_; }
  Elem code() const { return code_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  bool operator==(const RingElement& o) const { return ring_ == o.ring_ && code_ == o.code_; }

  std::uint32_t valuation() const { return ring_->valuation(code_); }
  bool is_unit() const { return ring_->is_unit(code_); }
  RingElement inverse() const { return {ring_, ring_->inverse(code_)}; }
  RingElement residue() const { return {ring_->residue_field_ptr(), ring_->residue(code_)}; }

 private:
  void check_same(const RingElement& o) const;

  RingPtr ring_;
  Elem code_;
};

bool is_prime(std::uint64_t v);

}  // namespace ringcount
