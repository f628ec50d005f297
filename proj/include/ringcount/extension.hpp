#pragma once

#include <memory>
#include <vector>

#include "ringcount/polynomial.hpp"
#include "ringcount/ring.hpp"

namespace ringcount {

class GaloisExtension;
using ExtPtr = std::shared_ptr<const GaloisExtension>;

/// Degree-m Galois extension S = R[X]/(f) of a chain ring R, with f monic
/// basic irreducible. Elements of R embed into S with the same code, so
/// `in_base(x)` is a code-range check.
///
/// The generator sigma of Aut_R(S) fixes R and sends xi (the class of X) to the
/// root of f congruent to xi^q modulo theta, found by Newton iteration from
/// xi^q. Tr = sum of sigma^j for j < m.
class GaloisExtension {
  struct Private {};

 public:
  GaloisExtension(Private, RingPtr base, RingPtr ext, unsigned degree);

  /// Picks f as the lift of the smallest-code monic irreducible of degree m
  /// over the residue field of `base`.
  static ExtPtr make(RingPtr base, unsigned degree);
  /// Extension with a caller-supplied basic irreducible modulus.
  static ExtPtr with_modulus(RingPtr base, Poly modulus);

  const RingPtr& base() const { return base_; }
  const RingPtr& ext() const { return ext_; }
  unsigned degree() const { return degree_; }
  /// c_0..c_m of f over the base (just {0, 1} when m = 1).
  const Poly& modulus() const { return modulus_; }
  Elem xi() const { return xi_; }
  /// sigma(xi^i) for i < m: the matrix of sigma on the basis {1, xi, ...}.
  const std::vector<Elem>& sigma_table() const { return sigma_basis_; }

  bool in_base(Elem x) const { return x < base_->size(); }
  Elem embed(Elem r) const { return r; }
  /// Coordinates of x over the R-basis {1, xi, ..., xi^(m-1)}.
  std::vector<Elem> coordinates(Elem x) const;
  Elem from_coordinates(const std::vector<Elem>& coords) const;

  Elem frobenius(Elem x) const;
  Elem frobenius_power(Elem x, unsigned j) const;
  /// Tr_R^S(x), an element of the base ring.
  Elem trace(Elem x) const;

  RingElement frobenius(const RingElement& x) const;
  RingElement trace(const RingElement& x) const;

  /// The extension of residue fields F_{q^m} | F_q defined by pi(f). Returns
  /// *this when the base is already a field.
  const GaloisExtension& residue_extension() const { return residue_ ? *residue_ : *this; }

 private:
  void check_in_ext(const RingElement& x) const;

  RingPtr base_;
  RingPtr ext_;
  unsigned degree_;
  Poly modulus_;
  Elem xi_ = 0;
  std::vector<Elem> sigma_basis_;
  std::vector<Elem> sigma_table_;  // full table for small S
  std::vector<Elem> trace_table_;
  ExtPtr residue_;
};

}  // namespace ringcount
