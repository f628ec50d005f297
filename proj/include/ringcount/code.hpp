#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ringcount/bigint.hpp"
#include "ringcount/extension.hpp"
#include "ringcount/matrix.hpp"

namespace ringcount {

/// A linear code of length l over a chain ring, held in canonical form.
/// Equal codes have equal forms, so LinearCode is comparable and hashable.
class LinearCode {
 public:
  LinearCode(RingPtr ring, std::size_t length);  // zero code
  static LinearCode from_generators(RingPtr ring, std::size_t length, const std::vector<Vec>& rows);
  static LinearCode from_matrix(const RingMatrix& m);
  /// Adopts a form known to be canonical (enumeration output). No checks.
  static LinearCode from_canonical(StandardForm form);

  const RingPtr& ring() const { return ring_; }
  std::size_t length() const { return length_; }
  const StandardForm& form() const { return form_; }
  const RingMatrix& generator() const { return form_.matrix; }
  std::vector<Vec> rows() const { return form_.matrix.row_list(); }

  std::size_t rank() const { return form_.rank(); }
  bool is_free() const { return form_.free_rank() == form_.rank(); }
  bool is_zero() const { return rank() == 0; }
  /// prod over pivot rows of q^(s - a_i).
  BigInt size() const;

  bool contains(std::span<const Elem> v) const { return form_.contains(v); }
  bool contains(const LinearCode& sub) const;

  /// All codewords, in little-endian order of the coefficient vector over
  /// the canonical rows (each row's coefficient taken mod theta^(s - a_i)).
  std::vector<Vec> codewords() const;

  bool operator==(const LinearCode& o) const {
    return ring_ == o.ring_ && length_ == o.length_ && form_ == o.form_;
  }

 private:
  LinearCode(RingPtr ring, std::size_t length, StandardForm form);

  RingPtr ring_;
  std::size_t length_;
  StandardForm form_;
};

struct LinearCodeHash {
  std::size_t operator()(const LinearCode& c) const;
};

/// Coordinatewise map of a code's generators.
Vec map_vector(const Vec& v, const std::function<Elem(Elem)>& f);

LinearCode code_from_generators(RingPtr ring, std::size_t length, const std::vector<Vec>& rows);
LinearCode dual(const LinearCode& code);
LinearCode sum_codes(const LinearCode& a, const LinearCode& b);

/// Tr(B) over R, generated by Tr(xi^i g_j) for the R-basis {xi^i} of S.
LinearCode trace_code(const GaloisExtension& ext, const LinearCode& code);

/// Res_R(B) = B ∩ R^l, computed as an R-module intersection in R^(ml).
LinearCode restriction_by_intersection(const GaloisExtension& ext, const LinearCode& code);
/// Res_R(B) computed as dual(trace_code(dual(B))).
LinearCode restriction_by_delsarte(const GaloisExtension& ext, const LinearCode& code);
/// Runs both routes and throws InternalFault if they disagree.
LinearCode restriction(const GaloisExtension& ext, const LinearCode& code);

/// Ext_S(C): S-span of an R-code.
LinearCode extension(const GaloisExtension& ext, const LinearCode& code);
/// Coordinatewise sigma applied to the code.
LinearCode frobenius_image(const GaloisExtension& ext, const LinearCode& code);
bool is_galois_invariant(const GaloisExtension& ext, const LinearCode& code);

/// pi(B): coordinatewise residue, a code over the residue field.
LinearCode residue_code(const LinearCode& code);

struct Decomposition {
  LinearCode b0;  ///< Ext_S(Res_R(B))
  LinearCode b1;  ///< free complement with Res_R(B1) = 0
};

/// B = B0 ⊕ B1 for free, non Galois-invariant B. B1 is grown greedily from
/// codewords of B scanned in little-endian order of their coefficient vector
/// over B's canonical generators, taking each one whose residue lies outside
/// the residue of the current span.
Decomposition decompose(const GaloisExtension& ext, const LinearCode& code);

}  // namespace ringcount
