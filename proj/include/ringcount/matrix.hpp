#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ringcount/ring.hpp"

namespace ringcount {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a chain ring.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static RingMatrix identity(RingPtr ring, std::size_t n);
  static RingMatrix from_rows(RingPtr ring, std::size_t cols, const std::vector<Vec>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)}; }
  std::vector<Vec> row_list() const;
  void append_row(std::span<const Elem> r);
  const std::vector<Elem>& data() const { return data_; }

  RingMatrix transpose() const;
  RingMatrix operator*(const RingMatrix& o) const;
  bool operator==(const RingMatrix& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Pivot {
  std::size_t column;
  std::uint32_t exponent;
  bool operator==(const Pivot&) const = default;
};

/// Canonical generator matrix of a row span.
///
/// Row i is the unique element of the span whose entry at its pivot column is
/// exactly theta^(a_i) and whose entry at every other pivot column j is the
/// canonical representative modulo theta^(a_j). Rows are sorted by pivot
/// column. Projection onto the pivot columns is injective on the span, which
/// makes this representative unique: two matrices have equal standard forms
/// iff their row spans coincide.
struct StandardForm {
  RingMatrix matrix;
  std::vector<Pivot> pivots;

  std::size_t rank() const { return pivots.size(); }
  std::size_t free_rank() const;
  /// Membership of v in the row span by reduction against the rows in
  /// (exponent, column) order.
  bool contains(std::span<const Elem> v) const;
  /// Coefficients x with x * matrix = v, if v is in the span.
  std::optional<Vec> coefficients_of(std::span<const Elem> v) const;
  bool operator==(const StandardForm& o) const { return matrix == o.matrix && pivots == o.pivots; }
};

StandardForm standard_form(const RingMatrix& m);

/// U * M * V = D with U, V invertible and D diagonal theta-powers
/// theta^(d_0) | theta^(d_1) | ...; `exponents` lists the d_i of nonzero
/// diagonal entries.
struct SmithForm {
  RingMatrix U;
  RingMatrix D;
  RingMatrix V;
  std::vector<std::uint32_t> exponents;
};

SmithForm smith_form(const RingMatrix& m);

/// Rows generating {x : M x^T = 0}, in standard form.
RingMatrix kernel(const RingMatrix& m);

/// Some x with x * M = b, or nullopt when b is not in the row span.
std::optional<Vec> solve(const RingMatrix& m, std::span<const Elem> b);

/// Coordinatewise residue of every entry (matrix over the residue field).
RingMatrix residue_matrix(const RingMatrix& m);

}  // namespace ringcount
