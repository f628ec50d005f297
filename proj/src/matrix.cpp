#include "ringcount/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace ringcount {

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

RingMatrix RingMatrix::identity(RingPtr ring, std::size_t n) {
  RingMatrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RingMatrix RingMatrix::from_rows(RingPtr ring, std::size_t cols, const std::vector<Vec>& rows) {
  RingMatrix m(std::move(ring), 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Vec> RingMatrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vec(i));
  return out;
}

void RingMatrix::append_row(std::span<const Elem> r) {
  if (r.size() != cols_) throw ParameterError("row length " + std::to_string(r.size()) + " != " + std::to_string(cols_));
  for (Elem e : r) {
    if (e >= ring_->size()) throw ParameterError("entry out of range for ring " + ring_->name());
  }
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (ring_ != o.ring_) throw RingMismatch("matrix product over different rings");
  if (cols_ != o.rows_) throw ParameterError("matrix product dimension mismatch");
  const ChainRing& R = *ring_;
  RingMatrix out(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) = R.add(out.at(i, j), R.mul(a, o.at(k, j)));
    }
  }
  return out;
}

namespace {

void axpy_row(const ChainRing& R, Vec& x, Elem lambda, std::span<const Elem> row) {
  if (lambda == 0) return;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (row[j] != 0) x[j] = R.sub(x[j], R.mul(lambda, row[j]));
  }
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

}  // namespace

std::size_t StandardForm::free_rank() const {
  return static_cast<std::size_t>(std::count_if(pivots.begin(), pivots.end(), [](const Pivot& p) { return p.exponent == 0; }));
}

std::optional<Vec> StandardForm::coefficients_of(std::span<const Elem> v) const {
  if (v.size() != matrix.cols()) throw ParameterError("vector length mismatch");
  const ChainRing& R = *matrix.ring();
  std::vector<std::size_t> order(pivots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pivots[a].exponent < pivots[b].exponent;
  });
  Vec w(v.begin(), v.end());
  Vec coeffs(pivots.size(), 0);
  for (std::size_t idx : order) {
    const auto [col, a] = pivots[idx];
    const Elem x = w[col];
    if (x == 0) continue;
    if (R.valuation(x) < a) return std::nullopt;
    const Elem lambda = R.divide_theta(x, a);
    coeffs[idx] = lambda;
    axpy_row(R, w, lambda, matrix.row(idx));
  }
  if (!is_zero(w)) return std::nullopt;
  return coeffs;
}

bool StandardForm::contains(std::span<const Elem> v) const { return coefficients_of(v).has_value(); }

StandardForm standard_form(const RingMatrix& m) {
  const ChainRing& R = *m.ring();
  const std::size_t cols = m.cols();
  std::vector<Vec> active;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec r = m.row_vec(i);
    if (!is_zero(r)) active.push_back(std::move(r));
  }

  struct Selected {
    Vec row;
    Pivot pivot;
  };
  std::vector<Selected> selected;

  while (!active.empty()) {
    std::uint32_t best_val = R.s();
    std::size_t best_col = cols;
    std::size_t best_row = active.size();
    for (std::size_t j = 0; j < cols && best_val > 0; ++j) {
      for (std::size_t i = 0; i < active.size(); ++i) {
        const std::uint32_t v = R.valuation(active[i][j]);
        if (v < best_val) {
          best_val = v;
          best_col = j;
          best_row = i;
          if (v == 0) break;
        }
      }
    }
    if (best_val == R.s()) break;

    Vec piv = std::move(active[best_row]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_row));
    const Elem unit_inv = R.inverse(R.divide_theta(piv[best_col], best_val));
    for (auto& e : piv) e = R.mul(e, unit_inv);

    for (auto& x : active) {
      const Elem c = x[best_col];
      if (c != 0) axpy_row(R, x, R.divide_theta(c, best_val), piv);
    }
    active.erase(std::remove_if(active.begin(), active.end(), is_zero), active.end());
    selected.push_back({std::move(piv), {best_col, best_val}});
  }

  // Selection order is (exponent, column); each selected row is zero at the
  // pivots selected before it, so one forward pass reduces everything.
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (std::size_t c = i + 1; c < selected.size(); ++c) {
      const auto [col, a] = selected[c].pivot;
      const Elem x = selected[i].row[col];
      const Elem rep = R.reduce_mod_theta(x, a);
      if (x != rep) axpy_row(R, selected[i].row, R.divide_theta(R.sub(x, rep), a), selected[c].row);
    }
  }

  std::sort(selected.begin(), selected.end(),
            [](const Selected& a, const Selected& b) { return a.pivot.column < b.pivot.column; });
  StandardForm out{RingMatrix(m.ring(), 0, cols), {}};
  for (auto& s : selected) {
    out.matrix.append_row(s.row);
    out.pivots.push_back(s.pivot);
  }
  return out;
}

SmithForm smith_form(const RingMatrix& m) {
  const ChainRing& R = *m.ring();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm out{RingMatrix::identity(m.ring(), rows), m, RingMatrix::identity(m.ring(), cols), {}};
  RingMatrix& U = out.U;
  RingMatrix& D = out.D;
  RingMatrix& V = out.V;

  auto swap_rows = [](RingMatrix& a, std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(i, j), a.at(k, j));
  };
  auto swap_cols = [](RingMatrix& a, std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a.at(i, j), a.at(i, k));
  };
  auto row_sub = [&R](RingMatrix& a, std::size_t dst, std::size_t src, Elem lambda) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(dst, j) = R.sub(a.at(dst, j), R.mul(lambda, a.at(src, j)));
  };
  auto col_sub = [&R](RingMatrix& a, std::size_t dst, std::size_t src, Elem lambda) {
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, dst) = R.sub(a.at(i, dst), R.mul(lambda, a.at(i, src)));
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::uint32_t best = R.s();
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < rows && best > 0; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        const std::uint32_t v = R.valuation(D.at(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (best == R.s()) break;
    swap_rows(D, t, bi);
    swap_rows(U, t, bi);
    swap_cols(D, t, bj);
    swap_cols(V, t, bj);
    const Elem unit_inv = R.inverse(R.divide_theta(D.at(t, t), best));
    for (std::size_t j = 0; j < cols; ++j) D.at(t, j) = R.mul(D.at(t, j), unit_inv);
    for (std::size_t j = 0; j < rows; ++j) U.at(t, j) = R.mul(U.at(t, j), unit_inv);
    for (std::size_t i = t + 1; i < rows; ++i) {
      const Elem c = D.at(i, t);
      if (c == 0) continue;
      const Elem lambda = R.divide_theta(c, best);
      row_sub(D, i, t, lambda);
      row_sub(U, i, t, lambda);
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const Elem c = D.at(t, j);
      if (c == 0) continue;
      const Elem lambda = R.divide_theta(c, best);
      col_sub(D, j, t, lambda);
      col_sub(V, j, t, lambda);
    }
    out.exponents.push_back(best);
  }
  return out;
}

RingMatrix kernel(const RingMatrix& m) {
  const ChainRing& R = *m.ring();
  const SmithForm sf = smith_form(m);
  const std::size_t cols = m.cols();
  const std::size_t nd = sf.exponents.size();
  RingMatrix gens(m.ring(), 0, cols);
  Vec g(cols);
  for (std::size_t t = 0; t < cols; ++t) {
    Elem scale = 1;
    if (t < nd) {
      if (sf.exponents[t] == 0) continue;
      scale = R.theta_pow(R.s() - sf.exponents[t]);
    }
    for (std::size_t i = 0; i < cols; ++i) g[i] = R.mul(scale, sf.V.at(i, t));
    gens.append_row(g);
  }
  return standard_form(gens).matrix;
}

std::optional<Vec> solve(const RingMatrix& m, std::span<const Elem> b) {
  if (b.size() != m.cols()) throw ParameterError("solve: dimension mismatch");
  const ChainRing& R = *m.ring();
  const SmithForm sf = smith_form(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t nd = sf.exponents.size();

  Vec t(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    Elem acc = 0;
    for (std::size_t i = 0; i < cols; ++i) acc = R.add(acc, R.mul(b[i], sf.V.at(i, j)));
    t[j] = acc;
  }
  Vec w(rows, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    if (j < nd) {
      if (R.valuation(t[j]) < sf.exponents[j]) return std::nullopt;
      w[j] = R.divide_theta(t[j], sf.exponents[j]);
    } else if (t[j] != 0) {
      return std::nullopt;
    }
  }
  Vec x(rows, 0);
  for (std::size_t j = 0; j < rows; ++j) {
    Elem acc = 0;
    for (std::size_t i = 0; i < rows; ++i) acc = R.add(acc, R.mul(w[i], sf.U.at(i, j)));
    x[j] = acc;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    Elem acc = 0;
    for (std::size_t i = 0; i < rows; ++i) acc = R.add(acc, R.mul(x[i], m.at(i, j)));
    if (acc != b[j]) throw InternalFault("solve: back-substitution check failed");
  }
  return x;
}

RingMatrix residue_matrix(const RingMatrix& m) {
  RingMatrix out(m.ring()->residue_field_ptr(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.ring()->residue(m.at(i, j));
  return out;
}

}  // namespace ringcount
