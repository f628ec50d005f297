#include "ringcount/code.hpp"

#include <boost/container_hash/hash.hpp>

namespace ringcount {

LinearCode::LinearCode(RingPtr ring, std::size_t length)
    : ring_(ring), length_(length), form_{RingMatrix(std::move(ring), 0, length), {}} {}

LinearCode::LinearCode(RingPtr ring, std::size_t length, StandardForm form)
    : ring_(std::move(ring)), length_(length), form_(std::move(form)) {}

LinearCode LinearCode::from_generators(RingPtr ring, std::size_t length, const std::vector<Vec>& rows) {
  return from_matrix(RingMatrix::from_rows(std::move(ring), length, rows));
}

LinearCode LinearCode::from_matrix(const RingMatrix& m) {
  return LinearCode(m.ring(), m.cols(), standard_form(m));
}

LinearCode LinearCode::from_canonical(StandardForm form) {
  RingPtr ring = form.matrix.ring();
  const std::size_t length = form.matrix.cols();
  return LinearCode(std::move(ring), length, std::move(form));
}

BigInt LinearCode::size() const {
  BigInt total = 1;
  for (const auto& p : form_.pivots) total *= ipow(BigInt(ring_->q()), ring_->s() - p.exponent);
  return total;
}

bool LinearCode::contains(const LinearCode& sub) const {
  if (sub.ring_ != ring_) throw RingMismatch("containment across rings");
  if (sub.length_ != length_) throw ParameterError("containment across lengths");
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    if (!contains(sub.generator().row(i))) return false;
  }
  return true;
}

std::vector<Vec> LinearCode::codewords() const {
  const ChainRing& R = *ring_;
  const std::size_t k = rank();
  std::vector<std::vector<Elem>> domains(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t keep = R.s() - form_.pivots[i].exponent;
    for (std::uint64_t x = 0; x < R.size(); ++x) {
      if (R.reduce_mod_theta(static_cast<Elem>(x), keep) == x) domains[i].push_back(static_cast<Elem>(x));
    }
  }
  std::vector<Vec> out;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Vec w(length_, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const Elem c = domains[i][idx[i]];
      if (c == 0) continue;
      const auto row = form_.matrix.row(i);
      for (std::size_t j = 0; j < length_; ++j) w[j] = R.add(w[j], R.mul(c, row[j]));
    }
    out.push_back(std::move(w));
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == domains[pos].size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return out;
}

std::size_t LinearCodeHash::operator()(const LinearCode& c) const {
  std::size_t h = boost::hash_value(c.length());
  boost::hash_combine(h, c.ring().get());
  boost::hash_range(h, c.generator().data().begin(), c.generator().data().end());
  return h;
}

Vec map_vector(const Vec& v, const std::function<Elem(Elem)>& f) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f(v[i]);
  return out;
}

LinearCode code_from_generators(RingPtr ring, std::size_t length, const std::vector<Vec>& rows) {
  return LinearCode::from_generators(std::move(ring), length, rows);
}

LinearCode dual(const LinearCode& code) { return LinearCode::from_matrix(kernel(code.generator())); }

LinearCode sum_codes(const LinearCode& a, const LinearCode& b) {
  if (a.ring() != b.ring()) throw RingMismatch("sum of codes over different rings");
  if (a.length() != b.length()) throw ParameterError("sum of codes of different lengths");
  auto rows = a.rows();
  for (auto& r : b.rows()) rows.push_back(std::move(r));
  return LinearCode::from_generators(a.ring(), a.length(), rows);
}

namespace {

void require_over_ext(const GaloisExtension& ext, const LinearCode& code) {
  if (code.ring() != ext.ext()) throw RingMismatch("code is not over the extension ring S");
}

void require_over_base(const GaloisExtension& ext, const LinearCode& code) {
  if (code.ring() != ext.base()) throw RingMismatch("code is not over the base ring R");
}

std::vector<Elem> basis_powers(const GaloisExtension& ext) {
  std::vector<Elem> basis(ext.degree());
  for (unsigned i = 0; i < ext.degree(); ++i) basis[i] = ext.ext()->pow(ext.xi(), i);
  return basis;
}

}  // namespace

LinearCode trace_code(const GaloisExtension& ext, const LinearCode& code) {
  require_over_ext(ext, code);
  const ChainRing& S = *ext.ext();
  const auto basis = basis_powers(ext);
  std::vector<Vec> rows;
  for (const auto& g : code.rows()) {
    for (Elem alpha : basis) {
      rows.push_back(map_vector(g, [&](Elem x) { return ext.trace(S.mul(alpha, x)); }));
    }
  }
  return LinearCode::from_generators(ext.base(), code.length(), rows);
}

LinearCode restriction_by_intersection(const GaloisExtension& ext, const LinearCode& code) {
  require_over_ext(ext, code);
  if (ext.degree() == 1) return code;
  const ChainRing& S = *ext.ext();
  const std::size_t l = code.length();
  const std::size_t m = ext.degree();
  const auto basis = basis_powers(ext);

  // R-generators xi^i g_j of B, written in R^(m l): column t*l + c holds the
  // xi^t coordinate of entry c.
  std::vector<Vec> low;
  RingMatrix high(ext.base(), 0, (m - 1) * l);
  for (const auto& g : code.rows()) {
    for (Elem alpha : basis) {
      Vec lo(l), hi((m - 1) * l);
      for (std::size_t c = 0; c < l; ++c) {
        const auto coords = ext.coordinates(S.mul(alpha, g[c]));
        lo[c] = coords[0];
        for (std::size_t t = 1; t < m; ++t) hi[(t - 1) * l + c] = coords[t];
      }
      low.push_back(std::move(lo));
      high.append_row(hi);
    }
  }
  if (low.empty()) return LinearCode(ext.base(), l);

  const ChainRing& R = *ext.base();
  const RingMatrix combos = kernel(high.transpose());
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < combos.rows(); ++r) {
    Vec v(l, 0);
    for (std::size_t i = 0; i < low.size(); ++i) {
      const Elem c = combos.at(r, i);
      if (c == 0) continue;
      for (std::size_t j = 0; j < l; ++j) v[j] = R.add(v[j], R.mul(c, low[i][j]));
    }
    rows.push_back(std::move(v));
  }
  return LinearCode::from_generators(ext.base(), l, rows);
}

LinearCode restriction_by_delsarte(const GaloisExtension& ext, const LinearCode& code) {
  require_over_ext(ext, code);
  return dual(trace_code(ext, dual(code)));
}

LinearCode restriction(const GaloisExtension& ext, const LinearCode& code) {
  LinearCode direct = restriction_by_intersection(ext, code);
  const LinearCode delsarte = restriction_by_delsarte(ext, code);
  if (!(direct == delsarte)) {
    throw InternalFault("subring subcode: intersection and Delsarte routes disagree");
  }
  return direct;
}

LinearCode extension(const GaloisExtension& ext, const LinearCode& code) {
  require_over_base(ext, code);
  return LinearCode::from_generators(ext.ext(), code.length(), code.rows());
}

LinearCode frobenius_image(const GaloisExtension& ext, const LinearCode& code) {
  require_over_ext(ext, code);
  std::vector<Vec> rows;
  for (const auto& g : code.rows()) rows.push_back(map_vector(g, [&](Elem x) { return ext.frobenius(x); }));
  return LinearCode::from_generators(ext.ext(), code.length(), rows);
}

bool is_galois_invariant(const GaloisExtension& ext, const LinearCode& code) {
  return frobenius_image(ext, code) == code;
}

LinearCode residue_code(const LinearCode& code) {
  return LinearCode::from_matrix(residue_matrix(code.generator()));
}

Decomposition decompose(const GaloisExtension& ext, const LinearCode& code) {
  require_over_ext(ext, code);
  if (!code.is_free()) throw PreconditionError("decompose: code is not free");
  if (is_galois_invariant(ext, code)) throw PreconditionError("decompose: code is Galois invariant");

  const ChainRing& S = *ext.ext();
  const std::size_t l = code.length();
  const std::size_t k = code.rank();
  LinearCode b0 = extension(ext, restriction(ext, code));

  auto span_rows = b0.rows();
  std::vector<Vec> chosen;
  StandardForm residue_span = standard_form(residue_matrix(RingMatrix::from_rows(ext.ext(), l, span_rows)));
  const auto gens = code.rows();
  std::vector<std::uint64_t> idx(k, 0);
  while (residue_span.rank() < k) {
    Vec y(l, 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (idx[j] == 0) continue;
      for (std::size_t c = 0; c < l; ++c) y[c] = S.add(y[c], S.mul(static_cast<Elem>(idx[j]), gens[j][c]));
    }
    Vec ry = map_vector(y, [&](Elem x) { return S.residue(x); });
    if (!residue_span.contains(ry)) {
      chosen.push_back(y);
      span_rows.push_back(std::move(y));
      residue_span = standard_form(residue_matrix(RingMatrix::from_rows(ext.ext(), l, span_rows)));
    }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == S.size()) idx[pos++] = 0;
    if (pos == k) break;
  }

  LinearCode b1 = LinearCode::from_generators(ext.ext(), l, chosen);
  if (b0.rank() + b1.rank() != k || !b1.is_free() || !(sum_codes(b0, b1) == code)) {
    throw InternalFault("decompose: B0 + B1 is not a direct sum equal to B");
  }
  return {std::move(b0), std::move(b1)};
}

}  // namespace ringcount
