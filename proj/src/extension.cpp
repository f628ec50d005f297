#include "ringcount/extension.hpp"

namespace ringcount {

namespace {

constexpr std::uint64_t kFrobeniusTableLimit = 1ULL << 16;

}  // namespace

GaloisExtension::GaloisExtension(Private, RingPtr base, RingPtr ext, unsigned degree)
    : base_(std::move(base)), ext_(std::move(ext)), degree_(degree) {
  if (degree_ == 1) {
    modulus_ = {0, 1};
    xi_ = 0;
    sigma_basis_ = {ext_->one()};
  } else {
    if (ext_->base() != base_ || ext_->level_degree() != degree_) {
      throw ParameterError("extension ring is not a degree-m level over the base");
    }
    modulus_ = ext_->modulus();
    xi_ = ext_->generator();
    const ChainRing& S = *ext_;
    const Poly df = poly_derivative(S, modulus_);
    Elem root = S.pow(xi_, base_->q());
    for (std::uint32_t it = 0; it < 2 * S.s() + 2; ++it) {
      const Elem value = poly_eval(S, modulus_, root);
      if (value == 0) break;
      root = S.sub(root, S.mul(value, S.inverse(poly_eval(S, df, root))));
    }
    if (poly_eval(S, modulus_, root) != 0) throw InternalFault("Newton lift of the Frobenius root did not converge");
    sigma_basis_.resize(degree_);
    sigma_basis_[0] = S.one();
    for (unsigned i = 1; i < degree_; ++i) sigma_basis_[i] = S.mul(sigma_basis_[i - 1], root);
  }

  if (degree_ > 1 && ext_->size() <= kFrobeniusTableLimit) {
    const auto size = ext_->size();
    std::vector<Elem> sigma(size);
    for (std::uint64_t x = 0; x < size; ++x) sigma[x] = frobenius(static_cast<Elem>(x));
    sigma_table_ = std::move(sigma);
    std::vector<Elem> tr(size);
    for (std::uint64_t x = 0; x < size; ++x) tr[x] = trace(static_cast<Elem>(x));
    trace_table_ = std::move(tr);
  }

  if (!base_->is_field()) {
    residue_ = std::make_shared<const GaloisExtension>(Private{}, base_->residue_field_ptr(),
                                                       ext_->residue_field_ptr(), degree_);
  }
}

ExtPtr GaloisExtension::make(RingPtr base, unsigned degree) {
  if (degree < 1) throw ParameterError("extension degree must be >= 1");
  if (degree == 1) return std::make_shared<const GaloisExtension>(Private{}, base, base, 1);
  Poly f = find_irreducible(base->residue_field(), degree);
  for (auto& c : f) c = base->lift(c);
  RingPtr ext = ChainRing::adjoin(base, std::move(f));
  return std::make_shared<const GaloisExtension>(Private{}, std::move(base), std::move(ext), degree);
}

ExtPtr GaloisExtension::with_modulus(RingPtr base, Poly modulus) {
  if (modulus.size() < 2) throw ParameterError("extension degree must be >= 1");
  const auto degree = static_cast<unsigned>(modulus.size() - 1);
  if (degree == 1) return std::make_shared<const GaloisExtension>(Private{}, base, base, 1);
  RingPtr ext = ChainRing::adjoin(base, std::move(modulus));
  return std::make_shared<const GaloisExtension>(Private{}, std::move(base), std::move(ext), degree);
}

std::vector<Elem> GaloisExtension::coordinates(Elem x) const {
  if (degree_ == 1) return {x};
  return ext_->coefficients(x);
}

Elem GaloisExtension::from_coordinates(const std::vector<Elem>& coords) const {
  if (coords.size() != degree_) throw ParameterError("expected m coordinates");
  if (degree_ == 1) return coords[0];
  return ext_->from_coefficients(coords);
}

Elem GaloisExtension::frobenius(Elem x) const {
  if (degree_ == 1) return x;
  if (!sigma_table_.empty()) return sigma_table_[x];
  const auto c = ext_->coefficients(x);
  Elem acc = 0;
  for (unsigned i = 0; i < degree_; ++i) {
    if (c[i] != 0) acc = ext_->add(acc, ext_->mul(c[i], sigma_basis_[i]));
  }
  return acc;
}

Elem GaloisExtension::frobenius_power(Elem x, unsigned j) const {
  for (unsigned i = 0; i < j % degree_; ++i) x = frobenius(x);
  return x;
}

Elem GaloisExtension::trace(Elem x) const {
  if (degree_ == 1) return x;
  if (!trace_table_.empty()) return trace_table_[x];
  Elem acc = 0;
  Elem y = x;
  for (unsigned j = 0; j < degree_; ++j) {
    acc = ext_->add(acc, y);
    y = frobenius(y);
  }
  if (!in_base(acc)) throw InternalFault("trace left the base ring");
  return acc;
}

void GaloisExtension::check_in_ext(const RingElement& x) const {
  if (x.ring() != ext_) throw RingMismatch("element is not in the extension ring");
}

RingElement GaloisExtension::frobenius(const RingElement& x) const {
  check_in_ext(x);
  return {ext_, frobenius(x.code())};
}

RingElement GaloisExtension::trace(const RingElement& x) const {
  check_in_ext(x);
  return {base_, trace(x.code())};
}

}  // namespace ringcount
