#include "ringcount/ring.hpp"

#include <algorithm>
#include <limits>

#include "ringcount/polynomial.hpp"

namespace ringcount {

namespace {

constexpr std::uint64_t kMaxRingSize = 1ULL << 24;
constexpr std::uint64_t kTableLimit = 1024;
constexpr std::uint64_t kValuationTableLimit = 1ULL << 16;

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > kMaxRingSize / base + 1) throw ParameterError("ring too large");
    r *= base;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

ChainRing::ChainRing(Private, Family family, std::uint32_t p, std::uint32_t s) : family_(family), p_(p), s_(s) {
  if (!is_prime(p)) throw ParameterError("p must be prime, got " + std::to_string(p));
  if (s < 1) throw ParameterError("nilpotency index s must be >= 1");
  p_pow_s_ = checked_pow(p, s);
  if (p_pow_s_ > kMaxRingSize) throw ParameterError("ring too large");
  size_ = p_pow_s_;
  q_ = p;
  n_ = 1;
  degree_ = 1;
  if (s > 1) residue_ = std::make_shared<ChainRing>(Private{}, Family::galois_ring, p, 1);
  build_tables();
}

ChainRing::ChainRing(Private, RingPtr base, std::vector<Elem> modulus)
    : family_(base->family()),
      p_(base->p()),
      s_(base->s()),
      p_pow_s_(base->p_pow_s_),
      base_(std::move(base)),
      modulus_(std::move(modulus)) {
  degree_ = static_cast<std::uint32_t>(modulus_.size() - 1);
  size_ = checked_pow(base_->size(), degree_);
  if (size_ > kMaxRingSize) throw ParameterError("ring too large");
  n_ = base_->n() * degree_;
  q_ = checked_pow(p_, n_);
  if (s_ > 1) {
    Poly reduced(modulus_.size());
    for (std::size_t i = 0; i < modulus_.size(); ++i) reduced[i] = base_->residue(modulus_[i]);
    residue_ = std::make_shared<ChainRing>(Private{}, base_->residue_field_ptr(), std::move(reduced));
  }
  build_tables();
}

RingPtr ChainRing::make(Family family, std::uint32_t p, std::uint32_t s, std::uint32_t n) {
  if (n < 1) throw ParameterError("residue degree n must be >= 1");
  auto leaf = std::make_shared<const ChainRing>(Private{}, family, p, s);
  if (n == 1) return leaf;
  // Coefficients of the residue polynomial are digits < p, which are also
  // their own lifts in the leaf.
  Poly g = find_irreducible(leaf->residue_field(), n);
  return adjoin(leaf, std::move(g));
}

RingPtr ChainRing::adjoin(RingPtr base, std::vector<Elem> modulus) {
  if (modulus.size() < 2) throw ParameterError("modulus must have degree >= 1");
  if (modulus.back() != base->one()) throw ParameterError("modulus must be monic");
  for (Elem c : modulus) {
    if (c >= base->size()) throw ParameterError("modulus coefficient out of range");
  }
  Poly reduced(modulus.size());
  for (std::size_t i = 0; i < modulus.size(); ++i) reduced[i] = base->residue(modulus[i]);
  if (!is_irreducible(base->residue_field(), reduced)) {
    throw ParameterError("modulus is not basic irreducible");
  }
  return std::make_shared<const ChainRing>(Private{}, std::move(base), std::move(modulus));
}

RingPtr ChainRing::residue_field_ptr() const { return residue_ ? residue_ : shared_from_this(); }

void ChainRing::build_tables() {
  if (size_ <= kValuationTableLimit) {
    val_table_.resize(size_);
    for (std::uint64_t x = 0; x < size_; ++x) val_table_[x] = static_cast<std::uint8_t>(valuation_raw(static_cast<Elem>(x)));
  }
  if (size_ <= kTableLimit) {
    add_table_.resize(size_ * size_);
    mul_table_.resize(size_ * size_);
    for (std::uint64_t a = 0; a < size_; ++a) {
      for (std::uint64_t b = 0; b < size_; ++b) {
        add_table_[a * size_ + b] = add_raw(static_cast<Elem>(a), static_cast<Elem>(b));
        mul_table_[a * size_ + b] = mul_raw(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    }
  }
}

Elem ChainRing::generator() const {
  if (is_leaf()) throw PreconditionError("leaf ring has no polynomial generator");
  return degree_ >= 2 ? static_cast<Elem>(base_->size()) : base_->neg(modulus_[0]);
}

Elem ChainRing::from_integer(std::int64_t v) const {
  if (base_) return base_->from_integer(v);
  const auto mod = static_cast<std::int64_t>(family_ == Family::galois_ring ? p_pow_s_ : p_);
  std::int64_t r = v % mod;
  if (r < 0) r += mod;
  return static_cast<Elem>(r);
}

std::vector<Elem> ChainRing::coefficients(Elem x) const {
  if (!base_) return {x};
  std::vector<Elem> c(degree_);
  const std::uint64_t radix = base_->size();
  std::uint64_t v = x;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    c[i] = static_cast<Elem>(v % radix);
    v /= radix;
  }
  return c;
}

Elem ChainRing::from_coefficients(const std::vector<Elem>& coeffs) const {
  if (!base_) return coeffs.empty() ? 0 : coeffs[0];
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * base_->size() + coeffs[i];
  return static_cast<Elem>(v);
}

Elem ChainRing::add_raw(Elem a, Elem b) const {
  if (!base_) {
    if (family_ == Family::galois_ring) return static_cast<Elem>((std::uint64_t{a} + b) % p_pow_s_);
    Elem r = 0;
    Elem scale = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  for (std::uint32_t i = 0; i < degree_; ++i) ca[i] = base_->add(ca[i], cb[i]);
  return from_coefficients(ca);
}

Elem ChainRing::neg_raw(Elem a) const {
  if (!base_) {
    if (family_ == Family::galois_ring) return static_cast<Elem>((p_pow_s_ - a) % p_pow_s_);
    Elem r = 0;
    Elem scale = 1;
    for (std::uint32_t i = 0; i < s_; ++i) {
      r += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return r;
  }
  auto ca = coefficients(a);
  for (auto& c : ca) c = base_->neg(c);
  return from_coefficients(ca);
}

Elem ChainRing::mul_raw(Elem a, Elem b) const {
  if (!base_) {
    if (family_ == Family::galois_ring) return static_cast<Elem>((std::uint64_t{a} * b) % p_pow_s_);
    // truncated polynomial product in u, digits base p
    std::vector<std::uint64_t> da(s_), db(s_), prod(s_, 0);
    for (std::uint32_t i = 0; i < s_; ++i) {
      da[i] = a % p_;
      db[i] = b % p_;
      a /= p_;
      b /= p_;
    }
    for (std::uint32_t i = 0; i < s_; ++i) {
      for (std::uint32_t j = 0; i + j < s_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    Elem r = 0;
    for (std::uint32_t i = s_; i-- > 0;) r = r * p_ + static_cast<Elem>(prod[i]);
    return r;
  }
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  const std::uint32_t d = degree_;
  std::vector<Elem> prod(2 * d - 1, 0);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
  }
  for (std::uint32_t k = 2 * d - 1; k-- > d;) {
    const Elem c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t j = 0; j < d; ++j) prod[k - d + j] = base_->sub(prod[k - d + j], base_->mul(c, modulus_[j]));
    prod[k] = 0;
  }
  prod.resize(d);
  return from_coefficients(prod);
}

Elem ChainRing::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[std::uint64_t{a} * size_ + b];
  return add_raw(a, b);
}

Elem ChainRing::neg(Elem a) const {
  if (a == 0) return 0;
  return neg_raw(a);
}

Elem ChainRing::mul(Elem a, Elem b) const {
  if (!mul_table_.empty()) return mul_table_[std::uint64_t{a} * size_ + b];
  return mul_raw(a, b);
}

Elem ChainRing::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem ChainRing::theta_pow(std::uint32_t a) const {
  if (a >= s_) return 0;
  return pow(theta(), a);
}

Elem ChainRing::inverse(Elem a) const {
  if (!is_unit(a)) throw UnitRequired("element is not a unit");
  const std::uint64_t unit_order = size_ - size_ / q_;
  return pow(a, unit_order - 1);
}

std::uint32_t ChainRing::valuation_raw(Elem a) const {
  if (!base_) {
    if (a == 0) return s_;
    std::uint32_t v = 0;
    while (a % p_ == 0) {
      a /= p_;
      ++v;
    }
    return v;
  }
  std::uint32_t v = s_;
  for (Elem c : coefficients(a)) v = std::min(v, base_->valuation(c));
  return v;
}

std::uint32_t ChainRing::valuation(Elem a) const {
  if (!val_table_.empty()) return val_table_[a];
  return valuation_raw(a);
}

Elem ChainRing::divide_theta(Elem x, std::uint32_t a) const {
  if (a == 0) return x;
  if (valuation(x) < a) throw PreconditionError("divide_theta: element not divisible by theta^a");
  if (!base_) {
    std::uint64_t pa = 1;
    for (std::uint32_t i = 0; i < a && i < s_; ++i) pa *= p_;
    return static_cast<Elem>(x / pa);
  }
  auto c = coefficients(x);
  for (auto& v : c) v = base_->divide_theta(v, a);
  return from_coefficients(c);
}

Elem ChainRing::reduce_mod_theta(Elem x, std::uint32_t a) const {
  if (a >= s_) return x;
  if (!base_) {
    std::uint64_t pa = 1;
    for (std::uint32_t i = 0; i < a; ++i) pa *= p_;
    return static_cast<Elem>(x % pa);
  }
  auto c = coefficients(x);
  for (auto& v : c) v = base_->reduce_mod_theta(v, a);
  return from_coefficients(c);
}

Elem ChainRing::residue(Elem x) const {
  if (s_ == 1) return x;
  if (!base_) return x % p_;
  const auto c = coefficients(x);
  std::uint64_t v = 0;
  const std::uint64_t radix = base_->residue_field().size();
  for (std::size_t i = c.size(); i-- > 0;) v = v * radix + base_->residue(c[i]);
  return static_cast<Elem>(v);
}

Elem ChainRing::lift(Elem y) const {
  if (s_ == 1 || !base_) return y;
  const std::uint64_t radix = base_->residue_field().size();
  std::vector<Elem> c(degree_);
  std::uint64_t v = y;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    c[i] = base_->lift(static_cast<Elem>(v % radix));
    v /= radix;
  }
  return from_coefficients(c);
}

std::vector<std::uint32_t> ChainRing::leaf_digits(Elem x) const {
  if (!base_) return {x};
  std::vector<std::uint32_t> out;
  for (Elem c : coefficients(x)) {
    auto sub = base_->leaf_digits(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

Elem ChainRing::from_leaf_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() != n_) throw ParameterError("expected " + std::to_string(n_) + " leaf coefficients");
  if (!base_) {
    if (digits[0] >= p_pow_s_) throw ParameterError("leaf coefficient out of range");
    return digits[0];
  }
  const std::size_t chunk = base_->n();
  std::vector<Elem> c(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) {
    std::vector<std::uint32_t> part(digits.begin() + static_cast<std::ptrdiff_t>(i * chunk),
                                    digits.begin() + static_cast<std::ptrdiff_t>((i + 1) * chunk));
    c[i] = base_->from_leaf_digits(part);
  }
  return from_coefficients(c);
}

std::vector<Elem> ChainRing::ideal_elements(std::uint32_t a) const {
  std::vector<Elem> out;
  for (std::uint64_t x = 0; x < size_; ++x) {
    if (valuation(static_cast<Elem>(x)) >= a) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

std::string ChainRing::name() const {
  const std::string qs = std::to_string(q_);
  if (s_ == 1) return "F" + qs;
  if (family_ == Family::galois_ring) {
    const std::string ps = std::to_string(p_pow_s_);
    return n_ == 1 ? "Z" + ps : "GR(" + ps + "," + std::to_string(n_) + ")";
  }
  return "F" + qs + "[u]/(u^" + std::to_string(s_) + ")";
}

RingElement::RingElement(RingPtr ring, Elem code) : ring_(std::move(ring)), code_(code) {
  if (!ring_) throw ParameterError("null ring handle");
  if (code_ >= ring_->size()) throw ParameterError("element code out of range");
}

void RingElement::check_same(const RingElement& o) const {
  if (ring_ != o.ring_) throw RingMismatch("elements belong to different rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->add(code_, o.code_)};
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->sub(code_, o.code_)};
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->mul(code_, o.code_)};
}

RingElement RingElement::operator-() const { return {ring_, ring_->neg(code_)}; }

}  // namespace ringcount
