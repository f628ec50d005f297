#include "ringcount/polynomial.hpp"

namespace ringcount {

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod_monic(const ChainRing& ring, Poly a, const Poly& monic) {
  const std::size_t d = monic.size() - 1;
  poly_trim(a);
  while (a.size() > d) {
    const std::size_t top = a.size() - 1;
    const Elem c = a[top];
    for (std::size_t j = 0; j < d; ++j) {
      a[top - d + j] = ring.sub(a[top - d + j], ring.mul(c, monic[j]));
    }
    a[top] = 0;
    poly_trim(a);
  }
  return a;
}

Elem poly_eval(const ChainRing& ring, const Poly& f, Elem x) {
  Elem acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = ring.add(ring.mul(acc, x), *it);
  return acc;
}

Poly poly_derivative(const ChainRing& ring, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = ring.mul(ring.from_integer(static_cast<std::int64_t>(i)), f[i]);
  return d;
}

namespace {

Poly monic_from_code(std::uint64_t code, unsigned degree, std::uint64_t radix) {
  Poly f(degree + 1);
  for (unsigned i = 0; i < degree; ++i) {
    f[i] = static_cast<Elem>(code % radix);
    code /= radix;
  }
  f[degree] = 1;
  return f;
}

}  // namespace

bool is_irreducible(const ChainRing& field, const Poly& monic) {
  const unsigned deg = static_cast<unsigned>(monic.size() - 1);
  if (deg == 0) return false;
  const std::uint64_t radix = field.size();
  for (unsigned d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= radix;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (poly_mod_monic(field, monic, monic_from_code(code, d, radix)).empty()) return false;
    }
  }
  return true;
}

Poly find_irreducible(const ChainRing& field, unsigned degree) {
  if (!field.is_field()) throw PreconditionError("find_irreducible: base is not a field");
  if (degree == 0) throw ParameterError("find_irreducible: degree must be >= 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= field.size();
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = monic_from_code(code, degree, field.size());
    if (is_irreducible(field, f)) return f;
  }
  throw InternalFault("no irreducible polynomial found");
}

}  // namespace ringcount
