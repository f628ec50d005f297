#pragma once

#include <vector>

#include "ringcount/ring.hpp"

namespace ringcount {

/// Dense polynomial over a ChainRing, coefficients low to high.
using Poly = std::vector<Elem>;

void poly_trim(Poly& a);
Poly poly_mod_monic(const ChainRing& ring, Poly a, const Poly& monic);
Elem poly_eval(const ChainRing& ring, const Poly& f, Elem x);
Poly poly_derivative(const ChainRing& ring, const Poly& f);

/// Irreducibility over a finite field by trial division with every monic
/// polynomial of degree <= deg(f)/2.
bool is_irreducible(const ChainRing& field, const Poly& monic);

/// Monic irreducible of the given degree over `field` with the smallest
/// coefficient code (c_0 + c_1*|F| + ... + c_{d-1}*|F|^(d-1)).
Poly find_irreducible(const ChainRing& field, unsigned degree);

}  // namespace ringcount
