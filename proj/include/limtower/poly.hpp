#pragma once
#include <vector>

#include "limtower/int_matrix.hpp"

namespace limtower {

/* Integer polynomials, coefficients ascending by degree. Only what the
 * endomorphism analysis needs: characteristic polynomials, exact division,
 * and factorization of monic polynomials at desk scale. */
using Poly = std::vector<Int>;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p); // -1 for the zero polynomial
Poly poly_mul(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& p, Poly* quotient = nullptr);
Int poly_eval(const Poly& p, const Int& x);
bool poly_is_monic(const Poly& p);

// Faddeev-LeVerrier; all divisions are exact over the integers.
Poly char_poly(const IntMatrix& a);

// p(a) for a square matrix a
IntMatrix poly_apply(const Poly& p, const IntMatrix& a);

/* Irreducible factors of a monic integer polynomial with multiplicities.
 * Integer roots first, then Kronecker interpolation for higher degrees;
 * exponential in the degree but fine for the matrix sizes this library
 * targets. */
struct PolyFactor {
    Poly factor;
    int multiplicity;
};
std::vector<PolyFactor> factor_monic(const Poly& p);

/* Product of the irreducible factors (with multiplicity) whose constant term
 * is +-1: the part of the spectrum invertible over the integers. */
Poly unit_part(const Poly& char_polynomial);

} // namespace limtower
