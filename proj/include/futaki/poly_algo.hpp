#pragma once

#include "futaki/param_poly.hpp"

#include <vector>

namespace futaki {

/// Square-free decomposition p = lc * prod f_i^i (Yun). Factors are monic and
/// pairwise coprime; constant factors are omitted.
struct SquareFreeFactor {
    ParamPoly factor;
    int multiplicity;
};
std::vector<SquareFreeFactor> square_free_decomposition(const ParamPoly& p);

/// Product of the distinct irreducible factors of p, monic.
ParamPoly square_free_part(const ParamPoly& p);

/// Canonical Sturm sequence p, p', -rem(...), ... of a nonzero polynomial.
std::vector<ParamPoly> sturm_sequence(const ParamPoly& p);

/// Sign variations of the sequence evaluated at x (zeros skipped).
int sign_variations(const std::vector<ParamPoly>& sequence, const Rational& x);

/// Number of distinct real roots of p in the half-open interval (lo, hi].
int sturm_count(const std::vector<ParamPoly>& sequence, const Rational& lo, const Rational& hi);

/// Every real root of p lies strictly inside (-bound, bound).
Rational cauchy_bound(const ParamPoly& p);

/// p = content * primitive, primitive with integer coefficients, gcd 1 and
/// positive leading coefficient.
struct PrimitiveForm {
    Rational content;
    ParamPoly primitive;
};
PrimitiveForm primitive_form(const ParamPoly& p);

/// Distinct rational roots by the rational root theorem, ascending. Integer
/// coefficients larger than the trial-division cap make the search partial
/// (it then returns only the roots it could certify).
std::vector<Rational> rational_roots(const ParamPoly& p);

/// Factorization over Q into primitive integer factors with multiplicities.
/// Linear factors are split off exactly; any remaining cofactor is reported
/// as a single (possibly reducible) primitive factor of degree >= 2.
struct IntegerFactor {
    ParamPoly factor;  // primitive, positive leading coefficient
    int multiplicity;
};
struct IntegerFactorization {
    Rational unit;
    std::vector<IntegerFactor> factors;  // sorted: by degree, then coefficients
};
IntegerFactorization factor_over_q(const ParamPoly& p);

}  // namespace futaki
