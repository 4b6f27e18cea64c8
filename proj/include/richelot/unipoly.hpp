#pragma once
#include "richelot/field.hpp"

#include <utility>
#include <vector>

namespace richelot {

// Univariate polynomial over a FieldCtx: coefficient i belongs to t^i.
// Trimmed (no zero leading coefficient); zero polynomial = empty vector.
using UPoly = std::vector<Fe>;

namespace up {

void trim(UPoly& p);
int deg(const UPoly& p); // -1 for zero
UPoly from_coeffs(std::vector<Fe> cs);
UPoly constant(const Fe& c);
UPoly monomial(const Fe& c, int n);

UPoly add(const FieldCtx& F, const UPoly& a, const UPoly& b);
UPoly mul(const FieldCtx& F, const UPoly& a, const UPoly& b);
UPoly mul_sc(const FieldCtx& F, const UPoly& a, const Fe& c);
UPoly pow(const FieldCtx& F, UPoly base, uint64_t e);
void divrem(const FieldCtx& F, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly mod(const FieldCtx& F, const UPoly& a, const UPoly& b);
UPoly gcd(const FieldCtx& F, UPoly a, UPoly b); // monic
UPoly monic(const FieldCtx& F, UPoly p);
UPoly derivative(const FieldCtx& F, const UPoly& p);
Fe eval(const FieldCtx& F, const UPoly& p, const Fe& x);
UPoly sqrt_even(const FieldCtx& F, const UPoly& p); // p(t) = q(t)^2 -> q
UPoly radical(const FieldCtx& F, const UPoly& p);   // squarefree part, monic
UPoly compose(const FieldCtx& F, const UPoly& p, const UPoly& q); // p(q(t))
UPoly mulmod(const FieldCtx& F, const UPoly& a, const UPoly& b, const UPoly& m);
UPoly frobenius_mod(const FieldCtx& F, const UPoly& a, const UPoly& m); // a^(2^k) mod m

// resultant of two univariate polynomials (subresultant-free Euclid variant,
// valid over a field in characteristic 2)
Fe resultant(const FieldCtx& F, UPoly a, UPoly b);

} // namespace up

// monic irreducible factors with multiplicities, deterministically ordered by
// (degree, coefficient bitstrings); randomness only inside the equal-degree
// splitting, drawn from the provided stream
std::vector<std::pair<UPoly, int>> factor_univariate(const FieldCtx& F, const UPoly& p, Rng& rng);

// roots in the field itself (each once; input need not be squarefree)
std::vector<Fe> roots_in_field(const FieldCtx& F, const UPoly& p, Rng& rng);

// roots of p (over base) inside the degree-m extension, with the context and
// embedding used to get there
struct ExtensionRoots {
    FieldCtx ext;
    Fe base_gen_image;     // image of the base generator in ext
    std::vector<Fe> roots; // elements of ext
};
ExtensionRoots roots_in_extension(const FieldCtx& base, const UPoly& p, int m, Rng& rng);

// map a polynomial's coefficients through an embedding
UPoly map_poly(const Embedding& phi, const UPoly& p);

} // namespace richelot
