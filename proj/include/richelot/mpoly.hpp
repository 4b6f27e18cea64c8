#pragma once
// Multivariate polynomials over F2 in the fixed variable set (a, c, A, B).
//
// A monomial is a Term: four 16-bit exponents packed into one uint64_t
// (a in the low bits, then c, A, B).  Coefficients live in F2, so a
// polynomial is just the set of its monomials; we keep that set as a
// vector sorted in strictly descending grevlex order, leading term first.
//
// Monomial order: graded reverse lexicographic with a < c < A < B.
// Compare total degree first; on a tie the monomial with the SMALLER
// exponent in the least variable where they differ (scanning a, c, A, B)
// is the larger one.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "richelot/field.hpp"
#include "richelot/unipoly.hpp"

namespace richelot::mp {

inline constexpr int kNumVars = 4;
inline constexpr int kVarA = 0;  // a
inline constexpr int kVarC = 1;  // c
inline constexpr int kVarAA = 2; // A
inline constexpr int kVarBB = 3; // B
extern const std::array<const char*, kNumVars> kVarNames;

using Term = std::uint64_t;

constexpr Term make_term(unsigned ea, unsigned ec, unsigned eA, unsigned eB) {
    return Term(ea) | Term(ec) << 16 | Term(eA) << 32 | Term(eB) << 48;
}

constexpr unsigned exp_of(Term t, int var) {
    return unsigned(t >> (16 * var)) & 0xffffu;
}

unsigned term_total_deg(Term t);
int grevlex_cmp(Term u, Term v);
Term term_mul(Term u, Term v);
bool term_divides(Term d, Term t);
Term term_div(Term t, Term d);
Term term_lcm(Term u, Term v);

// Strictly descending grevlex term list; empty vector is the zero polynomial.
using MPoly = std::vector<Term>;

MPoly zero();
MPoly one();
MPoly monomial(Term t);
bool is_zero(const MPoly& p);
// Sorts and cancels duplicate pairs (F2 addition) in place.
void normalize(MPoly& p);
MPoly from_exps(const std::vector<std::array<unsigned, 4>>& exps);

MPoly add(const MPoly& p, const MPoly& q);
MPoly mul(const MPoly& p, const MPoly& q);
MPoly mul_term(const MPoly& p, Term t);
MPoly sqr(const MPoly& p);
MPoly pow_u(const MPoly& p, std::uint64_t n);

unsigned total_deg(const MPoly& p);
int deg_in(const MPoly& p, int var);
// Coefficient of var^k as a polynomial with the var-exponent cleared.
MPoly coeff_of(const MPoly& p, int var, unsigned k);
MPoly leading_coeff_in(const MPoly& p, int var);
// Formal derivative; in characteristic 2 only odd exponents survive.
MPoly derivative_wrt(const MPoly& p, int var);
// Substitutes src := dst (adds the src exponent onto dst).
MPoly subst_var(const MPoly& p, int src, int dst);

// Exact multivariate division; returns false if d does not divide p.
bool try_divide_exact(const MPoly& p, const MPoly& d, MPoly& quot);
MPoly divide_exact(const MPoly& p, const MPoly& d);

// Sylvester resultant eliminating `var`, by fraction-free (Bareiss)
// elimination over the polynomial ring.  Degenerate inputs follow the
// convention Res(p, q) = q^deg(p) when q is free of `var` (and
// symmetrically), Res = 1 when both are, Res = 0 when either is zero.
MPoly resultant_wrt(const MPoly& p, const MPoly& q, int var);

// lc^(deg p - 2 - deg p') * Res(p, p') with p' the formal derivative and
// both degrees the actual ones; a negative exponent divides exactly
// instead.  Zero derivative gives the zero polynomial.
MPoly discriminant_wrt(const MPoly& p, int var);

// Full evaluation at a point of F^4.
Fe eval(const MPoly& p, const FieldCtx& F,
               const std::array<Fe, 4>& vals);
// Partial evaluation leaving `var` free, as a univariate polynomial.
UPoly specialize(const MPoly& p, int var, const FieldCtx& F,
                     const std::array<Fe, 4>& vals);

bool equal(const MPoly& p, const MPoly& q);

// Identity checks between explicit polynomials: exact term-set equality,
// or evaluation at `trials` random points of GF(2^ext_degree)^4.
bool verify_identity_exact(const MPoly& lhs, const MPoly& rhs);
bool verify_identity_probabilistic(const MPoly& lhs, const MPoly& rhs,
                                   int ext_degree, int trials,
                                   std::uint64_t seed);

// Text form "a^8 B^4 + a^6 c B^2 + 1"; terms in descending grevlex order.
std::string to_string(const MPoly& p);
MPoly parse(const std::string& text);

} // namespace richelot::mp
