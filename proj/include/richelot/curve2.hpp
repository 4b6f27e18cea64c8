#pragma once
// Standard models of supersingular genus-2 curves in characteristic 2:
//   generic:  y² + y = s(x⁵ + x³), s ≠ 0
//   special:  y² + y = x⁵
// together with their supersingular invariant, full automorphism groups,
// the conjugacy classification of order-4 automorphisms, and the explicit
// quotient-by-an-involution identity used to recognize the elliptic factor.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "richelot/field.hpp"
#include "richelot/unipoly.hpp"

namespace richelot::cv {

struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CurveModel {
    FieldCtx F;   // field of definition of s (GF(2) for the special curve)
    bool special; // true: y² + y = x⁵;  false: y² + y = s(x⁵ + x³)
    Fe s;         // zero iff special

    static CurveModel generic(const FieldCtx& F, const Fe& s);
    static CurveModel special_curve();
    // zero invariant selects the special curve; otherwise s is the unique
    // 16th root of the invariant (Frobenius is bijective)
    static CurveModel from_invariant(const FieldCtx& F, const Fe& invariant);
};

struct InvariantValue {
    Fe value;
};

// generic(s) ↦ s^16, special ↦ 0
InvariantValue supersingular_invariant(const CurveModel& C);

// [J2 : J4 : J6 : J8 : J10]; generic(s) ↦ [0:0:0:s^8:s^6], special ↦ [0:0:0:0:1]
std::array<Fe, 5> igusa_vector(const CurveModel& C);

// (x, y) ↦ (ζx + t, y + f2·x² + f1·x + f0), ζ a 5th root of unity (1 unless
// the curve is special)
struct Automorphism {
    Fe zeta, t, f0, f1, f2;
    bool operator==(const Automorphism&) const = default;
};

Automorphism aut_identity();
Automorphism aut_iota(); // hyperelliptic involution (x, y) ↦ (x, y + 1)

std::pair<Fe, Fe> aut_apply(const FieldCtx& F, const Automorphism& a,
                            const Fe& x, const Fe& y);
Automorphism aut_compose(const FieldCtx& F, const Automorphism& a,
                         const Automorphism& b); // x ↦ a(b(x))
Automorphism aut_inverse(const FieldCtx& F, const Automorphism& a);
int aut_order(const FieldCtx& F, const Automorphism& a);
bool aut_less(const Automorphism& a, const Automorphism& b);

// the defining constraints relating (ζ, t, f) to the curve parameters
bool aut_valid(const FieldCtx& F, const Automorphism& a, bool special,
               const Fe& s);

// The full automorphism group over ctx: 32 elements (generic) or 160
// (special).  Throws FieldTooSmall unless ctx splits the translation
// polynomial and admits every shift constant.
std::vector<Automorphism> automorphisms(const CurveModel& C,
                                        const FieldCtx& ctx);

// element order -> multiplicity
std::map<int, std::size_t> order_census(const FieldCtx& F,
                                        const std::vector<Automorphism>& G);

// Full Cayley-table closure + inverse check.  The jobs parameter selects the
// OpenMP kernel; the _reference variant is the plain serial loop the tests
// compare against.
bool group_axioms_hold(const FieldCtx& F, const std::vector<Automorphism>& G,
                       int jobs);
bool group_axioms_hold_reference(const FieldCtx& F,
                                 const std::vector<Automorphism>& G);

struct Order4Classes {
    FieldCtx field; // the working field the group was enumerated over
    std::size_t count = 0;
    std::vector<Automorphism> reps; // one representative per class
};

// Conjugacy classes of order-4 automorphisms, by exhaustive conjugation
// inside the enumerated group, cross-checked against the translation
// criterion (equal t, or equal t^5 on the special curve).  Finds a large
// enough working field itself.
Order4Classes order4_classes(const CurveModel& C);

// smallest extension of C.F over which the full group exists
FieldCtx automorphism_field(const CurveModel& C);

// Verifies, over the field of (r, s) with s² + s = r⁵ and r ≠ 0, the
// explicit quotient of y² + y = x⁵ + bx³ (b = (r⁵+1)/r) by the involution
// α: (x, y) ↦ (x + r², y + rx² + r³x + s): invariance of u = x² + r²x and
// v = y + (x/r²)(rx² + r³x + s), the relation v² + v = u³/r² + (s/r⁴)u,
// α² = id, and the companion involution α′ with αα′ = hyperelliptic
// involution.  Exact polynomial identities; throws PreconditionViolated.
bool verify_quotient_identity(const FieldCtx& F, const Fe& r, const Fe& s);

// Exact factorizations of the translation polynomials, as bivariate
// identities in (s, T):
//   s³T¹⁶ + s³T⁸ + sT² + T = T(sT⁵ + sT + 1)(s²T¹⁰ + s²T⁶ + sT⁵ + 1)
//   T¹⁶ + T = T(T⁵ + 1)(T¹⁰ + T⁵ + 1)
bool translation_factorization_generic();
bool translation_factorization_special();

} // namespace richelot::cv
