#pragma once
// Enumeration of dihedral gluing diagrams between two genus-2 curves in
// characteristic 2.  Each side is either the generic curve
// y² + y = P²(x⁵ + x³) with parameter P (A on the left, B on the right) or
// the special curve y² + y = x⁵.  A diagram is determined by a pair (a, c)
// solving the defining relations plus one of 16 gluing translations e; from
// it the genus-4 top curve and its two double covers are reconstructed.

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "richelot/field.hpp"
#include "richelot/unipoly.hpp"

namespace richelot::dh {

struct ParameterZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidPair : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateDiagram : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which two curves are being glued, over which field.  A and B are the
// quintic coefficients; the value on a special side is ignored (kept zero).
struct DiagramParams {
    FieldCtx F;
    Fe A, B;
    bool left_special = false;
    bool right_special = false;
};

// parameter of a side with the special-curve convention P̂ = 1
Fe left_coeff(const DiagramParams& prm);
Fe right_coeff(const DiagramParams& prm);

struct DihedralSolution {
    DiagramParams prm;
    Fe a, c; // defining pair, both nonzero, r1 = r2 = 0, r3 ≠ 0
    Fe e;    // gluing translation, root of the degree-16 e-equation
    Fe b, d; // derived: b = Â·c², d = B̂·a²
};

// builds the derived quantities and validates everything; throws InvalidPair
DihedralSolution make_solution(const DiagramParams& prm, const Fe& a,
                               const Fe& c, const Fe& e);

struct SolveDiagnostics {
    int m = 1;  // splitting degree of the pair field over the base
    int le = 1; // extra degree the e-equations need over the pair field
    int lx = 1; // splitting degree of the left curve's translation polynomial
    std::vector<int> eliminant_factor_degrees; // distinct irreducible factors
    int pair_field_bits = 0;
    int full_field_bits = 0;
};

struct PairSolutions {
    DiagramParams prm;                    // over the full working field
    std::vector<std::pair<Fe, Fe>> pairs; // (a, c), sorted
    SolveDiagnostics diag;
};

// All solutions of r1 = r2 = 0 with a, c ≠ 0 and r3 ≠ 0 over the algebraic
// closure, realised inside one explicit extension of `base`.  The count is
// first derived factor-by-factor in quotient rings of the eliminant (so it
// covers the closure), then reproduced by explicit root collection; A = B
// switches the eliminant to the equal-invariant factorisation.  `jobs`
// parallelises the per-root processing; the _reference variant is the plain
// serial loop kept for testing.
PairSolutions solve_pairs(const FieldCtx& base, const Fe& A, const Fe& B,
                          int jobs = 1);
PairSolutions solve_pairs_reference(const FieldCtx& base, const Fe& A,
                                    const Fe& B);

// Right-hand curve special: 60 solutions falling into 12 free orbits of
// size 5 under (a, c) ↦ (ζa, ζ³c) with ζ⁵ = 1.  Requires 4 | base.k().
struct SpecialOrbits {
    PairSolutions flat;
    std::vector<std::vector<std::pair<Fe, Fe>>> orbits;
};
SpecialOrbits solve_pairs_special(const FieldCtx& base, const Fe& A,
                                  int jobs = 1);

// Both curves special: the same elimination route yields no admissible
// solutions; the emptiness is established per eliminant factor over the
// closure and re-checked explicitly over a twice-larger extension.
PairSolutions solve_special_special();

// The 16 roots of the e-equation of a valid pair, sorted.  The equation is
// rebuilt from scratch by expanding the gluing condition with e symbolic;
// throws FieldTooSmall if the roots are not rational over prm.F.
std::vector<Fe> solve_e(const DiagramParams& prm, const Fe& a, const Fe& c);

// t-expansion coefficients s0..s10 of A-side-RHS(x(t)) + B-side-RHS(u(t))
// with x(t) = (c·t² + d²·t + c·e²)/r3 and u(t) = (a·t² + b²·t + a·e²)/r3
std::array<Fe, 11> expand_S(const DihedralSolution& sol);

// Artin–Schreier normal form: every even-degree term c·t^(2m), m ≥ 1, is
// replaced by √c·t^m (they differ by (√c·t^m)² + √c·t^m), and the constant
// is reduced to 0 or the field's fixed trace-1 representative.
UPoly as_normal_form(const FieldCtx& F, const UPoly& p);

struct CoverData {
    UPoly subst; // x(t) resp. u(t), degree 2
    UPoly shift; // (t, w) ↦ (subst(t), w + shift(t)) maps onto the side curve
};
struct Genus4Curve {
    FieldCtx F;
    UPoly as_poly; // degree 9: the top curve is w² + w = as_poly(t)
    CoverData to_c1, to_c2;
};

// Reconstructs the genus-4 curve: both side pullbacks must reduce to the
// same normal form (else InvalidPair), and its degree must be 9 (else
// DegenerateDiagram).  pullback = as_poly + shift² + shift holds exactly.
// The 16 translations of a pair give isomorphic diagrams, so the model is
// canonicalised to the smallest translation: the result depends only on
// (a, c), and the covers use that translation's constant term.
Genus4Curve build_genus4(const DihedralSolution& sol);

// Verifies that x0 ↦ a·x0 + Â·c²·√x0 maps the 16 roots of the left curve's
// translation polynomial T¹⁶ + T⁸ + Â⁻⁴T² + Â⁻⁶T bijectively onto the
// difference set of the 16 e-roots (so the e-fiber is one orbit and the
// reconstructed diagram does not depend on the choice of e).
bool e_orbit_check(const DihedralSolution& sol);

} // namespace richelot::dh
