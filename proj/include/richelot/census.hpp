#pragma once
// The full isogeny census between two supersingular genus-2 curves in
// characteristic 2: dihedral gluing diagrams, degenerate (quotient)
// constructions, and the Frobenius/Verschiebung specials, classified by
// the relations between the two quintic coefficients A and B.  Also hosts
// the identity-verification suite that pins every symbolic ingredient the
// counts rest on.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "richelot/dihedral.hpp"
#include "richelot/field.hpp"
#include "richelot/systems.hpp"

namespace richelot::cs {

struct InvalidCombination : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Row layout of the count table, determined by which of A = B, B = A²,
// A = B² hold:
//   1: none                 4: B = A² and A = B², A ≠ B (cube roots)
//   2: B = A² only          5: A = B only
//   3: A = B² only          6: A = B = 1 (all three)
// A = B together with exactly one square relation cannot occur over a
// field; classify_flags rejects such patterns.
int classify_flags(bool equal, bool frobenius, bool verschiebung);
int classify_row(const FieldCtx& F, const Fe& A, const Fe& B);

struct IsogenyCensus {
    int dihedral = 0;
    int degenerate = 0;
    int frobenius = 0;
    int verschiebung = 0;
    int total = 0;
    std::string row; // "1".."6", "one-special", "both-special"
};

// expected census for a row tag (the theorem values the computed census
// must reproduce); throws InvalidCombination for unknown tags
IsogenyCensus expected_for_row(const std::string& row);

// Both curves generic: y² + y = A²(x⁵ + x³) and y² + y = B²(x⁵ + x³).
// dihedral by explicit solve, degenerate = order-4-class count when the
// curves are isomorphic (A = B) else 0, Frobenius iff B = A²,
// Verschiebung iff A = B².
IsogenyCensus census_general(const FieldCtx& base, const Fe& A, const Fe& B,
                             int jobs = 1);

// Left curve generic, right curve y² + y = x⁵: 12 orbit classes, nothing
// else.  Requires 4 | base.k() (the solve needs the 16-element subfield).
IsogenyCensus census_one_special(const FieldCtx& base, const Fe& A,
                                 int jobs = 1);

// Both curves special: no dihedral diagrams, two degenerate classes, and
// the Frobenius/Verschiebung pair.
IsogenyCensus census_both_special();

// ---------------------------------------------------------------------------
// identity-verification suite

enum class CheckMode {
    Exact,         // term-set identity, computed symbolically
    Probabilistic, // evaluated at random points of an extension field
    Specialized,   // zero-locus comparison on random specializations
};
const char* check_mode_text(CheckMode m);

struct IdentityCheck {
    std::string name;
    CheckMode mode;
    bool pass = false;
    std::string note; // conventions and known-delicate exponents
};

struct VerifyOptions {
    bool exact = true;        // run symbolically manageable items exactly
    int ext_degree = 64;      // field degree for probabilistic evaluation
    int trials = 8;
    std::uint64_t seed = 1;
    std::size_t groebner_budget = std::size_t(1) << 20;
    int fallback_points = 200; // specializations when a basis runs out
};

// Runs every structural identity behind the census: the eliminant
// factorizations and discriminants for all three configurations, the
// auxiliary resultants, the triangular cofactor identities and ideal
// equality, the translation-polynomial factorizations, and the pairing
// matrix inverse.  Discriminants of the large eliminants are always
// evaluated probabilistically; everything else honours opt.exact.
std::vector<IdentityCheck> verify_reference_identities(
    const sys::ReferenceSystem& S, const VerifyOptions& opt = {});
std::vector<IdentityCheck> verify_reference_identities(
    const VerifyOptions& opt = {});

bool all_pass(const std::vector<IdentityCheck>& checks);

} // namespace richelot::cs
