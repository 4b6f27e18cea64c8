#pragma once
// The fixed polynomial systems the whole library revolves around: the
// defining relations for compatible parameter pairs (a, c) of two glued
// genus-2 curves, in the three configurations (both curves generic, the
// equal-invariant slice B = A, and one special curve on the right).
//
// The named polynomials are loaded from data/reference_system.txt; the
// derived ones (u1, u2) are rebuilt here by exact division, and a set of
// structural identities is checked at load time so a corrupted data file
// cannot go unnoticed.

#include <cstdint>
#include <string>

#include "richelot/mpoly.hpp"
#include "richelot/rng.hpp"

namespace richelot::sys {

struct ReferenceSystem {
    // Both curves generic.
    mp::MPoly r1, r2, r3;   // defining relations in (a, c, A, B)
    mp::MPoly t1, t2, t3;   // triangular form of the same locus
    mp::MPoly f;            // eliminant of c from (r1, r2)

    // Equal-invariant slice B = A: r_i|_{B=A} = (a + c) u_i.
    mp::MPoly u1, u2;
    mp::MPoly f1, f2;       // eliminant factors of c from (u1, u2)

    // Right-hand curve special.
    mp::MPoly r1s, r2s, r3s;
    mp::MPoly t1s, t2s;
    mp::MPoly fs;           // eliminant of c from (r1s, r2s)
};

// Loads and validates the system from an explicit file path.
ReferenceSystem load_reference_system(const std::string& path);

// Loads from $RICHELOT_DATA_DIR (or the build-time data directory) once
// and caches; throws std::runtime_error on any validation failure.
const ReferenceSystem& build_reference_system();

// Checks Res_var(p, q) = rhs by evaluation: binds all variables except
// `var` to random field elements, takes the univariate resultant, and
// compares with rhs at the same point.  Draws where either leading
// coefficient degenerates are redrawn.
bool probabilistic_resultant_check(const mp::MPoly& p, const mp::MPoly& q,
                                   int var, const mp::MPoly& rhs,
                                   const FieldCtx& F, Rng& rng,
                                   int trials);

// Same for Disc_var(p) = rhs under the convention of
// mp::discriminant_wrt (actual-degree derivative, lc-power correction).
bool probabilistic_discriminant_check(const mp::MPoly& p, int var,
                                      const mp::MPoly& rhs,
                                      const FieldCtx& F, Rng& rng,
                                      int trials);

} // namespace richelot::sys
