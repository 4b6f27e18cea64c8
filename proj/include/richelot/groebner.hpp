#pragma once
// Buchberger Gröbner bases over F2[a, c, A, B] under the fixed grevlex
// order, used to certify the ideal equality behind the triangular-form
// argument.  Coefficients in F2 make reduction plain XOR bookkeeping.

#include <cstdint>
#include <string>
#include <vector>

#include "richelot/mpoly.hpp"

namespace richelot::gb {

struct Options {
    // Upper bound on the number of S-polynomial reductions attempted
    // before giving up and reporting an incomplete basis.
    std::size_t reduction_budget = 1u << 20;
};

struct IdealBasis {
    std::vector<mp::MPoly> gens; // reduced basis when complete, sorted by
                                 // descending leading term
    bool complete = false;       // false when the budget ran out
    std::size_t reductions = 0;  // S-polynomial reductions performed
    static constexpr const char* order = "grevlex a < c < A < B";
};

// Full normal form of p against a list of polynomials (multivariate
// division, smallest-index divisor first).
mp::MPoly normal_form(mp::MPoly p, const std::vector<mp::MPoly>& basis);

// Reduced Gröbner basis of the ideal generated by `gens`.
IdealBasis groebner_basis(std::vector<mp::MPoly> gens,
                          const Options& opt = {});

// Membership via normal form; requires a complete basis.
bool ideal_member(const mp::MPoly& p, const IdealBasis& basis);

enum class Verdict { True, False, Inconclusive };
const char* verdict_text(Verdict v);

// Mutual membership of each generator set in the other's basis.
// Inconclusive when a basis computation exhausts its budget.
Verdict ideal_equal(const std::vector<mp::MPoly>& X,
                    const std::vector<mp::MPoly>& Y,
                    const Options& opt = {});

// Point-wise fallback for the ideal-equality assertion: at `points` random
// specializations of (A, B) over GF(2^16), enumerates the rational common
// zeros of {g1, g2} in (a, c) and checks that x and y vanish on exactly
// the same ones.
bool specialization_consistency(const mp::MPoly& g1, const mp::MPoly& g2,
                                const mp::MPoly& x, const mp::MPoly& y,
                                int points, std::uint64_t seed);

} // namespace richelot::gb
