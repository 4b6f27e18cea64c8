#pragma once
#include "richelot/gf2x.hpp"
#include "richelot/rng.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace richelot {

// An element of GF(2^k): coefficient bitstring in the polynomial basis of
// the context modulus, trimmed (same representation as gf2x::Bits).
using Fe = gf2x::Bits;

struct FieldTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// GF(2^k) = F2[x]/(modulus).  Immutable after construction; safe to share
// across threads.  Comparison of elements is bitstring comparison.
class FieldCtx {
public:
    // deterministic canonical modulus (lexicographically smallest irreducible)
    explicit FieldCtx(int k);
    FieldCtx(int k, gf2x::Bits modulus);

    int k() const { return k_; }
    const gf2x::Bits& modulus() const { return mod_; }
    std::string text() const; // "GF(2^k)"

    Fe zero() const { return {}; }
    Fe one() const { return {1}; }
    Fe gen() const { return k_ == 1 ? one() : Fe{2}; } // class of x

    bool is_zero(const Fe& a) const { return a.empty(); }
    Fe add(const Fe& a, const Fe& b) const { return gf2x::add(a, b); }
    Fe mul(const Fe& a, const Fe& b) const;
    Fe sqr(const Fe& a) const;
    Fe inv(const Fe& a) const;
    Fe pow(Fe base, uint64_t e) const;
    Fe pow2(Fe base, int n) const;   // base^(2^n)
    Fe sqrt(const Fe& a) const;      // a^(2^(k-1))
    Fe trace(const Fe& a) const;     // absolute trace, 0 or 1
    Fe rand(Rng& rng) const;
    Fe rand_nonzero(Rng& rng) const;

    // smallest y with y^2 + y = cv (bit 0 clear); nullopt when trace(cv) = 1
    std::optional<Fe> artin_schreier_solve(const Fe& cv) const;

    // deterministic element of trace 1 (smallest power of the generator)
    Fe trace_one_element() const;

    std::string to_hex(const Fe& a) const { return gf2x::to_hex(a); }
    Fe from_hex(const std::string& s) const;

    bool same(const FieldCtx& other) const {
        return k_ == other.k_ && mod_ == other.mod_;
    }

private:
    int k_;
    gf2x::Bits mod_;
    // column j of the F2-linear map y -> y^2 + y, built lazily for AS solves
    mutable std::vector<Fe> as_cols_;
    void build_as_cols() const;
};

// Deterministic embedding GF(2^k) -> GF(2^K), k | K: x maps to the smallest
// root (by bitstring value) of the sub-modulus in the super-field.
class Embedding {
public:
    Embedding(const FieldCtx& sub, const FieldCtx& super, Rng& rng);
    Fe apply(const Fe& a) const; // evaluate a's bit-polynomial at the root
    const Fe& image_of_gen() const { return root_; }

private:
    const FieldCtx* super_;
    int sub_k_;
    Fe root_;
};

} // namespace richelot
