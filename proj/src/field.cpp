#include "richelot/field.hpp"

#include <cassert>
#include <stdexcept>

namespace richelot {

using gf2x::Bits;

FieldCtx::FieldCtx(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("field: degree must be positive");
    mod_ = gf2x::canonical_modulus(k);
}

FieldCtx::FieldCtx(int k, Bits modulus) : k_(k), mod_(std::move(modulus)) {
    if (gf2x::degree(mod_) != k)
        throw std::invalid_argument("field: modulus degree mismatch");
    if (!gf2x::is_irreducible(mod_))
        throw std::invalid_argument("field: modulus is reducible");
}

std::string FieldCtx::text() const {
    return "GF(2^" + std::to_string(k_) + ")";
}

Fe FieldCtx::mul(const Fe& a, const Fe& b) const {
    return gf2x::mulmod(a, b, mod_);
}

Fe FieldCtx::sqr(const Fe& a) const {
    return gf2x::sqrmod(a, mod_);
}

Fe FieldCtx::inv(const Fe& a) const {
    if (a.empty()) throw std::domain_error("field: inverse of zero");
    // extended Euclid over F2[x]
    Bits r0 = mod_, r1 = a, s0 = {}, s1 = {1};
    while (!r1.empty()) {
        Bits q, r2;
        gf2x::divrem(r0, r1, q, r2);
        Bits s2 = gf2x::add(s0, gf2x::mul(q, s1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    assert(gf2x::degree(r0) == 0);
    return gf2x::mod(s0, mod_);
}

Fe FieldCtx::pow(Fe base, uint64_t e) const {
    Fe r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        base = sqr(base);
        e >>= 1;
    }
    return r;
}

Fe FieldCtx::pow2(Fe base, int n) const {
    for (int i = 0; i < n; ++i) base = sqr(base);
    return base;
}

Fe FieldCtx::sqrt(const Fe& a) const {
    return pow2(a, k_ - 1);
}

Fe FieldCtx::trace(const Fe& a) const {
    Fe t = a, p = a;
    for (int i = 1; i < k_; ++i) {
        p = sqr(p);
        t = add(t, p);
    }
    assert(t.empty() || t == one());
    return t;
}

Fe FieldCtx::rand(Rng& rng) const {
    Fe r(static_cast<size_t>(k_ + 63) / 64, 0);
    for (auto& w : r) w = rng.next();
    int extra = static_cast<int>(r.size()) * 64 - k_;
    if (extra) r.back() &= UINT64_MAX >> extra;
    gf2x::trim(r);
    return r;
}

Fe FieldCtx::rand_nonzero(Rng& rng) const {
    Fe r;
    do { r = rand(rng); } while (r.empty());
    return r;
}

void FieldCtx::build_as_cols() const {
    if (!as_cols_.empty()) return;
    as_cols_.resize(k_);
    for (int j = 0; j < k_; ++j) {
        Fe e;
        gf2x::set_bit(e, j);
        as_cols_[j] = add(sqr(e), e);
    }
}

std::optional<Fe> FieldCtx::artin_schreier_solve(const Fe& cv) const {
    if (!trace(cv).empty()) return std::nullopt;
    build_as_cols();
    // Gaussian elimination on the k x (k+1) system over F2
    std::vector<std::vector<uint8_t>> m(k_, std::vector<uint8_t>(k_ + 1, 0));
    for (int j = 0; j < k_; ++j)
        for (int r = 0; r < k_; ++r)
            m[r][j] = gf2x::get_bit(as_cols_[j], r);
    for (int r = 0; r < k_; ++r) m[r][k_] = gf2x::get_bit(cv, r);

    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < k_ && rank < k_; ++col) {
        int sel = -1;
        for (int r = rank; r < k_; ++r)
            if (m[r][col]) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(m[rank], m[sel]);
        for (int r = 0; r < k_; ++r)
            if (r != rank && m[r][col])
                for (int c = col; c <= k_; ++c) m[r][c] ^= m[rank][c];
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < k_; ++r)
        if (m[r][k_]) return std::nullopt; // cannot happen when trace is 0
    Fe y;
    for (int i = 0; i < rank; ++i)
        if (m[i][k_]) gf2x::set_bit(y, pivot_col[i]);
    gf2x::trim(y);
    assert(add(sqr(y), y) == cv);
    // canonical representative: bit 0 clear
    if (gf2x::get_bit(y, 0)) y = add(y, one());
    return y;
}

Fe FieldCtx::trace_one_element() const {
    // The trace form is nonzero, so some basis element x^j has trace 1.
    for (int j = 0; j < k_; ++j) {
        Fe e;
        gf2x::set_bit(e, j);
        if (!trace(e).empty()) return e;
    }
    throw std::logic_error("field: trace form vanished");
}

Fe FieldCtx::from_hex(const std::string& s) const {
    Fe r = gf2x::from_hex(s);
    if (gf2x::degree(r) >= k_)
        throw std::invalid_argument("field: element out of range for " + text());
    return r;
}

} // namespace richelot
