#include "richelot/dihedral.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "richelot/gf2x.hpp"
#include "richelot/mpoly.hpp"
#include "richelot/parallel.hpp"
#include "richelot/rng.hpp"
#include "richelot/systems.hpp"

namespace richelot::dh {

namespace {

constexpr uint64_t kSolveSeed = 0x6468536f6c7665ull;
constexpr int kFieldBitCap = 6000;

// ---------------------------------------------------------------------------
// case plumbing: which defining relations and which eliminant each
// left/right-special configuration uses

struct SystemRef {
    const mp::MPoly *p1, *p2, *p3; // two relations + the nondegeneracy poly
};

const mp::MPoly& ss_relation_left() {
    static const mp::MPoly p = mp::parse("c^10 + a^5 + 1");
    return p;
}
const mp::MPoly& ss_relation_right() {
    static const mp::MPoly p = mp::parse("a^10 + c^5 + 1");
    return p;
}
const mp::MPoly& ss_nondegeneracy() {
    static const mp::MPoly p = mp::parse("a^5 + c^5");
    return p;
}
const mp::MPoly& ss_eliminant() {
    static const mp::MPoly p =
        mp::resultant_wrt(ss_relation_left(), ss_relation_right(), mp::kVarC);
    return p;
}

SystemRef system_for(bool left_special, bool right_special) {
    const sys::ReferenceSystem& rs = sys::build_reference_system();
    if (left_special && right_special)
        return {&ss_relation_left(), &ss_relation_right(),
                &ss_nondegeneracy()};
    if (right_special) return {&rs.r1s, &rs.r2s, &rs.r3s};
    return {&rs.r1, &rs.r2, &rs.r3};
}

UPoly eliminant_over(const FieldCtx& F, const Fe& A0, const Fe& B0,
                     bool left_special, bool right_special) {
    const sys::ReferenceSystem& rs = sys::build_reference_system();
    const std::array<Fe, 4> vals{F.zero(), F.zero(), A0, B0};
    if (left_special && right_special)
        return mp::specialize(ss_eliminant(), mp::kVarA, F, vals);
    if (right_special) return mp::specialize(rs.fs, mp::kVarA, F, vals);
    if (A0 == B0)
        return up::mul(F, mp::specialize(rs.f1, mp::kVarA, F, vals),
                       mp::specialize(rs.f2, mp::kVarA, F, vals));
    return mp::specialize(rs.f, mp::kVarA, F, vals);
}

// the defining relation in c at a fixed a-value
UPoly c_poly(const FieldCtx& F, const mp::MPoly& p, const Fe& a0, const Fe& A0,
             const Fe& B0) {
    return mp::specialize(p, mp::kVarC, F, {a0, F.zero(), A0, B0});
}

// surviving c-locus at a0: squarefree common part of the two relations with
// the roots c = 0 and the common roots with the nondegeneracy poly removed
UPoly surviving_c_poly(const FieldCtx& F, const SystemRef& S, const Fe& a0,
                       const Fe& A0, const Fe& B0) {
    const UPoly h1 = c_poly(F, *S.p1, a0, A0, B0);
    const UPoly h2 = c_poly(F, *S.p2, a0, A0, B0);
    UPoly h = up::gcd(F, h1, h2);
    if (h.empty())
        throw std::logic_error("defining relations vanish identically at a root");
    if (up::deg(h) <= 0) return up::constant(F.one());
    h = up::radical(F, h);
    if (F.is_zero(h[0])) h.erase(h.begin()); // remove the root c = 0
    if (up::deg(h) <= 0) return up::constant(F.one());
    const UPoly g3 = up::gcd(F, h, c_poly(F, *S.p3, a0, A0, B0));
    if (up::deg(g3) > 0) {
        UPoly q, r;
        up::divrem(F, h, g3, q, r);
        assert(r.empty());
        h = q;
    }
    return h;
}

// ---------------------------------------------------------------------------
// closure count: factor the eliminant over the base field and, inside the
// residue field of each irreducible factor, count the surviving c-roots.
// Also derives m, the degree making every (a, c) pair rational.

struct CountPass {
    size_t total = 0;
    int m = 1;
    std::vector<int> factor_degrees; // distinct irreducible factors, a = 0 skipped
};

CountPass count_pass(const FieldCtx& base, const Fe& A0, const Fe& B0,
                     const SystemRef& S, const UPoly& elim, Rng& rng) {
    CountPass out;
    for (const auto& [g, mult] : factor_univariate(base, elim, rng)) {
        const int d = up::deg(g);
        if (d == 1 && base.is_zero(g[0])) continue; // the root a = 0
        if (base.k() * d > kFieldBitCap)
            throw std::runtime_error("splitting extension exceeds the 6000-bit cap");
        const FieldCtx Fd(base.k() * d);
        Rng rng_d = named_stream(kSolveSeed ^ uint64_t(d), "dh.count_pass");
        const Embedding phi(base, Fd, rng_d);
        const std::vector<Fe> groots =
            roots_in_field(Fd, map_poly(phi, g), rng_d);
        assert(!groots.empty());
        const Fe a0 = groots.front();
        const Fe A2 = phi.apply(A0), B2 = phi.apply(B0);
        const UPoly surv = surviving_c_poly(Fd, S, a0, A2, B2);
        const int n = up::deg(surv);
        out.total += size_t(d) * size_t(n);
        if (n > 0)
            for (const auto& [q, qm] : factor_univariate(Fd, surv, rng_d))
                out.m = std::lcm(out.m, d * up::deg(q));
        out.factor_degrees.push_back(d);
    }
    std::sort(out.factor_degrees.begin(), out.factor_degrees.end());
    return out;
}

// ---------------------------------------------------------------------------
// explicit pair collection inside one field

using PairList = std::vector<std::pair<Fe, Fe>>;

bool pair_less(const std::pair<Fe, Fe>& x, const std::pair<Fe, Fe>& y) {
    if (!(x.first == y.first)) return gf2x::less(x.first, y.first);
    return gf2x::less(x.second, y.second);
}

PairList collect_root(const FieldCtx& F, const SystemRef& S, const Fe& a0,
                      const Fe& A0, const Fe& B0, Rng& rng) {
    PairList out;
    if (F.is_zero(a0)) return out;
    const UPoly surv = surviving_c_poly(F, S, a0, A0, B0);
    if (up::deg(surv) <= 0) return out;
    const std::vector<Fe> croots = roots_in_field(F, surv, rng);
    if (int(croots.size()) != up::deg(surv))
        throw std::logic_error("paired roots escape the computed extension");
    for (const Fe& c0 : croots) out.emplace_back(a0, c0);
    return out;
}

PairList collect_pairs(const FieldCtx& F, const SystemRef& S,
                       const UPoly& elim, const Fe& A0, const Fe& B0,
                       int jobs) {
    Rng rng0 = named_stream(kSolveSeed, "dh.collect_aroots");
    const std::vector<Fe> aroots = roots_in_field(F, elim, rng0);
    std::vector<PairList> buckets(aroots.size());
    parallel_for(aroots.size(), jobs, [&](std::size_t i) {
        Rng rng = named_stream(kSolveSeed ^ (0x9e3779b97f4a7c15ull * (i + 1)),
                               "dh.collect_root");
        buckets[i] = collect_root(F, S, aroots[i], A0, B0, rng);
    });
    PairList out;
    for (const auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end(), pair_less);
    return out;
}

// plain serial loop, kept as an independent reference for the kernel above
PairList collect_pairs_serial(const FieldCtx& F, const SystemRef& S,
                              const UPoly& elim, const Fe& A0, const Fe& B0) {
    Rng rng0 = named_stream(kSolveSeed, "dh.collect_aroots");
    const std::vector<Fe> aroots = roots_in_field(F, elim, rng0);
    PairList out;
    for (std::size_t i = 0; i < aroots.size(); ++i) {
        Rng rng = named_stream(kSolveSeed ^ (0x9e3779b97f4a7c15ull * (i + 1)),
                               "dh.collect_root");
        const PairList part = collect_root(F, S, aroots[i], A0, B0, rng);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), pair_less);
    return out;
}

void validate_pair(const DiagramParams& prm, const Fe& a, const Fe& c) {
    const FieldCtx& F = prm.F;
    if (F.is_zero(a) || F.is_zero(c))
        throw InvalidPair("pair components must be nonzero");
    const SystemRef S = system_for(prm.left_special, prm.right_special);
    const std::array<Fe, 4> v{a, c, prm.A, prm.B};
    if (!F.is_zero(mp::eval(*S.p1, F, v)) || !F.is_zero(mp::eval(*S.p2, F, v)))
        throw InvalidPair("pair does not satisfy the defining relations");
    if (F.is_zero(mp::eval(*S.p3, F, v)))
        throw InvalidPair("pair lies on the degenerate locus");
}

// ---------------------------------------------------------------------------
// the e-equation, rebuilt per pair by expanding the gluing condition with e
// symbolic: polynomials in t whose coefficients are polynomials in e

using TePoly = std::vector<UPoly>; // [i] = coefficient of t^i, a poly in e

TePoly te_mul(const FieldCtx& F, const TePoly& X, const TePoly& Y) {
    TePoly out(X.size() + Y.size() - 1);
    for (size_t i = 0; i < X.size(); ++i)
        for (size_t j = 0; j < Y.size(); ++j)
            out[i + j] = up::add(F, out[i + j], up::mul(F, X[i], Y[j]));
    return out;
}

void te_accumulate(const FieldCtx& F, TePoly& S, const TePoly& T,
                   const Fe& scale) {
    for (size_t i = 0; i < T.size(); ++i)
        S[i] = up::add(F, S[i], up::mul_sc(F, T[i], scale));
}

// numerator of a cover substitution as a (t, e)-polynomial:
// w·t² + v²·t + w·e²  (x-cover: w = c, v = d; u-cover: w = a, v = b)
TePoly cover_numerator(const FieldCtx& F, const Fe& w, const Fe& v) {
    return {up::monomial(w, 2), up::constant(F.sqr(v)), up::constant(w)};
}

// one side's contribution to r3^5·S: coef²·(W^5 + W^3·r3²) for a generic
// side, and the bare W^5 for a special one
void side_contribution(const FieldCtx& F, TePoly& S, const TePoly& W,
                       bool special, const Fe& coef, const Fe& r3) {
    const TePoly W2 = te_mul(F, W, W);
    const TePoly W4 = te_mul(F, W2, W2);
    const TePoly W5 = te_mul(F, W4, W);
    if (special) {
        te_accumulate(F, S, W5, F.one());
        return;
    }
    const Fe c2 = F.sqr(coef);
    te_accumulate(F, S, W5, c2);
    te_accumulate(F, S, te_mul(F, W2, W), F.mul(c2, F.sqr(r3)));
}

struct DerivedPair {
    Fe b, d, r3;
};

DerivedPair derive(const DiagramParams& prm, const Fe& a, const Fe& c) {
    const FieldCtx& F = prm.F;
    DerivedPair out;
    out.b = F.mul(left_coeff(prm), F.sqr(c));
    out.d = F.mul(right_coeff(prm), F.sqr(a));
    // a·d² + b²·c, the nondegeneracy value shared by all configurations
    out.r3 = F.add(F.mul(a, F.sqr(out.d)), F.mul(F.sqr(out.b), c));
    return out;
}

// r3^5 · (A-side-RHS(x(t)) + B-side-RHS(u(t))) with e symbolic
TePoly scaled_S(const DiagramParams& prm, const Fe& a, const Fe& c,
                const DerivedPair& dp) {
    const FieldCtx& F = prm.F;
    TePoly S(11, UPoly{});
    side_contribution(F, S, cover_numerator(F, c, dp.d), prm.left_special,
                      left_coeff(prm), dp.r3);
    side_contribution(F, S, cover_numerator(F, a, dp.b), prm.right_special,
                      right_coeff(prm), dp.r3);
    return S;
}

// The degree-16 polynomial in e whose roots are the admissible gluing
// translations: the residual odd-part condition of the normal form,
// cleared of denominators and halved three times.
UPoly e_equation(const DiagramParams& prm, const Fe& a, const Fe& c,
                 const DerivedPair& dp) {
    const FieldCtx& F = prm.F;
    const TePoly S = scaled_S(prm, a, c, dp);

    // structural identities of the expansion at a valid pair
    if (!S[9].empty() || !S[7].empty())
        throw std::logic_error("odd high coefficients of the expansion survive");
    if (up::deg(S[10]) != 0 || up::deg(S[5]) > 0)
        throw std::logic_error("unexpected e-dependence in s10 or s5");
    const Fe s5 = S[5].empty() ? F.zero() : S[5][0];
    if (!F.is_zero(F.add(F.sqr(s5), F.mul(S[10][0], F.pow(dp.r3, 5)))))
        throw std::logic_error("half-degree condition fails at a valid pair");

    // E(e) = s8·r3^35 + s4²·r3^30 + s2⁴·r3^20 + s1⁸  ( = P(e)²·r3^16 )
    UPoly E = up::mul_sc(F, S[8], F.pow(dp.r3, 35));
    E = up::add(F, E, up::mul_sc(F, up::pow(F, S[4], 2), F.pow(dp.r3, 30)));
    E = up::add(F, E, up::mul_sc(F, up::pow(F, S[2], 4), F.pow(dp.r3, 20)));
    E = up::add(F, E, up::pow(F, S[1], 8));
    for (size_t i = 1; i < E.size(); i += 2)
        if (!F.is_zero(E[i]))
            throw std::logic_error("odd e-exponent in the gluing condition");
    UPoly P = up::sqrt_even(F, up::mul_sc(F, E, F.pow(F.inv(dp.r3), 16)));

    static const std::set<size_t> kSupport{0, 1, 2, 4, 8, 16};
    for (size_t i = 0; i < P.size(); ++i)
        if (!F.is_zero(P[i]) && !kSupport.count(i))
            throw std::logic_error("e-equation support is not additive");
    if (up::deg(P) != 16 || F.is_zero(P[1]))
        throw std::logic_error("e-equation lost its top or linear coefficient");

    if (!prm.left_special && !prm.right_special) {
        // both sides generic: the coefficients have closed forms
        const Fe r3 = dp.r3;
        const Fe AB2 = F.sqr(F.mul(prm.A, prm.B));
        const Fe a2 = F.sqr(a), c2 = F.sqr(c);
        const Fe q16 = F.mul(F.pow(AB2, 4), F.pow(r3, 8));
        const Fe inner8 = F.add(F.mul(F.sqr(prm.B), F.mul(a2, a)),
                                F.mul(F.sqr(prm.A), F.mul(c2, c)));
        const Fe q8 = F.mul(F.sqr(inner8), F.pow(r3, 6));
        const Fe inner4 = F.add(F.mul(F.sqr(prm.B), F.pow(a, 7)),
                                F.mul(F.sqr(prm.A), F.pow(c, 7)));
        const Fe q4 = F.mul(F.mul(F.sqr(AB2), F.mul(a2, c2)),
                            F.mul(F.sqr(inner4), F.pow(r3, 6)));
        const Fe inner2 =
            F.add(F.add(F.mul(AB2, F.mul(F.mul(a2, a), F.mul(c2, c))), a2), c2);
        const Fe q2 = F.mul(F.sqr(inner2), F.pow(r3, 8));
        const Fe q1 = F.pow(r3, 10);
        const Fe q0 = F.mul(F.mul(AB2, F.mul(a, c)),
                            F.mul(inner4, F.pow(r3, 9)));
        const std::array<std::pair<size_t, Fe>, 6> expect{
            {{16, q16}, {8, q8}, {4, q4}, {2, q2}, {1, q1}, {0, q0}}};
        for (const auto& [i, v] : expect) {
            const Fe got = i < P.size() ? P[i] : F.zero();
            if (!(got == v))
                throw std::logic_error(
                    "expanded e-equation deviates from its closed form");
        }
    }
    return P;
}

// ---------------------------------------------------------------------------
// F2-linear algebra: roots of an additive polynomial Σ q_i·v^(2^i) = rhs

struct AffineRoots {
    bool consistent = false;
    Fe particular;
    std::vector<Fe> kernel; // F2-basis of the homogeneous solution space
};

AffineRoots solve_additive(const FieldCtx& F,
                           const std::vector<std::pair<int, Fe>>& terms,
                           const Fe& rhs) {
    const int k = F.k();
    const auto apply = [&](const Fe& v) {
        Fe acc = F.zero();
        for (const auto& [i, q] : terms)
            acc = F.add(acc, F.mul(q, F.pow2(v, i)));
        return acc;
    };
    const size_t words = size_t(k) / 64 + 1;
    std::vector<gf2x::Bits> rows(k, gf2x::Bits(words, 0));
    for (int j = 0; j < k; ++j) {
        Fe bj(words, 0);
        gf2x::set_bit(bj, j);
        gf2x::trim(bj);
        const Fe img = apply(bj);
        for (int i = 0; i < k; ++i)
            if (gf2x::get_bit(img, i)) gf2x::set_bit(rows[i], j);
    }
    for (int i = 0; i < k; ++i)
        if (gf2x::get_bit(rhs, i)) gf2x::set_bit(rows[i], k);

    std::vector<int> pivot_row(k, -1);
    int rank = 0;
    for (int col = 0; col < k && rank < k; ++col) {
        int sel = -1;
        for (int i = rank; i < k; ++i)
            if (gf2x::get_bit(rows[i], col)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[rank], rows[sel]);
        for (int i = 0; i < k; ++i)
            if (i != rank && gf2x::get_bit(rows[i], col))
                rows[i] = gf2x::add(rows[i], rows[rank]);
        pivot_row[col] = rank;
        ++rank;
    }
    AffineRoots out;
    for (int i = rank; i < k; ++i)
        if (gf2x::get_bit(rows[i], k)) return out; // inconsistent
    out.consistent = true;
    Fe part(words, 0);
    for (int col = 0; col < k; ++col)
        if (pivot_row[col] >= 0 && gf2x::get_bit(rows[pivot_row[col]], k))
            gf2x::set_bit(part, col);
    gf2x::trim(part);
    out.particular = part;
    for (int free = 0; free < k; ++free) {
        if (pivot_row[free] >= 0) continue;
        Fe v(words, 0);
        gf2x::set_bit(v, free);
        for (int col = 0; col < k; ++col)
            if (pivot_row[col] >= 0 &&
                gf2x::get_bit(rows[pivot_row[col]], free))
                gf2x::set_bit(v, col);
        gf2x::trim(v);
        out.kernel.push_back(v);
    }
    return out;
}

std::vector<Fe> span_coset(const FieldCtx& F, const Fe& base,
                           const std::vector<Fe>& basis) {
    std::vector<Fe> out{base};
    for (const Fe& v : basis) {
        const size_t n = out.size();
        for (size_t i = 0; i < n; ++i) out.push_back(F.add(out[i], v));
    }
    std::sort(out.begin(), out.end(), gf2x::less);
    return out;
}

std::vector<Fe> e_roots(const DiagramParams& prm, const Fe& a, const Fe& c,
                        const DerivedPair& dp) {
    const FieldCtx& F = prm.F;
    const UPoly P = e_equation(prm, a, c, dp);
    std::vector<std::pair<int, Fe>> terms;
    for (int i = 0; i <= 4; ++i) {
        const size_t idx = size_t(1) << i;
        if (idx < P.size() && !F.is_zero(P[idx])) terms.push_back({i, P[idx]});
    }
    const AffineRoots sol = solve_additive(F, terms, P[0]);
    if (!sol.consistent || sol.kernel.size() < 4)
        throw FieldTooSmall("gluing translations are not rational here");
    if (sol.kernel.size() > 4)
        throw std::logic_error("e-equation has too many roots");
    std::vector<Fe> roots = span_coset(F, sol.particular, sol.kernel);
    for (const Fe& e : roots)
        assert(F.is_zero(up::eval(F, P, e)));
    return roots;
}

// ---------------------------------------------------------------------------
// Artin–Schreier reduction with its conjugating witness:
// p = normal_form + shift² + shift

std::pair<UPoly, UPoly> as_reduce(const FieldCtx& F, UPoly p) {
    UPoly shift;
    for (int i = int(p.size()) - 1; i >= 2; --i) {
        if (i % 2 != 0 || F.is_zero(p[i])) continue;
        const Fe s = F.sqrt(p[i]);
        p[i] = F.zero();
        const size_t h = size_t(i) / 2;
        p[h] = F.add(p[h], s);
        if (shift.size() <= h) shift.resize(h + 1, F.zero());
        shift[h] = F.add(shift[h], s);
    }
    up::trim(p);
    Fe c0 = p.empty() ? F.zero() : p[0];
    Fe target = F.zero();
    if (!F.is_zero(F.trace(c0))) target = F.trace_one_element();
    const auto w0 = F.artin_schreier_solve(F.add(c0, target));
    assert(w0.has_value());
    if (!F.is_zero(*w0)) {
        if (shift.empty()) shift.resize(1, F.zero());
        shift[0] = F.add(shift[0], *w0);
    }
    if (!p.empty()) p[0] = target;
    else if (!F.is_zero(target)) p.assign(1, target);
    up::trim(p);
    up::trim(shift);
    return {p, shift};
}

// degree-2 cover substitution (w·t² + v²·t + w·e²)/r3 as a plain t-polynomial
UPoly cover_poly(const FieldCtx& F, const Fe& w, const Fe& v, const Fe& e,
                 const Fe& r3inv) {
    return up::from_coeffs({F.mul(F.mul(w, F.sqr(e)), r3inv),
                            F.mul(F.sqr(v), r3inv), F.mul(w, r3inv)});
}

UPoly side_pullback(const FieldCtx& F, const UPoly& subst, bool special,
                    const Fe& coef) {
    const UPoly x5 = up::pow(F, subst, 5);
    if (special) return x5;
    const UPoly x3 = up::pow(F, subst, 3);
    return up::mul_sc(F, up::add(F, x5, x3), F.sqr(coef));
}

} // namespace

Fe left_coeff(const DiagramParams& prm) {
    return prm.left_special ? prm.F.one() : prm.A;
}
Fe right_coeff(const DiagramParams& prm) {
    return prm.right_special ? prm.F.one() : prm.B;
}

DihedralSolution make_solution(const DiagramParams& prm, const Fe& a,
                               const Fe& c, const Fe& e) {
    validate_pair(prm, a, c);
    const DerivedPair dp = derive(prm, a, c);
    const UPoly P = e_equation(prm, a, c, dp);
    if (!prm.F.is_zero(up::eval(prm.F, P, e)))
        throw InvalidPair("e is not a root of the gluing equation");
    return {prm, a, c, e, dp.b, dp.d};
}

std::vector<Fe> solve_e(const DiagramParams& prm, const Fe& a, const Fe& c) {
    validate_pair(prm, a, c);
    return e_roots(prm, a, c, derive(prm, a, c));
}

std::array<Fe, 11> expand_S(const DihedralSolution& sol) {
    const FieldCtx& F = sol.prm.F;
    const DerivedPair dp = derive(sol.prm, sol.a, sol.c);
    const Fe r3inv5 = F.pow(F.inv(dp.r3), 5);
    const TePoly S = scaled_S(sol.prm, sol.a, sol.c, dp);
    std::array<Fe, 11> out;
    for (size_t i = 0; i <= 10; ++i)
        out[i] = F.mul(up::eval(F, S[i], sol.e), r3inv5);
    return out;
}

UPoly as_normal_form(const FieldCtx& F, const UPoly& p) {
    return as_reduce(F, p).first;
}

Genus4Curve build_genus4(const DihedralSolution& sol) {
    const FieldCtx& F = sol.prm.F;
    const DerivedPair dp = derive(sol.prm, sol.a, sol.c);
    // All 16 translations give isomorphic diagrams (they form one orbit
    // under the left curve's translation group); the model is built from
    // the smallest one so that it depends only on the pair (a, c).
    const Fe e0 = e_roots(sol.prm, sol.a, sol.c, dp).front();
    const Fe r3inv = F.inv(dp.r3);
    const UPoly xs = cover_poly(F, sol.c, sol.d, e0, r3inv);
    const UPoly us = cover_poly(F, sol.a, sol.b, e0, r3inv);
    const UPoly pa =
        side_pullback(F, xs, sol.prm.left_special, left_coeff(sol.prm));
    const UPoly pb =
        side_pullback(F, us, sol.prm.right_special, right_coeff(sol.prm));
    const auto [nfa, sha] = as_reduce(F, pa);
    const auto [nfb, shb] = as_reduce(F, pb);
    if (!(nfa == nfb))
        throw InvalidPair("the two covers do not glue over one curve");
    if (up::deg(nfa) != 9)
        throw DegenerateDiagram("top curve degenerates below genus 4");
    const UPoly back = up::add(
        F, up::add(F, nfa, up::mul(F, sha, sha)), sha);
    if (!(back == pa))
        throw std::logic_error("cover witness does not conjugate the pullback");
    return {F, nfa, {xs, sha}, {us, shb}};
}

bool e_orbit_check(const DihedralSolution& sol) {
    const FieldCtx& F = sol.prm.F;
    validate_pair(sol.prm, sol.a, sol.c);
    const DerivedPair dp = derive(sol.prm, sol.a, sol.c);
    const std::vector<Fe> es = e_roots(sol.prm, sol.a, sol.c, dp);

    // roots of the left curve's translation polynomial
    const Fe Ai = F.inv(left_coeff(sol.prm));
    const std::vector<std::pair<int, Fe>> terms{
        {4, F.one()}, {3, F.one()}, {1, F.pow(Ai, 4)}, {0, F.pow(Ai, 6)}};
    const AffineRoots aut = solve_additive(F, terms, F.zero());
    if (!aut.consistent || aut.kernel.size() != 4)
        throw FieldTooSmall("translation-polynomial roots are not rational here");
    const std::vector<Fe> xroots = span_coset(F, F.zero(), aut.kernel);

    std::vector<Fe> image;
    const Fe ac2 = F.mul(left_coeff(sol.prm), F.sqr(sol.c));
    for (const Fe& x0 : xroots)
        image.push_back(
            F.add(F.mul(sol.a, x0), F.mul(ac2, F.sqrt(x0))));
    std::sort(image.begin(), image.end(), gf2x::less);
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        return false; // nonzero root in the kernel of the orbit map

    std::vector<Fe> diff;
    for (const Fe& e : es) diff.push_back(F.add(es.front(), e));
    std::sort(diff.begin(), diff.end(), gf2x::less);
    return image == diff;
}

// ---------------------------------------------------------------------------
// full solve flows

namespace {

PairSolutions solve_core(const FieldCtx& base, const Fe& A0, const Fe& B0,
                         bool left_special, bool right_special, int jobs,
                         bool use_reference) {
    if (!left_special && base.is_zero(A0))
        throw ParameterZero("left quintic coefficient is zero");
    if (!right_special && base.is_zero(B0))
        throw ParameterZero("right quintic coefficient is zero");

    const SystemRef S = system_for(left_special, right_special);
    const UPoly elim = eliminant_over(base, A0, B0, left_special, right_special);
    Rng rng = named_stream(kSolveSeed, "dh.solve");
    const CountPass cp = count_pass(base, A0, B0, S, elim, rng);

    const auto realize = [&](int bits) {
        struct Realized {
            DiagramParams prm;
            PairList pairs;
        };
        if (bits > kFieldBitCap)
            throw std::runtime_error(
                "splitting extension exceeds the 6000-bit cap");
        FieldCtx F(bits);
        Rng rng_f = named_stream(kSolveSeed ^ uint64_t(bits), "dh.embed");
        const Embedding phi(base, F, rng_f);
        DiagramParams prm{F, phi.apply(A0), phi.apply(B0), left_special,
                          right_special};
        const UPoly eb = map_poly(phi, elim);
        PairList pairs = use_reference
                             ? collect_pairs_serial(F, S, eb, prm.A, prm.B)
                             : collect_pairs(F, S, eb, prm.A, prm.B, jobs);
        if (pairs.size() != cp.total)
            throw std::logic_error("explicit pair count disagrees with the "
                                   "closure count");
        for (const auto& [a, c] : pairs) validate_pair(prm, a, c);
        return Realized{std::move(prm), std::move(pairs)};
    };

    // pass 1: the pair field
    const int pair_bits = base.k() * cp.m;
    auto r1 = realize(pair_bits);

    // degree needed by the e-equations on top of the pair field
    int le = 1;
    Rng rng_e = named_stream(kSolveSeed, "dh.le_factor");
    for (const auto& [a, c] : r1.pairs) {
        const UPoly P = e_equation(r1.prm, a, c, derive(r1.prm, a, c));
        for (const auto& [q, qm] : factor_univariate(r1.prm.F, P, rng_e))
            le = std::lcm(le, up::deg(q));
    }

    // splitting degree of the left translation polynomial over the base
    int lx = 1;
    if (!left_special) {
        const Fe Ai = base.inv(A0);
        UPoly autp(17, base.zero());
        autp[16] = base.one();
        autp[8] = base.one();
        autp[2] = base.pow(Ai, 4);
        autp[1] = base.pow(Ai, 6);
        up::trim(autp);
        for (const auto& [q, qm] : factor_univariate(base, autp, rng))
            lx = std::lcm(lx, up::deg(q));
    }

    const int full_m = std::lcm(cp.m * le, lx);
    const int full_bits = base.k() * full_m;

    if (full_bits != pair_bits) r1 = realize(full_bits);
    PairSolutions out{std::move(r1.prm), std::move(r1.pairs),
                      SolveDiagnostics{}};
    out.diag.m = cp.m;
    out.diag.le = le;
    out.diag.lx = lx;
    out.diag.eliminant_factor_degrees = cp.factor_degrees;
    out.diag.pair_field_bits = pair_bits;
    out.diag.full_field_bits = full_bits;
    return out;
}

} // namespace

PairSolutions solve_pairs(const FieldCtx& base, const Fe& A, const Fe& B,
                          int jobs) {
    return solve_core(base, A, B, false, false, jobs, false);
}

PairSolutions solve_pairs_reference(const FieldCtx& base, const Fe& A,
                                    const Fe& B) {
    return solve_core(base, A, B, false, false, 1, true);
}

SpecialOrbits solve_pairs_special(const FieldCtx& base, const Fe& A,
                                  int jobs) {
    if (base.k() % 4 != 0)
        throw std::invalid_argument(
            "the special right-hand curve needs the 16-element subfield");
    SpecialOrbits out{solve_core(base, A, base.zero(), false, true, jobs,
                                 false),
                      {}};

    const FieldCtx& F = out.flat.prm.F;
    Rng rng = named_stream(kSolveSeed, "dh.mu5");
    const UPoly cyc = up::from_coeffs(
        {F.one(), F.one(), F.one(), F.one(), F.one()});
    const std::vector<Fe> zs = roots_in_field(F, cyc, rng);
    if (zs.size() != 4)
        throw std::logic_error("fifth roots of unity missing from the field");
    const Fe z = zs.front();
    const Fe z3 = F.pow(z, 3);

    const PairList& ps = out.flat.pairs;
    std::vector<char> used(ps.size(), 0);
    const auto index_of = [&](const std::pair<Fe, Fe>& p) {
        const auto it = std::lower_bound(ps.begin(), ps.end(), p, pair_less);
        if (it == ps.end() || !(*it == p))
            throw std::logic_error("orbit leaves the solution set");
        return size_t(it - ps.begin());
    };
    for (size_t i = 0; i < ps.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::pair<Fe, Fe>> orbit;
        std::pair<Fe, Fe> cur = ps[i];
        for (int n = 0; n < 5; ++n) {
            const size_t j = index_of(cur);
            if (used[j]) throw std::logic_error("orbit of size below five");
            used[j] = 1;
            orbit.push_back(cur);
            cur = {F.mul(z, cur.first), F.mul(z3, cur.second)};
        }
        if (!(cur == ps[i]))
            throw std::logic_error("orbit does not close after five steps");
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

PairSolutions solve_special_special() {
    const FieldCtx base(1);
    const SystemRef S = system_for(true, true);
    const UPoly elim =
        eliminant_over(base, base.zero(), base.zero(), true, true);
    Rng rng = named_stream(kSolveSeed, "dh.solve_ss");
    const CountPass cp =
        count_pass(base, base.zero(), base.zero(), S, elim, rng);
    if (cp.total != 0)
        throw std::logic_error("the both-special system acquired solutions");

    int L = 1;
    for (int d : cp.factor_degrees) L = std::lcm(L, d);

    const auto check_empty = [&](int bits) {
        FieldCtx F(bits);
        Rng rng_f = named_stream(kSolveSeed ^ uint64_t(bits), "dh.embed");
        const Embedding phi(base, F, rng_f);
        const PairList pairs =
            collect_pairs(F, S, map_poly(phi, elim), F.zero(), F.zero(), 1);
        if (!pairs.empty())
            throw std::logic_error("the both-special system acquired solutions");
        return F;
    };
    check_empty(L);
    FieldCtx Ffull = check_empty(2 * L);
    const Fe z = Ffull.zero();
    PairSolutions out{DiagramParams{std::move(Ffull), z, z, true, true},
                      {},
                      SolveDiagnostics{}};
    out.diag.m = cp.m;
    out.diag.eliminant_factor_degrees = cp.factor_degrees;
    out.diag.pair_field_bits = base.k() * cp.m;
    out.diag.full_field_bits = 2 * L;
    return out;
}

} // namespace richelot::dh
