#include "richelot/unipoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace richelot {

namespace up {

void trim(UPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly from_coeffs(std::vector<Fe> cs) {
    UPoly p = std::move(cs);
    trim(p);
    return p;
}

UPoly constant(const Fe& c) {
    if (c.empty()) return {};
    return {c};
}

UPoly monomial(const Fe& c, int n) {
    if (c.empty()) return {};
    UPoly p(static_cast<size_t>(n) + 1);
    p[n] = c;
    return p;
}

UPoly add(const FieldCtx& F, const UPoly& a, const UPoly& b) {
    UPoly r = a.size() >= b.size() ? a : b;
    const UPoly& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] = F.add(r[i], s[i]);
    trim(r);
    return r;
}

UPoly mul(const FieldCtx& F, const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].empty()) continue;
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

UPoly mul_sc(const FieldCtx& F, const UPoly& a, const Fe& c) {
    if (c.empty()) return {};
    UPoly r = a;
    for (auto& x : r) x = F.mul(x, c);
    trim(r);
    return r;
}

UPoly pow(const FieldCtx& F, UPoly base, uint64_t e) {
    UPoly r = constant(F.one());
    while (e) {
        if (e & 1) r = mul(F, r, base);
        base = mul(F, base, base);
        e >>= 1;
    }
    return r;
}

void divrem(const FieldCtx& F, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.empty()) throw std::domain_error("unipoly: division by zero");
    r = a;
    q.clear();
    int db = deg(b);
    Fe lcinv = F.inv(b.back());
    while (deg(r) >= db) {
        int sh = deg(r) - db;
        Fe cq = F.mul(r.back(), lcinv);
        if (static_cast<int>(q.size()) < sh + 1) q.resize(sh + 1);
        q[sh] = F.add(q[sh], cq);
        for (int i = 0; i <= db; ++i)
            r[sh + i] = F.add(r[sh + i], F.mul(cq, b[i]));
        trim(r);
    }
    trim(q);
}

UPoly mod(const FieldCtx& F, const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divrem(F, a, b, q, r);
    return r;
}

UPoly monic(const FieldCtx& F, UPoly p) {
    if (p.empty()) return p;
    return mul_sc(F, p, F.inv(p.back()));
}

UPoly gcd(const FieldCtx& F, UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, std::move(a));
}

UPoly derivative(const FieldCtx& F, const UPoly& p) {
    UPoly r;
    for (size_t i = 1; i < p.size(); i += 2) { // even multiples vanish in char 2
        if (p[i].empty()) continue;
        if (r.size() < i) r.resize(i);
        r[i - 1] = p[i];
    }
    (void)F;
    trim(r);
    return r;
}

Fe eval(const FieldCtx& F, const UPoly& p, const Fe& x) {
    Fe acc = F.zero();
    for (size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p[i]);
    return acc;
}

UPoly sqrt_even(const FieldCtx& F, const UPoly& p) {
    UPoly r;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty()) continue;
        if (i % 2) throw std::domain_error("unipoly: sqrt of non-square (odd exponent)");
        if (r.size() < i / 2 + 1) r.resize(i / 2 + 1);
        r[i / 2] = F.sqrt(p[i]);
    }
    trim(r);
    return r;
}

UPoly radical(const FieldCtx& F, const UPoly& p) {
    if (deg(p) <= 0) return constant(F.one());
    UPoly d = derivative(F, p);
    if (d.empty()) {
        // p = q(t)^2
        return radical(F, sqrt_even(F, p));
    }
    UPoly g = gcd(F, p, d);
    UPoly w, r0;
    divrem(F, p, g, w, r0);
    assert(r0.empty());
    w = monic(F, w); // product of factors with odd multiplicity, each once
    UPoly rg = radical(F, g);
    UPoly h = gcd(F, w, rg);
    UPoly q, r1;
    divrem(F, mul(F, w, rg), h, q, r1);
    assert(r1.empty());
    return monic(F, q);
}

UPoly compose(const FieldCtx& F, const UPoly& p, const UPoly& q) {
    UPoly out; // Horner from the top coefficient down
    for (size_t i = p.size(); i-- > 0;) {
        out = mul(F, out, q);
        out = add(F, out, constant(p[i]));
    }
    return out;
}

UPoly mulmod(const FieldCtx& F, const UPoly& a, const UPoly& b, const UPoly& m) {
    return mod(F, mul(F, a, b), m);
}

UPoly frobenius_mod(const FieldCtx& F, const UPoly& a, const UPoly& m) {
    UPoly r = a;
    for (int i = 0; i < F.k(); ++i) r = mulmod(F, r, r, m);
    return r;
}

Fe resultant(const FieldCtx& F, UPoly a, UPoly b) {
    // char 2: signs are trivial; Res(a,b) = lc(b)^(deg a - deg r) Res(r, b)
    if (a.empty() || b.empty()) return F.zero();
    Fe acc = F.one();
    for (;;) {
        if (deg(b) == 0) return F.mul(acc, F.pow(b[0], static_cast<uint64_t>(deg(a))));
        UPoly r = mod(F, a, b);
        if (r.empty()) return F.zero();
        acc = F.mul(acc, F.pow(b.back(), static_cast<uint64_t>(deg(a) - deg(r))));
        a = std::move(b);
        b = std::move(r);
    }
}

} // namespace up

// ---------------------------------------------------------------------------
// factorization: squarefree -> distinct degree -> equal degree (char-2 trace
// splitting)
// ---------------------------------------------------------------------------

namespace {

using up::deg;

// all factors of sf (squarefree, monic, every irreducible factor of degree d)
void equal_degree_split(const FieldCtx& F, const UPoly& sf, int d,
                        Rng& rng, std::vector<UPoly>& out) {
    if (deg(sf) == d) {
        out.push_back(sf);
        return;
    }
    const int kd = F.k() * d;
    if (kd > 6000)
        throw std::runtime_error("factor: splitting field exceeds 6000-bit cap");
    for (;;) {
        // random h; T(h) = h + h^2 + h^4 + ... (kd summands) is 0 or 1 on each
        // root field, splitting sf roughly in half
        UPoly h(static_cast<size_t>(deg(sf)));
        for (auto& c : h) c = F.rand(rng);
        up::trim(h);
        if (h.empty()) continue;
        UPoly t = up::mod(F, h, sf);
        UPoly acc = t;
        for (int i = 1; i < kd; ++i) {
            t = up::mulmod(F, t, t, sf);
            acc = up::add(F, acc, t);
        }
        UPoly g = up::gcd(F, acc, sf);
        if (deg(g) > 0 && deg(g) < deg(sf)) {
            UPoly q, r;
            up::divrem(F, sf, g, q, r);
            assert(r.empty());
            equal_degree_split(F, g, d, rng, out);
            equal_degree_split(F, up::monic(F, q), d, rng, out);
            return;
        }
    }
}

bool poly_less(const UPoly& a, const UPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return gf2x::less(a[i], b[i]);
    return false;
}

// multiplicity of fac in p
int multiplicity(const FieldCtx& F, UPoly p, const UPoly& fac) {
    int m = 0;
    for (;;) {
        UPoly q, r;
        up::divrem(F, p, fac, q, r);
        if (!r.empty()) return m;
        ++m;
        p = std::move(q);
    }
}

} // namespace

std::vector<std::pair<UPoly, int>> factor_univariate(const FieldCtx& F, const UPoly& p, Rng& rng) {
    if (deg(p) < 1) throw std::domain_error("factor: constant polynomial");
    UPoly sf = up::radical(F, p);

    // distinct-degree decomposition of the squarefree part
    std::vector<std::pair<UPoly, int>> out; // (irreducible, multiplicity)
    std::vector<UPoly> irreducibles;
    UPoly rem = sf;
    UPoly x = up::monomial(F.one(), 1);
    UPoly frob = up::mod(F, x, rem); // x^(2^(k*d)) mod rem, incrementally
    int d = 0;
    while (deg(rem) > 0) {
        ++d;
        if (2 * d > deg(rem)) {
            irreducibles.push_back(rem); // what is left is irreducible
            break;
        }
        frob = up::frobenius_mod(F, frob, rem);
        UPoly g = up::gcd(F, up::add(F, frob, up::mod(F, x, rem)), rem);
        if (deg(g) > 0) {
            equal_degree_split(F, g, d, rng, irreducibles);
            UPoly q, r;
            up::divrem(F, rem, g, q, r);
            assert(r.empty());
            rem = up::monic(F, q);
            frob = up::mod(F, frob, rem);
        }
    }
    for (auto& f : irreducibles)
        out.emplace_back(f, multiplicity(F, p, f));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

std::vector<Fe> roots_in_field(const FieldCtx& F, const UPoly& p, Rng& rng) {
    std::vector<Fe> roots;
    if (deg(p) < 1) return roots;
    // restrict to the part splitting over F before full factorization
    UPoly sf = up::radical(F, p);
    UPoly x = up::monomial(F.one(), 1);
    UPoly frob = up::frobenius_mod(F, up::mod(F, x, sf), sf);
    UPoly lin = up::gcd(F, up::add(F, frob, up::mod(F, x, sf)), sf);
    if (deg(lin) < 1) return roots;
    std::vector<UPoly> facs;
    equal_degree_split(F, lin, 1, rng, facs);
    for (auto& f : facs) {
        assert(deg(f) == 1);
        roots.push_back(F.mul(f[0], F.inv(f[1])));
    }
    std::sort(roots.begin(), roots.end(), gf2x::less);
    return roots;
}

ExtensionRoots roots_in_extension(const FieldCtx& base, const UPoly& p, int m, Rng& rng) {
    FieldCtx ext(base.k() * m);
    Embedding phi(base, ext, rng);
    UPoly pe = map_poly(phi, p);
    std::vector<Fe> roots = roots_in_field(ext, pe, rng);
    return ExtensionRoots{std::move(ext), phi.image_of_gen(), std::move(roots)};
}

UPoly map_poly(const Embedding& phi, const UPoly& p) {
    UPoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = phi.apply(p[i]);
    up::trim(r);
    return r;
}

// ---------------------------------------------------------------------------
// Embedding lives here: it needs root finding.
// ---------------------------------------------------------------------------

Embedding::Embedding(const FieldCtx& sub, const FieldCtx& super, Rng& rng)
    : super_(&super), sub_k_(sub.k()) {
    if (super.k() % sub.k() != 0)
        throw FieldTooSmall("embedding requires sub-degree | super-degree");
    if (sub.same(super)) {
        root_ = super.gen();
        return;
    }
    // roots of the sub-modulus, viewed over the super field
    UPoly p;
    for (int i = 0; i <= sub.k(); ++i) {
        if (gf2x::get_bit(sub.modulus(), i)) {
            if (p.size() < static_cast<size_t>(i) + 1) p.resize(i + 1);
            p[i] = super.one();
        }
    }
    std::vector<Fe> roots = roots_in_field(super, p, rng);
    if (static_cast<int>(roots.size()) != sub.k())
        throw FieldTooSmall("sub-modulus does not split in super-field");
    root_ = roots.front(); // roots_in_field sorts by bitstring value
}

Fe Embedding::apply(const Fe& a) const {
    // Horner over F2 bits of a, from the top bit down
    int d = gf2x::degree(a);
    Fe acc = super_->zero();
    for (int i = d; i >= 0; --i) {
        acc = super_->mul(acc, root_);
        if (gf2x::get_bit(a, i)) acc = super_->add(acc, super_->one());
    }
    return acc;
}

} // namespace richelot
