#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "richelot/field.hpp"
#include "richelot/rng.hpp"
#include "richelot/unipoly.hpp"

#include <algorithm>
#include <set>

using namespace richelot;

namespace {

UPoly rand_poly(const FieldCtx& F, Rng& rng, int d) {
    UPoly p(size_t(d) + 1);
    for (auto& c : p) c = F.rand(rng);
    p[size_t(d)] = F.rand_nonzero(rng);
    return p;
}

UPoly rand_monic(const FieldCtx& F, Rng& rng, int d) {
    UPoly p = rand_poly(F, rng, d);
    p[size_t(d)] = F.one();
    return p;
}

} // namespace

TEST_CASE("divrem, gcd, eval") {
    const FieldCtx F(8);
    Rng rng(1);
    for (int i = 0; i < 60; ++i) {
        const UPoly a = rand_poly(F, rng, 1 + int(rng.below(10)));
        const UPoly b = rand_poly(F, rng, 1 + int(rng.below(6)));
        UPoly q, r;
        up::divrem(F, a, b, q, r);
        CHECK(up::deg(r) < up::deg(b));
        CHECK(up::add(F, up::mul(F, q, b), r) == a);

        const UPoly g = rand_monic(F, rng, 2);
        const UPoly d = up::gcd(F, up::mul(F, a, g), up::mul(F, b, g));
        UPoly qq, rr;
        up::divrem(F, d, g, qq, rr);
        CHECK(up::deg(rr) == -1);
        CHECK(d.back() == F.one()); // gcd is monic

        const Fe x = F.rand(rng);
        CHECK(up::eval(F, up::mul(F, a, b), x) ==
              F.mul(up::eval(F, a, x), up::eval(F, b, x)));
        CHECK(up::eval(F, up::add(F, a, b), x) ==
              F.add(up::eval(F, a, x), up::eval(F, b, x)));
    }
}

TEST_CASE("derivative in characteristic 2 keeps odd exponents only") {
    const FieldCtx F(4);
    Rng rng(2);
    const Fe c3 = F.rand_nonzero(rng), c2 = F.rand_nonzero(rng),
             c1 = F.rand_nonzero(rng);
    // p = c3 t^3 + c2 t^2 + c1 t -> p' = 3 c3 t^2 + c1 = c3 t^2 + c1
    UPoly p = {F.zero(), c1, c2, c3};
    const UPoly dp = up::derivative(F, p);
    CHECK(up::deg(dp) == 2);
    CHECK(dp[0] == c1);
    CHECK(F.is_zero(dp[1]));
    CHECK(dp[2] == c3);
    // product rule on random samples
    for (int i = 0; i < 30; ++i) {
        const UPoly f = rand_poly(F, rng, 4), g = rand_poly(F, rng, 3);
        const UPoly lhs = up::derivative(F, up::mul(F, f, g));
        const UPoly rhs = up::add(F, up::mul(F, up::derivative(F, f), g),
                                  up::mul(F, f, up::derivative(F, g)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sqrt_even and radical") {
    const FieldCtx F(8);
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        const UPoly p = rand_poly(F, rng, 5);
        CHECK(up::sqrt_even(F, up::mul(F, p, p)) == p);
    }
    // radical of p^2 q with p, q distinct irreducibles is p q (monic)
    Rng frng(4);
    const UPoly p = {F.gen(), F.one()};           // t + x
    const UPoly q = {F.one(), F.gen(), F.one()};  // t^2 + x t + 1 (may factor; fine)
    const UPoly prod = up::mul(F, up::mul(F, p, p), q);
    const UPoly rad = up::radical(F, prod);
    const UPoly expect = up::monic(F, up::mul(F, p, q));
    CHECK(up::radical(F, expect) == expect); // squarefree fixed point
    CHECK(rad == expect);
}

TEST_CASE("resultant: known values and multiplicativity") {
    const FieldCtx F(8);
    Rng rng(5);
    // Res_t(t^2 + a, t + c) = c^2 + a
    for (int i = 0; i < 20; ++i) {
        const Fe a = F.rand(rng), c = F.rand(rng);
        const UPoly f = {a, F.zero(), F.one()};
        const UPoly g = {c, F.one()};
        CHECK(up::resultant(F, f, g) == F.add(F.sqr(c), a));
    }
    for (int i = 0; i < 20; ++i) {
        const UPoly f = rand_poly(F, rng, 3);
        const UPoly g = rand_poly(F, rng, 2);
        const UPoly h = rand_poly(F, rng, 2);
        CHECK(up::resultant(F, f, up::mul(F, g, h)) ==
              F.mul(up::resultant(F, f, g), up::resultant(F, f, h)));
    }
    // Common root forces zero.
    const Fe r = F.rand_nonzero(rng);
    const UPoly lin = {r, F.one()};
    const UPoly f2 = up::mul(F, lin, rand_poly(F, rng, 2));
    const UPoly g2 = up::mul(F, lin, rand_poly(F, rng, 1));
    CHECK(F.is_zero(up::resultant(F, f2, g2)));
    // Degree-zero convention: Res(f, const) = const^deg f.
    const UPoly konst = {r};
    const UPoly f3 = rand_poly(F, rng, 4);
    CHECK(up::resultant(F, f3, konst) == F.pow(r, 4));
}

TEST_CASE("factorization: reassembly, determinism, known multiset") {
    const FieldCtx F(16);
    Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        // Build a product of small monics with multiplicities and refactor.
        UPoly prod = {F.rand_nonzero(rng)};
        for (int j = 0; j < 3; ++j) {
            const UPoly fac = rand_monic(F, rng, 1 + int(rng.below(3)));
            const int mult = 1 + int(rng.below(2));
            for (int m = 0; m < mult; ++m) prod = up::mul(F, prod, fac);
        }
        Rng frng(7);
        auto factors = factor_univariate(F, prod, frng);
        UPoly back = {prod.back()}; // leading coefficient survives
        for (const auto& [fac, mult] : factors) {
            CHECK(fac.back() == F.one());
            Rng sub(8);
            CHECK(factor_univariate(F, fac, sub).size() == 1);
            for (int m = 0; m < mult; ++m) back = up::mul(F, back, fac);
        }
        CHECK(back == prod);
        // Determinism across different stream states.
        Rng frng2(99999);
        CHECK(factor_univariate(F, prod, frng2) == factors);
    }

    // t^16 + t over GF(2) splits with degree multiset {1,1,2,4,4,4}.
    const FieldCtx F2(1);
    UPoly t16(17, F2.zero());
    t16[1] = F2.one();
    t16[16] = F2.one();
    Rng frng(9);
    auto factors = factor_univariate(F2, t16, frng);
    std::multiset<int> degs;
    for (const auto& [fac, mult] : factors) {
        CHECK(mult == 1);
        degs.insert(up::deg(fac));
    }
    CHECK(degs == std::multiset<int>({1, 1, 2, 4, 4, 4}));
}

TEST_CASE("roots in field and in extensions") {
    const FieldCtx F(4);
    Rng rng(10);
    // x^(2^2) - x has every element of GF(4) as a root.
    UPoly p(5, F.zero());
    p[1] = F.one();
    p[4] = F.one();
    auto roots = roots_in_field(F, p, rng);
    CHECK(roots.size() == 4);
    const auto fe_less = [](const Fe& a, const Fe& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t w = a.size(); w-- > 0;)
            if (a[w] != b[w]) return a[w] < b[w];
        return false;
    };
    CHECK(std::is_sorted(roots.begin(), roots.end(), fe_less));
    for (const auto& r : roots) CHECK(F.is_zero(up::eval(F, p, r)));

    // A quadratic irreducible over GF(4) splits in the degree-2 extension.
    const Fe g = F.gen();
    UPoly quad = {g, g, F.one()}; // t^2 + x t + x
    CHECK(roots_in_field(F, quad, rng).empty());
    auto ext = roots_in_extension(F, quad, 2, rng);
    CHECK(ext.ext.k() == 8);
    CHECK(ext.roots.size() == 2);
    // Verify through the embedding: map the coefficients and evaluate.
    for (const auto& r : ext.roots) {
        Fe val = ext.ext.zero();
        Fe power = ext.ext.one();
        for (const auto& coeff : quad) {
            // coeff is in GF(4) = {0, 1, g, g+1}: express via base_gen_image
            Fe mapped = ext.ext.zero();
            if (gf2x::get_bit(coeff, 0)) mapped = ext.ext.add(mapped, ext.ext.one());
            if (gf2x::get_bit(coeff, 1)) mapped = ext.ext.add(mapped, ext.base_gen_image);
            val = ext.ext.add(val, ext.ext.mul(mapped, power));
            power = ext.ext.mul(power, r);
        }
        CHECK(ext.ext.is_zero(val));
    }
}

TEST_CASE("map_poly pushes coefficients through an embedding") {
    const FieldCtx sub(4), super(8);
    Rng rng(11);
    const Embedding phi(sub, super, rng);
    const UPoly p = rand_poly(sub, rng, 5);
    const UPoly q = map_poly(phi, p);
    REQUIRE(q.size() == p.size());
    for (size_t i = 0; i < p.size(); ++i) CHECK(q[i] == phi.apply(p[i]));
    // Evaluation commutes with the embedding.
    const Fe x = sub.rand(rng);
    CHECK(up::eval(super, q, phi.apply(x)) == phi.apply(up::eval(sub, p, x)));
}
