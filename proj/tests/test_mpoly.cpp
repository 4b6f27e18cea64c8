#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "richelot/mpoly.hpp"
#include "richelot/systems.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace richelot;
using mp::MPoly;
using mp::make_term;

namespace {

MPoly P(const std::string& s) { return mp::parse(s); }

} // namespace

TEST_CASE("grevlex order: a < c < A < B, graded, tie-break by least variable") {
    // Variables compare by the fixed order.
    CHECK(mp::grevlex_cmp(make_term(1, 0, 0, 0), make_term(0, 1, 0, 0)) < 0);
    CHECK(mp::grevlex_cmp(make_term(0, 1, 0, 0), make_term(0, 0, 1, 0)) < 0);
    CHECK(mp::grevlex_cmp(make_term(0, 0, 1, 0), make_term(0, 0, 0, 1)) < 0);
    // Degree dominates.
    CHECK(mp::grevlex_cmp(make_term(3, 0, 0, 0), make_term(0, 0, 0, 2)) > 0);
    // Classic grevlex witness: A c > a B (deg 2 each; least differing
    // variable is a, and the smaller a-exponent wins).
    CHECK(mp::grevlex_cmp(make_term(0, 1, 1, 0), make_term(1, 0, 0, 1)) > 0);
    // a^2 c vs a c^2: differ in a; smaller a-exponent is larger.
    CHECK(mp::grevlex_cmp(make_term(1, 2, 0, 0), make_term(2, 1, 0, 0)) > 0);
    // Total order sanity on a small set.
    const mp::Term ts[] = {make_term(0, 0, 0, 0), make_term(1, 0, 0, 0),
                           make_term(0, 0, 0, 1), make_term(2, 2, 2, 2)};
    for (const auto& u : ts)
        for (const auto& v : ts) {
            const int c1 = mp::grevlex_cmp(u, v), c2 = mp::grevlex_cmp(v, u);
            CHECK(c1 == -c2);
            CHECK((u == v) == (c1 == 0));
        }
}

TEST_CASE("parse, print, and normalization") {
    CHECK(mp::to_string(P("0")) == "0");
    CHECK(mp::to_string(P("1")) == "1");
    CHECK(mp::to_string(P("a^2 + 1")) == "a^2 + 1");
    // XOR semantics: repeated monomials cancel.
    CHECK(mp::is_zero(P("a B + a B")));
    CHECK(mp::to_string(P("a B + a B + c")) == "c");
    // Print order is descending grevlex.
    CHECK(mp::to_string(P("a + B + c + A")) == "B + A + c + a");
    // '*' and repeated factors are accepted.
    CHECK(P("a*a*B^2") == P("a^2 B^2"));
    // Round trips.
    for (const char* s :
         {"a^8 B^4 + a^6 c B^2 + a^4 + a c^6 A^2 + c^8 A^4 + c^4",
          "a^5 B^2 + c^5 A^2", "A^4 + B^8 + 1"}) {
        const MPoly p = P(s);
        CHECK(mp::parse(mp::to_string(p)) == p);
    }
    CHECK_THROWS(mp::parse("a^2 + q"));
}

TEST_CASE("ring arithmetic") {
    const MPoly p = P("a^2 + c"), q = P("A + B^3"), r = P("a c A B + 1");
    CHECK(mp::mul(p, q) == mp::mul(q, p));
    CHECK(mp::mul(p, mp::add(q, r)) ==
          mp::add(mp::mul(p, q), mp::mul(p, r)));
    CHECK(mp::add(p, p) == mp::zero());
    CHECK(mp::sqr(p) == mp::mul(p, p));
    CHECK(mp::pow_u(p, 5) ==
          mp::mul(p, mp::mul(p, mp::mul(p, mp::mul(p, p)))));
    CHECK(mp::pow_u(p, 0) == mp::one());
    CHECK(mp::mul(p, mp::zero()) == mp::zero());
    // Frobenius: (p + q)^2 = p^2 + q^2.
    CHECK(mp::sqr(mp::add(p, q)) == mp::add(mp::sqr(p), mp::sqr(q)));
}

TEST_CASE("degrees, coefficients, derivative, substitution") {
    const MPoly p = P("a^3 c A^2 + a c^5 + c^2 B + 1");
    CHECK(mp::total_deg(p) == 6);
    CHECK(mp::deg_in(p, mp::kVarA) == 3);
    CHECK(mp::deg_in(p, mp::kVarC) == 5);
    CHECK(mp::deg_in(p, mp::kVarBB) == 1);
    CHECK(mp::coeff_of(p, mp::kVarA, 3) == P("c A^2"));
    CHECK(mp::coeff_of(p, mp::kVarA, 0) == P("c^2 B + 1"));
    CHECK(mp::leading_coeff_in(p, mp::kVarC) == P("a"));
    // Characteristic 2: even exponents die.
    CHECK(mp::derivative_wrt(p, mp::kVarA) == P("a^2 c A^2 + c^5"));
    CHECK(mp::derivative_wrt(p, mp::kVarBB) == P("c^2"));
    CHECK(mp::derivative_wrt(P("a^2 + B^4"), mp::kVarA) == mp::zero());
    // B := A substitution merges exponents and may cancel.
    CHECK(mp::subst_var(P("a B + a A"), mp::kVarBB, mp::kVarAA) == mp::zero());
    CHECK(mp::subst_var(P("A^2 B^3 + B"), mp::kVarBB, mp::kVarAA) ==
          P("A^5 + A"));
}

TEST_CASE("exact division") {
    const MPoly d = P("a + c");
    const MPoly q = P("a^2 c + A B + 1");
    const MPoly p = mp::mul(d, q);
    CHECK(mp::divide_exact(p, d) == q);
    CHECK(mp::divide_exact(p, q) == d);
    MPoly out;
    CHECK(!mp::try_divide_exact(mp::add(p, mp::one()), d, out));
    CHECK_THROWS(mp::divide_exact(P("a^2 + c"), P("a + c")));
    // 0 / d = 0.
    CHECK(mp::divide_exact(mp::zero(), d) == mp::zero());
}

TEST_CASE("resultant: eliminating one variable") {
    // Res_c(c^2 + a, c + A) = A^2 + a.
    CHECK(mp::resultant_wrt(P("c^2 + a"), P("c + A"), mp::kVarC) ==
          P("A^2 + a"));
    // Res_c of two linear forms.
    CHECK(mp::resultant_wrt(P("a c + 1"), P("c + B"), mp::kVarC) ==
          P("a B + 1"));
    // Multiplicativity in the first argument.
    const MPoly f = P("c^2 + a c + B"), g = P("c + a^2"), h = P("c^3 + A");
    CHECK(mp::resultant_wrt(mp::mul(f, g), h, mp::kVarC) ==
          mp::mul(mp::resultant_wrt(f, h, mp::kVarC),
                  mp::resultant_wrt(g, h, mp::kVarC)));
    // Degenerate conventions.
    CHECK(mp::resultant_wrt(f, P("a^3 + B"), mp::kVarC) ==
          mp::sqr(P("a^3 + B"))); // q free of c: q^deg_c(f)
    CHECK(mp::resultant_wrt(P("a"), P("B"), mp::kVarC) == mp::one());
    CHECK(mp::resultant_wrt(mp::zero(), f, mp::kVarC) == mp::zero());
    // Common factor forces zero.
    CHECK(mp::resultant_wrt(mp::mul(f, g), mp::mul(h, g), mp::kVarC) ==
          mp::zero());
}

TEST_CASE("discriminant conventions in characteristic 2") {
    // Disc_c(c^2 + A c + a): derivative is A (degree 0 in c),
    // Res = A^2, lc exponent 2 - 2 - 0 = 0.
    CHECK(mp::discriminant_wrt(P("c^2 + A c + a"), mp::kVarC) == P("A^2"));
    // Disc_c(c^2 + a): derivative vanishes.
    CHECK(mp::discriminant_wrt(P("c^2 + a"), mp::kVarC) == mp::zero());
    // Odd degree with full-degree derivative: deg 3, deg' 2, exponent -1.
    // p = c^3 + a c^2 + B: p' = c^2, Res(p, p') = B^2, lc = 1.
    CHECK(mp::discriminant_wrt(P("c^3 + a c^2 + B"), mp::kVarC) == P("B^2"));
}

TEST_CASE("verify_identity in both modes") {
    const MPoly lhs = mp::sqr(P("a + c A"));
    const MPoly rhs = P("a^2 + c^2 A^2");
    CHECK(mp::verify_identity_exact(lhs, rhs));
    CHECK(!mp::verify_identity_exact(lhs, mp::add(rhs, mp::one())));
    CHECK(mp::verify_identity_probabilistic(lhs, rhs, 32, 10, 42));
    CHECK(!mp::verify_identity_probabilistic(lhs, mp::add(rhs, P("a B")), 32,
                                             10, 42));
}

TEST_CASE("reference system: loads, validates, derived parts") {
    const auto& S = sys::build_reference_system();
    CHECK(S.r1.size() == 6);
    CHECK(S.r2.size() == 6);
    CHECK(S.r3 == P("a^5 B^2 + c^5 A^2"));
    CHECK(S.t3.size() == 14);
    // u_i (a + c) reassembles the B = A slice.
    const MPoly a_plus_c = P("a + c");
    CHECK(mp::mul(S.u1, a_plus_c) ==
          mp::subst_var(S.r1, mp::kVarBB, mp::kVarAA));
    CHECK(mp::mul(S.u2, a_plus_c) ==
          mp::subst_var(S.r2, mp::kVarBB, mp::kVarAA));
    CHECK(mp::deg_in(S.u1, mp::kVarC) == 7);
    CHECK(mp::deg_in(S.u2, mp::kVarC) == 9);
}

TEST_CASE("reference system: tampered file is rejected") {
    const auto& S = sys::build_reference_system();
    (void)S;
    std::string dir;
    if (const char* env = std::getenv("RICHELOT_DATA_DIR")) dir = env;
#ifdef RICHELOT_DATA_DIR
    if (dir.empty()) dir = RICHELOT_DATA_DIR;
#endif
    REQUIRE(!dir.empty());
    std::ifstream in(dir + "/reference_system.txt");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    REQUIRE(!text.empty());
    // Flip one monomial of t1 (a^10 A^4 B^8 -> a^10 A^4 B^6).
    const auto at = text.find("a^10 A^4 B^8");
    REQUIRE(at != std::string::npos);
    std::string bad = text;
    bad.replace(at, 12, "a^10 A^4 B^6");
    const std::string tmp = "tampered_reference_system.txt";
    std::ofstream(tmp) << bad;
    CHECK_THROWS_AS(sys::load_reference_system(tmp), std::runtime_error);
    std::remove(tmp.c_str());
}

TEST_CASE("mid-size eliminations match their closed forms exactly") {
    const auto& S = sys::build_reference_system();
    // Res_c(r2, r3) = A^22 B^14 (A + B)^4 a^30.
    const MPoly lhs23 = mp::resultant_wrt(S.r2, S.r3, mp::kVarC);
    const MPoly rhs23 = mp::mul(
        P("a^30 A^22 B^14"),
        mp::pow_u(P("A + B"), 4));
    CHECK(lhs23 == rhs23);
    // Special case: Res_c(r2s, r3s) = A^26 a^30.
    CHECK(mp::resultant_wrt(S.r2s, S.r3s, mp::kVarC) == P("a^30 A^26"));
    // On the B = A slice: Res_c(u2, r3|B=A) = A^36 a^24.
    const MPoly r3_slice = mp::subst_var(S.r3, mp::kVarBB, mp::kVarAA);
    CHECK(mp::resultant_wrt(S.u2, r3_slice, mp::kVarC) == P("a^24 A^36"));
}

TEST_CASE("probabilistic resultant and discriminant checks") {
    const auto& S = sys::build_reference_system();
    const FieldCtx F(64);
    Rng rng = named_stream(7, "test.prob_checks");
    // Res_c(r2, r3) again, this time by evaluation.
    const MPoly rhs23 =
        mp::mul(P("a^30 A^22 B^14"), mp::pow_u(P("A + B"), 4));
    CHECK(sys::probabilistic_resultant_check(S.r2, S.r3, mp::kVarC, rhs23, F,
                                             rng, 4));
    // Negative control: a wrong right-hand side fails.
    CHECK(!sys::probabilistic_resultant_check(S.r2, S.r3, mp::kVarC,
                                              mp::add(rhs23, mp::one()), F,
                                              rng, 4));
    // Disc_a(fs) = A^1356.
    CHECK(sys::probabilistic_discriminant_check(S.fs, mp::kVarA, P("A^1356"),
                                                F, rng, 4));
}
