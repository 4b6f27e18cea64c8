#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "richelot/dihedral.hpp"
#include "richelot/mpoly.hpp"
#include "richelot/rng.hpp"
#include "richelot/systems.hpp"
#include "richelot/unipoly.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <vector>

using namespace richelot;
using nlohmann::json;

namespace {

json load_samples() {
    std::ifstream in(std::string(RICHELOT_TEST_DIR) +
                     "/fixtures/solve_samples.json");
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

// runs the solve matching a sample record's configuration
dh::PairSolutions run_sample(const json& s) {
    const FieldCtx base(s.at("k").get<int>());
    const Fe A = base.from_hex(s.at("A").get<std::string>());
    if (s.at("case") == "GS") return dh::solve_pairs_special(base, A).flat;
    const Fe B = base.from_hex(s.at("B").get<std::string>());
    return dh::solve_pairs(base, A, B);
}

bool fe_pair_eq(const std::pair<Fe, Fe>& x, const std::pair<Fe, Fe>& y) {
    return x.first == y.first && x.second == y.second;
}

// the two defining relations the solutions of a configuration must satisfy
std::pair<const mp::MPoly*, const mp::MPoly*> relations_for(bool right_special) {
    const sys::ReferenceSystem& rs = sys::build_reference_system();
    if (right_special) return {&rs.t1s, &rs.t2s};
    return {&rs.t1, &rs.t2};
}

// full per-solution battery for one (a, c) pair
void check_construction(const dh::PairSolutions& sols, const Fe& a,
                        const Fe& c, bool all_translations) {
    const FieldCtx& F = sols.prm.F;
    const std::array<Fe, 4> at{a, c, sols.prm.A, sols.prm.B};

    // the pair also satisfies the companion relations of the system
    const auto [t1, t2] = relations_for(sols.prm.right_special);
    CHECK(F.is_zero(mp::eval(*t1, F, at)));
    CHECK(F.is_zero(mp::eval(*t2, F, at)));

    const std::vector<Fe> es = dh::solve_e(sols.prm, a, c);
    REQUIRE(es.size() == 16);
    CHECK(std::adjacent_find(es.begin(), es.end()) == es.end());

    const dh::DihedralSolution sol =
        dh::make_solution(sols.prm, a, c, es.front());

    // expansion coefficients of the glued right-hand side
    const std::array<Fe, 11> s = dh::expand_S(sol);
    CHECK(F.is_zero(s[9]));
    CHECK(F.is_zero(s[7]));
    CHECK(s[10] == F.sqr(s[5]));
    UPoly spoly(s.begin(), s.end());
    up::trim(spoly);
    CHECK(dh::as_normal_form(F, spoly).empty());

    const dh::Genus4Curve top = dh::build_genus4(sol);
    CHECK(up::deg(top.as_poly) == 9);

    // each cover substitution conjugates the top curve onto its side curve
    const auto check_cover = [&](const dh::CoverData& cd, bool special,
                                 const Fe& coef) {
        UPoly rhs = up::pow(F, cd.subst, 5);
        if (!special)
            rhs = up::mul_sc(F, up::add(F, rhs, up::pow(F, cd.subst, 3)),
                             F.sqr(coef));
        const UPoly lhs = up::add(
            F, up::add(F, top.as_poly, up::mul(F, cd.shift, cd.shift)),
            cd.shift);
        CHECK(lhs == rhs);
    };
    check_cover(top.to_c1, sols.prm.left_special, dh::left_coeff(sols.prm));
    check_cover(top.to_c2, sols.prm.right_special, dh::right_coeff(sols.prm));

    // the substitutions satisfy the conic relation tying them together;
    // the model curve is built from the smallest translation of the orbit
    Rng rng = named_stream(2026, "test.conic");
    for (int i = 0; i < 50; ++i) {
        const Fe t0 = F.rand(rng);
        const Fe x = up::eval(F, top.to_c1.subst, t0);
        const Fe u = up::eval(F, top.to_c2.subst, t0);
        Fe acc = F.mul(F.sqr(a), F.sqr(x));
        acc = F.add(acc, F.mul(F.sqr(sol.b), x));
        acc = F.add(acc, F.mul(F.sqr(c), F.sqr(u)));
        acc = F.add(acc, F.mul(F.sqr(sol.d), u));
        acc = F.add(acc, F.sqr(es.front()));
        CHECK(F.is_zero(acc));
    }

    CHECK(dh::e_orbit_check(sol));

    if (all_translations) {
        // the reconstructed top curve does not depend on the translation
        for (const Fe& e : es) {
            const dh::Genus4Curve other =
                dh::build_genus4(dh::make_solution(sols.prm, a, c, e));
            CHECK(other.as_poly == top.as_poly);
        }
    }
}

} // namespace

TEST_CASE("solve reproduces the recorded closure data") {
    const json samples = load_samples();
    REQUIRE(samples.size() == 22);
    for (const json& s : samples) {
        INFO("case " << s.at("case").get<std::string>() << " k "
                     << s.at("k").get<int>() << " A "
                     << s.at("A").get<std::string>() << " B "
                     << s.at("B").get<std::string>());
        const dh::PairSolutions sols = run_sample(s);
        CHECK(sols.pairs.size() == s.at("count").get<size_t>());
        CHECK(sols.diag.m == s.at("m").get<int>());
        CHECK(sols.diag.le == s.at("le").get<int>());
        CHECK(sols.diag.lx == s.at("lx").get<int>());
        CHECK(sols.diag.pair_field_bits == s.at("pair_field_bits").get<int>());
        CHECK(sols.diag.full_field_bits == s.at("full_field_bits").get<int>());
        CHECK(sols.diag.eliminant_factor_degrees ==
              s.at("f_factor_degrees").get<std::vector<int>>());
        CHECK(sols.prm.F.k() == sols.diag.full_field_bits);

        // pairs are sorted, distinct, and have nonzero components
        for (size_t i = 0; i + 1 < sols.pairs.size(); ++i)
            CHECK(!fe_pair_eq(sols.pairs[i], sols.pairs[i + 1]));
        for (const auto& [a, c] : sols.pairs) {
            CHECK(!sols.prm.F.is_zero(a));
            CHECK(!sols.prm.F.is_zero(c));
        }
    }
}

TEST_CASE("parallel pair collection matches the serial reference") {
    const FieldCtx base(4);
    const Fe A = base.from_hex("0x9");
    const Fe B = base.from_hex("0xe");
    const dh::PairSolutions ser = dh::solve_pairs_reference(base, A, B);
    const dh::PairSolutions par1 = dh::solve_pairs(base, A, B, 1);
    const dh::PairSolutions par2 = dh::solve_pairs(base, A, B, 2);
    REQUIRE(ser.pairs.size() == par1.pairs.size());
    REQUIRE(ser.pairs.size() == par2.pairs.size());
    for (size_t i = 0; i < ser.pairs.size(); ++i) {
        CHECK(fe_pair_eq(ser.pairs[i], par1.pairs[i]));
        CHECK(fe_pair_eq(ser.pairs[i], par2.pairs[i]));
    }
    CHECK(ser.diag.full_field_bits == par2.diag.full_field_bits);

    const FieldCtx base5(4);
    const dh::SpecialOrbits so1 = dh::solve_pairs_special(base5, base5.one(), 1);
    const dh::SpecialOrbits so2 = dh::solve_pairs_special(base5, base5.one(), 2);
    REQUIRE(so1.flat.pairs.size() == so2.flat.pairs.size());
    for (size_t i = 0; i < so1.flat.pairs.size(); ++i)
        CHECK(fe_pair_eq(so1.flat.pairs[i], so2.flat.pairs[i]));
}

TEST_CASE("repeated solves produce identical output") {
    const FieldCtx base(4);
    const Fe A = base.from_hex("0x2");
    const Fe B = base.from_hex("0x3");
    const dh::PairSolutions first = dh::solve_pairs(base, A, B);
    const dh::PairSolutions second = dh::solve_pairs(base, A, B);
    CHECK(first.prm.F.modulus() == second.prm.F.modulus());
    REQUIRE(first.pairs.size() == second.pairs.size());
    for (size_t i = 0; i < first.pairs.size(); ++i)
        CHECK(fe_pair_eq(first.pairs[i], second.pairs[i]));
}

TEST_CASE("every generic-generic solution reconstructs the same top curve") {
    const FieldCtx base(4);
    const dh::PairSolutions sols =
        dh::solve_pairs(base, base.from_hex("0x9"), base.from_hex("0xe"));
    REQUIRE(sols.pairs.size() == 60);
    for (size_t i = 0; i < sols.pairs.size(); ++i)
        check_construction(sols, sols.pairs[i].first, sols.pairs[i].second,
                           i % 5 == 0);
}

TEST_CASE("solutions against a special right-hand curve reconstruct") {
    const FieldCtx base(4);
    const dh::SpecialOrbits so = dh::solve_pairs_special(base,
                                                         base.from_hex("0x2"));
    REQUIRE(so.flat.pairs.size() == 60);
    REQUIRE(so.orbits.size() == 12);
    for (size_t i = 0; i < so.orbits.size(); ++i) {
        REQUIRE(so.orbits[i].size() == 5);
        const auto& [a, c] = so.orbits[i].front();
        check_construction(so.flat, a, c, i == 0);
    }
}

TEST_CASE("fifth-root orbits partition the special solution set") {
    const json samples = load_samples();
    for (const json& s : samples) {
        if (s.at("case") != "GS") continue;
        const FieldCtx base(s.at("k").get<int>());
        const dh::SpecialOrbits so = dh::solve_pairs_special(
            base, base.from_hex(s.at("A").get<std::string>()));
        CHECK(so.orbits.size() == s.at("mu5_orbits").get<size_t>());
        size_t covered = 0;
        for (const auto& orbit : so.orbits) {
            CHECK(orbit.size() == 5);
            covered += orbit.size();
        }
        CHECK(covered == so.flat.pairs.size());
    }
}

TEST_CASE("the both-special configuration has no solutions") {
    const dh::PairSolutions empty = dh::solve_special_special();
    CHECK(empty.pairs.empty());
    CHECK(empty.diag.m == 1);
    CHECK(empty.diag.pair_field_bits == 1);
    CHECK(empty.diag.full_field_bits == 8);
    CHECK(empty.diag.eliminant_factor_degrees ==
          std::vector<int>{1, 2, 4, 4, 4});
}

TEST_CASE("normal-form reduction is idempotent and additive") {
    const FieldCtx F(9);
    Rng rng = named_stream(2026, "test.asnf");
    for (int it = 0; it < 40; ++it) {
        UPoly p(11), q(6);
        for (Fe& cv : p) cv = F.rand(rng);
        for (Fe& cv : q) cv = F.rand(rng);
        up::trim(p);
        up::trim(q);
        const UPoly nf = dh::as_normal_form(F, p);
        CHECK(dh::as_normal_form(F, nf) == nf);
        for (size_t i = 2; i < nf.size(); i += 2) // even exponents are gone
            CHECK(F.is_zero(nf[i]));
        // adding w² + w changes nothing
        const UPoly shifted =
            up::add(F, up::add(F, p, up::mul(F, q, q)), q);
        CHECK(dh::as_normal_form(F, shifted) == nf);
    }
}

TEST_CASE("rejected inputs") {
    const FieldCtx base(4);
    CHECK_THROWS_AS(dh::solve_pairs(base, base.zero(), base.one()),
                    dh::ParameterZero);
    CHECK_THROWS_AS(dh::solve_pairs(base, base.one(), base.zero()),
                    dh::ParameterZero);
    const FieldCtx base5(5);
    CHECK_THROWS_AS(dh::solve_pairs_special(base5, base5.one()),
                    std::invalid_argument);

    const dh::PairSolutions sols =
        dh::solve_pairs(base, base.from_hex("0x9"), base.from_hex("0xe"));
    const FieldCtx& F = sols.prm.F;
    const auto& [a, c] = sols.pairs.front();

    // zero components and non-solutions are rejected
    CHECK_THROWS_AS(dh::make_solution(sols.prm, F.zero(), c, F.zero()),
                    dh::InvalidPair);
    CHECK_THROWS_AS(dh::make_solution(sols.prm, a, F.zero(), F.zero()),
                    dh::InvalidPair);
    const sys::ReferenceSystem& rs = sys::build_reference_system();
    const Fe bad_c = F.add(c, F.one());
    const bool still_solves =
        F.is_zero(mp::eval(rs.r1, F, {a, bad_c, sols.prm.A, sols.prm.B})) &&
        F.is_zero(mp::eval(rs.r2, F, {a, bad_c, sols.prm.A, sols.prm.B}));
    REQUIRE(!still_solves);
    CHECK_THROWS_AS(dh::make_solution(sols.prm, a, bad_c, F.zero()),
                    dh::InvalidPair);

    // a translation that does not solve the gluing equation is rejected
    const std::vector<Fe> es = dh::solve_e(sols.prm, a, c);
    Fe stray = F.zero();
    for (uint64_t v = 1;; ++v) {
        stray = F.from_hex("0x" + std::to_string(v));
        if (!std::binary_search(es.begin(), es.end(), stray, gf2x::less))
            break;
    }
    CHECK_THROWS_AS(dh::make_solution(sols.prm, a, c, stray), dh::InvalidPair);
}

TEST_CASE("gluing translations outside the field are reported") {
    // realise a valid pair over the pair field of a configuration whose
    // translations need a quadratic extension
    const FieldCtx base(4);
    const FieldCtx F8(8);
    Rng rng = named_stream(2026, "test.smallfield");
    const Embedding phi(base, F8, rng);
    const Fe A = phi.apply(base.from_hex("0x9"));
    const Fe B = phi.apply(base.from_hex("0xe"));
    const dh::DiagramParams prm{F8, A, B, false, false};

    const sys::ReferenceSystem& rs = sys::build_reference_system();
    const UPoly elim =
        mp::specialize(rs.f, mp::kVarA, F8, {F8.zero(), F8.zero(), A, B});
    bool found_pair = false, found_small = false;
    for (const Fe& a0 : roots_in_field(F8, elim, rng)) {
        if (F8.is_zero(a0)) continue;
        const std::array<Fe, 4> at{a0, F8.zero(), A, B};
        const UPoly h =
            up::gcd(F8, mp::specialize(rs.r1, mp::kVarC, F8, at),
                    mp::specialize(rs.r2, mp::kVarC, F8, at));
        for (const Fe& c0 : roots_in_field(F8, h, rng)) {
            if (F8.is_zero(c0)) continue;
            if (F8.is_zero(mp::eval(rs.r3, F8, {a0, c0, A, B}))) continue;
            found_pair = true;
            try {
                dh::solve_e(prm, a0, c0);
            } catch (const FieldTooSmall&) {
                found_small = true;
            }
        }
    }
    REQUIRE(found_pair);
    CHECK(found_small);
}
