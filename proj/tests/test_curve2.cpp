#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "richelot/curve2.hpp"
#include "richelot/rng.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace richelot;
using cv::Automorphism;
using cv::CurveModel;

namespace {

// y² + y + RHS(x); an automorphism must preserve this value at every point
Fe curve_value(const FieldCtx& F, bool special, const Fe& s, const Fe& x,
               const Fe& y) {
    const Fe rhs = special ? F.pow(x, 5)
                           : F.mul(s, F.add(F.pow(x, 5), F.pow(x, 3)));
    return F.add(F.add(F.sqr(y), y), rhs);
}

} // namespace

TEST_CASE("curve models, invariants, igusa vectors") {
    FieldCtx F(4);
    CHECK_THROWS_AS(CurveModel::generic(F, F.zero()), cv::PreconditionViolated);

    const CurveModel C1 = CurveModel::generic(F, F.one());
    CHECK(cv::supersingular_invariant(C1).value == F.one());
    CHECK(F.is_zero(
        cv::supersingular_invariant(CurveModel::special_curve()).value));

    const auto v1 = cv::igusa_vector(C1);
    CHECK(v1 == std::array<Fe, 5>{F.zero(), F.zero(), F.zero(), F.one(),
                                  F.one()});
    const auto vs = cv::igusa_vector(CurveModel::special_curve());
    CHECK(vs[3].empty());
    CHECK(vs[4] == Fe{1});

    Rng rng = named_stream(7, "test.curve2.models");
    for (int i = 0; i < 8; ++i) {
        const Fe s = F.rand_nonzero(rng);
        const Fe s2 = F.rand_nonzero(rng);
        const CurveModel C = CurveModel::generic(F, s);
        const auto w = cv::igusa_vector(C);
        CHECK(w[3] == F.pow(s, 8));
        CHECK(w[4] == F.pow(s, 6));
        // I recomputed from the weighted point equals the invariant
        const Fe I = F.mul(F.pow(w[3], 5), F.inv(F.pow(w[4], 4)));
        CHECK(I == cv::supersingular_invariant(C).value);
        // the 16th power map is injective
        const Fe I2 =
            cv::supersingular_invariant(CurveModel::generic(F, s2)).value;
        CHECK((I == I2) == (s == s2));
        // and inverted exactly by from_invariant
        const CurveModel back = CurveModel::from_invariant(F, I);
        CHECK_FALSE(back.special);
        CHECK(back.s == s);
    }
    CHECK(CurveModel::from_invariant(F, F.zero()).special);
}

TEST_CASE("generic automorphism groups over their minimal fields") {
    struct Sample {
        int base_k;
        const char* s_hex;
        int minimal_k;
    };
    // smallest extensions over which the full 32-element group exists
    const Sample samples[] = {
        {1, "0x1", 12},
        {2, "0x2", 10},
        {3, "0x2", 12},
        {4, "0x3", 24},
    };
    Rng rng = named_stream(11, "test.curve2.groups");
    for (const auto& smp : samples) {
        CAPTURE(smp.base_k);
        FieldCtx base(smp.base_k);
        const CurveModel C =
            CurveModel::generic(base, base.from_hex(smp.s_hex));
        const FieldCtx work = cv::automorphism_field(C);
        CHECK(work.k() == smp.minimal_k);

        const auto G = cv::automorphisms(C, work);
        REQUIRE(G.size() == 32);
        CHECK(cv::automorphisms(C, work) == G); // deterministic enumeration

        const auto census = cv::order_census(work, G);
        CHECK(census == std::map<int, std::size_t>{{1, 1}, {2, 11}, {4, 20}});

        Embedding emb(base, work, rng);
        const Fe s = emb.apply(C.s);
        std::vector<Automorphism> translation_free;
        for (const Automorphism& a : G) {
            CHECK(cv::aut_valid(work, a, false, s));
            if (work.is_zero(a.t)) translation_free.push_back(a);
            // the defining property, checked pointwise
            for (int i = 0; i < 3; ++i) {
                const Fe x = work.rand(rng), y = work.rand(rng);
                const auto [X, Y] = cv::aut_apply(work, a, x, y);
                CHECK(curve_value(work, false, s, X, Y) ==
                      curve_value(work, false, s, x, y));
            }
        }
        // t = 0 gives exactly the identity and the hyperelliptic involution
        REQUIRE(translation_free.size() == 2);
        std::sort(translation_free.begin(), translation_free.end(),
                  cv::aut_less);
        CHECK(translation_free[0] == cv::aut_identity());
        CHECK(translation_free[1] == cv::aut_iota());
    }
}

TEST_CASE("fields below the minimum are rejected") {
    const CurveModel C2 = CurveModel::generic(FieldCtx(1), Fe{1});
    CHECK_THROWS_AS(cv::automorphisms(C2, FieldCtx(6)), FieldTooSmall);
    CHECK_THROWS_AS(cv::automorphisms(C2, FieldCtx(11)), FieldTooSmall);

    FieldCtx F4(2);
    const CurveModel C4 = CurveModel::generic(F4, F4.gen());
    CHECK_THROWS_AS(cv::automorphisms(C4, FieldCtx(8)), FieldTooSmall);
    CHECK_THROWS_AS(cv::automorphisms(C4, FieldCtx(9)), FieldTooSmall);

    CHECK_THROWS_AS(cv::automorphisms(CurveModel::special_curve(), FieldCtx(6)),
                    FieldTooSmall);
}

TEST_CASE("group law, inverses, centrality of the involution") {
    const CurveModel C = CurveModel::generic(FieldCtx(2), Fe{2});
    const FieldCtx F = cv::automorphism_field(C);
    const auto G = cv::automorphisms(C, F);
    const Automorphism id = cv::aut_identity();
    const Automorphism iota = cv::aut_iota();

    CHECK(cv::aut_compose(F, iota, iota) == id);
    Rng rng = named_stream(13, "test.curve2.law");
    for (const Automorphism& a : G) {
        CHECK(cv::aut_compose(F, id, a) == a);
        CHECK(cv::aut_compose(F, a, id) == a);
        CHECK(cv::aut_compose(F, a, cv::aut_inverse(F, a)) == id);
        CHECK(cv::aut_compose(F, cv::aut_inverse(F, a), a) == id);
        CHECK(cv::aut_compose(F, iota, a) == cv::aut_compose(F, a, iota));
        if (cv::aut_order(F, a) == 4)
            CHECK(cv::aut_compose(F, a, a) == iota);
    }
    // associativity on random triples
    for (int i = 0; i < 40; ++i) {
        const Automorphism& a = G[rng.below(G.size())];
        const Automorphism& b = G[rng.below(G.size())];
        const Automorphism& c = G[rng.below(G.size())];
        CHECK(cv::aut_compose(F, a, cv::aut_compose(F, b, c)) ==
              cv::aut_compose(F, cv::aut_compose(F, a, b), c));
    }

    CHECK(cv::group_axioms_hold_reference(F, G));
    CHECK(cv::group_axioms_hold(F, G, 1));
    CHECK(cv::group_axioms_hold(F, G, 2));
    // dropping an element breaks closure
    std::vector<Automorphism> broken(G.begin() + 1, G.end());
    CHECK_FALSE(cv::group_axioms_hold_reference(F, broken));
    CHECK_FALSE(cv::group_axioms_hold(F, broken, 2));
}

TEST_CASE("special curve: the 160-element group") {
    const CurveModel C = CurveModel::special_curve();
    const FieldCtx F = cv::automorphism_field(C);
    CHECK(F.k() == 4);
    const auto G = cv::automorphisms(C, F);
    REQUIRE(G.size() == 160);
    // also works over any field containing GF(16)
    CHECK(cv::automorphisms(C, FieldCtx(8)).size() == 160);

    const auto census = cv::order_census(F, G);
    CHECK(census == std::map<int, std::size_t>{
                        {1, 1}, {2, 11}, {4, 20}, {5, 64}, {10, 64}});

    Rng rng = named_stream(17, "test.curve2.special");
    for (const Automorphism& a : G) {
        CHECK(cv::aut_valid(F, a, true, F.zero()));
        const Fe x = F.rand(rng), y = F.rand(rng);
        const auto [X, Y] = cv::aut_apply(F, a, x, y);
        CHECK(curve_value(F, true, F.zero(), X, Y) ==
              curve_value(F, true, F.zero(), x, y));
    }
    CHECK(cv::group_axioms_hold_reference(F, G));
    CHECK(cv::group_axioms_hold(F, G, 2));
}

TEST_CASE("order-4 conjugacy classes") {
    const CurveModel Cg = CurveModel::generic(FieldCtx(1), Fe{1});
    const auto cg = cv::order4_classes(Cg);
    CHECK(cg.count == 10);
    REQUIRE(cg.reps.size() == 10);
    std::set<std::string> translations;
    for (const Automorphism& rep : cg.reps) {
        CHECK(cv::aut_order(cg.field, rep) == 4);
        CHECK(cv::aut_compose(cg.field, rep, rep) == cv::aut_iota());
        translations.insert(cg.field.to_hex(rep.t));
    }
    CHECK(translations.size() == 10); // one class per translation part

    const auto cs = cv::order4_classes(CurveModel::special_curve());
    CHECK(cs.count == 2);
    REQUIRE(cs.reps.size() == 2);
    std::set<std::string> fifth_powers;
    for (const Automorphism& rep : cs.reps) {
        CHECK(cv::aut_order(cs.field, rep) == 4);
        CHECK(cv::aut_compose(cs.field, rep, rep) == cv::aut_iota());
        fifth_powers.insert(cs.field.to_hex(cs.field.pow(rep.t, 5)));
    }
    CHECK(fifth_powers.size() == 2);
}

TEST_CASE("explicit quotient identity") {
    FieldCtx F(8);
    Rng rng = named_stream(19, "test.curve2.quotient");
    int verified = 0;
    while (verified < 10) {
        const Fe r = F.rand_nonzero(rng);
        const auto s = F.artin_schreier_solve(F.pow(r, 5));
        if (!s) continue; // half the r's have no rational s; resample
        CHECK(cv::verify_quotient_identity(F, r, *s));
        CHECK(cv::verify_quotient_identity(F, r, F.add(*s, F.one())));
        ++verified;
    }
    CHECK_THROWS_AS(cv::verify_quotient_identity(F, F.zero(), F.one()),
                    cv::PreconditionViolated);
    CHECK_THROWS_AS(cv::verify_quotient_identity(F, F.one(), F.zero()),
                    cv::PreconditionViolated);
}

TEST_CASE("translation polynomial factorizations") {
    CHECK(cv::translation_factorization_generic());
    CHECK(cv::translation_factorization_special());
}
