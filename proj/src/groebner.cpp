#include "richelot/groebner.hpp"

#include <algorithm>
#include <cassert>

#include "richelot/field.hpp"
#include "richelot/rng.hpp"
#include "richelot/unipoly.hpp"

namespace richelot::gb {

using mp::MPoly;
using mp::Term;

mp::MPoly normal_form(MPoly p, const std::vector<MPoly>& basis) {
    MPoly out;
    while (!p.empty()) {
        const Term t = p.front();
        bool reduced = false;
        for (const MPoly& g : basis) {
            if (g.empty() || !mp::term_divides(g.front(), t)) continue;
            p = mp::add(p, mp::mul_term(g, mp::term_div(t, g.front())));
            reduced = true;
            break;
        }
        if (!reduced) {
            out.push_back(t);           // irreducible head term moves over
            p.erase(p.begin());
        }
    }
    return out; // terms were appended in strictly descending order
}

namespace {

struct Pair {
    std::size_t i, j;
    Term lcm;
    unsigned sugar;
};

unsigned sugar_of_pair(const std::vector<MPoly>& g,
                       const std::vector<unsigned>& sugar, const Pair& p) {
    const unsigned si =
        sugar[p.i] + mp::term_total_deg(mp::term_div(p.lcm, g[p.i].front()));
    const unsigned sj =
        sugar[p.j] + mp::term_total_deg(mp::term_div(p.lcm, g[p.j].front()));
    return std::max(si, sj);
}

// Gebauer–Möller update: add generator index `t` to the pair set.
void update_pairs(std::vector<Pair>& pairs, const std::vector<MPoly>& g,
                  const std::vector<unsigned>& sugar, std::size_t t) {
    const Term lt_t = g[t].front();

    // New pairs (i, t), pruned by the M and F criteria.
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
        if (g[i].empty()) continue;
        fresh.push_back({i, t, mp::term_lcm(g[i].front(), lt_t), 0});
    }
    std::vector<char> drop(fresh.size(), 0);
    for (std::size_t x = 0; x < fresh.size(); ++x) {
        if (drop[x]) continue;
        for (std::size_t y = 0; y < fresh.size(); ++y) {
            if (x == y || drop[y]) continue;
            if (fresh[y].lcm == fresh[x].lcm) {
                // F criterion: keep only one pair per lcm (prefer a
                // product-criterion pair, discarded below, if any).
                const bool y_coprime =
                    fresh[y].lcm ==
                    mp::term_mul(g[fresh[y].i].front(), lt_t);
                if (y_coprime || y < x) drop[x] = 1;
            } else if (mp::term_divides(fresh[y].lcm, fresh[x].lcm)) {
                drop[x] = 1; // M criterion: strictly smaller lcm exists
            }
            if (drop[x]) break;
        }
    }
    // B criterion on the old pairs: lt_t divides the lcm strictly.
    pairs.erase(
        std::remove_if(
            pairs.begin(), pairs.end(),
            [&](const Pair& p) {
                return mp::term_divides(lt_t, p.lcm) &&
                       mp::term_lcm(g[p.i].front(), lt_t) != p.lcm &&
                       mp::term_lcm(g[p.j].front(), lt_t) != p.lcm;
            }),
        pairs.end());
    // Product criterion on the fresh pairs.
    for (std::size_t x = 0; x < fresh.size(); ++x) {
        if (drop[x]) continue;
        if (fresh[x].lcm == mp::term_mul(g[fresh[x].i].front(), lt_t))
            continue; // coprime leading terms: S-poly reduces to zero
        fresh[x].sugar = sugar_of_pair(g, sugar, fresh[x]);
        pairs.push_back(fresh[x]);
    }
}

MPoly s_polynomial(const std::vector<MPoly>& g, const Pair& p) {
    const MPoly left = mp::mul_term(g[p.i], mp::term_div(p.lcm, g[p.i].front()));
    const MPoly right = mp::mul_term(g[p.j], mp::term_div(p.lcm, g[p.j].front()));
    return mp::add(left, right);
}

} // namespace

IdealBasis groebner_basis(std::vector<MPoly> gens, const Options& opt) {
    IdealBasis out;
    std::vector<MPoly> g;
    std::vector<unsigned> sugar;
    std::vector<Pair> pairs;
    for (MPoly& p : gens) {
        if (p.empty()) continue;
        g.push_back(std::move(p));
        sugar.push_back(mp::total_deg(g.back()));
        update_pairs(pairs, g, sugar, g.size() - 1);
    }

    while (!pairs.empty()) {
        if (out.reductions >= opt.reduction_budget) {
            out.complete = false;
            out.gens = std::move(g);
            return out;
        }
        // Sugar strategy: smallest sugar, ties by smallest lcm.
        const auto best = std::min_element(
            pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                return mp::grevlex_cmp(a.lcm, b.lcm) < 0;
            });
        const Pair p = *best;
        pairs.erase(best);
        ++out.reductions;
        MPoly h = normal_form(s_polynomial(g, p), g);
        if (h.empty()) continue;
        g.push_back(std::move(h));
        sugar.push_back(std::max(sugar_of_pair(g, sugar, p),
                                 mp::total_deg(g.back())));
        update_pairs(pairs, g, sugar, g.size() - 1);
    }

    // Minimalize: drop generators whose head is divisible by another head.
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j)
            if (i != j && !g[j].empty() &&
                mp::term_divides(g[j].front(), g[i].front()))
                redundant = (g[j].front() != g[i].front()) || j < i;
        if (!redundant) minimal.push_back(g[i]);
    }
    // Inter-reduce tails to get the unique reduced basis.
    std::vector<MPoly> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = normal_form(minimal[i], others);
        assert(!reduced[i].empty());
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const MPoly& x, const MPoly& y) {
                  return mp::grevlex_cmp(x.front(), y.front()) > 0;
              });
    out.gens = std::move(reduced);
    out.complete = true;
    return out;
}

bool ideal_member(const MPoly& p, const IdealBasis& basis) {
    assert(basis.complete);
    return normal_form(p, basis.gens).empty();
}

const char* verdict_text(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "inconclusive";
    }
}

Verdict ideal_equal(const std::vector<MPoly>& X, const std::vector<MPoly>& Y,
                    const Options& opt) {
    const IdealBasis bx = groebner_basis(X, opt);
    if (!bx.complete) return Verdict::Inconclusive;
    const IdealBasis by = groebner_basis(Y, opt);
    if (!by.complete) return Verdict::Inconclusive;
    for (const MPoly& q : Y)
        if (!ideal_member(q, bx)) return Verdict::False;
    for (const MPoly& p : X)
        if (!ideal_member(p, by)) return Verdict::False;
    return Verdict::True;
}

bool specialization_consistency(const MPoly& g1, const MPoly& g2,
                                const MPoly& x, const MPoly& y, int points,
                                std::uint64_t seed) {
    const FieldCtx F(16);
    Rng rng = named_stream(seed, "gb.specialization_consistency");
    // Eliminate c once symbolically; specializing the resultant is cheap.
    const MPoly res_c = mp::resultant_wrt(g1, g2, mp::kVarC);
    int attempts = 0;
    for (int n = 0; n < points; ++n) {
        if (++attempts > 8 * points) return false;
        std::array<Fe, 4> vals = {F.zero(), F.zero(), F.rand_nonzero(rng),
                                  F.rand_nonzero(rng)};
        const UPoly ra = mp::specialize(res_c, mp::kVarA, F, vals);
        if (up::deg(ra) < 0) { --n; continue; } // degenerate draw: resample
        if (up::deg(ra) == 0) continue;         // no candidate a here
        for (const Fe& av : roots_in_field(F, ra, rng)) {
            vals[mp::kVarA] = av;
            const UPoly p1 = mp::specialize(g1, mp::kVarC, F, vals);
            const UPoly p2 = mp::specialize(g2, mp::kVarC, F, vals);
            const UPoly common = up::gcd(F, p1, p2);
            if (up::deg(common) < 1) continue;
            for (const Fe& cv : roots_in_field(F, common, rng)) {
                vals[mp::kVarC] = cv;
                const bool x_zero = F.is_zero(mp::eval(x, F, vals));
                const bool y_zero = F.is_zero(mp::eval(y, F, vals));
                if (x_zero != y_zero) return false;
            }
            vals[mp::kVarC] = F.zero();
        }
    }
    return true;
}

} // namespace richelot::gb
