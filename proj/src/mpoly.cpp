#include "richelot/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace richelot::mp {

const std::array<const char*, kNumVars> kVarNames = {"a", "c", "A", "B"};

unsigned term_total_deg(Term t) {
    return exp_of(t, 0) + exp_of(t, 1) + exp_of(t, 2) + exp_of(t, 3);
}

int grevlex_cmp(Term u, Term v) {
    const unsigned du = term_total_deg(u), dv = term_total_deg(v);
    if (du != dv) return du < dv ? -1 : 1;
    if (u == v) return 0;
    for (int var = 0; var < kNumVars; ++var) {
        const unsigned eu = exp_of(u, var), ev = exp_of(v, var);
        // Smaller exponent in the least differing variable wins.
        if (eu != ev) return eu > ev ? -1 : 1;
    }
    return 0;
}

Term term_mul(Term u, Term v) {
    for (int var = 0; var < kNumVars; ++var)
        assert(exp_of(u, var) + exp_of(v, var) <= 0xffffu);
    return u + v;
}

bool term_divides(Term d, Term t) {
    for (int var = 0; var < kNumVars; ++var)
        if (exp_of(d, var) > exp_of(t, var)) return false;
    return true;
}

Term term_div(Term t, Term d) {
    assert(term_divides(d, t));
    return t - d;
}

Term term_lcm(Term u, Term v) {
    Term r = 0;
    for (int var = 0; var < kNumVars; ++var) {
        const unsigned e = std::max(exp_of(u, var), exp_of(v, var));
        r |= Term(e) << (16 * var);
    }
    return r;
}

namespace {

bool term_greater(Term u, Term v) { return grevlex_cmp(u, v) > 0; }

} // namespace

MPoly zero() { return {}; }
MPoly one() { return {Term(0)}; }
MPoly monomial(Term t) { return {t}; }
bool is_zero(const MPoly& p) { return p.empty(); }

void normalize(MPoly& p) {
    std::sort(p.begin(), p.end(), term_greater);
    std::size_t out = 0;
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if ((j - i) & 1) p[out++] = p[i];
        i = j;
    }
    p.resize(out);
}

MPoly from_exps(const std::vector<std::array<unsigned, 4>>& exps) {
    MPoly p;
    p.reserve(exps.size());
    for (const auto& e : exps) p.push_back(make_term(e[0], e[1], e[2], e[3]));
    normalize(p);
    return p;
}

MPoly add(const MPoly& p, const MPoly& q) {
    MPoly r;
    r.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() && j < q.size()) {
        const int c = grevlex_cmp(p[i], q[j]);
        if (c > 0) r.push_back(p[i++]);
        else if (c < 0) r.push_back(q[j++]);
        else { ++i; ++j; } // equal terms cancel over F2
    }
    r.insert(r.end(), p.begin() + i, p.end());
    r.insert(r.end(), q.begin() + j, q.end());
    return r;
}

MPoly mul(const MPoly& p, const MPoly& q) {
    if (p.empty() || q.empty()) return {};
    MPoly r;
    r.reserve(p.size() * q.size());
    for (Term u : p)
        for (Term v : q) r.push_back(term_mul(u, v));
    normalize(r);
    return r;
}

MPoly mul_term(const MPoly& p, Term t) {
    MPoly r;
    r.reserve(p.size());
    for (Term u : p) r.push_back(term_mul(u, t));
    return r; // multiplying by a fixed monomial preserves the order
}

MPoly sqr(const MPoly& p) {
    // Frobenius: squaring doubles every exponent, no cross terms.
    MPoly r;
    r.reserve(p.size());
    for (Term u : p) r.push_back(term_mul(u, u));
    return r;
}

MPoly pow_u(const MPoly& p, std::uint64_t n) {
    MPoly r = one();
    MPoly b = p;
    while (n) {
        if (n & 1) r = mul(r, b);
        n >>= 1;
        if (n) b = sqr(b);
    }
    return r;
}

unsigned total_deg(const MPoly& p) {
    return p.empty() ? 0 : term_total_deg(p.front());
}

int deg_in(const MPoly& p, int var) {
    int d = -1;
    for (Term t : p) d = std::max(d, int(exp_of(t, var)));
    return d;
}

MPoly coeff_of(const MPoly& p, int var, unsigned k) {
    MPoly r;
    const Term mask = Term(0xffffu) << (16 * var);
    for (Term t : p)
        if (exp_of(t, var) == k) r.push_back(t & ~mask);
    normalize(r);
    return r;
}

MPoly leading_coeff_in(const MPoly& p, int var) {
    const int d = deg_in(p, var);
    if (d < 0) return {};
    return coeff_of(p, var, unsigned(d));
}

MPoly derivative_wrt(const MPoly& p, int var) {
    MPoly r;
    for (Term t : p) {
        const unsigned e = exp_of(t, var);
        if (e & 1) r.push_back(t - (Term(1) << (16 * var)));
    }
    normalize(r);
    return r;
}

MPoly subst_var(const MPoly& p, int src, int dst) {
    assert(src != dst);
    MPoly r;
    r.reserve(p.size());
    const Term mask = Term(0xffffu) << (16 * src);
    for (Term t : p) {
        const unsigned e = exp_of(t, src);
        Term u = t & ~mask;
        u = term_mul(u, Term(e) << (16 * dst));
        r.push_back(u);
    }
    normalize(r);
    return r;
}

bool try_divide_exact(const MPoly& p, const MPoly& d, MPoly& quot) {
    if (d.empty()) return false;
    quot.clear();
    if (p.empty()) return true;
    const Term lt = d.front();
    MPoly rem = p;
    while (!rem.empty()) {
        if (!term_divides(lt, rem.front())) return false;
        const Term q = term_div(rem.front(), lt);
        quot.push_back(q);
        rem = add(rem, mul_term(d, q));
    }
    // Quotient terms are produced in strictly decreasing order already.
    return true;
}

MPoly divide_exact(const MPoly& p, const MPoly& d) {
    MPoly q;
    if (!try_divide_exact(p, d, q))
        throw std::domain_error("mp::divide_exact: not divisible");
    return q;
}

namespace {

// Fraction-free determinant of a square MPoly matrix (Bareiss; over F2
// coefficients there are no signs to track).  Consumes the matrix.
MPoly bareiss_det(std::vector<std::vector<MPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return one();
    MPoly prev = one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t pivot = k + 1;
            while (pivot < n && is_zero(m[pivot][k])) ++pivot;
            if (pivot == n) return zero();
            std::swap(m[k], m[pivot]); // row swap: no sign in char 2
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly num = add(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]));
                m[i][j] = divide_exact(num, prev);
            }
            m[i][k] = zero();
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

} // namespace

MPoly resultant_wrt(const MPoly& p, const MPoly& q, int var) {
    if (is_zero(p) && is_zero(q)) return zero();
    const int dp = deg_in(p, var), dq = deg_in(q, var);
    if (is_zero(p)) return dq > 0 ? zero() : one();
    if (is_zero(q)) return dp > 0 ? zero() : one();
    if (dp <= 0 && dq <= 0) return one();
    if (dq <= 0) return pow_u(q, std::uint64_t(dp));
    if (dp <= 0) return pow_u(p, std::uint64_t(dq));

    std::vector<MPoly> pc(std::size_t(dp) + 1), qc(std::size_t(dq) + 1);
    for (int i = 0; i <= dp; ++i) pc[std::size_t(i)] = coeff_of(p, var, unsigned(i));
    for (int i = 0; i <= dq; ++i) qc[std::size_t(i)] = coeff_of(q, var, unsigned(i));

    const std::size_t n = std::size_t(dp + dq);
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n));
    for (int r = 0; r < dq; ++r)
        for (int i = 0; i <= dp; ++i)
            m[std::size_t(r)][std::size_t(r + dp - i)] = pc[std::size_t(i)];
    for (int r = 0; r < dp; ++r)
        for (int i = 0; i <= dq; ++i)
            m[std::size_t(dq + r)][std::size_t(r + dq - i)] = qc[std::size_t(i)];
    return bareiss_det(m);
}

MPoly discriminant_wrt(const MPoly& p, int var) {
    const MPoly dp = derivative_wrt(p, var);
    if (is_zero(dp)) return zero();
    const int d = deg_in(p, var);
    const int dd = deg_in(dp, var);
    const MPoly res = resultant_wrt(p, dp, var);
    const MPoly lc = leading_coeff_in(p, var);
    const int e = d - 2 - dd;
    if (e >= 0) return mul(res, pow_u(lc, std::uint64_t(e)));
    return divide_exact(res, pow_u(lc, std::uint64_t(-e)));
}

Fe eval(const MPoly& p, const FieldCtx& F,
               const std::array<Fe, 4>& vals) {
    Fe acc = F.zero();
    for (Term t : p) {
        Fe prod = F.one();
        for (int var = 0; var < kNumVars; ++var) {
            const unsigned e = exp_of(t, var);
            if (e) prod = F.mul(prod, F.pow(vals[std::size_t(var)], e));
        }
        acc = F.add(acc, prod);
    }
    return acc;
}

UPoly specialize(const MPoly& p, int var, const FieldCtx& F,
                     const std::array<Fe, 4>& vals) {
    const int d = deg_in(p, var);
    UPoly u(std::size_t(std::max(d, -1) + 1), F.zero());
    for (Term t : p) {
        Fe prod = F.one();
        for (int w = 0; w < kNumVars; ++w) {
            if (w == var) continue;
            const unsigned e = exp_of(t, w);
            if (e) prod = F.mul(prod, F.pow(vals[std::size_t(w)], e));
        }
        auto& slot = u[exp_of(t, var)];
        slot = F.add(slot, prod);
    }
    up::trim(u);
    return u;
}

bool equal(const MPoly& p, const MPoly& q) { return p == q; }

bool verify_identity_exact(const MPoly& lhs, const MPoly& rhs) {
    return lhs == rhs;
}

bool verify_identity_probabilistic(const MPoly& lhs, const MPoly& rhs,
                                   int ext_degree, int trials,
                                   std::uint64_t seed) {
    const FieldCtx F(ext_degree);
    Rng rng = named_stream(seed, "mp.verify_identity");
    for (int t = 0; t < trials; ++t) {
        std::array<Fe, 4> vals;
        for (auto& v : vals) v = F.rand(rng);
        if (!F.is_zero(F.add(eval(lhs, F, vals), eval(rhs, F, vals))))
            return false;
    }
    return true;
}

std::string to_string(const MPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (Term t : p) {
        if (!first_term) os << " + ";
        first_term = false;
        bool printed = false;
        for (int var = 0; var < kNumVars; ++var) {
            const unsigned e = exp_of(t, var);
            if (!e) continue;
            if (printed) os << ' ';
            os << kVarNames[std::size_t(var)];
            if (e > 1) os << '^' << e;
            printed = true;
        }
        if (!printed) os << '1';
    }
    return os.str();
}

namespace {

int var_index(char name) {
    for (int var = 0; var < kNumVars; ++var)
        if (kVarNames[std::size_t(var)][0] == name) return var;
    return -1;
}

} // namespace

MPoly parse(const std::string& text) {
    MPoly p;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(unsigned(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '0') {
        std::size_t rest = pos + 1;
        while (rest < text.size() && std::isspace(unsigned(text[rest]))) ++rest;
        if (rest == text.size()) return {};
    }
    while (pos < text.size()) {
        unsigned exps[4] = {0, 0, 0, 0};
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            if (pos >= text.size() || text[pos] == '+') break;
            if (text[pos] == '*') { ++pos; continue; }
            const char ch = text[pos];
            if (ch == '1') { ++pos; saw_factor = true; continue; }
            const int var = var_index(ch);
            if (var < 0)
                throw std::invalid_argument("mp::parse: bad variable '" +
                                            std::string(1, ch) + "'");
            ++pos;
            unsigned e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                if (pos >= text.size() || !std::isdigit(unsigned(text[pos])))
                    throw std::invalid_argument("mp::parse: missing exponent");
                e = 0;
                while (pos < text.size() && std::isdigit(unsigned(text[pos])))
                    e = e * 10 + unsigned(text[pos++] - '0');
            }
            exps[var] += e;
            saw_factor = true;
        }
        if (!saw_factor) throw std::invalid_argument("mp::parse: empty term");
        p.push_back(make_term(exps[0], exps[1], exps[2], exps[3]));
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '+')
                throw std::invalid_argument("mp::parse: expected '+'");
            ++pos;
        }
    }
    normalize(p);
    return p;
}

} // namespace richelot::mp
