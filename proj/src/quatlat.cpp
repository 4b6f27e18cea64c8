#include "richelot/quatlat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "richelot/parallel.hpp"

namespace richelot::qt {

HurwitzQuat quat_from_int(std::int64_t n) { return {2 * n, 0, 0, 0}; }

bool parity_ok(const HurwitzQuat& q) {
    const std::int64_t m = q.w & 1;
    return (q.x & 1) == m && (q.y & 1) == m && (q.z & 1) == m;
}

HurwitzQuat quat_add(const HurwitzQuat& p, const HurwitzQuat& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

HurwitzQuat quat_neg(const HurwitzQuat& p) { return {-p.w, -p.x, -p.y, -p.z}; }

HurwitzQuat quat_mul(const HurwitzQuat& p, const HurwitzQuat& q) {
    // in quarter units: (p/2)(q/2) = r/4, return r/2 (exact by parity)
    const std::int64_t w = p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z;
    const std::int64_t x = p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y;
    const std::int64_t y = p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x;
    const std::int64_t z = p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w;
    assert(!(w & 1) && !(x & 1) && !(y & 1) && !(z & 1));
    const HurwitzQuat r{w / 2, x / 2, y / 2, z / 2};
    assert(parity_ok(r));
    return r;
}

HurwitzQuat quat_conj(const HurwitzQuat& p) { return {p.w, -p.x, -p.y, -p.z}; }

std::int64_t quat_nrd(const HurwitzQuat& p) {
    const std::int64_t s = p.w * p.w + p.x * p.x + p.y * p.y + p.z * p.z;
    assert(s % 4 == 0);
    return s / 4;
}

QuatMat2 mat_identity() { return mat_scalar(1); }

QuatMat2 mat_scalar(std::int64_t n) {
    return {quat_from_int(n), {}, {}, quat_from_int(n)};
}

QuatMat2 mat_mul(const QuatMat2& a, const QuatMat2& b) {
    QuatMat2 c;
    c.e00 = quat_add(quat_mul(a.e00, b.e00), quat_mul(a.e01, b.e10));
    c.e01 = quat_add(quat_mul(a.e00, b.e01), quat_mul(a.e01, b.e11));
    c.e10 = quat_add(quat_mul(a.e10, b.e00), quat_mul(a.e11, b.e10));
    c.e11 = quat_add(quat_mul(a.e10, b.e01), quat_mul(a.e11, b.e11));
    return c;
}

QuatMat2 mat_conj_transpose(const QuatMat2& a) {
    return {quat_conj(a.e00), quat_conj(a.e10), quat_conj(a.e01),
            quat_conj(a.e11)};
}

std::pair<QuatMat2, QuatMat2> build_M() {
    const HurwitzQuat two = quat_from_int(2);
    const HurwitzQuat one_plus_i{2, 2, 0, 0};
    const HurwitzQuat one_minus_i{2, -2, 0, 0};
    const QuatMat2 M{two, one_plus_i, one_minus_i, two};
    const QuatMat2 Mp{two, quat_neg(one_plus_i), quat_neg(one_minus_i), two};
    return {M, Mp};
}

std::vector<HurwitzQuat> quats_with_nrd_at_most(int bound) {
    std::vector<HurwitzQuat> out;
    const std::int64_t cap = 4 * std::int64_t(bound); // on w²+x²+y²+z²
    std::int64_t lim = 0;
    while (lim * lim <= cap) ++lim;
    for (std::int64_t w = -lim; w <= lim; ++w)
        for (std::int64_t x = -lim; x <= lim; ++x)
            for (std::int64_t y = -lim; y <= lim; ++y)
                for (std::int64_t z = -lim; z <= lim; ++z) {
                    const HurwitzQuat q{w, x, y, z};
                    if (!parity_ok(q)) continue;
                    if (w * w + x * x + y * y + z * z > cap) continue;
                    out.push_back(q);
                }
    return out;
}

HurwitzQuat hermitian_pairing(const HurwitzQuat& u1, const HurwitzQuat& u2,
                              const HurwitzQuat& v1, const HurwitzQuat& v2) {
    const HurwitzQuat one_plus_i{2, 2, 0, 0};
    const HurwitzQuat one_minus_i{2, -2, 0, 0};
    const HurwitzQuat two = quat_from_int(2);
    const HurwitzQuat row1 =
        quat_add(quat_mul(two, v1), quat_mul(one_plus_i, v2));
    const HurwitzQuat row2 =
        quat_add(quat_mul(one_minus_i, v1), quat_mul(two, v2));
    return quat_add(quat_mul(quat_conj(u1), row1),
                    quat_mul(quat_conj(u2), row2));
}

bool is_unitary(const QuatMat2& a) {
    static const QuatMat2 M = build_M().first;
    return mat_mul(mat_mul(mat_conj_transpose(a), M), a) == M;
}

namespace {

struct Column {
    HurwitzQuat top, bot;
};

std::vector<Column> norm2_columns() {
    const std::vector<HurwitzQuat> box = quats_with_nrd_at_most(3);
    const HurwitzQuat two = quat_from_int(2);
    std::vector<Column> cols;
    for (const HurwitzQuat& a : box)
        for (const HurwitzQuat& b : box)
            if (hermitian_pairing(a, b, a, b) == two) cols.push_back({a, b});
    return cols;
}

} // namespace

std::vector<QuatMat2> unitary_group_reference() {
    const std::vector<Column> cols = norm2_columns();
    const HurwitzQuat one_plus_i{2, 2, 0, 0};
    std::vector<QuatMat2> out;
    for (const Column& u : cols)
        for (const Column& v : cols) {
            if (hermitian_pairing(u.top, u.bot, v.top, v.bot) != one_plus_i)
                continue;
            const QuatMat2 A{u.top, v.top, u.bot, v.bot};
            if (!is_unitary(A)) continue; // direct recheck of A*MA = M
            out.push_back(A);
        }
    return out;
}

std::vector<QuatMat2> unitary_group(int jobs) {
    const std::vector<Column> cols = norm2_columns();
    const HurwitzQuat one_plus_i{2, 2, 0, 0};
    std::vector<std::vector<QuatMat2>> rows(cols.size());
    parallel_for(cols.size(), jobs, [&](std::size_t i) {
        const Column& u = cols[i];
        for (const Column& v : cols) {
            if (hermitian_pairing(u.top, u.bot, v.top, v.bot) != one_plus_i)
                continue;
            const QuatMat2 A{u.top, v.top, u.bot, v.bot};
            if (!is_unitary(A)) continue;
            rows[i].push_back(A);
        }
    });
    std::vector<QuatMat2> out;
    for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

F4 f4_add(F4 a, F4 b) { return a ^ b; }

F4 f4_mul(F4 a, F4 b) {
    const F4 a0 = a & 1, a1 = (a >> 1) & 1;
    const F4 b0 = b & 1, b1 = (b >> 1) & 1;
    const F4 c0 = (a0 & b0) ^ (a1 & b1);           // constant part
    const F4 c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1); // ω part
    return F4(c0 | (c1 << 1));
}

F4 sl2_det(const SL2F4Elem& m) {
    return f4_add(f4_mul(m.a, m.d), f4_mul(m.b, m.c));
}

SL2F4Elem sl2_mul(const SL2F4Elem& x, const SL2F4Elem& y) {
    return {f4_add(f4_mul(x.a, y.a), f4_mul(x.b, y.c)),
            f4_add(f4_mul(x.a, y.b), f4_mul(x.b, y.d)),
            f4_add(f4_mul(x.c, y.a), f4_mul(x.d, y.c)),
            f4_add(f4_mul(x.c, y.b), f4_mul(x.d, y.d))};
}

SL2F4Elem sl2_identity() { return {1, 0, 0, 1}; }

F4 reduce_quat(const HurwitzQuat& q) {
    assert(parity_ok(q));
    // coordinates in the basis {1, i, j, (1+i+j+ij)/2}
    const std::int64_t a = (q.w - q.z) / 2;
    const std::int64_t b = (q.x - q.z) / 2;
    const std::int64_t c = (q.y - q.z) / 2;
    const std::int64_t d = q.z;
    return F4(((a + b + c) & 1) | ((d & 1) << 1));
}

SL2F4Elem reduce_mod_p(const QuatMat2& A) {
    if (!is_unitary(A))
        throw NotUnitary("matrix does not preserve the hermitian form");
    const SL2F4Elem m{reduce_quat(A.e00), reduce_quat(A.e01),
                      reduce_quat(A.e10), reduce_quat(A.e11)};
    assert(sl2_det(m) == 1);
    return m;
}

namespace {

std::size_t find_pos(const std::vector<QuatMat2>& sorted, const QuatMat2& a) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), a);
    assert(it != sorted.end() && *it == a);
    return std::size_t(it - sorted.begin());
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
    }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
    std::size_t components() {
        std::size_t n = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(i) == i) ++n;
        return n;
    }
};

int sl2_order(const SL2F4Elem& e) {
    SL2F4Elem acc = e;
    int n = 1;
    while (!(acc == sl2_identity())) {
        acc = sl2_mul(e, acc);
        ++n;
        assert(n <= 60);
    }
    return n;
}

} // namespace

CosetCounts coset_counts() {
    const std::vector<QuatMat2> Gamma = unitary_group(1);
    std::vector<QuatMat2> sorted = Gamma;
    std::sort(sorted.begin(), sorted.end());

    // kernel of the reduction and the image group
    std::vector<QuatMat2> kernel;
    std::vector<SL2F4Elem> image;
    for (const QuatMat2& A : Gamma) {
        const SL2F4Elem m = reduce_mod_p(A);
        if (m == sl2_identity()) kernel.push_back(A);
        image.push_back(m);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());

    CosetCounts out;

    // double cosets kernel \ Γ / kernel, by exhaustive orbit merging
    UnionFind uf(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (const QuatMat2& g : kernel) {
            uf.unite(i, find_pos(sorted, mat_mul(g, sorted[i])));
            uf.unite(i, find_pos(sorted, mat_mul(sorted[i], g)));
        }
    out.double_GG = uf.components();

    // order-5 subgroups of the image
    std::vector<std::vector<SL2F4Elem>> subgroups;
    for (const SL2F4Elem& e : image) {
        if (sl2_order(e) != 5) continue;
        std::vector<SL2F4Elem> sub{sl2_identity()};
        SL2F4Elem acc = e;
        for (int n = 0; n < 4; ++n) {
            sub.push_back(acc);
            acc = sl2_mul(e, acc);
        }
        std::sort(sub.begin(), sub.end());
        if (std::find(subgroups.begin(), subgroups.end(), sub) ==
            subgroups.end())
            subgroups.push_back(sub);
    }
    std::sort(subgroups.begin(), subgroups.end());

    // left cosets F·s inside the image, one count per subgroup
    for (const auto& F : subgroups) {
        std::vector<char> seen(image.size(), 0);
        std::size_t count = 0;
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (seen[i]) continue;
            ++count;
            for (const SL2F4Elem& f : F) {
                const SL2F4Elem m = sl2_mul(f, image[i]);
                const auto it =
                    std::lower_bound(image.begin(), image.end(), m);
                assert(it != image.end() && *it == m);
                seen[std::size_t(it - image.begin())] = 1;
            }
        }
        out.left_5.push_back(count);
    }

    // double cosets F1 \ image / F2 for every ordered subgroup pair
    for (const auto& F1 : subgroups)
        for (const auto& F2 : subgroups) {
            std::vector<char> seen(image.size(), 0);
            std::size_t count = 0;
            for (std::size_t i = 0; i < image.size(); ++i) {
                if (seen[i]) continue;
                ++count;
                for (const SL2F4Elem& f1 : F1)
                    for (const SL2F4Elem& f2 : F2) {
                        const SL2F4Elem m =
                            sl2_mul(f1, sl2_mul(image[i], f2));
                        const auto it =
                            std::lower_bound(image.begin(), image.end(), m);
                        assert(it != image.end() && *it == m);
                        seen[std::size_t(it - image.begin())] = 1;
                    }
            }
            out.double_55.push_back(count);
        }
    return out;
}

} // namespace richelot::qt
