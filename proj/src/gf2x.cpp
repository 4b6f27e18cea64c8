#include "richelot/gf2x.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#ifdef RICHELOT_HAVE_CLMUL
#include <wmmintrin.h>
#include <emmintrin.h>
#endif

namespace richelot::gf2x {

#ifdef RICHELOT_HAVE_CLMUL
__attribute__((target("pclmul,sse2")))
void word_mul_clmul(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
    __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
    __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
    __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
    lo = static_cast<uint64_t>(_mm_cvtsi128_si64(p));
    hi = static_cast<uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)));
}

bool clmul_available() {
    static const bool ok = __builtin_cpu_supports("pclmul");
    return ok;
}
#else
bool clmul_available() { return false; }
#endif

void trim(Bits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Bits& a) {
    if (a.empty()) return -1;
    int top = 63;
    uint64_t w = a.back();
    while (!(w >> top)) --top;
    return static_cast<int>(a.size() - 1) * 64 + top;
}

bool get_bit(const Bits& a, int i) {
    size_t w = static_cast<size_t>(i) / 64;
    if (w >= a.size()) return false;
    return (a[w] >> (i % 64)) & 1;
}

void set_bit(Bits& a, int i) {
    size_t w = static_cast<size_t>(i) / 64;
    if (w >= a.size()) a.resize(w + 1, 0);
    a[w] ^= 1ull << (i % 64);
}

Bits from_u64(uint64_t v) {
    if (v == 0) return {};
    return {v};
}

Bits add(const Bits& a, const Bits& b) {
    Bits r = a.size() >= b.size() ? a : b;
    const Bits& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] ^= s[i];
    trim(r);
    return r;
}

Bits shift_left(const Bits& a, int n) {
    if (a.empty() || n == 0) return a;
    int words = n / 64, bits = n % 64;
    Bits r(a.size() + words + 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i + words] ^= a[i] << bits;
        if (bits) r[i + words + 1] ^= a[i] >> (64 - bits);
    }
    trim(r);
    return r;
}

void word_mul_portable(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
    lo = hi = 0;
    while (b) {
        int i = __builtin_ctzll(b);
        b &= b - 1;
        lo ^= a << i;
        if (i) hi ^= a >> (64 - i);
    }
}

static void word_mul(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
#ifdef RICHELOT_HAVE_CLMUL
    if (clmul_available()) {
        word_mul_clmul(a, b, lo, hi);
        return;
    }
#endif
    word_mul_portable(a, b, lo, hi);
}

Bits mul(const Bits& a, const Bits& b) {
    if (a.empty() || b.empty()) return {};
    Bits r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            uint64_t lo, hi;
            word_mul(a[i], b[j], lo, hi);
            r[i + j] ^= lo;
            r[i + j + 1] ^= hi;
        }
    }
    trim(r);
    return r;
}

// spread the low 32 bits of v so bit i lands at position 2i
static uint64_t spread32(uint32_t v) {
    uint64_t x = v;
    x = (x | (x << 16)) & 0x0000ffff0000ffffull;
    x = (x | (x << 8)) & 0x00ff00ff00ff00ffull;
    x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

Bits sqr(const Bits& a) {
    if (a.empty()) return {};
    Bits r(a.size() * 2, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        r[2 * i] = spread32(static_cast<uint32_t>(a[i]));
        r[2 * i + 1] = spread32(static_cast<uint32_t>(a[i] >> 32));
    }
    trim(r);
    return r;
}

void divrem(const Bits& a, const Bits& b, Bits& q, Bits& r) {
    int db = degree(b);
    if (db < 0) throw std::domain_error("gf2x: division by zero polynomial");
    r = a;
    q.clear();
    int dr = degree(r);
    while (dr >= db) {
        int sh = dr - db;
        set_bit(q, sh);
        Bits t = shift_left(b, sh);
        for (size_t i = 0; i < t.size(); ++i) r[i] ^= t[i];
        trim(r);
        dr = degree(r);
    }
    trim(q);
}

Bits mod(const Bits& a, const Bits& b) {
    Bits q, r;
    divrem(a, b, q, r);
    return r;
}

Bits gcd(Bits a, Bits b) {
    while (!b.empty()) {
        Bits r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Bits mulmod(const Bits& a, const Bits& b, const Bits& m) {
    return mod(mul(a, b), m);
}

Bits sqrmod(const Bits& a, const Bits& m) {
    return mod(sqr(a), m);
}

bool less(const Bits& a, const Bits& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t w = a.size(); w-- > 0;)
        if (a[w] != b[w]) return a[w] < b[w];
    return false;
}

bool is_irreducible(const Bits& f) {
    const int k = degree(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    // Rabin test with an early small-factor screen.  f is irreducible iff
    // x^(2^k) = x mod f and gcd(x^(2^(k/p)) - x, f) = 1 for every prime
    // p | k; gcd checks at small d additionally reject factors of degree
    // dividing d early, which is where almost all candidates die.
    std::vector<int> checkpoints;
    for (int d = 1; d <= 8 && d < k; ++d) checkpoints.push_back(d);
    int rem = k;
    for (int p = 2; p * p <= rem; ++p) {
        if (rem % p) continue;
        checkpoints.push_back(k / p);
        while (rem % p == 0) rem /= p;
    }
    if (rem > 1 && rem < k) checkpoints.push_back(k / rem);
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()),
                      checkpoints.end());

    const Bits x = from_u64(2);
    Bits t = mod(x, f);
    std::size_t next = 0;
    for (int d = 1; d <= k; ++d) {
        t = sqrmod(t, f);
        if (next < checkpoints.size() && checkpoints[next] == d) {
            ++next;
            if (d < k && degree(gcd(add(t, x), f)) != 0) return false;
        }
    }
    return t == mod(x, f);
}

Bits canonical_modulus(int k) {
    assert(k >= 1);
    Bits f;
    uint64_t v = 1;
    for (;;) {
        f.assign(static_cast<size_t>(k) / 64 + 1, 0);
        f[0] = v;
        set_bit(f, k);
        trim(f);
        if (is_irreducible(f)) return f;
        v += 2;
        if (v > (k < 63 ? (1ull << k) : UINT64_MAX))
            throw std::runtime_error("gf2x: no irreducible found (degree too large for search window)");
    }
}

std::string to_hex(const Bits& a) {
    if (a.empty()) return "0x0";
    std::string s;
    bool leading = true;
    for (size_t i = a.size(); i-- > 0;) {
        for (int n = 15; n >= 0; --n) {
            int nib = (a[i] >> (4 * n)) & 0xf;
            if (leading && nib == 0) continue;
            leading = false;
            s += "0123456789abcdef"[nib];
        }
    }
    return "0x" + s;
}

Bits from_hex(const std::string& s) {
    size_t pos = 0;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) pos = 2;
    if (pos >= s.size()) throw std::invalid_argument("gf2x: empty hex string");
    Bits r;
    int bit = 0;
    for (size_t i = s.size(); i-- > pos;) {
        char c = s[i];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument("gf2x: bad hex digit");
        for (int n = 0; n < 4; ++n)
            if ((v >> n) & 1) set_bit(r, bit + n);
        bit += 4;
    }
    trim(r);
    return r;
}

} // namespace richelot::gf2x
