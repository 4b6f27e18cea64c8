#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace richelot::gf2x {

// Polynomials over F2 as little-endian bit vectors: bit i of word j is the
// coefficient of x^(64j + i).  Vectors are kept trimmed (no zero high words);
// the zero polynomial is the empty vector.
using Bits = std::vector<uint64_t>;

void trim(Bits& a);
int degree(const Bits& a); // -1 for zero
bool get_bit(const Bits& a, int i);
void set_bit(Bits& a, int i);
Bits from_u64(uint64_t v);

Bits add(const Bits& a, const Bits& b); // xor
Bits shift_left(const Bits& a, int n);

// carry-less 64x64 -> 128 multiply; lo/hi out.  The clmul path is used when
// both compiled in and supported by the CPU; the portable path is always
// available and the two are cross-checked in tests.
void word_mul_portable(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi);
#ifdef RICHELOT_HAVE_CLMUL
void word_mul_clmul(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi);
#endif
bool clmul_available();

Bits mul(const Bits& a, const Bits& b);
Bits sqr(const Bits& a);
void divrem(const Bits& a, const Bits& b, Bits& q, Bits& r);
Bits mod(const Bits& a, const Bits& b);
Bits gcd(Bits a, Bits b);
Bits mulmod(const Bits& a, const Bits& b, const Bits& m);
Bits sqrmod(const Bits& a, const Bits& m);

// numeric order on coefficient strings (shorter < longer, then high word down)
bool less(const Bits& a, const Bits& b);

bool is_irreducible(const Bits& f);

// lexicographically smallest irreducible of degree k, coefficient strings
// read as integers (degree 1 -> x + 1)
Bits canonical_modulus(int k);

std::string to_hex(const Bits& a);   // "0x..." little-endian coefficient string
Bits from_hex(const std::string& s);

} // namespace richelot::gf2x
