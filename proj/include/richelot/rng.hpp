#pragma once
#include <cstdint>
#include <string_view>

namespace richelot {

// Deterministic splitmix64 generator.  Every source of randomness in the
// library draws from a named stream derived from one root seed, so a fixed
// seed reproduces every run byte for byte.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

private:
    uint64_t state_;
};

// FNV-1a over the stream name, mixed with the root seed.
inline Rng named_stream(uint64_t root_seed, std::string_view name) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : name) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ull;
    }
    return Rng(root_seed ^ h);
}

} // namespace richelot
