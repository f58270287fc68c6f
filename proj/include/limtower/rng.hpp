#pragma once
#include <cstdint>

namespace limtower {

/* SplitMix64. Deterministic across platforms, unlike the standard library
 * distributions; every generated instance must be reproducible byte for
 * byte from its seed. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // inclusive range
    long range(long lo, long hi)
    {
        if (hi <= lo)
            return lo;
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    Rng fork() { return Rng(next()); }

private:
    std::uint64_t state_;
};

} // namespace limtower
