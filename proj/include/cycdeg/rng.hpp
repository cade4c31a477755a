#ifndef CYCDEG_RNG_HPP
#define CYCDEG_RNG_HPP

#include <cstdint>

namespace cycdeg {

/*
 * Deterministic splitmix64 stream. Sample sweeps derive one stream per
 * (seed, sample index) so samples are independent and reproducible across
 * platforms; std::uniform_int_distribution is implementation-defined and
 * never used.
 */
class Rng {
public:
    Rng(uint64_t seed, uint64_t stream) : state_(seed + stream * 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); modulo bias is irrelevant at these sizes.
    uint64_t below(uint64_t bound) { return next() % bound; }

    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

} // namespace cycdeg

#endif // CYCDEG_RNG_HPP
