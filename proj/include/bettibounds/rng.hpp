#ifndef BETTIBOUNDS_RNG_HPP
#define BETTIBOUNDS_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace bb {

// Seeded generator with self-contained sampling helpers. std::mt19937_64 is
// fully specified by the standard, but the std distributions are not; the
// helpers here keep outputs bit-reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    /// Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform in [lo, hi] inclusive.
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1u) != 0; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(v.size()))];
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// Deterministic child stream for instance `index` of a sweep.
    static Rng child(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed ^ mix(index + 0x9e3779b97f4a7c15ull)));
    }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

} // namespace bb

#endif
