#ifndef QTE_COMMON_HPP
#define QTE_COMMON_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace qte {

using node = std::uint32_t;
using count = std::uint64_t;

/// Sentinel for "no node"; also encodes the virtual root as absent parent.
inline constexpr node none = std::numeric_limits<node>::max();

/// Canonical 64-bit key for an unordered node pair.
inline std::uint64_t pair_key(node u, node v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

/// Seeded RNG with a fixed, portable algorithm (mt19937_64) and unbiased
/// bounded draws, so a seed fully determines all randomized behavior.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw from [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling on the top of the range to avoid modulo bias
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1).
    double unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace qte

#endif // QTE_COMMON_HPP
