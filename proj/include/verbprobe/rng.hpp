#ifndef VERBPROBE_RNG_HPP
#define VERBPROBE_RNG_HPP

#include <cstdint>
#include <cstddef>
#include <string_view>
#include <vector>

namespace verbprobe {

// Deterministic 64-bit generator (splitmix64). Output is fixed by the seed
// alone, independent of platform or standard library, so files produced from
// a seed are byte-stable everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n). n must be > 0; modulo bias is irrelevant for the
    // small n used here and keeps the draw sequence reproducible.
    std::size_t next_index(std::size_t n) {
        return static_cast<std::size_t>(next_u64() % n);
    }

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = next_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// FNV-1a, used to mix string ids into per-item seeds.
inline std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Derive the seed for one work item from the run seed and the item id.
inline std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view item_id) {
    Rng mix(run_seed ^ hash_string(item_id));
    return mix.next_u64();
}

} // namespace verbprobe

#endif
