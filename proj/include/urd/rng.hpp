// Seeded RNG with self-owned bounded draw and shuffle. The mt19937_64
// engine is bit-exact by the standard; the library's distributions and
// std::shuffle are not, and byte-identical output across platforms is a
// hard requirement here.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace urd {

class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // Uniform draw from [0, n), n > 0. Rejection keeps it unbiased.
    int below(int n) {
        const uint64_t bound = static_cast<uint64_t>(n);
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<int>(x % bound);
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (int i = static_cast<int>(xs.size()) - 1; i > 0; i--) {
            using std::swap;
            swap(xs[i], xs[below(i + 1)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace urd
