#ifndef BLOWUP_RNG_HPP
#define BLOWUP_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "blowup/field.hpp"

namespace blowup {

// Deterministic across platforms: mt19937_64 is fully specified by the
// standard, and uniform sampling below is hand-rolled rejection (the
// standard distributions are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            std::uint64_t v = eng_();
            if (v < limit) return v % n;
        }
    }

    // uniform over the prime field; small nonzero-biased integers over QQ
    // (genericity draws want nonzero often, zero still possible)
    Scalar scalar(const Field& fld) {
        if (fld.is_prime_field())
            return fld.from_int(static_cast<long long>(below(
                static_cast<std::uint64_t>(fld.characteristic()))));
        return fld.from_int(static_cast<long long>(below(2001)) - 1000);
    }

private:
    std::mt19937_64 eng_;
};

// Stable seed derivation for sub-streams (FNV-1a over the tag, mixed with
// the base seed).
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ULL ^ base;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

}  // namespace blowup

#endif
