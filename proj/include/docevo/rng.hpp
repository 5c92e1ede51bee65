/*
 * Copyright 2026 The Docevo Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef DOCEVO_RNG_HPP
#define DOCEVO_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace docevo {

// FNV-1a, 64 bit. Used for digests and seed derivation; not cryptographic.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : data) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_hex64(std::uint64_t value);

// Deterministic RNG wrapper. mt19937_64 output is specified bit-exactly by
// the standard; the derived draws below avoid std::*_distribution, whose
// results vary across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling to remove modulo bias.
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0); }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return unit() < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

    // Weighted index draw; weights must be nonnegative with a positive sum.
    std::size_t weighted(const std::vector<double>& weights);

private:
    std::mt19937_64 engine_;
};

// Stable seed derivation for per-document / per-trial generators.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, std::uint64_t n = 0) {
    std::uint64_t h = fnv1a64(tag, base ^ 0x9e3779b97f4a7c15ULL);
    h ^= n + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace docevo

#endif  // DOCEVO_RNG_HPP
