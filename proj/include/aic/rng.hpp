#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace aic {

// splitmix64; used to derive independent substreams from one master seed so
// that e.g. arrival generation cannot be perturbed by how often a controller
// draws exploration randomness.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_tag(std::string_view tag) {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : tag) {
        h ^= static_cast<uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::mt19937_64 substream(uint64_t seed, std::string_view tag, uint64_t index = 0) {
    uint64_t s = splitmix64(seed ^ hash_tag(tag));
    s = splitmix64(s ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return std::mt19937_64(s);
}

}  // namespace aic
