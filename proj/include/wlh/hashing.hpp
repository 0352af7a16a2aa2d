#ifndef WLH_HASHING_HPP
#define WLH_HASHING_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wlh {

// FNV-1a, used everywhere a deterministic hash is needed.
inline std::uint64_t fnv1a(const void *data, std::size_t n,
                           std::uint64_t seed = 0xcbf29ce484222325ULL) {
    const auto *p = static_cast<const unsigned char *>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t value) {
    return fnv1a(&value, sizeof(value), h);
}

inline std::uint64_t hash_ints(const std::vector<int> &values,
                               std::uint64_t seed = 0xcbf29ce484222325ULL) {
    return values.empty() ? seed
                          : fnv1a(values.data(), values.size() * sizeof(int), seed);
}

inline std::uint64_t hash_string(const std::string &s,
                                 std::uint64_t seed = 0xcbf29ce484222325ULL) {
    return fnv1a(s.data(), s.size(), seed);
}

}  // namespace wlh

#endif
