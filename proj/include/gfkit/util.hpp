#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace gfkit {

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << sep;
        os << xs[i];
    }
    return os.str();
}

template <typename T>
void sort_unique(std::vector<T>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

template <typename T>
bool is_subset(const std::vector<T>& a, const std::vector<T>& b) {
    // both sorted
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Enumerates all maps {0..n-1} -> {0..k-1} in lexicographic order.
inline bool next_tuple(std::vector<int>& t, int k) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < k) return true;
        t[i] = 0;
    }
    return false;
}

// All set partitions of {0..n-1} as least-representative vectors, in a
// deterministic order (restricted growth strings).
std::vector<std::vector<int>> set_partitions(int n);

// All subsets of {0..n-1} of size exactly k, lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

// All permutations of the given sorted vector, lexicographic.
std::vector<std::vector<int>> permutations_of(std::vector<int> base);

} // namespace gfkit
