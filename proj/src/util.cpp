#include "gfkit/util.hpp"

namespace gfkit {

std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // restricted growth strings: a[0]=0, a[i] <= max(a[0..i-1])+1
    std::vector<int> a(n, 0);
    while (true) {
        // convert growth string to least-representative form: rep[i] = first
        // index with the same block id
        std::vector<int> first(n, -1), rep(n);
        for (int i = 0; i < n; ++i) {
            if (first[a[i]] < 0) first[a[i]] = i;
            rep[i] = first[a[i]];
        }
        out.push_back(rep);
        int i = n - 1;
        for (; i > 0; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
            if (a[i] <= mx) break;
        }
        if (i == 0) break;
        ++a[i];
        for (int j = i + 1; j < n; ++j) a[j] = 0;
    }
    return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<std::vector<int>> permutations_of(std::vector<int> base) {
    std::vector<std::vector<int>> out;
    std::sort(base.begin(), base.end());
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

} // namespace gfkit
