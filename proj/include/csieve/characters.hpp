#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

#include "csieve/intpoly.hpp"
#include "csieve/partition.hpp"
#include "csieve/perm.hpp"

namespace csieve {

namespace detail {

/// Murnaghan-Nakayama via beta-numbers: removing a border strip of length
/// l from lambda is moving some beta number b to b-l (which must be free),
/// with sign (-1)^{number of beta numbers passed over}.
inline Int mn_rec(std::vector<int> beta, const std::vector<int>& mu, size_t mi,
                  std::map<std::pair<std::vector<int>, size_t>, Int>& cache) {
    // normalize: strip leading zeros pattern (beta sorted descending, values
    // distinct >= 0); drop a full tail {k-1,...,1,0} only implicitly - the
    // representation is already canonical for fixed set size.
    std::sort(beta.rbegin(), beta.rend());
    auto key = std::make_pair(beta, mi);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Int result;
    if (mi == mu.size()) {
        result = 1;  // all strips removed; remaining shape is empty by size bookkeeping
    } else {
        int l = mu[mi];
        result = 0;
        for (size_t i = 0; i < beta.size(); ++i) {
            int target = beta[i] - l;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            int passed = 0;
            for (int b : beta)
                if (b < beta[i] && b > target) ++passed;
            std::vector<int> nb = beta;
            nb[i] = target;
            Int sub = mn_rec(std::move(nb), mu, mi + 1, cache);
            if (passed % 2 == 0)
                result += sub;
            else
                result -= sub;
        }
    }
    cache.emplace(std::move(key), result);
    return result;
}

}  // namespace detail

/// Irreducible S_n character value chi^lambda(mu), memoized.
inline Int mn_character(const std::vector<int>& lambda, const std::vector<int>& mu) {
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> top_cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = top_cache.find({lambda, mu});
    if (it != top_cache.end()) return it->second;

    size_t r = lambda.size();
    std::vector<int> beta(r);
    for (size_t i = 0; i < r; ++i) beta[i] = lambda[i] + static_cast<int>(r - 1 - i);
    std::map<std::pair<std::vector<int>, size_t>, Int> cache;
    Int v = detail::mn_rec(std::move(beta), mu, 0, cache);
    return top_cache.emplace(std::make_pair(lambda, mu), std::move(v)).first->second;
}

inline Int mn_character(const PartitionShape& lambda, const CycleType& mu) {
    return mn_character(lambda.parts(), mu.parts);
}

}  // namespace csieve
