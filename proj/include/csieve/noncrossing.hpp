#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "csieve/csp.hpp"
#include "csieve/perm.hpp"
#include "csieve/qanalog.hpp"

namespace csieve {

/// Set partition of {1..n} in canonical form: blocks sorted internally and
/// by minimum element.
struct NoncrossingPartition {
    std::vector<std::vector<int>> blocks;

    static NoncrossingPartition canonical(std::vector<std::vector<int>> bl) {
        for (auto& b : bl) std::sort(b.begin(), b.end());
        std::sort(bl.begin(), bl.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
        return NoncrossingPartition{std::move(bl)};
    }

    bool operator==(const NoncrossingPartition& o) const { return blocks == o.blocks; }
    bool operator<(const NoncrossingPartition& o) const { return blocks < o.blocks; }
};

/// No i < j < p < q with {i,p} in one block and {j,q} in a different one.
inline bool is_noncrossing(const NoncrossingPartition& pi, int n) {
    std::vector<int> block_of(static_cast<size_t>(n) + 1, -1);
    for (size_t bi = 0; bi < pi.blocks.size(); ++bi)
        for (int x : pi.blocks[bi]) block_of[static_cast<size_t>(x)] = static_cast<int>(bi);
    // classic stack test on the circular-free (linear) characterization
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int p = j + 1; p <= n; ++p)
                for (int q = p + 1; q <= n; ++q)
                    if (block_of[static_cast<size_t>(i)] == block_of[static_cast<size_t>(p)] &&
                        block_of[static_cast<size_t>(j)] == block_of[static_cast<size_t>(q)] &&
                        block_of[static_cast<size_t>(i)] != block_of[static_cast<size_t>(j)])
                        return false;
    return true;
}

/// Relabel elements through g (1-based), then re-canonicalize.
inline NoncrossingPartition act_on_partition(const Permutation& g, const NoncrossingPartition& pi) {
    std::vector<std::vector<int>> bl;
    bl.reserve(pi.blocks.size());
    for (const auto& b : pi.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int x : b) nb.push_back(g.apply(x));
        bl.push_back(std::move(nb));
    }
    return NoncrossingPartition::canonical(std::move(bl));
}

/// All noncrossing partitions of {1..n} with exactly k blocks, enumerated
/// through restricted-growth strings and filtered.
inline std::vector<NoncrossingPartition> noncrossing_partitions(int n, int k) {
    if (k < 1 || k > n) throw UsageError("noncrossing_partitions needs 1 <= k <= n");
    std::vector<NoncrossingPartition> out;
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    auto emit = [&]() {
        std::vector<std::vector<int>> bl(static_cast<size_t>(k));
        for (int i = 0; i < n; ++i) bl[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i + 1);
        NoncrossingPartition pi = NoncrossingPartition::canonical(std::move(bl));
        if (is_noncrossing(pi, n)) out.push_back(std::move(pi));
    };
    // restricted growth: rgs[0]=0, rgs[i] <= 1 + max(rgs[0..i-1])
    std::function<void(int, int)> rec = [&](int i, int mx) {
        if (i == n) {
            if (mx + 1 == k) emit();
            return;
        }
        int remaining = n - i;
        if (mx + 1 + remaining < k) return;  // cannot still reach k blocks
        for (int v = 0; v <= std::min(mx + 1, k - 1); ++v) {
            rgs[static_cast<size_t>(i)] = v;
            rec(i + 1, std::max(mx, v));
        }
    };
    rec(0, -1);
    std::sort(out.begin(), out.end());
    return out;
}

/// X_k(q) = (1/[n]_q) [n,k]_q [n,k-1]_q.
inline IntPoly nc_x_poly(int n, int k) {
    return exact_div_by_q_int(q_binomial(n, k) * q_binomial(n, k - 1), n);
}

struct NcSecondaryResult {
    int n = 0, k = 0;
    long count = 0;           // |X_k| by enumeration
    Int narayana_display;     // (1/n) C(n,k) C(n,k+1), the alternate closed form; may differ
    IntPoly x_polynomial;     // X_k(q)
    IntPoly y_polynomial;     // Y_k(q) = X_k(q)/[n]_q
    long orbit_count = 0;     // |Y_k|
    Int tau_fixed_elements;   // |Fix_{X_k}(tau_0)|
    Int tau_fixed_orbits;     // |Fix_{Y_k}(tau_0)|
    CSPReport primary;        // (X_k, X_k(q), <c>)
    CSPReport secondary;      // (Y_k, Y_k(q), <tau_0>)
    bool ding_identity = true;      // |Fix_{X_k}(tau_0)| == X_k(-1)
    bool fixed_count_match = true;  // |Fix_{Y_k}(tau_0)| == |Fix_{X_k}(tau_0)|
    bool all_pass() const {
        return primary.verdict && secondary.verdict && ding_identity && fixed_count_match;
    }
};

/// The four-part bundle: primary CSP under rotation, the q = -1 reflection
/// count, equality of tau_0-fixed elements and tau_0-fixed orbits, and the
/// secondary CSP on rotation orbits.
inline NcSecondaryResult check_nc_secondary(int n, int k) {
    if (std::gcd(n, k) != 1 || std::gcd(n, k - 1) != 1)
        throw NonFreeAction("rotation is not free: need gcd(n,k) = gcd(n,k-1) = 1");
    NcSecondaryResult out;
    out.n = n;
    out.k = k;
    auto xs = noncrossing_partitions(n, k);
    out.count = static_cast<long>(xs.size());
    {
        Int num = multinomial({k, n - k}) * multinomial({k + 1, n - k - 1});
        mpz_tdiv_q(out.narayana_display.get_mpz_t(), num.get_mpz_t(), Int(n).get_mpz_t());
    }
    out.x_polynomial = nc_x_poly(n, k);
    out.y_polynomial = exact_div_by_q_int(out.x_polynomial, n);

    std::map<NoncrossingPartition, size_t> index;
    for (size_t i = 0; i < xs.size(); ++i) index[xs[i]] = i;

    Permutation c = n_cycle(n), tau0 = reflection_tau0(n);
    auto fix_count_of = [&](const Permutation& g) {
        Int f = 0;
        for (const auto& pi : xs)
            if (act_on_partition(g, pi) == pi) ++f;
        return f;
    };

    std::vector<Int> rot_fix;
    Permutation pw = Permutation::identity(n);
    for (int b = 0; b < n; ++b) {
        rot_fix.push_back(fix_count_of(pw));
        pw = c * pw;
    }
    out.primary = check_csp([&](int b) { return rot_fix[static_cast<size_t>(b)]; }, n, out.x_polynomial);

    out.tau_fixed_elements = fix_count_of(tau0);
    out.ding_identity = (out.tau_fixed_elements == out.x_polynomial.at_minus_one());

    // rotation orbits, and tau_0 acting on them
    std::vector<int> orbit_of(xs.size(), -1);
    int norbits = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (orbit_of[i] != -1) continue;
        NoncrossingPartition cur = xs[i];
        for (int b = 0; b < n; ++b) {
            orbit_of[index.at(cur)] = norbits;
            cur = act_on_partition(c, cur);
        }
        ++norbits;
    }
    out.orbit_count = norbits;
    out.tau_fixed_orbits = 0;
    std::set<int> seen;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!seen.insert(orbit_of[i]).second) continue;
        if (orbit_of[index.at(act_on_partition(tau0, xs[i]))] == orbit_of[i]) ++out.tau_fixed_orbits;
    }
    out.fixed_count_match = (out.tau_fixed_orbits == out.tau_fixed_elements);

    Int orbits_int{norbits};
    out.secondary = check_csp([&](int b) { return b == 0 ? orbits_int : out.tau_fixed_orbits; }, 2,
                              out.y_polynomial);
    return out;
}

}  // namespace csieve
