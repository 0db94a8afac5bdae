#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "csieve/perm.hpp"
#include "csieve/subgroup.hpp"

namespace csieve {

/// Word over colors {1..r} with a fixed content alpha.
using Word = std::vector<int>;

inline int composition_gcd(const std::vector<int>& alpha) {
    int g = 0;
    for (int a : alpha) g = std::gcd(g, a);
    return g;
}

inline Int multinomial(const std::vector<int>& alpha) {
    int n = std::accumulate(alpha.begin(), alpha.end(), 0);
    Int num = factorial(n);
    for (int a : alpha) {
        Int d = factorial(a);
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    }
    return num;
}

/// All words of content alpha, in lexicographic order.
inline std::vector<Word> enumerate_words(const std::vector<int>& alpha, size_t budget = 10'000'000) {
    Int total = multinomial(alpha);
    if (total > static_cast<long>(budget))
        throw BudgetExceeded("word count " + total.get_str() + " exceeds budget");
    Word w;
    for (size_t i = 0; i < alpha.size(); ++i)
        for (int j = 0; j < alpha[i]; ++j) w.push_back(static_cast<int>(i) + 1);
    std::sort(w.begin(), w.end());
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Permutations act on positions: (g.w)[g(i)] = w[i].
inline Word act_on_word(const Permutation& g, const Word& w) {
    Word out(w.size());
    for (size_t i = 0; i < w.size(); ++i) out[static_cast<size_t>(g.apply(static_cast<int>(i) + 1) - 1)] = w[i];
    return out;
}

/// Number of words of content alpha fixed by any permutation of cycle type
/// mu: a fixed word is constant on cycles, so this is the number of ways to
/// apportion the cycle lengths among the colors.  Knapsack over contents.
inline Int count_fixed_words(const std::vector<int>& alpha, const CycleType& mu) {
    // state: mixed-radix index over remaining content per color
    std::vector<int> radix(alpha.size());
    size_t states = 1;
    for (size_t i = 0; i < alpha.size(); ++i) {
        radix[i] = alpha[i] + 1;
        states *= static_cast<size_t>(radix[i]);
    }
    std::vector<Int> dp(states, Int(0));
    dp[states - 1] = 1;  // full content remaining (encoded as max index)
    std::vector<size_t> stride(alpha.size());
    size_t s = 1;
    for (size_t i = 0; i < alpha.size(); ++i) {
        stride[i] = s;
        s *= static_cast<size_t>(radix[i]);
    }
    for (int len : mu.parts) {
        std::vector<Int> next(states, Int(0));
        for (size_t st = 0; st < states; ++st) {
            if (dp[st] == 0) continue;
            for (size_t color = 0; color < alpha.size(); ++color) {
                int have = static_cast<int>((st / stride[color]) % static_cast<size_t>(radix[color]));
                if (have >= len) next[st - stride[color] * static_cast<size_t>(len)] += dp[st];
            }
        }
        dp = std::move(next);
    }
    return dp[0];
}

/// Canonical necklace representative: lexicographically minimal rotation.
inline Word min_rotation(const Word& w) {
    Word best = w;
    Word cur = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

struct NecklaceRep {
    Word canonical;
    int orbit_size = 0;
};

/// One canonical representative per rotation orbit of words of content
/// alpha, sorted by canonical word.
inline std::vector<NecklaceRep> enumerate_necklaces(const std::vector<int>& alpha, size_t budget = 10'000'000) {
    std::map<Word, int> orbit_sizes;
    for (const auto& w : enumerate_words(alpha, budget)) ++orbit_sizes[min_rotation(w)];
    std::vector<NecklaceRep> out;
    out.reserve(orbit_sizes.size());
    for (auto& [w, sz] : orbit_sizes) out.push_back({w, sz});
    return out;
}

/// Necklace count by Burnside over C, using the fixed-word knapsack.
inline Int count_necklaces(const std::vector<int>& alpha) {
    int n = std::accumulate(alpha.begin(), alpha.end(), 0);
    Permutation c = n_cycle(n);
    Permutation g = Permutation::identity(n);
    Int total{0};
    for (int j = 0; j < n; ++j) {
        total += count_fixed_words(alpha, g.cycle_type());
        g = c * g;
    }
    Int out;
    mpz_divexact(out.get_mpz_t(), total.get_mpz_t(), Int(n).get_mpz_t());
    return out;
}

/// Number of necklaces fixed by the reflection tau_0.  For a free C-action
/// each tau_0-fixed necklace contributes exactly n pairs (w, j) with
/// c^j tau_0 w = w, so the count is (1/n) sum_j |Fix(c^j tau_0)|.
inline Int count_reflection_fixed_necklaces(const std::vector<int>& alpha) {
    if (composition_gcd(alpha) != 1) throw NonFreeAction("reflection fix count needs gcd(alpha)=1");
    int n = std::accumulate(alpha.begin(), alpha.end(), 0);
    Permutation c = n_cycle(n);
    Permutation g = reflection_tau0(n);
    Int total{0};
    for (int j = 0; j < n; ++j) {
        total += count_fixed_words(alpha, g.cycle_type());
        g = c * g;
    }
    Int out;
    mpz_divexact(out.get_mpz_t(), total.get_mpz_t(), Int(n).get_mpz_t());
    return out;
}

struct BraceletCounts {
    Int total;        // tau_0-orbits on necklaces
    Int asymmetric;   // orbits consisting of two distinct necklaces
    Int symmetric_necklaces;  // necklaces fixed by tau_0
};

/// tau_0-orbit statistics on alpha-necklaces (free C-action setting).
inline BraceletCounts bracelet_orbits(const std::vector<int>& alpha) {
    if (composition_gcd(alpha) != 1) throw NonFreeAction("bracelet orbits need gcd(alpha)=1");
    Int necklaces = count_necklaces(alpha);
    Int symmetric = count_reflection_fixed_necklaces(alpha);
    // total = symmetric + (necklaces - symmetric)/2; asymmetric = necklaces - total
    Int asym = necklaces - symmetric;
    mpz_divexact(asym.get_mpz_t(), asym.get_mpz_t(), Int(2).get_mpz_t());
    Int total = symmetric + asym;
    return {total, asym, symmetric};
}

/// Brute-force bracelet statistics by explicit orbit enumeration; the
/// independent oracle for bracelet_orbits.
inline BraceletCounts bracelet_orbits_by_enumeration(const std::vector<int>& alpha, size_t budget = 1'000'000) {
    int n = std::accumulate(alpha.begin(), alpha.end(), 0);
    auto necks = enumerate_necklaces(alpha, budget);
    Permutation t0 = reflection_tau0(n);
    std::set<Word> canon;
    for (const auto& nk : necks) canon.insert(nk.canonical);
    long total = 0, asym = 0, sym = 0;
    std::set<Word> seen;
    for (const auto& nk : necks) {
        if (seen.count(nk.canonical)) continue;
        Word mirror = min_rotation(act_on_word(t0, nk.canonical));
        seen.insert(nk.canonical);
        ++total;
        if (mirror == nk.canonical) {
            ++sym;
        } else {
            seen.insert(mirror);
            ++asym;
        }
    }
    return {Int(total), Int(asym), Int(sym)};
}

/// Fixed points of g acting on the necklaces of content alpha, by
/// enumeration.
inline Int count_fixed_necklaces_by_enumeration(const std::vector<int>& alpha, const Permutation& g,
                                                size_t budget = 1'000'000) {
    long fixed = 0;
    for (const auto& nk : enumerate_necklaces(alpha, budget))
        if (min_rotation(act_on_word(g, nk.canonical)) == nk.canonical) ++fixed;
    return Int(fixed);
}

}  // namespace csieve
