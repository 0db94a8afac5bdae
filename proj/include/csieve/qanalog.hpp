#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "csieve/cyclotomic.hpp"
#include "csieve/intpoly.hpp"

namespace csieve {

/// [n]_q = 1 + q + ... + q^{n-1}
inline IntPoly q_int(int n) {
    std::vector<Int> c(static_cast<size_t>(n), Int(1));
    return IntPoly(std::move(c));
}

/// [n]!_q, memoized.
inline const IntPoly& q_factorial(int n) {
    static std::vector<IntPoly> cache{IntPoly::one()};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        int k = static_cast<int>(cache.size());
        cache.push_back(cache.back() * q_int(k));
    }
    return cache[static_cast<size_t>(n)];
}

/// Builds prod_e (1 - q^e) over `num_exps` divided by the same product over
/// `den_exps`, via cyclotomic multiplicity counting.  Exponents must be
/// positive.  Throws NonPolynomialResult if some Phi_d has negative
/// multiplicity in the ratio.
inline IntPoly one_minus_q_ratio(const std::vector<int>& num_exps, const std::vector<int>& den_exps) {
    std::map<int, int> mult;  // d -> multiplicity of Phi_d
    for (int e : num_exps)
        for (int d = 1; d <= e; ++d)
            if (e % d == 0) ++mult[d];
    for (int e : den_exps)
        for (int d = 1; d <= e; ++d)
            if (e % d == 0) --mult[d];
    // 1 - q^e = -(q^e - 1) = -prod_{d|e} Phi_d, so track the sign separately.
    int sign = ((static_cast<int>(num_exps.size()) - static_cast<int>(den_exps.size())) % 2 == 0) ? 1 : -1;
    IntPoly result = IntPoly::one();
    for (const auto& [d, k] : mult) {
        if (k < 0) throw NonPolynomialResult("ratio of (1-q^e) products is not a polynomial");
        for (int i = 0; i < k; ++i) result *= cyclotomic_poly(d);
    }
    if (sign < 0) result = -result;
    return result;
}

/// q-multinomial [n choose alpha]_q = [n]!_q / prod [alpha_i]!_q.
inline IntPoly q_multinomial(const std::vector<int>& alpha) {
    int n = std::accumulate(alpha.begin(), alpha.end(), 0);
    std::vector<int> num, den;
    for (int j = 1; j <= n; ++j) num.push_back(j);
    for (int a : alpha)
        for (int j = 1; j <= a; ++j) den.push_back(j);
    return one_minus_q_ratio(num, den);
}

/// [n choose k]_q
inline IntPoly q_binomial(int n, int k) { return q_multinomial({k, n - k}); }

/// p / [n]_q when the division is exact; the thrown remainder is the
/// definitive no-CSP witness for a non-free action.
inline IntPoly exact_div_by_q_int(const IntPoly& p, int n) {
    auto [quo, rem] = p.divmod(q_int(n));
    if (!rem.is_zero())
        throw NonPolynomialQuotient("division by [" + std::to_string(n) + "]_q left a remainder", std::move(rem));
    return std::move(quo);
}

/// C(alpha;q) = (1/[n]_q) [n choose alpha]_q.  Polynomial exactly when
/// gcd(alpha)=1.
inline IntPoly c_alpha(const std::vector<int>& alpha) {
    int n = std::accumulate(alpha.begin(), alpha.end(), 0);
    return exact_div_by_q_int(q_multinomial(alpha), n);
}

struct ParityUnimodalResult {
    bool ok = true;
    // Smallest witnessing exponent triple (i < j < k, same parity) with
    // coeff(i) > coeff(j) < coeff(k).
    int i = -1, j = -1, k = -1;
};

/// Checks that the even-index and odd-index coefficient subsequences each
/// rise then fall weakly.
inline ParityUnimodalResult is_parity_unimodal(const IntPoly& p) {
    if (!p.has_nonnegative_coeffs()) throw NegativeCoefficient("parity-unimodality needs nonnegative coefficients");
    for (int parity = 0; parity <= 1; ++parity) {
        for (int j = parity + 2; j <= p.degree(); j += 2) {
            if (p.coeff(j) >= p.coeff(j - 2)) continue;
            // dip at j: look for a later rise
            for (int k = j + 2; k <= p.degree(); k += 2) {
                if (p.coeff(k) > p.coeff(j)) {
                    // report the earliest i with coeff(i) > coeff(j)
                    for (int i = parity; i < j; i += 2)
                        if (p.coeff(i) > p.coeff(j)) return {false, i, j, k};
                }
            }
        }
    }
    return {};
}

inline bool is_palindromic(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("palindromicity is undefined for the zero polynomial");
    int d = p.degree();
    for (int i = 0; 2 * i <= d; ++i)
        if (p.coeff(i) != p.coeff(d - i)) return false;
    return true;
}

/// Rational function num/den in q.  Light-weight: only what the Molien
/// bookkeeping needs.
class PolyFrac {
public:
    PolyFrac(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroPolynomial("PolyFrac denominator is zero");
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    /// Asserts the fraction is a polynomial and returns it.
    IntPoly to_poly() const { return exact_div(num_, den_); }

private:
    IntPoly num_;
    IntPoly den_;
};

}  // namespace csieve
