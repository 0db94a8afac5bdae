#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "csieve/cyclotomic.hpp"
#include "csieve/qanalog.hpp"
#include "csieve/subgroup.hpp"

namespace csieve {

/// Hilbert series of the invariant ring C[x_1..x_n]^H via Molien's formula:
/// (1/|H|) sum_h prod_{cycles z} 1/(1-q^{|z|}).  Stored as the cleared
/// numerator over prod_{i=1..n}(1-q^i) with the 1/|H| scalar kept aside.
class MolienSeries {
public:
    explicit MolienSeries(const SubgroupSpec& H) : n_(H.n()), order_(static_cast<long>(H.order())) {
        // common denominator prod_{i=1..n} (1 - q^i)
        std::vector<int> full;
        for (int i = 1; i <= n_; ++i) full.push_back(i);
        den_ = one_minus_q_ratio(full, {});
        num_ = IntPoly::zero();
        for (const auto& [mu, count] : H.type_counts()) {
            std::vector<int> cyc(mu.parts.begin(), mu.parts.end());
            IntPoly term = one_minus_q_ratio(full, cyc);  // exact: cycle lengths pack into {1..n}
            term *= count;
            num_ += term;
        }
        type_counts_ = H.type_counts();
    }

    int n() const { return n_; }
    long group_order() const { return order_; }
    PolyFrac value() const { return PolyFrac(num_, den_); }

    /// Power-series coefficients up to degree `dmax` (dimension counts;
    /// always nonnegative integers).
    std::vector<Int> coefficients(int dmax) const {
        std::vector<Int> acc(static_cast<size_t>(dmax) + 1, Int(0));
        for (const auto& [mu, count] : type_counts_) {
            std::vector<Int> s(static_cast<size_t>(dmax) + 1, Int(0));
            s[0] = 1;
            for (int len : mu.parts)
                for (int i = len; i <= dmax; ++i) s[static_cast<size_t>(i)] += s[static_cast<size_t>(i - len)];
            for (int i = 0; i <= dmax; ++i) acc[static_cast<size_t>(i)] += s[static_cast<size_t>(i)] * count;
        }
        for (auto& v : acc) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), Int(order_).get_mpz_t());
            if (r != 0) throw InternalDivisionFailure("Molien coefficient not divisible by |H|");
            v = std::move(q);
        }
        return acc;
    }

private:
    int n_;
    long order_;
    IntPoly num_;
    IntPoly den_;
    std::map<CycleType, Int> type_counts_;
};

/// X(q) of the coset space S_n/H: the ratio of invariant-ring Hilbert
/// series, which clears to (1/|H|) sum_h prod_{i=1..n}(1-q^i)/prod_z(1-q^{|z|})
/// with every summand an exact polynomial division.
inline IntPoly coset_poly_X(const SubgroupSpec& H) {
    int n = H.n();
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    IntPoly sum = IntPoly::zero();
    for (const auto& [mu, count] : H.type_counts()) {
        std::vector<int> cyc(mu.parts.begin(), mu.parts.end());
        IntPoly term = one_minus_q_ratio(full, cyc);
        term *= count;
        sum += term;
    }
    return exact_div_scalar(sum, Int(static_cast<long>(H.order())));
}

/// Y(q) = X(q)/[n]_q; the NonPolynomialQuotient it may throw is the
/// definitive no-CSP witness.
inline IntPoly y_poly(const SubgroupSpec& H) { return exact_div_by_q_int(coset_poly_X(H), H.n()); }

using FixOracle = std::function<Int(const CycleType&)>;

/// |Fix_X(mu)| from the subgroup's type histogram via the coset
/// fixed-point identity: |Z(mu)| * |Conj cap H| / |H|.
inline FixOracle fix_oracle_from_subgroup(const SubgroupSpec& H) {
    return [&H](const CycleType& mu) -> Int {
        auto it = H.type_counts().find(mu);
        if (it == H.type_counts().end()) return Int(0);
        Int num = centralizer_size(mu) * it->second;
        Int out;
        mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), Int(static_cast<long>(H.order())).get_mpz_t());
        return out;
    };
}

namespace detail {
inline void partitions_of(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    detail::partitions_of(n, n, cur, out);
    return out;
}

/// Exact root-of-unity evaluation of Y(q) from fixed-point data alone.
/// zeta is a primitive m-th root; k = floor((n-1)/m).  Uses the
/// n != 0 mod m formula or the n == 0 mod m variant with its extra
/// (mk/4) |Fix(2m, m^{k-1})| term.  All divisions are exact in Q(zeta).
inline CycRat y_zeta_prediction(int n, int m, const FixOracle& fix) {
    if (m < 2) throw UsageError("y_zeta_prediction needs m >= 2");
    int k = (n - 1) / m;

    auto type_with = [&](int len, int count, const std::vector<int>& extra) {
        std::vector<int> parts = extra;
        for (int i = 0; i < count; ++i) parts.push_back(len);
        std::sort(parts.rbegin(), parts.rend());
        return CycleType{std::move(parts)};
    };

    CycRat one_minus_zeta = CycRat::from_rational(m, 1) - CycRat::root_power(m, 1);

    auto lambda_denominator = [&](const std::vector<int>& lambda) {
        std::map<int, int> c;
        for (int p : lambda) ++c[p];
        CycRat den = CycRat::from_rational(m, 1);
        for (const auto& [i, ci] : c) {
            if (i % m == 0) throw NonUnitDivisor("(1 - zeta^i) vanishes for i = " + std::to_string(i));
            CycRat factor = (CycRat::from_rational(m, 1) - CycRat::root_power(m, i)) * Rat(i);
            for (int t = 0; t < ci; ++t) den = den * factor;
            Int f = factorial(ci);
            den = den * Rat(f);
        }
        return den;
    };

    CycRat total = CycRat::zero(m);
    if (n % m != 0) {
        for (const auto& lambda : all_partitions(n - k * m)) {
            Int f = fix(type_with(m, k, lambda));
            if (f == 0) continue;
            total = total + CycRat::from_rational(m, Rat(f)) / lambda_denominator(lambda);
        }
        CycRat prefix = one_minus_zeta;
        for (int i = 1; i <= n - 1 - k * m; ++i)
            prefix = prefix * (CycRat::from_rational(m, 1) - CycRat::root_power(m, i));
        return prefix * total;
    }

    // n == 0 mod m: n - km = m.  The boundary product over i = km+1..n-1
    // covers every nontrivial m-th root once and contributes a factor of m.
    for (const auto& lambda : all_partitions(m)) {
        if (lambda.size() == 1 && lambda[0] == m) continue;  // lambda_1 != m
        Int f = fix(type_with(m, k, lambda));
        if (f == 0) continue;
        total = total + CycRat::from_rational(m, Rat(f)) / lambda_denominator(lambda);
    }
    if (k >= 1) {
        Int f = fix(type_with(m, k - 1, {2 * m}));
        if (f != 0) {
            Rat scale(k, 4);
            scale.canonicalize();
            total = total + CycRat::from_rational(m, Rat(f) * scale);
        }
    }
    return one_minus_zeta * total * Rat(m);
}

}  // namespace csieve
