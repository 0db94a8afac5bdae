#pragma once

#include <numeric>
#include <vector>

#include "csieve/characters.hpp"
#include "csieve/molien.hpp"
#include "csieve/partition.hpp"
#include "csieve/qanalog.hpp"

namespace csieve {

/// Truncated series in q and t: layer(j) is the q-series (length qmax+1)
/// of the t^j coefficient.
class BivariateSeries {
public:
    BivariateSeries(int qmax, int tmax)
        : qmax_(qmax), layers_(static_cast<size_t>(tmax) + 1, std::vector<Int>(static_cast<size_t>(qmax) + 1, Int(0))) {}

    int qmax() const { return qmax_; }
    int tmax() const { return static_cast<int>(layers_.size()) - 1; }

    Int& at(int qi, int tj) { return layers_[static_cast<size_t>(tj)][static_cast<size_t>(qi)]; }
    const Int& at(int qi, int tj) const { return layers_[static_cast<size_t>(tj)][static_cast<size_t>(qi)]; }

    std::vector<Int>& layer(int tj) { return layers_[static_cast<size_t>(tj)]; }
    const std::vector<Int>& layer(int tj) const { return layers_[static_cast<size_t>(tj)]; }

    bool operator==(const BivariateSeries& o) const { return qmax_ == o.qmax_ && layers_ == o.layers_; }

    bool all_nonnegative() const {
        for (const auto& l : layers_)
            for (const auto& v : l)
                if (v < 0) return false;
        return true;
    }

private:
    int qmax_;
    std::vector<std::vector<Int>> layers_;
};

namespace detail {

inline void series_shift_add(std::vector<Int>& dst, const std::vector<Int>& src, int shift) {
    for (size_t i = 0; i + static_cast<size_t>(shift) < dst.size() && i < src.size(); ++i)
        dst[i + static_cast<size_t>(shift)] += src[i];
}

/// In-place truncated multiplication by 1/(1-q^h).
inline void series_divide_one_minus_qh(std::vector<Int>& s, int h) {
    for (size_t i = static_cast<size_t>(h); i < s.size(); ++i) s[i] += s[i - static_cast<size_t>(h)];
}

/// In-place truncated multiplication by (1-q).
inline void series_multiply_one_minus_q(std::vector<Int>& s) {
    for (size_t i = s.size(); i-- > 1;) s[i] -= s[i - 1];
}

}  // namespace detail

/// Bigraded intertwiner dimensions of S^lambda against S^iV* (x) Lambda^j V,
/// where V is the reflection representation of S_a, as the hook-length
/// product expansion: (1-q)/(1+t) * prod_{(i,j)} (q^{i-1} + t q^{j-1}) / (1-q^{h(i,j)}).
inline BivariateSeries molchanov_series(const PartitionShape& lambda, int qmax) {
    int a = lambda.size();
    if (a < 2) throw UsageError("molchanov_series needs a partition of a >= 2");
    auto cells = lambda.cells();

    // product over cells of (q^{r-1} + t q^{c-1}), as t-layers of q-series
    std::vector<std::vector<Int>> layers(1, std::vector<Int>(static_cast<size_t>(qmax) + 1, Int(0)));
    layers[0][0] = 1;
    for (auto [r, c] : cells) {
        std::vector<std::vector<Int>> next(layers.size() + 1,
                                           std::vector<Int>(static_cast<size_t>(qmax) + 1, Int(0)));
        for (size_t tj = 0; tj < layers.size(); ++tj) {
            detail::series_shift_add(next[tj], layers[tj], r - 1);
            detail::series_shift_add(next[tj + 1], layers[tj], c - 1);
        }
        layers = std::move(next);
    }
    for (auto& l : layers) detail::series_multiply_one_minus_q(l);

    // divide by (1+t): synthetic division over t; remainder must vanish
    std::vector<std::vector<Int>> quo(layers.size() - 1);
    std::vector<Int> carry(static_cast<size_t>(qmax) + 1, Int(0));
    for (size_t tj = 0; tj + 1 < layers.size(); ++tj) {
        quo[tj] = layers[tj];
        for (size_t i = 0; i <= static_cast<size_t>(qmax); ++i) quo[tj][i] -= carry[i];
        carry = quo[tj];
    }
    for (size_t i = 0; i <= static_cast<size_t>(qmax); ++i)
        if (layers.back()[i] != carry[i]) throw InternalDivisionFailure("(1+t) does not divide the hook product");

    for (auto& l : quo)
        for (auto [r, c] : cells) detail::series_divide_one_minus_qh(l, lambda.hook_length(r, c));

    BivariateSeries out(qmax, static_cast<int>(quo.size()) - 1);
    for (size_t tj = 0; tj < quo.size(); ++tj) out.layer(static_cast<int>(tj)) = quo[tj];
    if (!out.all_nonnegative()) throw NegativeCoefficient("hook product expansion has a negative dimension");
    return out;
}

/// Graded multiplicity of S^lambda in the t = -q^b specialization: the
/// exact polynomial (1-q)/(1-q^b) * prod_{(r,c)} (q^{r-1} - q^{c-1+b}) / (1-q^{h(r,c)}).
/// Each numerator factor is a signed monomial times (1 - q^{b+c-r}), so the
/// whole quotient is a ratio of (1-q^e) products.
inline IntPoly isotypic_hilbert(const PartitionShape& lambda, int b) {
    int a = lambda.size();
    if (std::gcd(a, b) != 1 || a >= b) throw UsageError("isotypic_hilbert needs gcd(a,b)=1 and a < b");
    std::vector<int> num{1}, den{b};
    int shift = 0;
    for (auto [r, c] : lambda.cells()) {
        // q^{r-1} - q^{c-1+b} = q^{r-1} (1 - q^{b+c-r})   [b + c - r > 0 since r <= a < b]
        shift += r - 1;
        num.push_back(b + c - r);
        den.push_back(lambda.hook_length(r, c));
    }
    IntPoly p;
    try {
        p = one_minus_q_ratio(num, den);
    } catch (const NonPolynomialResult&) {
        throw NonPolynomialResult("isotypic Hilbert series is not a polynomial (precondition violated)");
    }
    p = p.shifted(shift);
    if (!p.has_nonnegative_coeffs()) throw NegativeCoefficient("isotypic Hilbert series has a negative coefficient");
    return p;
}

/// Rational q-Schroeder polynomial through the hook-shape route:
/// q^{-binom(k,2)} ( H_{(a-k,1^k)} + H_{(a-k+1,1^{k-1})} ), cross-checked
/// against C((k,a-k,b-k);q).  A mismatch is an internal-consistency
/// failure and throws with both polynomials attached.
inline IntPoly rational_q_schroder(int a, int b, int k) {
    if (std::gcd(a, b) != 1 || k < 0 || k > a || a >= b) throw UsageError("need gcd(a,b)=1 and 0 <= k <= a < b");
    IntPoly hook_side = IntPoly::zero();
    if (a - k >= 1) hook_side += isotypic_hilbert(PartitionShape::hook(a - k, k), b);
    if (k >= 1) hook_side += isotypic_hilbert(PartitionShape::hook(a - k + 1, k - 1), b);

    int norm = k * (k - 1) / 2;
    for (int i = 0; i < norm; ++i)
        if (hook_side.coeff(i) != 0)
            throw InternalDivisionFailure("hook-side series has terms below q^binom(k,2)");
    std::vector<Int> shifted;
    if (static_cast<int>(hook_side.coeffs().size()) > norm)
        shifted.assign(hook_side.coeffs().begin() + norm, hook_side.coeffs().end());
    IntPoly result{std::move(shifted)};

    IntPoly reference = c_alpha({k, a - k, b - k});
    if (result != reference)
        throw FormulaMismatch("hook-product route disagrees with C(alpha;q)", result, reference);
    return result;
}

/// Independent character-theoretic route to the bigraded multiplicities:
/// class-weighted inner products with chi^lambda, using the graded
/// characters of SV* and Lambda V at each class.
inline BivariateSeries graded_multiplicity_oracle(const PartitionShape& lambda, int qmax) {
    int a = lambda.size();
    if (a > 6 || qmax > 12) throw BudgetExceeded("character oracle capped at a <= 6, qmax <= 12");
    BivariateSeries acc(qmax, a - 1);
    for (const auto& mu_parts : all_partitions(a)) {
        CycleType mu{mu_parts};
        Int cls = conjugacy_class_size(mu);
        Int chi = mn_character(lambda, mu);
        if (chi == 0) continue;

        // char_q(SV*; mu) = (1-q) prod_z 1/(1-q^{|z|})   (V natural minus trivial)
        std::vector<Int> sq(static_cast<size_t>(qmax) + 1, Int(0));
        sq[0] = 1;
        for (int len : mu.parts) detail::series_divide_one_minus_qh(sq, len);
        detail::series_multiply_one_minus_q(sq);

        // char_t(Lambda V; mu) = prod_z (1 - (-t)^{|z|}) / (1+t), a polynomial
        // of degree a-1 in t
        std::vector<Int> tp{Int(1)};
        for (int len : mu.parts) {
            std::vector<Int> factor(static_cast<size_t>(len) + 1, Int(0));
            factor[0] = 1;
            factor[static_cast<size_t>(len)] = (len % 2 == 0) ? Int(-1) : Int(1);  // 1 - (-t)^len
            std::vector<Int> prod(tp.size() + factor.size() - 1, Int(0));
            for (size_t i = 0; i < tp.size(); ++i)
                for (size_t j = 0; j < factor.size(); ++j) prod[i + j] += tp[i] * factor[j];
            tp = std::move(prod);
        }
        // divide by (1+t)
        std::vector<Int> tq(tp.size() - 1, Int(0));
        Int carry{0};
        for (size_t i = 0; i + 1 < tp.size(); ++i) {
            tq[i] = tp[i] - carry;
            carry = tq[i];
        }
        if (tp.back() != carry) throw InternalDivisionFailure("(1+t) does not divide the exterior character");

        for (int tj = 0; tj <= a - 1 && tj < static_cast<int>(tq.size()); ++tj) {
            if (tq[static_cast<size_t>(tj)] == 0) continue;
            Int w = cls * chi * tq[static_cast<size_t>(tj)];
            for (int qi = 0; qi <= qmax; ++qi) acc.at(qi, tj) += w * sq[static_cast<size_t>(qi)];
        }
    }
    Int afact = factorial(a);
    for (int tj = 0; tj <= acc.tmax(); ++tj)
        for (int qi = 0; qi <= qmax; ++qi) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.at(qi, tj).get_mpz_t(), afact.get_mpz_t());
            if (r != 0) throw InternalDivisionFailure("character inner product is not an integer");
            acc.at(qi, tj) = std::move(q);
        }
    return acc;
}

}  // namespace csieve
