#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "csieve/intpoly.hpp"

namespace csieve {

inline int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// m-th cyclotomic polynomial, computed as (q^m - 1) / prod_{d|m, d<m} Phi_d
/// by exact division.  Memoized; the table is guarded by a mutex so values
/// can be shared across threads.
inline const IntPoly& cyclotomic_poly(int m) {
    static std::map<int, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::function<const IntPoly&(int)> get = [&](int k) -> const IntPoly& {
        auto hit = cache.find(k);
        if (hit != cache.end()) return hit->second;
        std::vector<Int> qm(static_cast<size_t>(k) + 1, Int(0));
        qm[0] = -1;
        qm[static_cast<size_t>(k)] = 1;
        IntPoly num{std::move(qm)};  // q^k - 1
        for (int d = 1; d < k; ++d)
            if (k % d == 0) num = exact_div(num, get(d));
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(m);
}

/// Element of Z[zeta_m], stored as an integer polynomial in zeta reduced
/// modulo Phi_m; the residue vector has length phi(m).
class CyclotomicInt {
public:
    CyclotomicInt(int m, IntPoly residue) : m_(m), res_(reduce(m, std::move(residue))) {}

    static CyclotomicInt from_integer(int m, Int v) { return CyclotomicInt(m, IntPoly::constant(std::move(v))); }

    int conductor() const { return m_; }
    const IntPoly& residue() const { return res_; }

    bool is_integer() const { return res_.degree() <= 0; }

    /// Valid only when is_integer().
    Int integer_value() const { return res_.coeff(0); }

    bool operator==(const CyclotomicInt& o) const { return m_ == o.m_ && res_ == o.res_; }
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

    friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
        return CyclotomicInt(a.m_, a.res_ + b.res_);
    }
    friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) {
        return CyclotomicInt(a.m_, a.res_ - b.res_);
    }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
        return CyclotomicInt(a.m_, a.res_ * b.res_);
    }

    static IntPoly reduce(int m, IntPoly p) {
        const IntPoly& phi = cyclotomic_poly(m);
        if (p.degree() < phi.degree()) return p;
        return p.divmod(phi).second;
    }

private:
    int m_;
    IntPoly res_;
};

/// p(zeta_m^b), computed exactly: exponents are folded mod m, then the
/// result is reduced modulo Phi_m.
inline CyclotomicInt eval_at_root_of_unity(const IntPoly& p, int m, long b) {
    std::vector<Int> folded(static_cast<size_t>(m), Int(0));
    for (int i = 0; i <= p.degree(); ++i) {
        long e = (static_cast<long>(i) % m) * (((b % m) + m) % m) % m;
        folded[static_cast<size_t>(e)] += p.coeff(i);
    }
    return CyclotomicInt(m, IntPoly(std::move(folded)));
}

/// Element of the cyclotomic field Q(zeta_m): rational coefficient vector
/// reduced modulo Phi_m.  Supports exact inversion, which is what the
/// root-of-unity Molien evaluation needs for its (1 - zeta^i) divisors.
class CycRat {
public:
    CycRat(int m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) { reduce(); }

    static CycRat zero(int m) { return CycRat(m, {}); }

    static CycRat from_rational(int m, Rat v) { return CycRat(m, {std::move(v)}); }

    /// zeta_m^e
    static CycRat root_power(int m, long e) {
        e = ((e % m) + m) % m;
        std::vector<Rat> c(static_cast<size_t>(e) + 1);
        c.back() = 1;
        return CycRat(m, std::move(c));
    }

    static CycRat from_cyclotomic_int(const CyclotomicInt& v) {
        std::vector<Rat> c;
        for (const auto& x : v.residue().coeffs()) c.emplace_back(x);
        return CycRat(v.conductor(), std::move(c));
    }

    int conductor() const { return m_; }

    bool is_zero() const { return c_.empty(); }

    bool is_rational() const { return c_.size() <= 1; }

    Rat rational_value() const { return c_.empty() ? Rat(0) : c_[0]; }

    bool operator==(const CycRat& o) const { return m_ == o.m_ && c_ == o.c_; }
    bool operator!=(const CycRat& o) const { return !(*this == o); }

    friend CycRat operator+(const CycRat& a, const CycRat& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return CycRat(a.m_, std::move(c));
    }

    friend CycRat operator-(const CycRat& a, const CycRat& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] -= b.c_[i];
        }
        return CycRat(a.m_, std::move(c));
    }

    friend CycRat operator*(const CycRat& a, const CycRat& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.m_);
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return CycRat(a.m_, std::move(c));
    }

    friend CycRat operator*(const CycRat& a, const Rat& s) {
        std::vector<Rat> c = a.c_;
        for (auto& v : c) v *= s;
        return CycRat(a.m_, std::move(c));
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_m over Q.  Phi_m is irreducible, so every nonzero element is
    /// invertible.
    CycRat inverse() const {
        if (is_zero()) throw NonUnitDivisor("inverse of zero in Q(zeta)");
        // Run xgcd(Phi_m, this) over Q[x]: r0 = Phi_m, r1 = this.
        std::vector<Rat> r0;
        for (const auto& v : cyclotomic_poly(m_).coeffs()) r0.emplace_back(v);
        std::vector<Rat> r1 = c_;
        std::vector<Rat> t0;            // coefficient of `this` in r0
        std::vector<Rat> t1 = {Rat(1)};  // coefficient of `this` in r1
        while (!r1.empty()) {
            auto [quo, rem] = poly_divmod(r0, r1);
            std::vector<Rat> t2 = poly_sub(t0, poly_mul(quo, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is a nonzero constant gcd; t0 * this == r0 (mod Phi_m).
        if (r0.size() != 1) throw InternalDivisionFailure("cyclotomic inverse: nonconstant gcd with Phi_m");
        Rat inv_g = Rat(1) / r0[0];
        for (auto& v : t0) v *= inv_g;
        return CycRat(m_, std::move(t0));
    }

    friend CycRat operator/(const CycRat& a, const CycRat& b) { return a * b.inverse(); }

private:
    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> c(a.size() + b.size() - 1);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    }

    static std::vector<Rat> poly_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
        if (b.size() > a.size()) a.resize(b.size());
        for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }

    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                                     const std::vector<Rat>& den) {
        std::vector<Rat> quo;
        if (num.size() >= den.size()) quo.assign(num.size() - den.size() + 1, Rat(0));
        while (num.size() >= den.size() && !num.empty()) {
            Rat q = num.back() / den.back();
            size_t shift = num.size() - den.size();
            quo[shift] = q;
            for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= q * den[i];
            while (!num.empty() && num.back() == 0) num.pop_back();
        }
        return {std::move(quo), std::move(num)};
    }

    void reduce() {
        const IntPoly& phi = cyclotomic_poly(m_);
        std::vector<Rat> den;
        for (const auto& v : phi.coeffs()) den.emplace_back(v);
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (c_.size() >= den.size()) c_ = poly_divmod(std::move(c_), den).second;
    }

    int m_;
    std::vector<Rat> c_;
};

}  // namespace csieve
