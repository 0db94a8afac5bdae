#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csieve/errors.hpp"

namespace csieve {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense integer-coefficient polynomial in q.  coeff(i) is the coefficient
/// of q^i.  The stored vector is always trimmed, so the top stored
/// coefficient is nonzero unless the polynomial is zero.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly{}; }

    static IntPoly constant(Int v) {
        IntPoly p;
        p.c_.push_back(std::move(v));
        p.trim();
        return p;
    }

    static IntPoly one() { return constant(1); }

    static IntPoly monomial(Int coef, int exp) {
        IntPoly p;
        p.c_.assign(static_cast<size_t>(exp) + 1, Int(0));
        p.c_.back() = std::move(coef);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    /// Degree of the polynomial; -1 stands for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Int& coeff(int i) const {
        static const Int kZero{0};
        if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    IntPoly& operator*=(const Int& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    /// Multiply by q^k.
    IntPoly shifted(int k) const {
        assert(k >= 0);
        if (is_zero()) return {};
        IntPoly r;
        r.c_.assign(c_.size() + static_cast<size_t>(k), Int(0));
        std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
        return r;
    }

    Int eval(const Int& x) const {
        Int acc{0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Int at_one() const {
        Int s{0};
        for (const auto& v : c_) s += v;
        return s;
    }

    Int at_minus_one() const { return eval(Int(-1)); }

    bool has_nonnegative_coeffs() const {
        return std::all_of(c_.begin(), c_.end(), [](const Int& v) { return v >= 0; });
    }

    /// Long division; requires the divisor's leading coefficient to divide
    /// exactly at every step (all divisors in this library are +-1-monic).
    /// Returns {quotient, remainder}.
    std::pair<IntPoly, IntPoly> divmod(const IntPoly& den) const {
        if (den.is_zero()) throw ZeroPolynomial("division by zero polynomial");
        IntPoly rem = *this;
        IntPoly quo;
        const int dd = den.degree();
        const Int& lead = den.c_.back();
        if (rem.degree() >= dd) quo.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, Int(0));
        while (rem.degree() >= dd) {
            Int q;
            Int r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.c_.back().get_mpz_t(), lead.get_mpz_t());
            if (r != 0) break;  // non-exact step: leave the tail in the remainder
            int shift = rem.degree() - dd;
            quo.c_[static_cast<size_t>(shift)] = q;
            for (int i = 0; i <= dd; ++i) rem.c_[static_cast<size_t>(shift + i)] -= q * den.c_[static_cast<size_t>(i)];
            rem.trim();
        }
        quo.trim();
        return {std::move(quo), std::move(rem)};
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Int a = c_[i] > 0 ? c_[i] : Int(-c_[i]);
            if (!s.empty())
                s += (c_[i] > 0) ? " + " : " - ";
            else if (c_[i] < 0)
                s += "-";
            if (i == 0 || a != 1) s += a.get_str();
            if (i >= 1) {
                s += "q";
                if (i >= 2) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

/// Exact-division failure; carries the nonzero remainder as a witness.
struct NonPolynomialQuotient : std::runtime_error {
    NonPolynomialQuotient(std::string msg, IntPoly rem)
        : std::runtime_error(std::move(msg)), remainder(std::move(rem)) {}
    IntPoly remainder;
};

/// Two-route computations that disagree carry both values.
struct FormulaMismatch : std::runtime_error {
    FormulaMismatch(std::string msg, IntPoly lhs_, IntPoly rhs_)
        : std::runtime_error(std::move(msg)), lhs(std::move(lhs_)), rhs(std::move(rhs_)) {}
    IntPoly lhs, rhs;
};

inline IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    auto [q, r] = num.divmod(den);
    if (!r.is_zero()) throw NonPolynomialQuotient("exact division left a remainder", std::move(r));
    return std::move(q);
}

/// num / s coefficient-wise; throws if any coefficient is not divisible.
inline IntPoly exact_div_scalar(const IntPoly& num, const Int& s) {
    if (s == 0) throw ZeroPolynomial("scalar division by zero");
    std::vector<Int> out(num.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.coeffs()[i].get_mpz_t(), s.get_mpz_t());
        if (r != 0)
            throw InternalDivisionFailure("coefficient " + std::to_string(i) + " not divisible by " + s.get_str());
        out[i] = std::move(q);
    }
    return IntPoly(std::move(out));
}

}  // namespace csieve
