#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "csieve/errors.hpp"
#include "csieve/intpoly.hpp"

namespace csieve {

/// Cycle type: weakly decreasing positive parts summing to n.
struct CycleType {
    std::vector<int> parts;

    int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& o) const { return parts < o.parts; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

/// Permutation of {1..n} stored in one-line notation, 0-based internally:
/// img[i] is the image of i+1, minus 1.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        Permutation p;
        p.img_.resize(static_cast<size_t>(n));
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }

    /// From one-line notation over {1..n}.
    static Permutation from_one_line(const std::vector<int>& images) {
        Permutation p;
        p.img_.reserve(images.size());
        std::vector<bool> seen(images.size(), false);
        for (int v : images) {
            if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<size_t>(v - 1)])
                throw UsageError("one-line notation is not a bijection on {1..n}");
            seen[static_cast<size_t>(v - 1)] = true;
            p.img_.push_back(v - 1);
        }
        return p;
    }

    /// Parses cycle notation like "(1 2 3 4)(5 6 7 8)(9 10)"; commas and
    /// spaces both separate entries.  Points not mentioned are fixed.
    static Permutation from_cycles(const std::string& text, int n) {
        Permutation p = identity(n);
        size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == text.size()) break;
            if (text[pos] != '(') throw UsageError("expected '(' in cycle notation: " + text);
            size_t close = text.find(')', pos);
            if (close == std::string::npos) throw UsageError("unbalanced cycle notation: " + text);
            std::string body = text.substr(pos + 1, close - pos - 1);
            for (auto& ch : body)
                if (ch == ',') ch = ' ';
            std::istringstream in(body);
            std::vector<int> cyc;
            int v;
            while (in >> v) {
                if (v < 1 || v > n) throw UsageError("cycle entry out of range: " + std::to_string(v));
                cyc.push_back(v - 1);
            }
            for (size_t i = 0; i < cyc.size(); ++i) {
                size_t to = cyc[(i + 1) % cyc.size()];
                if (p.img_[static_cast<size_t>(cyc[i])] != cyc[i])
                    throw UsageError("point repeated in cycle notation: " + std::to_string(cyc[i] + 1));
                p.img_[static_cast<size_t>(cyc[i])] = static_cast<int>(to);
            }
            pos = close + 1;
        }
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }

    /// Image of x in {1..n}.
    int apply(int x) const { return img_[static_cast<size_t>(x - 1)] + 1; }

    const std::vector<int>& raw() const { return img_; }

    std::vector<int> one_line() const {
        std::vector<int> out(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
        return out;
    }

    /// Composition: (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation r;
        r.img_.resize(a.img_.size());
        for (size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = a.img_[static_cast<size_t>(b.img_[i])];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r.img_[static_cast<size_t>(img_[i])] = static_cast<int>(i);
        return r;
    }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// Lexicographic rank among the n! one-line words (Lehmer code).
    uint64_t rank() const {
        uint64_t r = 0;
        const size_t n = img_.size();
        for (size_t i = 0; i < n; ++i) {
            int smaller = 0;
            for (size_t j = i + 1; j < n; ++j)
                if (img_[j] < img_[i]) ++smaller;
            r = r * (n - i) + static_cast<uint64_t>(smaller);
        }
        return r;
    }

    int order() const {
        CycleType t = cycle_type();
        int m = 1;
        for (int p : t.parts) m = std::lcm(m, p);
        return m;
    }

    CycleType cycle_type() const {
        std::vector<bool> seen(img_.size(), false);
        std::vector<int> parts;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = static_cast<size_t>(img_[j]);
                ++len;
            }
            parts.push_back(len);
        }
        std::sort(parts.rbegin(), parts.rend());
        return {std::move(parts)};
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<bool> seen(img_.size(), false);
        std::vector<std::vector<int>> out;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = true;
                cyc.push_back(static_cast<int>(j) + 1);
                j = static_cast<size_t>(img_[j]);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    std::string to_cycle_string() const {
        std::string s;
        for (const auto& cyc : cycles()) {
            if (cyc.size() == 1) continue;
            s += "(";
            for (size_t i = 0; i < cyc.size(); ++i) {
                if (i) s += " ";
                s += std::to_string(cyc[i]);
            }
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

private:
    std::vector<int> img_;
};

/// The n-cycle c = (1,2,...,n).
inline Permutation n_cycle(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = (i % n) + 1;
    return Permutation::from_one_line(img);
}

/// The reflection tau_0: fixes n, sends i to n-i otherwise.
inline Permutation reflection_tau0(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    img[static_cast<size_t>(n - 1)] = n;
    for (int i = 1; i < n; ++i) img[static_cast<size_t>(i - 1)] = n - i;
    return Permutation::from_one_line(img);
}

/// |Z_{S_n}(mu)| = prod_i i^{c_i} c_i!
inline Int centralizer_size(const CycleType& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts) ++mult[p];
    Int z{1};
    for (const auto& [len, count] : mult) {
        for (int i = 0; i < count; ++i) z *= len;
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(count));
        z *= f;
    }
    return z;
}

inline Int factorial(int n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/// |Conj_{S_n}(mu)| = n! / |Z(mu)|
inline Int conjugacy_class_size(const CycleType& mu) {
    Int f = factorial(mu.n());
    Int q;
    mpz_divexact(q.get_mpz_t(), f.get_mpz_t(), centralizer_size(mu).get_mpz_t());
    return q;
}

/// A canonical permutation with the given cycle type: consecutive blocks
/// cycled in order.
inline Permutation canonical_of_type(const CycleType& mu) {
    int n = mu.n();
    std::vector<int> img(static_cast<size_t>(n));
    int start = 1;
    for (int len : mu.parts) {
        for (int i = 0; i < len; ++i) img[static_cast<size_t>(start + i - 1)] = start + (i + 1) % len;
        start += len;
    }
    return Permutation::from_one_line(img);
}

}  // namespace csieve
