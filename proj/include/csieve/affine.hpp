#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "csieve/perm.hpp"

namespace csieve {

/// Element of N_{S_n}(C) in the normal form x -> d*x + r mod n, with
/// gcd(d,n) = 1.  The representative set for Z/nZ is {1..n}, with n
/// standing for 0.
struct AffineMap {
    int n = 0;
    int d = 1;  // unit mod n
    int r = 0;  // residue in [0, n)

    int apply(int x) const {
        int y = static_cast<int>((static_cast<long>(d) * x + r) % n);
        return y == 0 ? n : y;
    }

    Permutation to_permutation() const {
        std::vector<int> img(static_cast<size_t>(n));
        for (int x = 1; x <= n; ++x) img[static_cast<size_t>(x - 1)] = apply(x);
        return Permutation::from_one_line(img);
    }

    bool operator==(const AffineMap&) const = default;
};

/// Recovers (d, r) from a permutation, or nullopt if it is not affine
/// (i.e. not in the normalizer of C).
inline std::optional<AffineMap> affine_from_permutation(const Permutation& t) {
    int n = t.n();
    // t(x) = d*x + r: solve from t(n) = r and t(1) = d + r.
    int r = t.apply(n) % n;
    int d = ((t.apply(1) - r) % n + n) % n;
    if (std::gcd(d, n) != 1) return std::nullopt;
    AffineMap m{n, d, r};
    for (int x = 1; x <= n; ++x)
        if (m.apply(x) != t.apply(x)) return std::nullopt;
    return m;
}

/// All n*phi(n) elements of N_{S_n}(C); d = 1 exactly on the elements of C.
inline std::vector<AffineMap> normalizer_of_c(int n) {
    if (n < 3) throw UsageError("normalizer operations require n >= 3");
    std::vector<AffineMap> out;
    for (int d = 1; d < n; ++d) {
        if (std::gcd(d, n) != 1) continue;
        for (int r = 0; r < n; ++r) out.push_back({n, d, r});
    }
    return out;
}

struct AffineNormalForm {
    int d = 1;
    int r_prime = 0;           // smallest nonnegative residue of r mod gcd(n, d-1)
    int fixpoint_count = 0;    // gcd(n, d-1) if it divides r, else 0
    std::vector<int> fixpoints;  // fixpoints of the original map, in {1..n}
};

/// Conjugacy normal form of an affine map: x -> d*x + r', with the
/// fixpoint data of the original map.
inline AffineNormalForm affine_normal_form(const AffineMap& t) {
    int z = std::gcd(t.n, ((t.d - 1) % t.n + t.n) % t.n);
    if (z == 0) z = t.n;  // d = 1: gcd(n, 0) = n
    AffineNormalForm nf;
    nf.d = t.d;
    nf.r_prime = t.r % z;
    nf.fixpoint_count = (t.r % z == 0) ? z : 0;
    for (int x = 1; x <= t.n; ++x)
        if (t.apply(x) == x) nf.fixpoints.push_back(x);
    return nf;
}

}  // namespace csieve
