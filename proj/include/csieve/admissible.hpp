#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csieve/affine.hpp"
#include "csieve/perm.hpp"
#include "csieve/subgroup.hpp"

namespace csieve {

/// Shape of a normalizer element usable in the sieving theorems:
/// cycle type (m^{(n-1)/m}, 1) or (m^{(n-2)/m}, 1, 1).
struct TauShape {
    int m = 1;       // common length of the long cycles
    int k = 0;       // number of m-cycles
    int ones = 1;    // 1 or 2 fixed points
};

inline std::optional<TauShape> tau_shape(const CycleType& t) {
    int n = t.n();
    int ones = 0;
    for (auto it = t.parts.rbegin(); it != t.parts.rend() && *it == 1; ++it) ++ones;
    int k = static_cast<int>(t.parts.size()) - ones;
    if (k == 0) {
        // identity: m = 1 with n-1 "cycles" of length 1 plus a fixpoint
        if (ones == n) return TauShape{1, n - 1, 1};
        return std::nullopt;
    }
    int m = t.parts.front();
    for (int i = 0; i < k; ++i)
        if (t.parts[static_cast<size_t>(i)] != m) return std::nullopt;
    if (ones == 1 && k * m == n - 1) return TauShape{m, k, 1};
    if (ones == 2 && k * m == n - 2) return TauShape{m, k, 2};
    return std::nullopt;
}

inline CycleType repeated_type(int len, int count, std::vector<int> extra = {}) {
    std::vector<int> parts(extra);
    for (int i = 0; i < count; ++i) parts.push_back(len);
    std::sort(parts.rbegin(), parts.rend());
    return {std::move(parts)};
}

struct AdmissibilityReport {
    bool admissible = true;
    std::string violated;  // description of the first violated condition
    CycleType witness;     // the offending cycle type realized by H
};

/// C-admissibility of the pair (tau, H): H avoids (l^{n/l}) for divisors
/// l > 1 of n, avoids (m^k, 2), and avoids ((2m)^{k/2}, 2) when m is odd.
inline AdmissibilityReport check_c_admissible(const Permutation& tau, const SubgroupSpec& H) {
    auto shape = tau_shape(tau.cycle_type());
    if (!shape) throw BadTauShape("tau cycle type is not (m^k,1) or (m^k,1,1): " + tau.cycle_type().to_string());
    int n = H.n();
    int m = shape->m, k = shape->k;

    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        CycleType mu = repeated_type(l, n / l);
        if (H.realizes_type(mu)) return {false, "free-action: H realizes (l^(n/l)) with l=" + std::to_string(l), mu};
    }
    {
        CycleType mu = repeated_type(m, k, {2});
        if (mu.n() == n && H.realizes_type(mu)) return {false, "H realizes (m^k,2)", mu};
    }
    if (m % 2 == 1 && k % 2 == 0) {
        CycleType mu = repeated_type(2 * m, k / 2, {2});
        if (mu.n() == n && H.realizes_type(mu)) return {false, "H realizes ((2m)^(k/2),2), m odd", mu};
    }
    return {};
}

inline AdmissibilityReport check_c_admissible(const AffineMap& tau, const SubgroupSpec& H) {
    return check_c_admissible(tau.to_permutation(), H);
}

/// Cycle type of c^j * tau, for tau with two fixed points.  Computed by
/// direct composition; the four-case classification is what the tests
/// verify against this.
inline CycleType cycle_type_of_cj_tau(const AffineMap& tau, int j) {
    auto shape = tau_shape(tau.to_permutation().cycle_type());
    if (!shape || shape->ones != 2)
        throw BadTauShape("expected cycle type (m^k,1,1)");
    Permutation c = n_cycle(tau.n);
    Permutation g = tau.to_permutation();
    int jj = ((j % tau.n) + tau.n) % tau.n;
    for (int i = 0; i < jj; ++i) g = c * g;
    return g.cycle_type();
}

struct TechnicalConditions {
    bool hold = true;
    std::vector<std::string> violations;
    std::vector<CycleType> witnesses;
};

/// The avoidance conditions on (tau, H): free action, (4, 2^{(n-4)/2})
/// when m is even, (l^{(n-2)/l}, 2) for divisors l > 1 of m, and
/// ((2l)^{(n-2)/(2l)}, 2) for divisors l > 1 of m when m is odd.
inline TechnicalConditions check_technical_conditions(const Permutation& tau, const SubgroupSpec& H) {
    auto shape = tau_shape(tau.cycle_type());
    if (!shape) throw BadTauShape("tau cycle type is not (m^k,1) or (m^k,1,1): " + tau.cycle_type().to_string());
    int n = H.n();
    int m = shape->m;
    TechnicalConditions rep;

    auto flag = [&](const std::string& what, const CycleType& mu) {
        rep.hold = false;
        rep.violations.push_back(what + " realized as " + mu.to_string());
        rep.witnesses.push_back(mu);
    };

    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        CycleType mu = repeated_type(l, n / l);
        if (H.realizes_type(mu)) flag("(l^(n/l)), l=" + std::to_string(l), mu);
    }
    if (m % 2 == 0 && n >= 4 && (n - 4) % 2 == 0) {
        CycleType mu = repeated_type(2, (n - 4) / 2, {4});
        if (H.realizes_type(mu)) flag("(4,2^((n-4)/2)), m even", mu);
    }
    for (int l = 2; l <= m; ++l) {
        if (m % l != 0) continue;
        if ((n - 2) % l == 0) {
            CycleType mu = repeated_type(l, (n - 2) / l, {2});
            if (H.realizes_type(mu)) flag("(l^((n-2)/l),2), l=" + std::to_string(l), mu);
        }
        if (m % 2 == 1 && (n - 2) % (2 * l) == 0) {
            CycleType mu = repeated_type(2 * l, (n - 2) / (2 * l), {2});
            if (H.realizes_type(mu)) flag("((2l)^((n-2)/(2l)),2), l=" + std::to_string(l) + ", m odd", mu);
        }
    }
    return rep;
}

}  // namespace csieve
