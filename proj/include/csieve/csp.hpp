#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "csieve/admissible.hpp"
#include "csieve/cosets.hpp"
#include "csieve/cyclotomic.hpp"
#include "csieve/molien.hpp"
#include "csieve/qanalog.hpp"
#include "csieve/words.hpp"

namespace csieve {

struct CSPRow {
    int b = 0;
    Int fix;
    CyclotomicInt eval;
    std::optional<Int> integer_eval;  // set when eval is a rational integer

    CSPRow(int b_, Int fix_, CyclotomicInt eval_) : b(b_), fix(std::move(fix_)), eval(std::move(eval_)) {
        if (eval.is_integer()) integer_eval = eval.integer_value();
    }

    bool matches() const { return integer_eval && *integer_eval == fix; }
};

/// Per-exponent comparison of fixed-point counts against exact polynomial
/// evaluations at roots of unity.
struct CSPReport {
    int m = 1;
    std::vector<CSPRow> rows;
    bool verdict = true;
    std::vector<int> witnesses;  // failing exponents b
};

/// The generic checker: fix(b) must equal p(zeta_m^b) for every b.
inline CSPReport check_csp(const std::function<Int(int)>& fix, int m, const IntPoly& p) {
    CSPReport rep;
    rep.m = m;
    for (int b = 0; b < m; ++b) {
        rep.rows.emplace_back(b, fix(b), eval_at_root_of_unity(p, m, b));
        if (!rep.rows.back().matches()) {
            rep.verdict = false;
            rep.witnesses.push_back(b);
        }
    }
    return rep;
}

struct BraceletCspResult {
    CSPReport report;           // (necklaces, C(alpha;q), tau_0), m = 2
    IntPoly polynomial;         // C(alpha;q)
    BraceletCounts counts;
    bool identities_hold = true;  // the two +-averaging identities
};

/// Stembridge q=-1 check for alpha-necklaces under reflection, plus the
/// bracelet-count identities.
inline BraceletCspResult check_bracelet_csp(const std::vector<int>& alpha) {
    if (composition_gcd(alpha) != 1) throw NonFreeAction("bracelet CSP needs gcd(alpha)=1");
    BraceletCspResult out{CSPReport{}, c_alpha(alpha), bracelet_orbits(alpha), true};
    Int necklaces = count_necklaces(alpha);
    Int sym = out.counts.symmetric_necklaces;
    out.report = check_csp([&](int b) { return b == 0 ? necklaces : sym; }, 2, out.polynomial);

    Int at1 = out.polynomial.at_one();
    Int atm1 = out.polynomial.at_minus_one();
    Int two{2};
    Int total, asym;
    mpz_divexact(total.get_mpz_t(), Int(at1 + atm1).get_mpz_t(), two.get_mpz_t());
    mpz_divexact(asym.get_mpz_t(), Int(at1 - atm1).get_mpz_t(), two.get_mpz_t());
    out.identities_hold = (total == out.counts.total) && (asym == out.counts.asymmetric);
    return out;
}

struct TechnicalCspResult {
    TechnicalConditions conditions;
    CSPReport report;
    IntPoly y_polynomial;
    long y_size = 0;
    int m = 1;
};

/// Sieving check for (Y = C\S_n/H, Y(q), <tau>).  The avoidance conditions
/// are reported, but the CSP is checked unconditionally so failures (when
/// conditions are violated) come out as reproducible data.
inline TechnicalCspResult check_technical_csp(const Permutation& tau, const SubgroupSpec& H,
                                              size_t budget = kDefaultCosetBudget) {
    auto shape = tau_shape(tau.cycle_type());
    if (!shape) throw BadTauShape("tau cycle type is not (m^k,1) or (m^k,1,1): " + tau.cycle_type().to_string());
    TechnicalCspResult out;
    out.m = shape->m;
    out.conditions = check_technical_conditions(tau, H);
    out.y_polynomial = y_poly(H);  // may throw NonPolynomialQuotient: no-CSP witness

    CosetSpace X(H, budget);
    DoubleCosetSpace Y(X);
    out.y_size = static_cast<long>(Y.size());

    std::vector<Int> fixes;
    Permutation pw = Permutation::identity(H.n());
    for (int b = 0; b < out.m; ++b) {
        fixes.emplace_back(Y.fix_count(pw));
        pw = tau * pw;
    }
    out.report = check_csp([&](int b) { return fixes[static_cast<size_t>(b)]; }, out.m, out.y_polynomial);
    return out;
}

/// Deterministic subgroup corpus for sweeps: Young subgroups for every
/// partition of n, the cyclic subgroup generated by one canonical
/// permutation per cycle type, and (for n = 10) the order-4 counterexample
/// subgroup.  Deduplicated by element set.
inline std::vector<SubgroupSpec> subgroup_corpus(int n, size_t budget = kDefaultElementBudget) {
    std::vector<SubgroupSpec> out;
    std::set<std::vector<Permutation>> seen;
    auto push = [&](SubgroupSpec H) {
        if (seen.insert(H.elements()).second) out.push_back(std::move(H));
    };
    for (const auto& parts : all_partitions(n)) push(SubgroupSpec::young(parts));
    for (const auto& parts : all_partitions(n)) {
        Permutation g = canonical_of_type(CycleType{parts});
        push(SubgroupSpec(n, {g}, budget));
    }
    if (n == 10) push(SubgroupSpec(10, {Permutation::from_cycles("(1 2 3 4)(5 6 7 8)(9 10)", 10)}, budget));
    return out;
}

/// All tau in N_{S_n}(C) with cycle type (m^{(n-1)/m},1) or
/// (m^{(n-2)/m},1,1) and m >= 2.
inline std::vector<AffineMap> admissible_shape_taus(int n) {
    std::vector<AffineMap> out;
    for (const auto& t : normalizer_of_c(n)) {
        auto shape = tau_shape(t.to_permutation().cycle_type());
        if (shape && shape->m >= 2) out.push_back(t);
    }
    return out;
}

}  // namespace csieve
