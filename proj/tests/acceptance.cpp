// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything is exact arithmetic; no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "csieve/cherednik.hpp"
#include "csieve/csp.hpp"
#include "csieve/noncrossing.hpp"

using namespace csieve;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok, double seconds) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name << "  ("
              << static_cast<long>(seconds * 1000) << " ms)" << std::endl;
    if (!ok) ++failures;
}

void run(int idx, const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cerr << "criterion " << idx << " threw: " << e.what() << std::endl;
    }
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    report(idx, name, ok, dt.count());
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            rec(rem - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

bool criterion1() {
    if (c_alpha({3, 4}) != IntPoly({1, 0, 1, 1, 1, 0, 1})) return false;
    if (count_necklaces({3, 4}) != 5) return false;
    auto b = bracelet_orbits({3, 4});
    if (b.total != 4 || b.asymmetric != 1 || b.symmetric_necklaces != 3) return false;
    auto v = eval_at_root_of_unity(y_poly(SubgroupSpec::young({3, 4})), 2, 1);
    return v.is_integer() && v.integer_value() == 3 && b.symmetric_necklaces == 3;
}

bool criterion2() {
    SubgroupSpec h(10, {Permutation::from_cycles("(1 2 3 4)(5 6 7 8)(9 10)", 10)});
    Permutation tau = Permutation::from_cycles("(2 4 10 8)(3 7 9 5)", 10);
    if (tau.cycle_type() != CycleType{{4, 4, 1, 1}}) return false;
    auto r = check_technical_csp(tau, h);
    bool flagged = false;
    for (const auto& w : r.conditions.witnesses)
        if (w == CycleType{{4, 4, 2}}) flagged = true;
    return flagged && !r.conditions.hold && !r.report.verdict;
}

bool criterion3and11_fiber = true;

bool criterion3and11() {
    bool csp_ok = true, fiber_ok = true;
    for (int n = 3; n <= 9; ++n) {
        auto taus = admissible_shape_taus(n);
        for (const auto& H : subgroup_corpus(n)) {
            std::vector<AffineMap> good;
            for (const auto& t : taus)
                if (check_technical_conditions(t.to_permutation(), H).hold) good.push_back(t);
            if (good.empty()) continue;
            CosetSpace x(H);
            DoubleCosetSpace y(x);
            IntPoly Y = y_poly(H);
            for (const auto& t : good) {
                Permutation tau = t.to_permutation();
                int m = tau_shape(tau.cycle_type())->m;
                Permutation pw = Permutation::identity(n);
                for (int b = 0; b < m; ++b) {
                    auto v = eval_at_root_of_unity(Y, m, b);
                    if (!v.is_integer() || v.integer_value() != y.fix_count(pw)) csp_ok = false;
                    pw = tau * pw;
                }
                // criterion 11: fiber sizes of the fixpoint projection; the
                // statement covers n = 1 or 2 mod m only
                if (n % m == 1 || n % m == 2) {
                    auto fp = fiber_profile(x, y, tau, m);
                    if (!fp.surjective) fiber_ok = false;
                    for (const auto& [cls, sz] : fp.fiber_sizes)
                        if (sz != fp.expected_size) fiber_ok = false;
                }
            }
        }
    }
    criterion3and11_fiber = fiber_ok;
    return csp_ok;
}

bool criterion4() {
    for (int n = 3; n <= 8; ++n) {
        for (const auto& H : subgroup_corpus(n)) {
            if (!H.c_acts_freely()) continue;
            IntPoly Y = y_poly(H);
            auto fix = fix_oracle_from_subgroup(H);
            for (int m = 2; m <= n; ++m) {
                auto pred = y_zeta_prediction(n, m, fix);
                if (pred != CycRat::from_cyclotomic_int(eval_at_root_of_unity(Y, m, 1))) return false;
            }
        }
    }
    return true;
}

bool criterion5() {
    std::vector<int> line{1, 2, 3, 4, 5};
    std::vector<Permutation> s5;
    do {
        s5.push_back(Permutation::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    for (const auto& g : s5) {
        SubgroupSpec h(5, {g});
        CosetSpace x(h);
        for (const auto& gamma : s5)
            if (!verify_fixpts_identity(x, gamma).equal()) return false;
    }
    return true;
}

bool criterion6() {
    for (int n = 3; n <= 12; ++n) {
        for (const auto& t : normalizer_of_c(n)) {
            // (a) the affine form is recovered uniquely from the permutation
            auto back = affine_from_permutation(t.to_permutation());
            if (!back || !(*back == t)) return false;
            // (c) fixpoint count formula
            auto nf = affine_normal_form(t);
            if (nf.fixpoint_count != static_cast<int>(nf.fixpoints.size())) return false;
            // (b)+(d) normal form: same cycle type, and two-fixpoint maps
            // canonically fix n and n/2
            AffineMap canon{n, t.d, nf.r_prime};
            if (canon.to_permutation().cycle_type() != t.to_permutation().cycle_type()) return false;
            auto shape = tau_shape(t.to_permutation().cycle_type());
            if (shape && shape->ones == 2 && shape->m >= 2) {
                if (affine_normal_form(canon).fixpoints != std::vector<int>{n / 2, n}) return false;
                // (e) 4 | n forces m = 2
                if (n % 4 == 0 && shape->m != 2) return false;
                // badcycles four-case table
                for (int j = 0; j < n; ++j) {
                    CycleType got = cycle_type_of_cj_tau(t, j);
                    CycleType want;
                    if (j % 2 == 0) {
                        want = t.to_permutation().cycle_type();
                    } else if (shape->m == 2) {
                        int l = got.parts[0];
                        want = repeated_type(l, n / l);
                    } else if (shape->m % 2 == 0) {
                        want = repeated_type(shape->m, shape->k, {2});
                    } else {
                        want = repeated_type(2 * shape->m, shape->k / 2, {2});
                    }
                    if (got != want) return false;
                }
            }
        }
    }
    return true;
}

bool criterion7() {
    for (int b = 2; b <= 15; ++b)
        for (int a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            for (int k = 0; k <= a; ++k) rational_q_schroder(a, b, k);  // throws on mismatch
        }
    return true;
}

bool criterion8() {
    for (int a = 2; a <= 5; ++a)
        for (const auto& lam : all_partitions(a)) {
            auto s = molchanov_series(PartitionShape(lam), 10);
            auto o = graded_multiplicity_oracle(PartitionShape(lam), 10);
            for (int tj = 0; tj <= a - 1; ++tj)
                for (int qi = 0; qi <= 10; ++qi)
                    if (s.at(qi, tj) != o.at(qi, tj)) return false;
        }
    return true;
}

bool criterion9() {
    // three-part Schroder family at full paper scale
    for (int b = 2; b <= 25; ++b)
        for (int a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            for (int k = 0; k <= a; ++k) {
                IntPoly p = rational_q_schroder(a, b, k);
                if (!is_palindromic(p) || !is_parity_unimodal(p).ok) return false;
            }
        }
    // complete composition sweep at n <= 14
    for (int n = 2; n <= 14; ++n)
        for (const auto& alpha : compositions_of(n)) {
            if (composition_gcd(alpha) != 1) continue;
            if (!is_parity_unimodal(c_alpha(alpha)).ok) return false;
        }
    return true;
}

bool criterion10() {
    for (int n = 3; n <= 9; ++n)
        for (int k = 1; k <= n; ++k) {
            if (std::gcd(n, k) != 1 || std::gcd(n, k - 1) != 1) continue;
            auto r = check_nc_secondary(n, k);
            if (!r.all_pass()) return false;
            if (n == 5 && k == 2 && r.y_polynomial != IntPoly({1, 0, 1})) return false;
        }
    return true;
}

}  // namespace

int main() {
    run(1, "worked example (3,4)", criterion1);
    run(2, "S10 counterexample reproduction", criterion2);
    run(3, "sieving theorem, exhaustive n <= 9", criterion3and11);
    run(4, "root-of-unity formula dual computation", criterion4);
    run(5, "coset fixed-point identity on S5", criterion5);
    run(6, "normalizer number theory, n <= 12", criterion6);
    run(7, "Schroder hook-product formula, a < b <= 15", criterion7);
    run(8, "bigraded series vs character oracle", criterion8);
    run(9, "palindromic + parity-unimodal sweeps", criterion9);
    run(10, "noncrossing secondary bundle, n <= 9", criterion10);
    report(11, "fixpoint fiber sizes (computed with criterion 3)", criterion3and11_fiber, 0.0);
    return failures == 0 ? 0 : 1;
}
