#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "csieve/perm.hpp"
#include "csieve/qanalog.hpp"

using namespace csieve;

namespace {

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

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_coeff) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-max_coeff, max_coeff);
    std::vector<Int> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("q_multinomial worked values") {
    IntPoly p = q_multinomial({3, 4});
    CHECK(p.at_one() == 35);
    CHECK(p.degree() == 12);
    CHECK(p.has_nonnegative_coeffs());

    CHECK(q_multinomial({9}) == IntPoly::one());
    CHECK(q_multinomial({1, 1, 1}) == IntPoly({1, 2, 2, 1}));
}

TEST_CASE("q_multinomial matches the factorial-division oracle") {
    // [n choose alpha]_q * prod [alpha_i]!_q == [n]!_q
    for (const auto& alpha : {std::vector<int>{3, 4}, {2, 2, 3}, {1, 1, 1, 1}, {5, 1}, {2, 3, 4}}) {
        int n = std::accumulate(alpha.begin(), alpha.end(), 0);
        IntPoly lhs = q_multinomial(alpha);
        for (int a : alpha) lhs *= q_factorial(a);
        CHECK(lhs == q_factorial(n));
    }
}

TEST_CASE("c_alpha worked values") {
    CHECK(c_alpha({3, 4}) == IntPoly({1, 0, 1, 1, 1, 0, 1}));
    CHECK(c_alpha({1, 6}) == IntPoly::one());
    CHECK(c_alpha({1, 9}) == IntPoly::one());
    CHECK_THROWS_AS(c_alpha({2, 2}), NonPolynomialQuotient);
}

TEST_CASE("c_alpha value at q=1 equals the orbit-count formula") {
    for (int n = 2; n <= 12; ++n) {
        for (const auto& alpha : compositions_of(n)) {
            int g = 0;
            for (int a : alpha) g = std::gcd(g, a);
            if (g != 1) continue;
            Int expect = csieve::factorial(n);
            for (int a : alpha) {
                Int d = csieve::factorial(a);
                mpz_divexact(expect.get_mpz_t(), expect.get_mpz_t(), d.get_mpz_t());
            }
            mpz_divexact(expect.get_mpz_t(), expect.get_mpz_t(), Int(n).get_mpz_t());
            CHECK(c_alpha(alpha).at_one() == expect);
        }
    }
}

TEST_CASE("exact_div_by_q_int") {
    CHECK(exact_div_by_q_int(q_binomial(7, 3), 7) == IntPoly({1, 0, 1, 1, 1, 0, 1}));
    CHECK(exact_div_by_q_int(q_int(5), 5) == IntPoly::one());
    try {
        exact_div_by_q_int(IntPoly({1, 1}), 3);
        FAIL("expected NonPolynomialQuotient");
    } catch (const NonPolynomialQuotient& e) {
        CHECK(!e.remainder.is_zero());
    }
}

TEST_CASE("exact_div_by_q_int round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly p = random_poly(rng, 12, 9);
        int n = 1 + static_cast<int>(rng() % 8);
        IntPoly prod = p * q_int(n);
        CHECK(exact_div_by_q_int(prod, n) == p);
    }
}

TEST_CASE("eval_at_root_of_unity worked values") {
    IntPoly gauss = q_binomial(7, 3);
    CHECK(eval_at_root_of_unity(gauss, 7, 1) == CyclotomicInt::from_integer(7, 0));

    IntPoly p({1, 0, 1, 1, 1, 0, 1});
    auto v = eval_at_root_of_unity(p, 2, 1);
    REQUIRE(v.is_integer());
    CHECK(v.integer_value() == 3);

    CHECK(eval_at_root_of_unity(p, 5, 0).integer_value() == p.at_one());
}

TEST_CASE("eval_at_root_of_unity agrees with integer substitution at m=1,2") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly p = random_poly(rng, 20, 50);
        auto v1 = eval_at_root_of_unity(p, 1, 1);
        REQUIRE(v1.is_integer());
        CHECK(v1.integer_value() == p.at_one());
        auto v2 = eval_at_root_of_unity(p, 2, 1);
        REQUIRE(v2.is_integer());
        CHECK(v2.integer_value() == p.at_minus_one());
    }
}

TEST_CASE("conductor reduction consistency") {
    // zeta_m^b is a primitive (m/g)-th root of unity with g = gcd(m,b), so
    // the two evaluations represent the same number; compare when integral.
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        IntPoly p = random_poly(rng, 18, 20);
        for (int m = 2; m <= 24; ++m) {
            for (int b = 1; b < m; ++b) {
                int g = std::gcd(m, b);
                auto big = eval_at_root_of_unity(p, m, b);
                auto small = eval_at_root_of_unity(p, m / g, b / g);
                if (big.is_integer() && small.is_integer())
                    CHECK(big.integer_value() == small.integer_value());
            }
        }
    }
}

TEST_CASE("parity unimodality") {
    CHECK(is_parity_unimodal(IntPoly({1, 0, 1, 1, 1, 0, 1})).ok);
    CHECK(is_parity_unimodal(IntPoly::one()).ok);

    auto res = is_parity_unimodal(IntPoly({1, 0, 0, 0, 1}));  // evens 1,0,1
    REQUIRE_FALSE(res.ok);
    CHECK(res.i == 0);
    CHECK(res.j == 2);
    CHECK(res.k == 4);

    CHECK_THROWS_AS(is_parity_unimodal(IntPoly({1, -1})), NegativeCoefficient);
}

TEST_CASE("palindromicity") {
    CHECK(is_palindromic(IntPoly({1, 0, 1, 1, 1, 0, 1})));
    CHECK(is_palindromic(IntPoly({1, 1})));
    CHECK_FALSE(is_palindromic(IntPoly({1, 2, 0, 1})));
    CHECK_THROWS_AS(is_palindromic(IntPoly::zero()), ZeroPolynomial);
}

TEST_CASE("IntPoly canonical form and division") {
    IntPoly p({0, 0, 0});
    CHECK(p.is_zero());
    CHECK(p.degree() == -1);

    IntPoly a({1, 2, 3}), b({1, 1});
    auto [quo, rem] = (a * b).divmod(b);
    CHECK(quo == a);
    CHECK(rem.is_zero());

    CHECK_THROWS_AS(a.divmod(IntPoly::zero()), ZeroPolynomial);
}

TEST_CASE("PolyFrac reduction contract") {
    IntPoly num = q_factorial(4);
    PolyFrac f(num, q_int(4));
    CHECK(f.to_poly() == q_factorial(3) * IntPoly::one());
    PolyFrac bad(IntPoly({1, 1}), q_int(3));
    CHECK_THROWS_AS(bad.to_poly(), NonPolynomialQuotient);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic_poly(2) == IntPoly({1, 1}));
    CHECK(cyclotomic_poly(6) == IntPoly({1, -1, 1}));
    CHECK(cyclotomic_poly(12) == IntPoly({1, 0, -1, 0, 1}));
    for (int m = 1; m <= 30; ++m) CHECK(cyclotomic_poly(m).degree() == euler_phi(m));
    // product over divisors reassembles q^m - 1
    for (int m : {6, 8, 12, 15}) {
        IntPoly prod = IntPoly::one();
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) prod *= cyclotomic_poly(d);
        CHECK(prod == IntPoly::monomial(1, m) - IntPoly::one());
    }
}
