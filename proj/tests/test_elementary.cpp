#include <doctest.h>

#include <cmath>
#include <random>

#include "primelab/elementary.hpp"
#include "primelab/errors.hpp"
#include "primelab/sieve.hpp"
#include "support.hpp"

using namespace primelab;

namespace {

double log_central_binomial(std::uint64_t n) {
    double s = 0.0;
    for (std::uint64_t k = 1; k <= n; ++k) s += std::log(double(n + k) / double(k));
    return s;
}

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t N) {
    std::uint64_t e = 0;
    for (std::uint64_t m = 1; m <= N; ++m)
        for (std::uint64_t k = m; k % p == 0; k /= p) ++e;
    return e;
}

}  // namespace

TEST_CASE("binom_prime_bounds") {
    const auto five = binom_prime_bounds(5);
    CHECK(five.prime_block_log == doctest::Approx(std::log(7.0)));
    CHECK(five.central_log == doctest::Approx(std::log(252.0)));
    CHECK(five.max_prime_power <= 10);
    const auto one = binom_prime_bounds(1);
    CHECK(one.central_log == doctest::Approx(std::log(2.0)));
    CHECK(one.prime_block_log == doctest::Approx(std::log(2.0)));
    CHECK(binom_prime_bounds(10'000).max_prime_power <= 20'000);
    CHECK_THROWS_AS(binom_prime_bounds(0), RangeError);
}

TEST_CASE("property: central binomial chain on random n") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pick(1, 100'000);
    for (int i = 0; i < 1000; ++i) {
        const auto n = pick(rng);
        const auto r = binom_prime_bounds(n);
        REQUIRE(r.central_log == doctest::Approx(log_central_binomial(n)).epsilon(1e-9));
        REQUIRE(r.prime_block_log <= r.central_log + 1e-9);
        REQUIRE(r.central_log <= double(n) * std::log(4.0) + 1e-9);
    }
}

TEST_CASE("kummer and factorial valuations") {
    CHECK(kummer_exponent(2, 5) == 2);
    CHECK(kummer_exponent(7, 5) == 1);
    CHECK(kummer_exponent(11, 5) == 0);
    CHECK_THROWS_AS(kummer_exponent(4, 5), ArgumentError);
    CHECK(factorial_valuation(2, 10) == 8);
    CHECK(factorial_valuation(11, 10) == 0);
    CHECK(factorial_valuation(3, 9) == 4);
    CHECK_THROWS_AS(factorial_valuation(9, 10), ArgumentError);
    for (std::uint64_t p : {2, 3, 5, 13})
        for (std::uint64_t N : {1, 17, 100, 625, 1000}) CHECK(factorial_valuation(p, N) == legendre_valuation(p, N));
}

TEST_CASE("property: p^e <= 2n for every p dividing C(2n, n), n <= 10^4") {
    const auto primes = small_primes(20'000);
    for (std::uint64_t n = 1; n <= 10'000; n += 37) {
        for (std::uint64_t p : primes) {
            if (p > 2 * n) break;
            const auto e = kummer_exponent(p, n);
            REQUIRE(e == factorial_valuation(p, 2 * n) - 2 * factorial_valuation(p, n));
            std::uint64_t pe = 1;
            for (unsigned i = 0; i < e; ++i) pe *= p;
            REQUIRE(pe <= 2 * n);
        }
    }
}

TEST_CASE("lcm identity") {
    const auto ten = lcm_identity_check(10);
    CHECK(ten.lhs_log == doctest::Approx(std::log(2520.0)));
    CHECK(ten.rhs_log == doctest::Approx(std::log(2520.0)));
    REQUIRE(ten.exact_match.has_value());
    CHECK(*ten.exact_match);
    CHECK(*lcm_identity_check(2).exact_match);
    CHECK_FALSE(lcm_identity_check(201).exact_match.has_value());
    const auto big = lcm_identity_check(10'000);
    CHECK(std::abs(big.lhs_log - big.rhs_log) <= 1e-6 * big.lhs_log);
    for (std::uint64_t x = 2; x <= 200; ++x) REQUIRE(*lcm_identity_check(x).exact_match);
}

TEST_CASE("truncated identity") {
    const std::vector<std::uint64_t> q1{37, 71};
    const auto t = truncated_identity(100, 2, q1);
    for (const auto& e : t.exponents) CHECK(e.exponent == 1);
    const std::vector<std::uint64_t> q2{97};
    CHECK(truncated_identity(100, 1, q2).exponents.front().exponent == 1);
    // N = 2: 100! / 50!
    CHECK(truncated_identity(100, 2, {}).log_value ==
          doctest::Approx(std::lgamma(101.0) - std::lgamma(51.0)).epsilon(1e-12));
    CHECK_THROWS_AS(truncated_identity(100, 10, {}), PreconditionError);
    const std::vector<std::uint64_t> small{7};
    CHECK_THROWS_AS(truncated_identity(100, 2, small), ArgumentError);
}

TEST_CASE("log factorial, Bertrand, Eratosthenes") {
    const auto two = log_factorial_estimate(2);
    CHECK(two.exact == doctest::Approx(std::log(2.0)));
    CHECK(two.estimate == doctest::Approx(2 * (std::log(2.0) - 1) + 1));
    CHECK(log_factorial_estimate(10).exact == doctest::Approx(std::lgamma(11.0)));
    const auto mil = log_factorial_estimate(1'000'000);
    CHECK(std::abs(mil.exact - mil.estimate) <= std::log(1e6));

    CHECK(bertrand_check(2) == 3);
    CHECK(bertrand_check(10) == 11);
    const auto p = bertrand_check(1'000'000);
    CHECK(p > 1'000'000);
    CHECK(p < 2'000'000);
    CHECK(is_prime(p));

    const auto odd = eratosthenes_bound(100, 2);
    CHECK(odd.rough_count == 50);
    CHECK(odd.bound == doctest::Approx(51.0));
    const auto e5 = eratosthenes_bound(100, 5);
    std::uint64_t rough = 0;
    for (std::uint64_t n = 1; n <= 100; ++n) rough += n % 2 && n % 3 && n % 5;
    CHECK(e5.rough_count == rough);
    CHECK(e5.rough_count == 26);
    CHECK(e5.bound == doctest::Approx(100.0 * 4 / 15 + 4));
    const auto big = eratosthenes_bound(1'000'000, 30);
    CHECK(double(big.primes_above_y) <= big.bound);
    CHECK(double(big.rough_count) <= big.bound);
}

TEST_CASE("selberg_error against a direct double sum") {
    const std::uint64_t x = 10'000;
    const auto primes = testing::trial_primes(x);
    double theta = 0.0, pairs = 0.0;
    for (auto p : primes) {
        theta += std::log(double(p));
        for (auto q : primes) {
            if (p * q > x) break;
            pairs += std::log(double(p)) * std::log(double(q));
        }
    }
    const double lx = std::log(double(x));
    const double oracle = (theta * lx + pairs - 2 * double(x) * lx) / double(x);
    CHECK(selberg_error(x) == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(std::abs(selberg_error(x)) <= 10.0);
    CHECK(std::isfinite(selberg_error(10)));
}

TEST_CASE("functional_error against direct sums") {
    const std::uint64_t x = 10'000;
    const auto primes = testing::trial_primes(x);
    auto theta_err = [&](double t) {
        double s = 0.0;
        for (auto p : primes) {
            if (double(p) > t) break;
            s += std::log(double(p));
        }
        return s - t;
    };
    auto mertens = [&](double t) {
        long m = 0;
        for (std::uint64_t n = 1; double(n) <= t; ++n) m += testing::naive_mobius(n);
        return double(m);
    };
    const double lx = std::log(double(x));
    double th = theta_err(double(x)) * lx, me = mertens(double(x)) * lx;
    for (auto p : primes) {
        th += theta_err(double(x) / double(p)) * std::log(double(p));
        me += mertens(double(x) / double(p)) * std::log(double(p));
    }
    CHECK(functional_error(x, FunctionalKind::ThetaError) == doctest::Approx(th / double(x)).epsilon(1e-9));
    CHECK(functional_error(x, FunctionalKind::Mertens) == doctest::Approx(me / double(x)).epsilon(1e-9));
    CHECK(std::abs(functional_error(100'000, FunctionalKind::Mertens)) <= 10.0);
    CHECK(std::abs(functional_error(100'000, FunctionalKind::ThetaError)) <= 10.0);
}

TEST_CASE("property: calibrated constants hold across the grid") {
    const auto frozen = testing::frozen_constants();
    const double selberg = frozen["selberg_error_bound"];
    const double theta = frozen["functional_error_bound"]["theta"];
    const double mertens = frozen["functional_error_bound"]["mertens"];
    for (std::uint64_t x : {1000, 10'000, 100'000, 1'000'000}) {
        CHECK(std::abs(selberg_error(x)) <= selberg);
        CHECK(std::abs(functional_error(x, FunctionalKind::ThetaError)) <= theta);
        CHECK(std::abs(functional_error(x, FunctionalKind::Mertens)) <= mertens);
    }
}
