#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "primelab/counting.hpp"
#include "primelab/errors.hpp"
#include "primelab/sieve.hpp"
#include "primelab/zeta.hpp"
#include "support.hpp"

using namespace primelab;

namespace {

const ZeroTable& zeros_10k() {
    static const ZeroTable t = load_zeros(PRIMELAB_DATA_DIR "/zeta_zeros_10k.txt");
    return t;
}

}  // namespace

TEST_CASE("zeta_eval") {
    const auto z2 = zeta_eval({2.0, 0.0}, 1'000'000);
    CHECK(std::abs(z2.value - std::numbers::pi * std::numbers::pi / 6) <= 1e-5);
    CHECK(std::abs(z2.value - std::numbers::pi * std::numbers::pi / 6) <= z2.tail_bound);
    CHECK(std::abs(zeta_eval({1.5, 0.0}, 1'000'000).value - 2.612375348685488) <= 1e-3);
    const auto coarse = zeta_eval({1.5, 3.0}, 100'000);
    const auto fine = zeta_eval({1.5, 3.0}, 1'000'000);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.tail_bound);
    CHECK_THROWS_AS(zeta_eval({1.0, 0.0}, 1000), DomainError);
    CHECK_THROWS_AS(zeta_eval({2.0, 0.0}, 5), RangeError);
}

TEST_CASE("zeta derivative and log derivative") {
    // zeta'(2), from the closed form pi^2/6 (gamma + log 2pi - 12 log A).
    const double zp2 = -0.9375482543158437;
    const auto d = zeta_derivative_eval({2.0, 0.0}, 1'000'000);
    CHECK(std::abs(d.value.real() - zp2) <= d.tail_bound);
    const auto ld = log_deriv_eval({2.0, 0.0}, 1'000'000);
    CHECK(std::abs(ld.value.real() - 0.5700) <= 1e-3);
    const auto q4 = -zeta_derivative_eval({4.0, 0.0}, 1'000'000).value / zeta_eval({4.0, 0.0}, 1'000'000).value;
    CHECK(std::abs(log_deriv_eval({4.0, 0.0}, 1'000'000).value - q4) <= 1e-6);
}

TEST_CASE("property: log derivative equals the quotient within tail bounds") {
    for (double sigma : {1.5, 2.0, 3.0})
        for (double t : {0.0, 1.0, 10.0}) {
            const ComplexPoint s{sigma, t};
            const auto z = zeta_eval(s, 1'000'000);
            const auto zp = zeta_derivative_eval(s, 1'000'000);
            const auto ld = log_deriv_eval(s, 1'000'000);
            const double quotient_err = (zp.tail_bound + std::abs(zp.value / z.value) * z.tail_bound) /
                                        (std::abs(z.value) - z.tail_bound);
            CHECK(std::abs(ld.value + zp.value / z.value) <= ld.tail_bound + quotient_err);
        }
}

TEST_CASE("euler_product_check") {
    CHECK(euler_product_check({2.0, 0.0}, 100'000).gap <= 1e-3);
    CHECK(euler_product_check({2.0, 0.0}, 10).gap > euler_product_check({2.0, 0.0}, 100'000).gap);
    CHECK(euler_product_check({3.0, 0.0}, 10'000).gap <= 1e-6);
    CHECK_THROWS_AS(euler_product_check({1.1, 0.0}, 1000), DomainError);
}

TEST_CASE("property: Euler product matches the series on the grid") {
    for (double sigma : {1.5, 2.0, 3.0})
        for (double t : {0.0, 1.0, 10.0}) {
            const auto r = euler_product_check({sigma, t}, 100'000);
            // Product tail: sum_{p > P} p^{-sigma} < P^{1-sigma}/((sigma-1) log P), times |product|.
            const double P = 100'000.0;
            const double product_tail =
                std::abs(r.product) * std::expm1(std::pow(P, 1 - sigma) / ((sigma - 1) * std::log(P)));
            CHECK(r.gap <= r.tail_bound + product_tail);
        }
}

TEST_CASE("perron_indicator") {
    CHECK(std::abs(perron_indicator(2.0, 1.5, 200.0).value - 1.0) <= 0.01);
    CHECK(std::abs(perron_indicator(0.5, 1.5, 200.0).value) <= 0.01);
    const auto half = perron_indicator(1.0, 1.0, 1000.0);
    CHECK(half.indicator == 0.5);
    CHECK(std::abs(half.value - 0.5) <= 0.01);
    // At z = 1 the integral is (1/pi) arctan(T/sigma).
    CHECK(half.value == doctest::Approx(std::atan(1000.0) / std::numbers::pi).epsilon(1e-9));
    CHECK_THROWS_AS(perron_indicator(-1.0, 1.5, 200.0), DomainError);
    CHECK_THROWS_AS(perron_indicator(2.0, 0.0, 200.0), DomainError);
}

TEST_CASE("property: Perron error shrinks from T=100 to T=400") {
    for (double sigma : {1.0, 1.5})
        for (double z : {0.5, 2.0, 10.0}) {
            const auto a = perron_indicator(z, sigma, 100.0);
            const auto b = perron_indicator(z, sigma, 400.0);
            CHECK(std::abs(b.value - b.indicator) <= std::abs(a.value - a.indicator));
        }
}

TEST_CASE("zero tables") {
    const auto first = load_zeros(PRIMELAB_DATA_DIR "/zeta_zeros_100.txt");
    CHECK(first.size() == 100);
    CHECK(first.ordinates()[0] == doctest::Approx(14.134725142).epsilon(1e-10));
    CHECK(zeros_10k().size() == 10'000);
    CHECK(zeros_10k().prefix(100).ordinates()[99] == first.ordinates()[99]);

    std::istringstream empty("");
    CHECK(parse_zeros(empty).empty());
    std::istringstream descending("21.022\n14.1347\n");
    CHECK_THROWS_AS(parse_zeros(descending), FormatError);
    std::istringstream garbage("14.1347\nabc\n");
    try {
        parse_zeros(garbage);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), ArgumentError);
}

TEST_CASE("explicit_psi") {
    const auto& z = zeros_10k();
    const double tol = testing::frozen_constants()["explicit_psi_tolerance_x100"];
    const auto r100 = explicit_psi(100.0, z.prefix(100));
    CHECK(r100.truth == doctest::Approx(count_snapshot(100).psi_star));
    CHECK(std::abs(r100.error) <= tol);
    CHECK(std::abs(r100.error) < std::abs(explicit_psi(100.0, z.prefix(10)).error));
    const auto r4 = explicit_psi(1e4, z);
    CHECK(std::abs(r4.error) / 1e4 <= 0.05);
    CHECK(explicit_psi(1e3, z, 100.0).zeros_used == 29);
    CHECK_THROWS_AS(explicit_psi(100.0, ZeroTable{}), ArgumentError);
    CHECK_THROWS_AS(explicit_psi(100.0, z.prefix(10), 1000.0), ArgumentError);
}

TEST_CASE("property: explicit formula error at 10^3 shrinks with more zeros") {
    const auto& z = zeros_10k();
    double last = INFINITY;
    for (std::size_t count : {100, 1000, 10'000}) {
        const double err = std::abs(explicit_psi(1000.0, z.prefix(count)).error);
        CHECK(err <= 1.1 * last);
        last = err;
    }
}

TEST_CASE("goldbach_check") {
    CHECK(goldbach_check(10).direct == 3);
    CHECK(goldbach_check(10).circle == 3);
    CHECK(goldbach_check(4).direct == 1);
    const auto big = goldbach_check(10'000);
    CHECK(big.direct == big.circle);
    std::uint64_t pairs = 0;
    const auto primes = testing::trial_primes(10'000);
    for (auto p : primes)
        if (std::binary_search(primes.begin(), primes.end(), 10'000 - p)) ++pairs;
    CHECK(big.direct == pairs);
    CHECK_THROWS_AS(goldbach_check(11), ArgumentError);
    CHECK_THROWS_AS(goldbach_check(2), ArgumentError);
}

TEST_CASE("property: Goldbach identity for every even n up to 10^4") {
    for (std::uint64_t n = 4; n <= 10'000; n += 2) {
        const auto r = goldbach_check(n);
        REQUIRE(r.direct == r.circle);
    }
}

TEST_CASE("prh_bound_check") {
    const auto k1 = prh_bound_check(1, {1.5, 0.0}, 1'000'000);
    CHECK(k1.pole_part == std::complex<double>(-4.0, 0.0));
    CHECK(std::isfinite(std::abs(k1.series_part)));
    const auto k2 = prh_bound_check(2, {1.5, 7.0}, 1'000'000);
    CHECK(std::isfinite(k2.ratio));
    CHECK(k2.budget == doctest::Approx(2.0 * 4.0 * 8.0));
    CHECK_THROWS_AS(prh_bound_check(2, {1.5, 10.0}, 1'000'000), RangeError);
    const auto k3 = prh_bound_check(3, {1.5, 10.0}, 1'000'000);
    CHECK(std::isfinite(k3.magnitude));
    CHECK(k3.budget == doctest::Approx(6.0 * 8.0 * 11.0));
    CHECK_THROWS_AS(prh_bound_check(1, {2.0, 0.0}, 1000), RangeError);
    const auto a = prh_bound_check(1, {1.2, 0.0}, 100'000);
    const auto b = prh_bound_check(1, {1.2, 0.0}, 1'000'000);
    CHECK(std::abs(a.magnitude - b.magnitude) <= a.tail_bound + b.tail_bound);
    CHECK_THROWS_AS(prh_bound_check(1, {1.0, 0.0}, 1000), DomainError);
}
