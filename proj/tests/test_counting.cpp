#include <doctest.h>

#include <cmath>
#include <random>

#include "primelab/counting.hpp"
#include "primelab/errors.hpp"
#include "primelab/sieve.hpp"
#include "support.hpp"

using namespace primelab;

TEST_CASE("count_snapshot against direct sums") {
    CHECK(count_snapshot(1000).pi == 168);
    const auto s = count_snapshot(100);
    double theta = 0.0, psi = 0.0;
    for (auto p : testing::trial_primes(100)) {
        theta += std::log(double(p));
        for (std::uint64_t q = p; q <= 100; q *= p) psi += std::log(double(p));
    }
    CHECK(s.theta == doctest::Approx(theta).epsilon(1e-12));
    CHECK(s.psi == doctest::Approx(psi).epsilon(1e-12));
    CHECK(std::abs(s.theta - 83.728390) <= 1e-6);
    CHECK(std::abs(s.psi - 94.045311) <= 1e-6);
    CHECK(count_snapshot(10).mertens == -1);
    // 97 is prime, so psi*(97) sheds half of log 97.
    const auto at97 = count_snapshot(97);
    CHECK(at97.psi_star == doctest::Approx(at97.psi - std::log(97.0) / 2));
    CHECK(count_snapshot(98).psi_star == count_snapshot(98).psi);
}

TEST_CASE("count_snapshots preserve input order") {
    const std::vector<std::uint64_t> xs{1000, 10, 100};
    const auto v = count_snapshots(xs);
    REQUIRE(v.size() == 3);
    CHECK(v[0].pi == 168);
    CHECK(v[1].pi == 4);
    CHECK(v[2].pi == 25);
    CHECK(v[2].mertens == count_snapshot(100).mertens);
}

TEST_CASE("li against high-precision values") {
    // mpmath.li at 50 digits.
    CHECK(li(2.0) == doctest::Approx(1.0451637801174929).epsilon(1e-12));
    CHECK(li(10.0) == doctest::Approx(6.1655995047872976).epsilon(1e-12));
    CHECK(li(1000.0) == doctest::Approx(177.60965799015221).epsilon(1e-12));
    CHECK(li(1e6) == doctest::Approx(78627.549159462185).epsilon(1e-12));
    CHECK(std::llround(li(1e6)) - 78498 == 130);
    CHECK(std::llround(li(1e3)) - 168 == 10);
    CHECK_THROWS_AS(li(1.5), DomainError);
}

TEST_CASE("legendre_approx") {
    CHECK(std::abs(legendre_error(1'000'000, 78501) - 42.2) <= 0.1);
    CHECK(std::abs(legendre_error(500'000, 41556) + 23.3) <= 0.1);
    CHECK(legendre_approx(1000.0, 0.0) == doctest::Approx(1000.0 / std::log(1000.0)));
    CHECK_THROWS_AS(legendre_approx(2.0, 1.0), DomainError);
}

TEST_CASE("mertens_logsum") {
    const double ten = std::log(2.0) / 2 + std::log(3.0) / 3 + std::log(5.0) / 5 + std::log(7.0) / 7;
    CHECK(mertens_logsum(10) == doctest::Approx(ten).epsilon(1e-14));
    CHECK(std::abs(mertens_logsum(10) - 1.3127) <= 1e-4);
    CHECK(mertens_logsum(2) == doctest::Approx(std::log(2.0) / 2));
    CHECK(std::abs(mertens_logsum(1'000'000) - std::log(1e6)) <= 2.0);
}

TEST_CASE("property: Mertens estimate on log-uniform N") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(std::log(2.0), std::log(1e7));
    for (int i = 0; i < 40; ++i) {
        const auto N = static_cast<std::uint64_t>(std::exp(u(rng)));
        REQUIRE(std::abs(mertens_logsum(N) - std::log(double(N))) <= 2.0);
    }
}

TEST_CASE("comparison_table") {
    CHECK(comparison_table(std::vector<std::uint64_t>{}).empty());
    const auto row = comparison_table(std::vector<std::uint64_t>{1'000'000}).front();
    CHECK(row.pi == 78498);
    CHECK(row.li_overcount == 130);
    CHECK(std::abs(row.legendre_error - 45.2) <= 0.1);
    const auto rows = comparison_table(std::vector<std::uint64_t>{1000, 10000, 100000});
    CHECK(parse_comparison_csv(comparison_csv(rows)).size() == 3);
    CHECK(parse_comparison_csv(comparison_csv(rows))[1].li_overcount == 17);
    CHECK_THROWS_AS(parse_comparison_csv("x,pi\n1,2\n"), ParseError);
    CHECK_THROWS_AS(parse_comparison_csv("x,pi,li_overcount,legendre_error\n1,2,3\n"), ParseError);
}

TEST_CASE("property: Chebyshev band and RH-form bound at powers of ten") {
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 100; x <= 1'000'000'000; x *= 10) xs.push_back(x);
    for (const auto& s : count_snapshots(xs)) {
        const double x = double(s.x), lx = std::log(x);
        if (s.x >= 1000) {
            const double r = double(s.pi) * lx / x;
            CHECK(r > std::log(2.0));
            CHECK(r < std::log(4.0));
        }
        CHECK(std::abs(s.theta - x) <= std::sqrt(x) * lx * lx);
        if (s.x >= 1000 && s.x <= 1'000'000) CHECK(std::abs(double(s.mertens)) / x < 0.01);
    }
}
