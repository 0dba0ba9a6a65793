#include <doctest.h>

#include <cmath>
#include <random>

#include "primelab/errors.hpp"
#include "primelab/sieve.hpp"
#include "support.hpp"

using namespace primelab;

TEST_CASE("build_table small limits") {
    const auto t = build_table(10);
    CHECK(std::vector<std::uint64_t>(t.primes().begin(), t.primes().end()) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(build_table(1000).primes().size() == 168);
    CHECK(build_table(1'000'000).primes().size() == 78498);
    CHECK_THROWS_AS(build_table(1), RangeError);
    SieveConfig tight;
    tight.max_limit = 1000;
    CHECK_THROWS_AS(build_table(1001, tight), RangeError);
}

TEST_CASE("table agrees with trial division") {
    const auto oracle = testing::trial_primes(20'000);
    const auto t = build_table(20'000);
    CHECK(std::vector<std::uint64_t>(t.primes().begin(), t.primes().end()) == oracle);
    for (std::uint64_t n = 2; n <= 20'000; ++n) {
        const auto lf = t.least_factor(n);
        REQUIRE(n % lf == 0);
        for (std::uint64_t d = 2; d < lf; ++d) REQUIRE(n % d != 0);
    }
    CHECK(t.pi(100) == 25);
    CHECK(t.is_prime(19'997));
    CHECK_FALSE(t.is_prime(19'999));
}

TEST_CASE("segment size does not change the prime list") {
    const auto reference = small_primes(10'000'000);
    for (std::size_t bytes : {std::size_t{64}, std::size_t{4096}, std::size_t{1} << 15, std::size_t{1} << 20}) {
        SieveConfig cfg;
        cfg.segment_bytes = bytes;
        const auto got = primes_between(2, 10'000'000, cfg);
        CHECK(got == reference);
    }
    SieveConfig threaded;
    threaded.threads = 4;
    CHECK(prime_count(10'000'000, threaded) == reference.size());
}

TEST_CASE("primes_between and prime_counts") {
    CHECK(primes_between(10, 30) == std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29});
    CHECK(primes_between(0, 2) == std::vector<std::uint64_t>{2});
    CHECK(primes_between(1'000'000'000, 1'000'000'100) ==
          std::vector<std::uint64_t>{1'000'000'007, 1'000'000'009, 1'000'000'021, 1'000'000'033, 1'000'000'087,
                                     1'000'000'093, 1'000'000'097});
    const std::vector<std::uint64_t> xs{100'000, 10, 1000};
    CHECK(prime_counts(xs) == std::vector<std::uint64_t>{9592, 4, 168});
}

TEST_CASE("mobius values") {
    const auto mu = mobius_range(1, 30);
    CHECK(mu[0] == 1);
    CHECK(mu[3] == 0);
    CHECK(mu[29] == -1);
    CHECK_THROWS_AS(mobius_range(10, 5), RangeError);
    CHECK_THROWS_AS(mobius_range(0, 5), RangeError);
}

TEST_CASE("property: mobius_range matches factorization on random n") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(1, 100'000'000);
    for (int i = 0; i < 10'000; ++i) {
        const auto n = pick(rng);
        const auto mu = mobius_range(n, n);
        REQUIRE(int{mu[0]} == testing::naive_mobius(n));
    }
    const auto block = mobius_range(99'990'000, 100'000'000);
    for (std::size_t i = 0; i < block.size(); ++i) REQUIRE(int{block[i]} == testing::naive_mobius(99'990'000 + i));
}

TEST_CASE("mangoldt") {
    CHECK(mangoldt(8) == doctest::Approx(std::log(2.0)));
    CHECK(mangoldt(6) == 0.0);
    CHECK(mangoldt(7) == doctest::Approx(std::log(7.0)));
    CHECK(mangoldt(1) == 0.0);
}

TEST_CASE("factorize") {
    const auto f = factorize(676'567);
    CHECK(f.to_string() == "619·1093");
    CHECK(factorize(676'589).is_prime());
    CHECK(factorize(2520).to_string() == "2^3·3^2·5·7");
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(999'999'999'989).is_prime());
    CHECK_THROWS_AS(factorize(0), RangeError);
    CHECK_THROWS_AS(factorize(default_config().max_factorize + 1), RangeError);
}

TEST_CASE("property: factorizations reconstruct n up to 10^6") {
    for (std::uint64_t n = 2; n <= 1'000'000; ++n) {
        const auto f = factorize(n);
        REQUIRE(f.product() == n);
        for (const auto& pp : f.factors) REQUIRE(is_prime(pp.prime));
    }
}

TEST_CASE("for_each_multiplicative reproduces the divisor function") {
    std::vector<std::uint64_t> tau;
    for_each_multiplicative<std::uint64_t>(
        1, 1000, [](std::uint64_t, unsigned k) { return std::uint64_t{k} + 1; },
        [&](std::uint64_t, std::uint64_t v) { tau.push_back(v); });
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::uint64_t d = 0;
        for (std::uint64_t m = 1; m <= n; ++m) d += n % m == 0;
        REQUIRE(tau[n - 1] == d);
    }
}
