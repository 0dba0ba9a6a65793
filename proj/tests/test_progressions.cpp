#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "primelab/characters.hpp"
#include "primelab/errors.hpp"
#include "primelab/progressions.hpp"
#include "primelab/sieve.hpp"
#include "support.hpp"

using namespace primelab;

TEST_CASE("character tables") {
    const CharacterTable mod4(4);
    CHECK(mod4.size() == 2);
    const auto chi4 = mod4.character(1);
    CHECK(chi4.is_real());
    CHECK_FALSE(chi4.is_principal());
    CHECK(chi4.real_value(3) == -1);
    CHECK(chi4.real_value(2) == 0);
    CHECK(CharacterTable(3).character(1).real_value(2) == -1);
    const CharacterTable mod1(1);
    CHECK(mod1.size() == 1);
    for (std::uint64_t n = 0; n < 20; ++n) CHECK(mod1.principal()(n) == std::complex<double>(1.0, 0.0));
    CHECK_THROWS_AS(CharacterTable(0), RangeError);
    CHECK_THROWS_AS(CharacterTable(100'001), RangeError);
    CHECK(CharacterTable(100'000).size() == 40'000);

    const CharacterTable mod7(7);
    std::size_t complex = 0;
    for (const auto& chi : mod7.all()) complex += chi.kind() == CharacterKind::Complex;
    CHECK(complex == 4);
    CHECK_THROWS_AS(mod7.character(1).real_value(3), ArgumentError);
}

TEST_CASE("character values are periodic, completely multiplicative and vanish off reduced residues") {
    for (std::uint64_t q : {8, 9, 12, 15, 16, 32, 45, 63, 64, 100, 243, 720}) {
        const CharacterTable table(q);
        std::uint64_t phi = 0;
        for (std::uint64_t n = 1; n <= q; ++n) phi += std::gcd(n, q) == 1;
        REQUIRE(table.size() == phi);
        for (const auto& chi : table.all())
            for (std::uint64_t m = 0; m < q; ++m) {
                REQUIRE(chi.exponent(m).has_value() == (std::gcd(m, q) == 1));
                REQUIRE(chi.exponent(m + q) == chi.exponent(m));
                for (std::uint64_t n = 0; n < q; n += 7) {
                    const auto em = chi.exponent(m), en = chi.exponent(n), emn = chi.exponent(m * n);
                    if (em && en)
                        REQUIRE(*emn == (*em + *en) % chi.lambda());
                    else
                        REQUIRE_FALSE(emn.has_value());
                }
            }
    }
}

TEST_CASE("root of unity sums") {
    CHECK(root_of_unity_sum_is_zero(std::vector<std::int64_t>{1, 1, 1}));
    CHECK(root_of_unity_sum_is_zero(std::vector<std::int64_t>{1, 1}));
    CHECK_FALSE(root_of_unity_sum_is_zero(std::vector<std::int64_t>{2, 1, 1}));
    // 1 + z^2 + z^4 + z^3 on 6th roots: (1 + z^2 + z^4) + z^3 = -1, not zero.
    CHECK_FALSE(root_of_unity_sum_is_zero(std::vector<std::int64_t>{1, 0, 1, 1, 1, 0}));
    // Sum of primitive 30th roots is mu(30) = -1, so adding 1 gives zero.
    std::vector<std::int64_t> c(30, 0);
    for (int e = 0; e < 30; ++e) c[e] = std::gcd(e, 30) == 1;
    c[0] += 1;
    CHECK(root_of_unity_sum_is_zero(c));
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    // X^n - 1 = prod_{d | n} Phi_d, so each Phi_n is one exact long division away.
    std::vector<std::vector<std::int64_t>> phi(121);
    for (std::uint64_t n = 1; n <= 120; ++n) {
        std::vector<std::int64_t> divisor{1};
        for (std::uint64_t d = 1; d < n; ++d) {
            if (n % d) continue;
            std::vector<std::int64_t> next(divisor.size() + phi[d].size() - 1, 0);
            for (std::size_t i = 0; i < divisor.size(); ++i)
                for (std::size_t j = 0; j < phi[d].size(); ++j) next[i + j] += divisor[i] * phi[d][j];
            divisor = std::move(next);
        }
        std::vector<std::int64_t> rem(n + 1, 0);
        rem[0] = -1;
        rem[n] = 1;
        const std::size_t deg = n + 1 - divisor.size();
        std::vector<std::int64_t> quo(deg + 1, 0);
        for (std::size_t k = deg + 1; k-- > 0;) {
            quo[k] = rem[k + divisor.size() - 1];
            for (std::size_t j = 0; j < divisor.size(); ++j) rem[k + j] -= quo[k] * divisor[j];
        }
        REQUIRE(std::all_of(rem.begin(), rem.end(), [](std::int64_t c) { return c == 0; }));
        phi[n] = quo;
        REQUIRE(cyclotomic_polynomial(n) == quo);
    }
    CHECK(cyclotomic_polynomial(105)[7] == -2);
}

TEST_CASE("property: orthogonality is exact for every q <= 500") {
    for (std::uint64_t q = 1; q <= 500; ++q) {
        const CharacterTable table(q);
        const auto chars = table.all();
        const auto lambda = table.lambda();
        std::vector<std::int64_t> counts(lambda);
        for (const auto& chi : chars) {
            std::fill(counts.begin(), counts.end(), 0);
            std::complex<double> numeric = 0.0;
            for (std::uint64_t n = 0; n < q; ++n)
                if (auto e = chi.exponent(n)) {
                    ++counts[*e];
                    numeric += chi(n);
                }
            REQUIRE(root_of_unity_sum_is_zero(counts) == !chi.is_principal());
            if (!chi.is_principal()) REQUIRE(std::abs(numeric) <= 1e-10 * double(q));
        }
        for (std::uint64_t n = 2; n < q; ++n) {
            if (std::gcd(n, q) != 1) continue;
            std::fill(counts.begin(), counts.end(), 0);
            for (const auto& chi : chars) ++counts[*chi.exponent(n)];
            REQUIRE(root_of_unity_sum_is_zero(counts));
        }
    }
}

TEST_CASE("pi_ap") {
    CHECK(pi_ap(100, 4, 1) == 11);
    CHECK(pi_ap(100, 4, 3) == 13);
    CHECK(pi_ap(10, 2, 1) == 3);
    CHECK(pi_ap(100, 4, -1) == 13);
    CHECK_THROWS_AS(pi_ap(100, 4, 2), ArgumentError);
}

TEST_CASE("property: class counts partition pi(x)") {
    const std::uint64_t x = 1'000'000;
    const auto pi = prime_count(x);
    for (std::uint64_t q : {1, 2, 3, 10, 12, 30, 97, 100}) {
        std::uint64_t total = 0;
        for (std::uint64_t a = 0; a < q; ++a)
            if (std::gcd(a, q) == 1) total += pi_ap(x, q, static_cast<std::int64_t>(a));
        for (std::uint64_t p = 2; p <= q; ++p)
            if (q % p == 0 && is_prime(p)) ++total;
        CHECK(total == pi);
    }
}

TEST_CASE("property: primes mod 10 are balanced at 10^7") {
    std::vector<double> c;
    for (std::int64_t a : {1, 3, 7, 9}) c.push_back(double(pi_ap(10'000'000, 10, a)));
    const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
    CHECK(*hi / *lo <= 1.1);
    CHECK(*lo / *hi >= 0.9);
}

TEST_CASE("equidistribution mod 101") {
    const auto s100 = equidist_stats(101, 100);
    CHECK(s100.min_count == 87);
    CHECK(s100.max_count == 109);
    CHECK(s100.classes.size() == 100);
    std::uint64_t total = 0;
    for (const auto& c : s100.classes) total += c.count;
    CHECK(total == 100 * 100);
    CHECK(is_prime(s100.x_reached));
    const auto s1000 = equidist_stats(101, 1000);
    CHECK(s1000.min_count == 968);
    CHECK(s1000.max_count == 1030);
    CHECK_THROWS_AS(equidist_stats(10'001, 10), RangeError);
    SieveConfig tight;
    tight.max_limit = 10'000;
    CHECK_THROWS_AS(equidist_stats(101, 100, tight), ResourceError);
}

TEST_CASE("l_one") {
    const auto chi4 = CharacterTable(4).character(1);
    double alternating = 0.0;
    for (long k = 10'000'000 / 2; k >= 0; --k) alternating += (k % 2 ? -1.0 : 1.0) / double(2 * k + 1);
    const auto v4 = l_one(chi4, 10'000'000);
    CHECK(std::abs(v4.value.real() - alternating) <= v4.tail_bound);
    CHECK(std::abs(v4.value.real() - std::numbers::pi / 4) <= 1e-4);
    const auto v3 = l_one(CharacterTable(3).character(1), 10'000'000);
    CHECK(std::abs(v3.value.real() - std::numbers::pi / std::sqrt(27.0)) <= v3.tail_bound);
    CHECK(std::abs(v3.value.real() - 0.604600) <= 1e-6);
    CHECK_THROWS_AS(l_one(CharacterTable(5).principal(), 100), ArgumentError);
    CHECK_THROWS_AS(l_one(chi4, 3), RangeError);
}

TEST_CASE("property: L(1, chi) > 0 for real characters with q <= 100") {
    for (std::uint64_t q = 3; q <= 100; ++q) {
        const CharacterTable table(q);
        for (auto i : table.real_indices()) {
            const auto chi = table.character(i);
            if (chi.is_principal()) continue;
            const auto v = l_one(chi, 1000 * q);
            REQUIRE(v.value.real() - v.tail_bound > 0.0);
        }
    }
}

TEST_CASE("mu_chi_mean") {
    const double bound = testing::frozen_constants()["mu_chi_mean_bound"];
    CHECK(std::abs(mu_chi_mean(CharacterTable(1).principal(), 1'000'000)) <= 1e-3);
    CHECK(std::abs(mu_chi_mean(CharacterTable(4).character(1), 1'000'000)) <= bound);
    const auto chi = CharacterTable(7).character(1);
    CHECK(std::abs(mu_chi_mean(chi, 1) - chi(1)) == 0.0);
}

TEST_CASE("least primes in progressions") {
    CHECK(least_prime_ap(3, 2).p == 2);
    CHECK(least_prime_ap(4, 1).p == 5);
    CHECK(least_prime_ap(101, 2).p == 2);
    CHECK(least_prime_ap(101, 103).p == 2);
    const auto l = least_prime_ap(101, 1);
    CHECK(l.p == 607);
    REQUIRE(l.linnik_exponent.has_value());
    CHECK(*l.linnik_exponent == doctest::Approx(std::log(607.0) / std::log(101.0)));
    CHECK_FALSE(least_prime_ap(2, 1).linnik_exponent.has_value());
    CHECK_THROWS_AS(least_prime_ap(10, 5), ArgumentError);
    SieveConfig tight;
    tight.max_limit = 1000;
    CHECK_THROWS_AS(least_prime_ap(997, 996, tight), ResourceError);
    const auto sweep = least_prime_sweep(7);
    REQUIRE(sweep.size() == 6);
    CHECK(sweep[0].p == 29);
}

TEST_CASE("property: Linnik exponent stays below 6 for q <= 1000") {
    double worst = 0.0;
    for (std::uint64_t q = 3; q <= 1000; ++q)
        for (const auto& l : least_prime_sweep(q)) {
            REQUIRE(l.linnik_exponent.has_value());
            worst = std::max(worst, *l.linnik_exponent);
        }
    CHECK(worst <= 6.0);
}

TEST_CASE("progression CSV") {
    const std::vector<ProgressionRow> rows{{7, 1, "29"}, {7, 2, "2"}};
    CHECK(progression_csv(rows) == "q,a,value\n7,1,29\n7,2,2\n");
}
