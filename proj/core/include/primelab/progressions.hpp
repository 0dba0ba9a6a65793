#pragma once

// Primes in arithmetic progressions: class counts, equidistribution, L(1, chi),
// mean values of mu * chi and least primes in progressions.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primelab/characters.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

/// #{p <= x : p = a mod q}. gcd(a, q) must be 1.
std::uint64_t pi_ap(std::uint64_t x, std::uint64_t q, std::int64_t a, const SieveConfig& cfg = default_config());

struct ClassCount {
    std::uint64_t a;
    std::uint64_t count;
};

struct EquidistStats {
    std::uint64_t q = 0;
    std::uint64_t target_avg = 0;
    std::uint64_t x_reached = 0;  // the prime at which the total first hits target_avg * phi(q)
    std::uint64_t min_count = 0;
    std::uint64_t max_count = 0;
    std::vector<ClassCount> classes;  // reduced residues ascending
};

/// Counts primes in the reduced classes mod q (primes dividing q are not
/// counted) until the total equals target_avg * phi(q). 1 <= q <= 10^4.
EquidistStats equidist_stats(std::uint64_t q, std::uint64_t target_avg, const SieveConfig& cfg = default_config());

struct LOneValue {
    std::complex<double> value;  // sum_{n<=N} chi(n)/n
    double tail_bound = 0.0;     // q/N
};

/// chi nonprincipal, N >= q. For real chi and N >= 1000 q, throws
/// InvariantViolation unless value - tail_bound > 0.
LOneValue l_one(const DirichletCharacter& chi, std::uint64_t N);

/// (1/N) sum_{n<=N} mu(n) chi(n).
std::complex<double> mu_chi_mean(const DirichletCharacter& chi, std::uint64_t N,
                                 const SieveConfig& cfg = default_config());

struct LeastPrime {
    std::uint64_t q = 0;
    std::uint64_t a = 0;
    std::uint64_t p = 0;
    std::optional<double> linnik_exponent;  // log p / log q, for q >= 3
};

/// Least prime p = a mod q; q >= 2, gcd(a, q) = 1. ResourceError if the
/// search runs past the sieve bound.
LeastPrime least_prime_ap(std::uint64_t q, std::int64_t a, const SieveConfig& cfg = default_config());

/// least_prime_ap for every reduced a mod q, from a single scan.
std::vector<LeastPrime> least_prime_sweep(std::uint64_t q, const SieveConfig& cfg = default_config());

struct ProgressionRow {
    std::uint64_t q;
    std::uint64_t a;
    std::string value;
};

/// "q,a,value" header and one line per row.
std::string progression_csv(std::span<const ProgressionRow> rows);

}  // namespace primelab
