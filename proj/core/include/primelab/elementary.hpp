#pragma once

// Chebyshev-Erdos binomial machinery, factorial valuations, the
// lcm/factorial-Moebius identity and its truncation, and the Selberg-type
// functional equations evaluated numerically.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "primelab/sieve.hpp"

namespace primelab {

struct BinomialReport {
    std::uint64_t n = 0;
    double central_log = 0.0;              // log C(2n, n)
    double prime_block_log = 0.0;          // sum of log p over n < p <= 2n
    std::uint64_t max_prime_power = 0;     // max p^{e_p} over p | C(2n, n)
};

/// Checks prod_{n<p<=2n} p <= C(2n,n) <= 4^n and p^{e_p} <= 2n (throws
/// InvariantViolation if either fails). 1 <= n <= 10^7.
BinomialReport binom_prime_bounds(std::uint64_t n, const SieveConfig& cfg = default_config());

/// e_p = sum_k floor(2n/p^k) - 2 floor(n/p^k), the exponent of p in C(2n, n).
unsigned kummer_exponent(std::uint64_t p, std::uint64_t n);

/// Exponent of p in N!: floor(N/p) + floor(N/p^2) + ...
std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t N);

struct LcmIdentityReport {
    std::uint64_t x = 0;
    double lhs_log = 0.0;  // sum over p^e <= x of log p, i.e. log lcm(1..x)
    double rhs_log = 0.0;  // sum_{n<=x} mu(n) log floor(x/n)!
    /// Exact big-integer comparison of both products; set only for x <= 200.
    std::optional<bool> exact_match;
};

inline constexpr std::uint64_t kExactIdentityLimit = 200;

/// 2 <= x <= 10^6.
LcmIdentityReport lcm_identity_check(std::uint64_t x, const SieveConfig& cfg = default_config());

struct PrimeExponent {
    std::uint64_t prime;
    std::int64_t exponent;
};

struct TruncatedIdentity {
    std::uint64_t x = 0;
    std::uint64_t N = 0;
    double log_value = 0.0;  // log of prod_{n<=N} floor(x/n)!^{mu(n)}
    std::vector<PrimeExponent> exponents;
};

/// The product over n <= N only. Requires x > N^2 (PreconditionError) and
/// every queried prime > sqrt(x) (ArgumentError).
TruncatedIdentity truncated_identity(std::uint64_t x, std::uint64_t N, std::span<const std::uint64_t> query_primes,
                                     const SieveConfig& cfg = default_config());

struct LogFactorialEstimate {
    std::uint64_t N = 0;
    double exact = 0.0;     // log N!
    double estimate = 0.0;  // N(log N - 1) + 1
};

/// Throws InvariantViolation if |exact - estimate| > log N.
LogFactorialEstimate log_factorial_estimate(std::uint64_t N);

/// Least prime p with n < p < 2n (n >= 2).
std::uint64_t bertrand_check(std::uint64_t n, const SieveConfig& cfg = default_config());

struct EratosthenesBound {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t rough_count = 0;  // #{n <= x : no prime p <= y divides n}, counting n = 1
    double bound = 0.0;             // x prod_{p<=y}(1 - 1/p) + 2^{pi(y)-1}
    std::uint64_t primes_above_y = 0;  // pi(x) - pi(y)
};

/// 2 <= y <= x and pi(y) <= 40. Throws InvariantViolation if the sandwich fails.
EratosthenesBound eratosthenes_bound(std::uint64_t x, std::uint64_t y, const SieveConfig& cfg = default_config());

/// (log x * theta(x) + sum_{pq<=x} log p log q - 2x log x) / x over ordered
/// prime pairs. 10 <= x <= 10^7.
double selberg_error(std::uint64_t x, const SieveConfig& cfg = default_config());

enum class FunctionalKind { ThetaError, Mertens };

/// (G(x) log x + sum_{p<=x} G(x/p) log p) / x with G = theta(t) - t or G = M.
/// 10 <= x <= 10^7.
double functional_error(std::uint64_t x, FunctionalKind which, const SieveConfig& cfg = default_config());

}  // namespace primelab
