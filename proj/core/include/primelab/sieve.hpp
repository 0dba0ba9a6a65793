#pragma once

// Segmented sieve of Eratosthenes: primes, Moebius values, factorizations.
// Everything in this header is exact 64-bit integer arithmetic.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primelab/errors.hpp"

namespace primelab {

struct SieveConfig {
    /// Largest sieve limit accepted by any operation.
    std::uint64_t max_limit = 10'000'000'000ULL;
    /// Largest n accepted by factorize (trial division up to sqrt(n)).
    std::uint64_t max_factorize = 1'000'000'000'000ULL;
    /// Working-set size of one sieve segment, in bytes of flag storage.
    std::size_t segment_bytes = 256 * 1024;
    /// Worker threads for prime counting and table construction. Output is
    /// identical for every value.
    unsigned threads = 1;

    /// Defaults, with PRIMELAB_SIEVE_MAX (a decimal or 1eN literal) overriding max_limit.
    static SieveConfig from_environment();
};

/// Process-wide configuration: SieveConfig::from_environment(), read once.
const SieveConfig& default_config();

/// Throws RangeError naming `op` when n exceeds cfg.max_limit.
void check_sieve_bound(std::uint64_t n, const SieveConfig& cfg, std::string_view op);

std::uint64_t isqrt(std::uint64_t n) noexcept;

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;  // primes ascending

    /// Multiplies the factors back out (checked against overflow).
    std::uint64_t product() const;
    bool is_prime() const noexcept { return factors.size() == 1 && factors[0].exponent == 1; }
    /// "619·1093", "2^3·3^2·5·7"; empty string for n = 1.
    std::string to_string(std::string_view separator = "·") const;
};

/// Plain, unsegmented sieve of Eratosthenes over [0, limit].
std::vector<std::uint64_t> small_primes(std::uint64_t limit);

/// Immutable table of the primes up to `limit`, plus a least-prime-factor
/// table for n up to small_table_bound(). Safe to share across threads.
class PrimeTable {
public:
    static constexpr std::uint64_t kSmallTableCap = 10'000'000;

    static PrimeTable build(std::uint64_t limit, const SieveConfig& cfg = default_config());

    std::uint64_t limit() const noexcept { return limit_; }
    std::span<const std::uint64_t> primes() const noexcept { return primes_; }
    std::size_t segment_bytes() const noexcept { return segment_bytes_; }
    std::uint64_t small_table_bound() const noexcept { return least_factor_.empty() ? 1 : least_factor_.size() - 1; }

    /// Smallest prime factor of n, 2 <= n <= small_table_bound().
    std::uint64_t least_factor(std::uint64_t n) const;
    /// Number of primes <= x, for x <= limit().
    std::uint64_t pi(std::uint64_t x) const;
    bool is_prime(std::uint64_t n) const;

private:
    std::uint64_t limit_ = 0;
    std::size_t segment_bytes_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<std::uint32_t> least_factor_;
};

inline PrimeTable build_table(std::uint64_t limit, const SieveConfig& cfg = default_config()) {
    return PrimeTable::build(limit, cfg);
}

namespace detail {

/// Odd-only segmented sieve over [lo, hi]; one flag byte per odd number.
class OddSegmentSieve {
public:
    OddSegmentSieve(std::uint64_t lo, std::uint64_t hi, std::size_t segment_bytes);

    /// Sieves the next segment. Flag i stands for first + 2i; false when exhausted.
    bool next(std::uint64_t& first, std::span<const std::uint8_t>& flags);

private:
    std::uint64_t hi_;
    std::uint64_t next_odd_;
    std::size_t seg_len_;
    std::vector<std::uint64_t> base_;  // odd primes <= sqrt(hi)
    std::vector<std::uint64_t> next_multiple_;
    std::vector<std::uint8_t> flags_;
};

}  // namespace detail

/// Streams the primes in [lo, hi] in ascending batches, one batch per segment.
class PrimeStream {
public:
    PrimeStream(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg = default_config());

    /// Next nonempty batch of primes; empty once the range is exhausted.
    std::span<const std::uint64_t> next_batch();

private:
    bool emit_two_;
    detail::OddSegmentSieve sieve_;
    std::vector<std::uint64_t> batch_;
};

/// pi(x).
std::uint64_t prime_count(std::uint64_t x, const SieveConfig& cfg = default_config());
/// pi at every checkpoint, computed in one pass up to the largest. Order of `xs` is preserved.
std::vector<std::uint64_t> prime_counts(std::span<const std::uint64_t> xs,
                                        const SieveConfig& cfg = default_config());
/// Primes in [lo, hi] as one vector.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          const SieveConfig& cfg = default_config());

/// Streams mu(n) over [lo, hi] one segment at a time.
class MobiusStream {
public:
    struct Segment {
        std::uint64_t first;             // n of mu[0]
        std::span<const std::int8_t> mu;
    };

    MobiusStream(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg = default_config());
    /// Next segment; `mu` is empty once the range is exhausted.
    Segment next_segment();

private:
    std::uint64_t next_;
    std::uint64_t hi_;
    std::size_t seg_len_;
    bool done_ = false;
    std::vector<std::uint64_t> base_;
    std::vector<std::int8_t> mu_;
    std::vector<std::uint64_t> prod_;
};

/// mu(lo), ..., mu(hi).
std::vector<std::int8_t> mobius_range(std::uint64_t lo, std::uint64_t hi,
                                      const SieveConfig& cfg = default_config());

/// Lambda(n): log p when n = p^m, else 0.
double mangoldt(std::uint64_t n, const SieveConfig& cfg = default_config());

/// Trial division by primes up to sqrt(n). n = 1 gives an empty factor list.
Factorization factorize(std::uint64_t n, const SieveConfig& cfg = default_config());

/// Trial-division primality for n <= cfg.max_factorize.
bool is_prime(std::uint64_t n, const SieveConfig& cfg = default_config());

/// Evaluates a multiplicative function over [lo, hi] with a segmented
/// factorization sieve. `value_at(p, k)` gives f(p^k); `sink(n, f(n))` is
/// called for every n in ascending order. T must be constructible from 1.
template <class T, class ValueAt, class Sink>
void for_each_multiplicative(std::uint64_t lo, std::uint64_t hi, ValueAt&& value_at, Sink&& sink,
                             const SieveConfig& cfg = default_config()) {
    if (lo < 1 || lo > hi) throw RangeError("multiplicative range: need 1 <= lo <= hi");
    check_sieve_bound(hi, cfg, "multiplicative range");
    const auto base = small_primes(isqrt(hi));
    const std::size_t seg_len = std::max<std::size_t>(cfg.segment_bytes / sizeof(std::uint64_t), 1024);
    std::vector<std::uint64_t> rem(seg_len);
    std::vector<T> val(seg_len);

    for (std::uint64_t first = lo;; first += seg_len) {
        const std::uint64_t last = std::min<std::uint64_t>(hi, first + seg_len - 1);
        const std::size_t len = static_cast<std::size_t>(last - first + 1);
        for (std::size_t i = 0; i < len; ++i) {
            rem[i] = first + i;
            val[i] = T(1);
        }
        for (std::uint64_t p : base) {
            if (p > last) break;
            std::uint64_t m = ((first + p - 1) / p) * p;
            for (; m <= last; m += p) {
                const std::size_t i = static_cast<std::size_t>(m - first);
                unsigned k = 0;
                do {
                    rem[i] /= p;
                    ++k;
                } while (rem[i] % p == 0);
                val[i] *= value_at(p, k);
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (rem[i] > 1) val[i] *= value_at(rem[i], 1u);
            sink(first + i, val[i]);
        }
        if (last == hi) break;
    }
}

}  // namespace primelab
