#include "primelab/elementary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "primelab/numeric.hpp"

namespace primelab {

namespace {

void require_prime(std::uint64_t p, const char* op) {
    if (!is_prime(p)) throw ArgumentError(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

// log k! for k = 0..n, accumulated with compensation.
std::vector<double> log_factorial_table(std::uint64_t n) {
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    CompensatedSum acc;
    for (std::uint64_t k = 2; k <= n; ++k) {
        acc.add(std::log(static_cast<double>(k)));
        out[static_cast<std::size_t>(k)] = acc.value();
    }
    return out;
}

// Prefix sums of log p over the primes, indexed by prime count.
struct ThetaTable {
    std::vector<std::uint64_t> primes;
    std::vector<double> prefix;  // prefix[i] = sum of log over primes[0..i)

    explicit ThetaTable(std::uint64_t limit, const SieveConfig& cfg) : primes(primes_between(2, limit, cfg)) {
        prefix.resize(primes.size() + 1, 0.0);
        CompensatedSum acc;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            acc.add(std::log(static_cast<double>(primes[i])));
            prefix[i + 1] = acc.value();
        }
    }
    double theta(std::uint64_t y) const {
        return prefix[static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), y) - primes.begin())];
    }
};

}  // namespace

unsigned kummer_exponent(std::uint64_t p, std::uint64_t n) {
    if (n < 1) throw RangeError("kummer_exponent: n must be positive");
    require_prime(p, "kummer_exponent");
    unsigned e = 0;
    for (std::uint64_t pk = p; pk <= 2 * n; pk *= p) {
        e += static_cast<unsigned>(2 * n / pk - 2 * (n / pk));
        if (pk > (2 * n) / p) break;
    }
    return e;
}

std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t N) {
    require_prime(p, "factorial_valuation");
    std::uint64_t v = 0;
    for (std::uint64_t q = N / p; q > 0; q /= p) v += q;
    return v;
}

BinomialReport binom_prime_bounds(std::uint64_t n, const SieveConfig& cfg) {
    if (n < 1 || n > 10'000'000) throw RangeError("binom_prime_bounds: n outside [1, 10^7]");
    BinomialReport r;
    r.n = n;
    const double dn = static_cast<double>(n);
    r.central_log = std::lgamma(2 * dn + 1) - 2 * std::lgamma(dn + 1);

    CompensatedSum block;
    std::uint64_t max_pp = 1;
    PrimeStream stream(2, 2 * n, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch()) {
        for (std::uint64_t p : batch) {
            if (p > n) block.add(std::log(static_cast<double>(p)));
            std::uint64_t pe = 1;
            for (unsigned e = kummer_exponent(p, n); e > 0; --e) pe *= p;
            max_pp = std::max(max_pp, pe);
        }
    }
    r.prime_block_log = block.value();
    r.max_prime_power = max_pp;

    const double slack = 1e-9 * std::max(1.0, r.central_log);
    if (r.prime_block_log > r.central_log + slack)
        throw InvariantViolation("binom_prime_bounds: prime block exceeds C(2n,n)");
    if (r.central_log > 2 * dn * std::log(2.0) + slack)
        throw InvariantViolation("binom_prime_bounds: C(2n,n) exceeds 4^n");
    if (r.max_prime_power > 2 * n) throw InvariantViolation("binom_prime_bounds: p^e_p exceeds 2n");
    return r;
}

LcmIdentityReport lcm_identity_check(std::uint64_t x, const SieveConfig& cfg) {
    if (x < 2 || x > 1'000'000) throw RangeError("lcm_identity_check: x outside [2, 10^6]");
    LcmIdentityReport r;
    r.x = x;

    const auto primes = primes_between(2, x, cfg);
    CompensatedSum lhs;
    for (std::uint64_t p : primes) {
        const double lp = std::log(static_cast<double>(p));
        for (std::uint64_t pk = p; pk <= x; pk *= p) {
            lhs.add(lp);
            if (pk > x / p) break;
        }
    }
    r.lhs_log = lhs.value();

    const auto mu = mobius_range(1, x, cfg);
    const auto logfact = log_factorial_table(x);
    CompensatedSum rhs;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (const int m = mu[n - 1]; m != 0) rhs.add(m * logfact[x / n]);
    r.rhs_log = rhs.value();

    if (x <= kExactIdentityLimit) {
        using boost::multiprecision::cpp_int;
        cpp_int left = 1;
        for (std::uint64_t p : primes)
            for (std::uint64_t pk = p; pk <= x; pk *= p) left *= p;
        cpp_int num = 1, den = 1;
        for (std::uint64_t n = 1; n <= x; ++n) {
            if (mu[n - 1] == 0) continue;
            cpp_int f = 1;
            for (std::uint64_t k = 2; k <= x / n; ++k) f *= k;
            (mu[n - 1] > 0 ? num : den) *= f;
        }
        r.exact_match = (num == left * den);
    }
    return r;
}

TruncatedIdentity truncated_identity(std::uint64_t x, std::uint64_t N, std::span<const std::uint64_t> query_primes,
                                     const SieveConfig& cfg) {
    if (N < 1) throw RangeError("truncated_identity: N must be positive");
    check_sieve_bound(x, cfg, "truncated_identity");
    if (N > 0xFFFFFFFFULL || x <= N * N) throw PreconditionError("truncated_identity: requires x > N^2");

    TruncatedIdentity t;
    t.x = x;
    t.N = N;
    const auto mu = mobius_range(1, N, cfg);
    CompensatedSum log_value;
    for (std::uint64_t n = 1; n <= N; ++n)
        if (mu[n - 1] != 0) log_value.add(mu[n - 1] * std::lgamma(static_cast<double>(x / n) + 1.0));
    t.log_value = log_value.value();

    for (std::uint64_t p : query_primes) {
        require_prime(p, "truncated_identity");
        if (p <= isqrt(x)) throw ArgumentError("truncated_identity: queried prime must exceed sqrt(x)");
        std::int64_t e = 0;
        for (std::uint64_t n = 1; n <= N; ++n)
            if (mu[n - 1] != 0) e += mu[n - 1] * static_cast<std::int64_t>(factorial_valuation(p, x / n));
        t.exponents.push_back({p, e});
    }
    return t;
}

LogFactorialEstimate log_factorial_estimate(std::uint64_t N) {
    if (N < 2) throw RangeError("log_factorial_estimate: N must be at least 2");
    LogFactorialEstimate r;
    r.N = N;
    CompensatedSum acc;
    for (std::uint64_t n = 2; n <= N; ++n) acc.add(std::log(static_cast<double>(n)));
    r.exact = acc.value();
    const double dn = static_cast<double>(N);
    r.estimate = dn * (std::log(dn) - 1.0) + 1.0;
    if (std::fabs(r.exact - r.estimate) > std::log(dn))
        throw InvariantViolation("log_factorial_estimate: |log N! - (N(log N - 1) + 1)| exceeds log N");
    return r;
}

std::uint64_t bertrand_check(std::uint64_t n, const SieveConfig& cfg) {
    if (n < 2) throw RangeError("bertrand_check: n must be at least 2");
    check_sieve_bound(2 * n, cfg, "bertrand_check");
    PrimeStream stream(n + 1, 2 * n - 1, cfg);
    const auto batch = stream.next_batch();
    if (batch.empty()) throw InvariantViolation("bertrand_check: no prime in (n, 2n) for n = " + std::to_string(n));
    return batch.front();
}

EratosthenesBound eratosthenes_bound(std::uint64_t x, std::uint64_t y, const SieveConfig& cfg) {
    if (y < 2 || y > x) throw RangeError("eratosthenes_bound: need 2 <= y <= x");
    check_sieve_bound(x, cfg, "eratosthenes_bound");
    const auto small = small_primes(y);
    if (small.size() > 40) throw RangeError("eratosthenes_bound: pi(y) must be at most 40");

    EratosthenesBound r;
    r.x = x;
    r.y = y;
    double density = 1.0;
    for (std::uint64_t p : small) density *= 1.0 - 1.0 / static_cast<double>(p);
    r.bound = static_cast<double>(x) * density + std::ldexp(1.0, static_cast<int>(small.size()) - 1);

    const std::size_t seg = std::max<std::size_t>(cfg.segment_bytes, 1024);
    std::vector<std::uint8_t> rough(seg);
    for (std::uint64_t first = 1; first <= x; first += seg) {
        const std::uint64_t last = std::min<std::uint64_t>(x, first + seg - 1);
        const std::size_t len = static_cast<std::size_t>(last - first + 1);
        std::fill_n(rough.begin(), len, std::uint8_t{1});
        for (std::uint64_t p : small)
            for (std::uint64_t m = ((first + p - 1) / p) * p; m <= last; m += p) rough[m - first] = 0;
        r.rough_count += static_cast<std::uint64_t>(std::count(rough.begin(), rough.begin() + len, 1));
    }
    r.primes_above_y = prime_count(x, cfg) - small.size();

    if (static_cast<double>(r.rough_count) > r.bound)
        throw InvariantViolation("eratosthenes_bound: rough count exceeds the sieve bound");
    if (r.primes_above_y > r.rough_count)
        throw InvariantViolation("eratosthenes_bound: primes in (y, x] exceed the rough count");
    return r;
}

double selberg_error(std::uint64_t x, const SieveConfig& cfg) {
    if (x < 10 || x > 10'000'000) throw RangeError("selberg_error: x outside [10, 10^7]");
    const ThetaTable table(x, cfg);
    const double dx = static_cast<double>(x);
    const double lx = std::log(dx);

    CompensatedSum pairs;
    for (std::size_t i = 0; i < table.primes.size(); ++i) {
        const std::uint64_t p = table.primes[i];
        if (p * 2 > x) break;
        pairs.add(std::log(static_cast<double>(p)) * table.theta(x / p));
    }
    CompensatedSum total;
    total.add(lx * table.theta(x));
    total.add(pairs.value());
    total.add(-2.0 * dx * lx);
    return total.value() / dx;
}

double functional_error(std::uint64_t x, FunctionalKind which, const SieveConfig& cfg) {
    if (x < 10 || x > 10'000'000) throw RangeError("functional_error: x outside [10, 10^7]");
    const double dx = static_cast<double>(x);
    const double lx = std::log(dx);
    CompensatedSum total;

    if (which == FunctionalKind::ThetaError) {
        const ThetaTable table(x, cfg);
        auto E = [&](double t) { return table.theta(static_cast<std::uint64_t>(std::floor(t))) - t; };
        total.add(E(dx) * lx);
        for (std::uint64_t p : table.primes) total.add(E(dx / static_cast<double>(p)) * std::log(static_cast<double>(p)));
    } else {
        const auto mu = mobius_range(1, x, cfg);
        std::vector<std::int64_t> M(static_cast<std::size_t>(x) + 1, 0);
        for (std::uint64_t n = 1; n <= x; ++n) M[n] = M[n - 1] + mu[n - 1];
        total.add(static_cast<double>(M[x]) * lx);
        PrimeStream stream(2, x, cfg);
        for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
            for (std::uint64_t p : batch) total.add(static_cast<double>(M[x / p]) * std::log(static_cast<double>(p)));
    }
    return total.value() / dx;
}

}  // namespace primelab
