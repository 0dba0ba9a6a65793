#include "primelab/progressions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "primelab/errors.hpp"
#include "primelab/numeric.hpp"

namespace primelab {

namespace {

std::uint64_t reduce_residue(std::int64_t a, std::uint64_t q, const char* op) {
    if (q < 1) throw RangeError(fmt::format("{}: q must be positive", op));
    const auto sq = static_cast<std::int64_t>(q);
    const auto r = static_cast<std::uint64_t>(((a % sq) + sq) % sq);
    if (std::gcd(r, q) != 1) throw ArgumentError(fmt::format("{}: gcd({}, {}) > 1", op, a, q));
    return r;
}

}  // namespace

std::uint64_t pi_ap(std::uint64_t x, std::uint64_t q, std::int64_t a, const SieveConfig& cfg) {
    const std::uint64_t r = reduce_residue(a, q, "pi_ap");
    if (x < 2) return 0;
    std::uint64_t count = 0;
    PrimeStream stream(2, x, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        for (std::uint64_t p : batch) count += (p % q == r);
    return count;
}

EquidistStats equidist_stats(std::uint64_t q, std::uint64_t target_avg, const SieveConfig& cfg) {
    if (q < 1 || q > 10'000) throw RangeError("equidist_stats: q outside [1, 10^4]");
    if (target_avg < 1) throw RangeError("equidist_stats: target must be positive");

    std::vector<std::uint64_t> counts(q, 0);
    std::vector<std::uint8_t> reduced(q, 0);
    std::uint64_t phi = 0;
    for (std::uint64_t a = 0; a < q; ++a)
        if (std::gcd(a, q) == 1) {
            reduced[a] = 1;
            ++phi;
        }
    const std::uint64_t goal = target_avg * phi;

    EquidistStats st;
    st.q = q;
    st.target_avg = target_avg;
    std::uint64_t total = 0;
    PrimeStream stream(2, cfg.max_limit, cfg);
    for (auto batch = stream.next_batch(); !batch.empty() && total < goal; batch = stream.next_batch())
        for (std::uint64_t p : batch) {
            const std::uint64_t r = p % q;
            if (!reduced[r]) continue;
            ++counts[r];
            if (++total == goal) {
                st.x_reached = p;
                break;
            }
        }
    if (total < goal) throw ResourceError("equidist_stats: sieve bound reached before the target average");

    st.min_count = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t a = 0; a < q; ++a) {
        if (!reduced[a]) continue;
        st.classes.push_back({a, counts[a]});
        st.min_count = std::min(st.min_count, counts[a]);
        st.max_count = std::max(st.max_count, counts[a]);
    }
    return st;
}

LOneValue l_one(const DirichletCharacter& chi, std::uint64_t N) {
    if (chi.is_principal()) throw ArgumentError("l_one: L(s, chi) has a pole at s = 1 for principal chi");
    const std::uint64_t q = chi.modulus();
    if (N < q) throw RangeError("l_one: N must be at least q");

    ComplexCompensatedSum sum;
    for (std::uint64_t n = 1; n <= N; ++n)
        if (chi.exponent(n)) sum.add(chi(n) / static_cast<double>(n));
    LOneValue r{sum.value(), static_cast<double>(q) / static_cast<double>(N)};
    if (chi.is_real() && N >= 1000 * q && !(r.value.real() - r.tail_bound > 0.0))
        throw InvariantViolation(fmt::format("l_one: L(1, chi) interval for chi mod {} not above 0", q));
    return r;
}

std::complex<double> mu_chi_mean(const DirichletCharacter& chi, std::uint64_t N, const SieveConfig& cfg) {
    if (N < 1) throw RangeError("mu_chi_mean: N must be positive");
    ComplexCompensatedSum sum;
    MobiusStream stream(1, N, cfg);
    for (auto seg = stream.next_segment(); !seg.mu.empty(); seg = stream.next_segment())
        for (std::size_t i = 0; i < seg.mu.size(); ++i)
            if (seg.mu[i] != 0) sum.add(static_cast<double>(seg.mu[i]) * chi(seg.first + i));
    return sum.value() / static_cast<double>(N);
}

namespace {

std::optional<double> linnik(std::uint64_t p, std::uint64_t q) {
    if (q < 3) return std::nullopt;
    return std::log(static_cast<double>(p)) / std::log(static_cast<double>(q));
}

}  // namespace

LeastPrime least_prime_ap(std::uint64_t q, std::int64_t a, const SieveConfig& cfg) {
    if (q < 2) throw RangeError("least_prime_ap: q must be at least 2");
    const std::uint64_t r = reduce_residue(a, q, "least_prime_ap");
    PrimeStream stream(2, cfg.max_limit, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        for (std::uint64_t p : batch)
            if (p % q == r) return {q, r, p, linnik(p, q)};
    throw ResourceError(fmt::format("least_prime_ap: no prime = {} mod {} below the sieve bound {}", r, q, cfg.max_limit));
}

std::vector<LeastPrime> least_prime_sweep(std::uint64_t q, const SieveConfig& cfg) {
    if (q < 2) throw RangeError("least_prime_sweep: q must be at least 2");
    std::vector<std::uint64_t> least(q, 0);
    std::uint64_t missing = 0;
    for (std::uint64_t a = 0; a < q; ++a) missing += std::gcd(a, q) == 1;

    PrimeStream stream(2, cfg.max_limit, cfg);
    for (auto batch = stream.next_batch(); !batch.empty() && missing > 0; batch = stream.next_batch())
        for (std::uint64_t p : batch) {
            const std::uint64_t r = p % q;
            if (least[r] == 0 && std::gcd(r, q) == 1) {
                least[r] = p;
                if (--missing == 0) break;
            }
        }
    if (missing > 0) throw ResourceError(fmt::format("least_prime_sweep: sieve bound reached mod {}", q));

    std::vector<LeastPrime> out;
    for (std::uint64_t a = 0; a < q; ++a)
        if (least[a] != 0) out.push_back({q, a, least[a], linnik(least[a], q)});
    return out;
}

std::string progression_csv(std::span<const ProgressionRow> rows) {
    std::string out = "q,a,value\n";
    for (const auto& r : rows) out += fmt::format("{},{},{}\n", r.q, r.a, r.value);
    return out;
}

}  // namespace primelab
