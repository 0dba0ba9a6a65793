#include "primelab/sieve.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

namespace primelab {

SieveConfig SieveConfig::from_environment() {
    SieveConfig cfg;
    if (const char* env = std::getenv("PRIMELAB_SIEVE_MAX"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v >= 2.0) || v > 1.8e19)
            throw ArgumentError(std::string("PRIMELAB_SIEVE_MAX: not a usable bound: ") + env);
        cfg.max_limit = static_cast<std::uint64_t>(v);
    }
    return cfg;
}

const SieveConfig& default_config() {
    static const SieveConfig cfg = SieveConfig::from_environment();
    return cfg;
}

void check_sieve_bound(std::uint64_t n, const SieveConfig& cfg, std::string_view op) {
    if (n > cfg.max_limit)
        throw RangeError(std::string(op) + ": " + std::to_string(n) + " exceeds the sieve maximum " +
                         std::to_string(cfg.max_limit));
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0xFFFFFFFFULL || r * r > n) --r;
    while (r < 0xFFFFFFFFULL && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t Factorization::product() const {
    std::uint64_t acc = 1;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            if (__builtin_mul_overflow(acc, p, &acc)) throw RangeError("factorization product overflows 64 bits");
    return acc;
}

std::string Factorization::to_string(std::string_view separator) const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += separator;
        out += std::to_string(factors[i].prime);
        if (factors[i].exponent > 1) out += "^" + std::to_string(factors[i].exponent);
    }
    return out;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<std::uint8_t> composite(limit + 1, 0);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

namespace detail {

OddSegmentSieve::OddSegmentSieve(std::uint64_t lo, std::uint64_t hi, std::size_t segment_bytes)
    : hi_(hi), seg_len_(std::max<std::size_t>(segment_bytes, 64)) {
    next_odd_ = std::max<std::uint64_t>(lo, 3) | 1;
    if (next_odd_ > hi_) return;
    for (std::uint64_t p : small_primes(isqrt(hi_))) {
        if (p == 2) continue;
        base_.push_back(p);
        std::uint64_t m = std::max(p * p, ((next_odd_ + p - 1) / p) * p);
        if (m % 2 == 0) m += p;
        next_multiple_.push_back(m);
    }
}

bool OddSegmentSieve::next(std::uint64_t& first, std::span<const std::uint8_t>& flags) {
    if (next_odd_ > hi_) return false;
    first = next_odd_;
    const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(seg_len_, (hi_ - first) / 2 + 1));
    const std::uint64_t last = first + 2 * (count - 1);
    flags_.assign(count, 1);
    for (std::size_t j = 0; j < base_.size(); ++j) {
        const std::uint64_t p = base_[j];
        if (p * p > last) break;
        std::uint64_t idx = (next_multiple_[j] - first) / 2;
        for (; idx < count; idx += p) flags_[idx] = 0;
        next_multiple_[j] = first + 2 * idx;
    }
    next_odd_ = last + 2;
    flags = std::span<const std::uint8_t>(flags_.data(), count);
    return true;
}

}  // namespace detail

PrimeStream::PrimeStream(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg)
    : emit_two_(lo <= 2 && hi >= 2), sieve_(lo, hi, cfg.segment_bytes) {
    check_sieve_bound(hi, cfg, "prime stream");
}

std::span<const std::uint64_t> PrimeStream::next_batch() {
    batch_.clear();
    if (emit_two_) {
        batch_.push_back(2);
        emit_two_ = false;
    }
    std::uint64_t first = 0;
    std::span<const std::uint8_t> flags;
    while (batch_.empty() && sieve_.next(first, flags)) {
        for (std::size_t i = 0; i < flags.size(); ++i)
            if (flags[i]) batch_.push_back(first + 2 * i);
    }
    return batch_;
}

namespace {

// Primes in [lo, hi] counted at each sorted checkpoint (primes in [lo, min(x, hi)]).
std::vector<std::uint64_t> count_chunk(std::uint64_t lo, std::uint64_t hi,
                                       std::span<const std::uint64_t> sorted_xs, std::size_t segment_bytes) {
    std::vector<std::uint64_t> out(sorted_xs.size(), 0);
    if (lo > hi) return out;
    std::uint64_t running = (lo <= 2 && hi >= 2) ? 1 : 0;
    std::size_t k = 0;
    while (k < sorted_xs.size() && sorted_xs[k] < std::max<std::uint64_t>(lo, 3)) {
        out[k] = (sorted_xs[k] >= 2 && lo <= 2 && hi >= 2) ? 1 : 0;
        ++k;
    }
    detail::OddSegmentSieve sieve(lo, hi, segment_bytes);
    std::uint64_t first = 0;
    std::span<const std::uint8_t> flags;
    while (k < sorted_xs.size() && sieve.next(first, flags)) {
        const std::uint64_t last = first + 2 * (flags.size() - 1);
        std::size_t done = 0;
        while (k < sorted_xs.size() && sorted_xs[k] <= last) {
            const std::size_t upto = static_cast<std::size_t>((sorted_xs[k] - first) / 2 + 1);
            running += static_cast<std::uint64_t>(std::count(flags.begin() + done, flags.begin() + upto, 1));
            done = upto;
            out[k++] = running;
        }
        running += static_cast<std::uint64_t>(std::count(flags.begin() + done, flags.end(), 1));
    }
    for (; k < sorted_xs.size(); ++k) out[k] = running;
    return out;
}

// Splits [lo, hi] into `parts` contiguous ranges of near-equal length.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t lo, std::uint64_t hi, unsigned parts) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t len = hi - lo + 1;
    parts = static_cast<unsigned>(std::clamp<std::uint64_t>(parts, 1, std::max<std::uint64_t>(1, len / 4096)));
    std::uint64_t start = lo;
    for (unsigned i = 0; i < parts; ++i) {
        const std::uint64_t end = (i + 1 == parts) ? hi : start + len / parts - 1;
        out.emplace_back(start, end);
        start = end + 1;
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> prime_counts(std::span<const std::uint64_t> xs, const SieveConfig& cfg) {
    if (xs.empty()) return {};
    std::vector<std::uint64_t> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::uint64_t top = sorted.back();
    check_sieve_bound(top, cfg, "prime count");

    std::vector<std::uint64_t> totals(sorted.size(), 0);
    if (top >= 2) {
        const auto chunks = split_range(2, top, std::max(1u, cfg.threads));
        std::vector<std::vector<std::uint64_t>> partial(chunks.size());
        if (chunks.size() == 1) {
            partial[0] = count_chunk(2, top, sorted, cfg.segment_bytes);
        } else {
            std::vector<std::thread> workers;
            for (std::size_t c = 0; c < chunks.size(); ++c)
                workers.emplace_back([&, c] {
                    partial[c] = count_chunk(chunks[c].first, chunks[c].second, sorted, cfg.segment_bytes);
                });
            for (auto& w : workers) w.join();
        }
        for (const auto& part : partial)
            for (std::size_t k = 0; k < totals.size(); ++k) totals[k] += part[k];
    }

    std::vector<std::uint64_t> out;
    out.reserve(xs.size());
    for (std::uint64_t x : xs)
        out.push_back(totals[static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin())]);
    return out;
}

std::uint64_t prime_count(std::uint64_t x, const SieveConfig& cfg) {
    const std::uint64_t xs[] = {x};
    return prime_counts(xs, cfg)[0];
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg) {
    std::vector<std::uint64_t> out;
    if (lo > hi) return out;
    PrimeStream stream(lo, hi, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        out.insert(out.end(), batch.begin(), batch.end());
    return out;
}

PrimeTable PrimeTable::build(std::uint64_t limit, const SieveConfig& cfg) {
    if (limit < 2) throw RangeError("build_table: limit must be at least 2");
    check_sieve_bound(limit, cfg, "build_table");

    PrimeTable table;
    table.limit_ = limit;
    table.segment_bytes_ = cfg.segment_bytes;

    const auto chunks = split_range(2, limit, std::max(1u, cfg.threads));
    std::vector<std::vector<std::uint64_t>> parts(chunks.size());
    if (chunks.size() == 1) {
        parts[0] = primes_between(2, limit, cfg);
    } else {
        std::vector<std::thread> workers;
        for (std::size_t c = 0; c < chunks.size(); ++c)
            workers.emplace_back([&, c] { parts[c] = primes_between(chunks[c].first, chunks[c].second, cfg); });
        for (auto& w : workers) w.join();
    }
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    table.primes_.reserve(total);
    for (const auto& p : parts) table.primes_.insert(table.primes_.end(), p.begin(), p.end());

    const std::uint64_t bound = std::min(limit, kSmallTableCap);
    table.least_factor_.assign(bound + 1, 0);
    for (std::uint64_t p : table.primes_) {
        if (p * p > bound) break;
        for (std::uint64_t m = p * p; m <= bound; m += p)
            if (table.least_factor_[m] == 0) table.least_factor_[m] = static_cast<std::uint32_t>(p);
    }
    for (std::uint64_t n = 2; n <= bound; ++n)
        if (table.least_factor_[n] == 0) table.least_factor_[n] = static_cast<std::uint32_t>(n);
    return table;
}

std::uint64_t PrimeTable::least_factor(std::uint64_t n) const {
    if (n < 2 || n > small_table_bound())
        throw RangeError("least_factor: n outside [2, " + std::to_string(small_table_bound()) + "]");
    return least_factor_[n];
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
    if (x > limit_) throw RangeError("PrimeTable::pi: x beyond table limit");
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n > limit_) throw RangeError("PrimeTable::is_prime: n beyond table limit");
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

MobiusStream::MobiusStream(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg)
    : next_(lo), hi_(hi), seg_len_(std::max<std::size_t>(cfg.segment_bytes, 1024)) {
    if (lo < 1 || lo > hi) throw RangeError("mobius_range: need 1 <= lo <= hi");
    check_sieve_bound(hi, cfg, "mobius_range");
    base_ = small_primes(isqrt(hi));
    mu_.resize(seg_len_);
    prod_.resize(seg_len_);
}

MobiusStream::Segment MobiusStream::next_segment() {
    if (done_) return {next_, {}};
    const std::uint64_t first = next_;
    const std::uint64_t last = std::min<std::uint64_t>(hi_, first + seg_len_ - 1);
    const std::size_t len = static_cast<std::size_t>(last - first + 1);
    std::fill_n(mu_.begin(), len, std::int8_t{1});
    std::fill_n(prod_.begin(), len, std::uint64_t{1});
    for (std::uint64_t p : base_) {
        if (p > last) break;
        for (std::uint64_t m = ((first + p - 1) / p) * p; m <= last; m += p) {
            const std::size_t i = static_cast<std::size_t>(m - first);
            mu_[i] = static_cast<std::int8_t>(-mu_[i]);
            prod_[i] *= p;
        }
        const std::uint64_t pp = p * p;
        if (pp <= last)
            for (std::uint64_t m = ((first + pp - 1) / pp) * pp; m <= last; m += pp) mu_[static_cast<std::size_t>(m - first)] = 0;
    }
    // Whatever is left after dividing out the primes <= sqrt(hi) is 1 or a single large prime.
    for (std::size_t i = 0; i < len; ++i)
        if (mu_[i] != 0 && prod_[i] != first + i) mu_[i] = static_cast<std::int8_t>(-mu_[i]);

    if (last == hi_)
        done_ = true;
    else
        next_ = last + 1;
    return {first, std::span<const std::int8_t>(mu_.data(), len)};
}

std::vector<std::int8_t> mobius_range(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg) {
    MobiusStream stream(lo, hi, cfg);
    std::vector<std::int8_t> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (auto seg = stream.next_segment(); !seg.mu.empty(); seg = stream.next_segment())
        out.insert(out.end(), seg.mu.begin(), seg.mu.end());
    return out;
}

namespace {

const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> primes = small_primes(1'000'000);
    return primes;
}

}  // namespace

Factorization factorize(std::uint64_t n, const SieveConfig& cfg) {
    if (n == 0) throw RangeError("factorize: n must be positive");
    if (n > cfg.max_factorize)
        throw RangeError("factorize: " + std::to_string(n) + " exceeds the trial-division bound " +
                         std::to_string(cfg.max_factorize));
    Factorization f;
    f.n = n;
    std::uint64_t rest = n;
    const std::uint64_t root = isqrt(n);
    const auto& cached = trial_primes();
    const std::vector<std::uint64_t> extra = root > cached.back() ? small_primes(root) : std::vector<std::uint64_t>{};
    const auto& primes = extra.empty() ? cached : extra;
    for (std::uint64_t p : primes) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        unsigned e = 0;
        do {
            rest /= p;
            ++e;
        } while (rest % p == 0);
        f.factors.push_back({p, e});
    }
    if (rest > 1) f.factors.push_back({rest, 1});
    return f;
}

bool is_prime(std::uint64_t n, const SieveConfig& cfg) {
    if (n < 2) return false;
    return factorize(n, cfg).is_prime();
}

double mangoldt(std::uint64_t n, const SieveConfig& cfg) {
    if (n == 0) throw RangeError("mangoldt: n must be positive");
    if (n == 1) return 0.0;
    const auto f = factorize(n, cfg);
    return f.factors.size() == 1 ? std::log(static_cast<double>(f.factors[0].prime)) : 0.0;
}

}  // namespace primelab
