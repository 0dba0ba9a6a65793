#include "primelab/multiplicative.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "primelab/errors.hpp"
#include "primelab/numeric.hpp"

namespace primelab {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void require_bounded(const MultiplicativeFunction& f, const char* op) {
    if (!f.bounded()) throw ArgumentError(fmt::format("{}: {} is not bounded by 1", op, f.name()));
}

void require_disk(Complex w, const char* op) {
    if (std::norm(w) > 1.0 + 1e-12) throw ArgumentError(fmt::format("{}: argument outside the unit disk", op));
}

// n^{-s} for real n >= 1.
Complex power_minus_s(double log_n, double sigma, double t) {
    const double mag = std::exp(-sigma * log_n);
    return {mag * std::cos(t * log_n), -mag * std::sin(t * log_n)};
}

}  // namespace

MultiplicativeFunction::MultiplicativeFunction(std::string name, PrimePowerRule rule, bool bounded)
    : name_(std::move(name)), rule_(std::move(rule)), bounded_(bounded) {
    if (!rule_) throw ArgumentError("MultiplicativeFunction: empty rule");
}

MultiplicativeFunction MultiplicativeFunction::one() {
    return {"1", [](std::uint64_t, unsigned) { return Complex(1.0); }, true};
}

MultiplicativeFunction MultiplicativeFunction::mobius() {
    return {"mu", [](std::uint64_t, unsigned k) { return Complex(k == 1 ? -1.0 : 0.0); }, true};
}

MultiplicativeFunction MultiplicativeFunction::nit(double t) {
    return {fmt::format("n^(i*{})", t),
            [t](std::uint64_t p, unsigned k) { return std::polar(1.0, t * k * std::log(static_cast<double>(p))); },
            true};
}

MultiplicativeFunction MultiplicativeFunction::character(DirichletCharacter chi) {
    auto name = fmt::format("chi[{}]_{}", chi.index(), chi.modulus());
    return {std::move(name), [chi = std::move(chi)](std::uint64_t p, unsigned k) { return std::pow(chi(p), k); },
            true};
}

MultiplicativeFunction MultiplicativeFunction::divisor_count() {
    return {"tau", [](std::uint64_t, unsigned k) { return Complex(k + 1.0); }, false};
}

MultiplicativeFunction MultiplicativeFunction::divisor_sum() {
    return {"sigma",
            [](std::uint64_t p, unsigned k) {
                const double dp = static_cast<double>(p);
                return Complex((std::pow(dp, k + 1.0) - 1.0) / (dp - 1.0));
            },
            false};
}

MultiplicativeFunction MultiplicativeFunction::random_unimodular(std::uint64_t seed) {
    return {fmt::format("random[{}]", seed),
            [seed](std::uint64_t p, unsigned k) {
                const std::uint64_t h = splitmix64(seed ^ splitmix64(p));
                const double theta = 2.0 * std::numbers::pi * std::ldexp(static_cast<double>(h >> 11), -53);
                return std::polar(1.0, theta * k);
            },
            true};
}

MultiplicativeFunction MultiplicativeFunction::squared() const {
    return {name_ + "^2",
            [rule = rule_](std::uint64_t p, unsigned k) {
                const Complex v = rule(p, k);
                return v * v;
            },
            bounded_};
}

Complex mf_eval(const MultiplicativeFunction& f, std::uint64_t n, const SieveConfig& cfg) {
    if (n < 1) throw RangeError("mf_eval: n must be positive");
    Complex v = 1.0;
    for (const auto& [p, k] : factorize(n, cfg).factors) v *= f.at_prime_power(p, k);
    return v;
}

Complex mean_value(const MultiplicativeFunction& f, std::uint64_t N, const SieveConfig& cfg) {
    if (N < 1) throw RangeError("mean_value: N must be positive");
    ComplexCompensatedSum sum;
    for_each_multiplicative<Complex>(
        1, N, [&](std::uint64_t p, unsigned k) { return f.at_prime_power(p, k); },
        [&](std::uint64_t, Complex v) { sum.add(v); }, cfg);
    return sum.value() / static_cast<double>(N);
}

NitMeanCheck nit_mean_check(double t, std::uint64_t N) {
    if (N < 10) throw RangeError("nit_mean_check: N must be at least 10");
    NitMeanCheck r;
    r.t = t;
    r.N = N;
    ComplexCompensatedSum sum;
    for (std::uint64_t n = 1; n <= N; ++n) sum.add(std::polar(1.0, t * std::log(static_cast<double>(n))));
    const double dN = static_cast<double>(N);
    r.computed = sum.value() / dN;
    r.predicted = std::polar(1.0, t * std::log(dN)) / Complex(1.0, t);
    r.gap = std::abs(r.computed - r.predicted);
    if (N >= 10'000 && std::fabs(t) <= 10.0 && r.gap > 0.05)
        throw InvariantViolation(fmt::format("nit_mean_check: gap {} exceeds 0.05", r.gap));
    return r;
}

Distance distance(const MultiplicativeFunction& f, const MultiplicativeFunction& g, std::uint64_t x,
                  const SieveConfig& cfg) {
    require_bounded(f, "distance");
    require_bounded(g, "distance");
    if (x < 2) throw RangeError("distance: x must be at least 2");
    CompensatedSum sum;
    PrimeStream stream(2, x, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        for (std::uint64_t p : batch)
            sum.add((1.0 - (f.at_prime(p) * std::conj(g.at_prime(p))).real()) / static_cast<double>(p));
    Distance d;
    d.squared = std::max(0.0, sum.value());
    d.value = std::sqrt(d.squared);
    return d;
}

double eta(Complex w, Complex y) {
    require_disk(w, "eta");
    require_disk(y, "eta");
    return std::sqrt(std::max(0.0, 1.0 - (w * std::conj(y)).real()));
}

bool eta_triangle_check(Complex w, Complex y, Complex z) {
    return eta(w, y) <= eta(w, z) + eta(z, y) + 1e-12;
}

HalaszRatio halasz_ratio(const MultiplicativeFunction& f, std::uint64_t x, double t, std::uint64_t cap,
                         const SieveConfig& cfg) {
    require_bounded(f, "halasz_ratio");
    if (x < 100) throw RangeError("halasz_ratio: x must be at least 100");
    if (!(std::fabs(t) <= 100.0)) throw RangeError("halasz_ratio: |t| must be at most 100");
    if (cap < 1) throw RangeError("halasz_ratio: cap must be positive");

    HalaszRatio r;
    r.x = x;
    r.t = t;
    const double lx = std::log(static_cast<double>(x));
    r.sigma = 1.0 + 1.0 / lx;
    const double x4 = std::pow(static_cast<double>(x), 4.0);
    r.cutoff = x4 < static_cast<double>(cap) ? static_cast<std::uint64_t>(x4) : cap;

    ComplexCompensatedSum series;
    for_each_multiplicative<Complex>(
        1, r.cutoff, [&](std::uint64_t p, unsigned k) { return f.at_prime_power(p, k); },
        [&](std::uint64_t n, Complex v) {
            if (v != 0.0) series.add(v * power_minus_s(std::log(static_cast<double>(n)), r.sigma, t));
        },
        cfg);
    r.series_abs = std::abs(series.value());
    r.tail_bound = std::pow(static_cast<double>(r.cutoff), 1.0 - r.sigma) / (r.sigma - 1.0);

    const double d2 = distance(f, MultiplicativeFunction::nit(t), x, cfg).squared;
    r.pretentious = lx * std::exp(-d2);
    r.ratio = r.series_abs / r.pretentious;
    return r;
}

DistanceMinimum distance_min_t(const MultiplicativeFunction& f, std::uint64_t x, double T, double step,
                               const SieveConfig& cfg) {
    require_bounded(f, "distance_min_t");
    if (!(step > 0.0) || !(T >= step)) throw ArgumentError("distance_min_t: need step > 0 and T >= step");
    if (x < 2) throw RangeError("distance_min_t: x must be at least 2");

    std::vector<double> logs;
    std::vector<Complex> weighted;  // f(p) / p
    CompensatedSum harmonic;        // sum 1/p
    PrimeStream stream(2, x, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        for (std::uint64_t p : batch) {
            const double dp = static_cast<double>(p);
            logs.push_back(std::log(dp));
            weighted.push_back(f.at_prime(p) / dp);
            harmonic.add(1.0 / dp);
        }

    const auto K = static_cast<std::int64_t>(std::floor(T / step + 1e-9));
    DistanceMinimum best{0.0, std::numeric_limits<double>::infinity()};
    for (std::int64_t k = -K; k <= K; ++k) {
        const double t = static_cast<double>(k) * step;
        CompensatedSum overlap;  // sum Re(f(p) p^{-it}) / p
        for (std::size_t i = 0; i < logs.size(); ++i) overlap.add((weighted[i] * std::polar(1.0, -t * logs[i])).real());
        const double d = std::sqrt(std::max(0.0, harmonic.value() - overlap.value()));
        if (d < best.d_min) best = {t, d};
    }
    return best;
}

}  // namespace primelab
