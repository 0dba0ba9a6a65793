#include "primelab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <fftw3.h>
#include <fmt/format.h>

#include "primelab/counting.hpp"
#include "primelab/errors.hpp"
#include "primelab/numeric.hpp"

namespace primelab {

namespace {

using cplx = std::complex<double>;

// n^{-s} from log n.
cplx power_minus_s(double log_n, ComplexPoint s) {
    const double mag = std::exp(-s.sigma * log_n);
    return {mag * std::cos(s.t * log_n), -mag * std::sin(s.t * log_n)};
}

void require_half_plane(ComplexPoint s, const char* op) {
    if (!(s.sigma > 1.0)) throw DomainError(fmt::format("{}: needs Re s > 1", op));
}

}  // namespace

SeriesValue zeta_eval(ComplexPoint s, std::uint64_t terms) {
    require_half_plane(s, "zeta_eval");
    if (terms < 10) throw RangeError("zeta_eval: terms must be at least 10");
    ComplexCompensatedSum sum;
    for (std::uint64_t n = 1; n <= terms; ++n) sum.add(power_minus_s(std::log(static_cast<double>(n)), s));
    const double lN = std::log(static_cast<double>(terms));
    const cplx sm1 = s.s() - 1.0;
    sum.add(std::exp(-sm1 * lN) / sm1);
    return {sum.value(), std::abs(s.s()) * std::exp(-s.sigma * lN)};
}

SeriesValue zeta_derivative_eval(ComplexPoint s, std::uint64_t terms) {
    require_half_plane(s, "zeta_derivative_eval");
    if (terms < 10) throw RangeError("zeta_derivative_eval: terms must be at least 10");
    ComplexCompensatedSum sum;
    for (std::uint64_t n = 2; n <= terms; ++n) {
        const double ln = std::log(static_cast<double>(n));
        sum.add(-ln * power_minus_s(ln, s));
    }
    const double lN = std::log(static_cast<double>(terms));
    const cplx sm1 = s.s() - 1.0;
    // -int_N^inf log u u^{-s} du
    sum.add(-std::exp(-sm1 * lN) * (lN / sm1 + 1.0 / (sm1 * sm1)));
    return {sum.value(), (1.0 + std::abs(s.s())) * (1.0 + lN) * std::exp(-s.sigma * lN)};
}

EulerProductCheck euler_product_check(ComplexPoint s, std::uint64_t prime_cutoff, const SieveConfig& cfg) {
    if (!(s.sigma >= 1.2)) throw DomainError("euler_product_check: needs Re s >= 1.2");
    if (prime_cutoff < 2) throw RangeError("euler_product_check: cutoff must be at least 2");
    constexpr std::uint64_t kSeriesTerms = 1'000'000;

    EulerProductCheck r;
    const auto series = zeta_eval(s, kSeriesTerms);
    r.series = series.value;

    ComplexCompensatedSum log_product;
    PrimeStream stream(2, prime_cutoff, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        for (std::uint64_t p : batch) log_product.add(-std::log(1.0 - power_minus_s(std::log(static_cast<double>(p)), s)));
    r.product = std::exp(log_product.value());
    r.gap = std::abs(r.series - r.product);

    // |log(zeta / product)| <= sum_{n>P} n^{-sigma} / (1 - P^{-sigma}) <= b.
    const double P = static_cast<double>(prime_cutoff);
    const double b = std::pow(P, 1.0 - s.sigma) / ((s.sigma - 1.0) * (1.0 - std::pow(P, -s.sigma)));
    r.tail_bound = std::abs(r.product) * std::expm1(b) + series.tail_bound;

    if (s.sigma == 2.0 && prime_cutoff >= 100'000 && r.gap > 1e-3)
        throw InvariantViolation(fmt::format("euler_product_check: gap {} exceeds 1e-3", r.gap));
    return r;
}

SeriesValue log_deriv_eval(ComplexPoint s, std::uint64_t terms, const SieveConfig& cfg) {
    require_half_plane(s, "log_deriv_eval");
    if (terms < 2) throw RangeError("log_deriv_eval: terms must be at least 2");
    ComplexCompensatedSum sum;
    PrimeStream stream(2, terms, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        for (std::uint64_t p : batch) {
            const double lp = std::log(static_cast<double>(p));
            unsigned k = 1;
            for (std::uint64_t pk = p;; pk *= p, ++k) {
                sum.add(lp * power_minus_s(k * lp, s));
                if (pk > terms / p) break;
            }
        }
    const double lN = std::log(static_cast<double>(terms));
    return {sum.value(), lN * std::exp((1.0 - s.sigma) * lN) / (s.sigma - 1.0)};
}

PerronResult perron_indicator(double z, double sigma, double T) {
    if (!(z > 0.0)) throw DomainError("perron_indicator: z must be positive");
    if (!(sigma > 0.0)) throw DomainError("perron_indicator: sigma must be positive");
    if (!(T >= 10.0)) throw RangeError("perron_indicator: T must be at least 10");

    const double L = std::log(z);
    // The t and -t halves combine to (sigma cos tL + t sin tL)/(sigma^2 + t^2).
    auto integrand = [sigma, L](double t) { return (sigma * std::cos(t * L) + t * std::sin(t * L)) / (sigma * sigma + t * t); };
    const double panel = L == 0.0 ? 1.0 : std::min(1.0, std::numbers::pi / std::fabs(L));

    CompensatedSum total;
    for (double a = 0.0; a < T; a += panel) total.add(integrate(integrand, a, std::min(a + panel, T), 1e-12).value);

    PerronResult r;
    r.value = std::pow(z, sigma) / std::numbers::pi * total.value();
    r.indicator = z < 1.0 ? 0.0 : (z == 1.0 ? 0.5 : 1.0);
    r.error_bound = L == 0.0 ? sigma / (std::numbers::pi * T) : std::pow(z, sigma) / (std::numbers::pi * T * std::fabs(L));
    return r;
}

ExplicitPsi explicit_psi(double x, const ZeroTable& zeros, double T, const SieveConfig& cfg) {
    if (!(x >= 10.0)) throw RangeError("explicit_psi: x must be at least 10");
    if (zeros.empty()) throw ArgumentError("explicit_psi: zero table is empty");
    if (T > zeros.max_ordinate())
        throw ArgumentError(fmt::format("explicit_psi: T = {} exceeds the largest ordinate {}", T, zeros.max_ordinate()));

    ExplicitPsi r;
    r.x = x;
    r.T = T;
    const double L = std::log(x);
    const double root = std::sqrt(x);
    CompensatedSum zero_sum;
    for (double g : zeros.ordinates()) {
        if (g > T) break;
        // 2 Re(x^{1/2+ig} / (1/2+ig))
        zero_sum.add(2.0 * root * (0.5 * std::cos(g * L) + g * std::sin(g * L)) / (0.25 + g * g));
        ++r.zeros_used;
    }
    CompensatedSum approx;
    approx.add(x);
    approx.add(-zero_sum.value());
    approx.add(-std::log(2.0 * std::numbers::pi));
    r.approx = approx.value();
    r.truth = psi_star(x, cfg);
    r.error = r.approx - r.truth;
    return r;
}

ExplicitPsi explicit_psi(double x, const ZeroTable& zeros, const SieveConfig& cfg) {
    if (zeros.empty()) throw ArgumentError("explicit_psi: zero table is empty");
    return explicit_psi(x, zeros, zeros.max_ordinate(), cfg);
}

GoldbachCheck goldbach_check(std::uint64_t n, const SieveConfig& cfg) {
    if (n < 4 || n % 2 != 0) throw ArgumentError("goldbach_check: n must be even and at least 4");
    if (n > 1'000'000) throw RangeError("goldbach_check: n must be at most 10^6");
    check_sieve_bound(n, cfg, "goldbach_check");

    GoldbachCheck r;
    r.n = n;
    const auto primes = small_primes(n);
    std::vector<std::uint8_t> is_p(n + 1, 0);
    for (std::uint64_t p : primes) is_p[p] = 1;
    for (std::uint64_t p : primes) r.direct += is_p[n - p];

    // S(k/M) = sum_p e(pk/M) via one inverse DFT, then the integral
    // int_0^1 e(-nt) S(t)^2 dt as the M-point Riemann sum. Exact once M > 2n.
    std::size_t M = 1;
    while (M <= 2 * n) M <<= 1;
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * M));
    if (!buf) throw ResourceError("goldbach_check: FFT buffer allocation failed");
    std::fill_n(reinterpret_cast<double*>(buf), 2 * M, 0.0);
    for (std::uint64_t p : primes) buf[p][0] = 1.0;
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(M), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);

    ComplexCompensatedSum acc;
    for (std::size_t k = 0; k < M; ++k) {
        const cplx S(buf[k][0], buf[k][1]);
        const double angle = -2.0 * std::numbers::pi * static_cast<double>((n * k) % M) / static_cast<double>(M);
        acc.add(S * S * std::polar(1.0, angle));
    }
    fftw_free(buf);
    const double c = acc.value().real() / static_cast<double>(M);
    const double rounded = std::round(c);
    if (std::fabs(c - rounded) > 0.25) throw InvariantViolation("goldbach_check: circle sum is not near an integer");
    r.circle = static_cast<std::uint64_t>(rounded);
    if (r.circle != r.direct)
        throw InvariantViolation(fmt::format("goldbach_check: direct {} != circle {}", r.direct, r.circle));
    return r;
}

PrhCheck prh_bound_check(unsigned k, ComplexPoint s, std::uint64_t terms, const SieveConfig& cfg) {
    if (k < 1 || k > 20) throw RangeError("prh_bound_check: k outside [1, 20]");
    if (!(s.sigma > 1.0)) throw DomainError("prh_bound_check: needs Re s > 1");
    if (!(s.sigma < 2.0)) throw RangeError("prh_bound_check: needs Re s < 2");
    const double t_max = std::min(std::exp(static_cast<double>(k)), kPrhMaxT);
    if (!(s.t >= 0.0 && s.t <= t_max))
        throw RangeError(fmt::format("prh_bound_check: t outside [0, {}]", t_max));
    if (terms < 2) throw RangeError("prh_bound_check: terms must be at least 2");

    PrhCheck r;
    r.k = k;
    r.s = s;
    ComplexCompensatedSum sum;
    PrimeStream stream(2, terms, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        for (std::uint64_t p : batch) {
            const double lp = std::log(static_cast<double>(p));
            unsigned m = 1;
            for (std::uint64_t pm = p;; pm *= p, ++m) {
                const double ln = m * lp;
                sum.add(lp * std::pow(ln, static_cast<double>(k)) * power_minus_s(ln, s));
                if (pm > terms / p) break;
            }
        }
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k+1}
    const double kfact = std::tgamma(k + 1.0);
    r.series_part = sign * sum.value();
    r.pole_part = -sign * kfact / std::pow(s.s() - 1.0, static_cast<double>(k + 1));
    r.magnitude = std::abs(r.series_part + r.pole_part);
    r.budget = kfact * std::ldexp(1.0, static_cast<int>(k)) * (1.0 + s.t);
    r.ratio = r.magnitude / r.budget;
    const double a = (s.sigma - 1.0) * std::log(static_cast<double>(terms));
    r.tail_bound = boost::math::tgamma(k + 1.0, a) / std::pow(s.sigma - 1.0, k + 1.0);
    if (!std::isfinite(r.magnitude)) throw InvariantViolation("prh_bound_check: magnitude is not finite");
    return r;
}

}  // namespace primelab
