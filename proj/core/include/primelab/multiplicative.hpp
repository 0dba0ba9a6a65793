#pragma once

// Multiplicative functions given by their values on prime powers, mean values,
// the pretentious distance and the Halasz-type comparison.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include "primelab/characters.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

using Complex = std::complex<double>;

class MultiplicativeFunction {
public:
    using PrimePowerRule = std::function<Complex(std::uint64_t p, unsigned k)>;

    /// `bounded` promises |f(n)| <= 1 for all n; distance and Halasz require it.
    MultiplicativeFunction(std::string name, PrimePowerRule rule, bool bounded);

    const std::string& name() const noexcept { return name_; }
    bool bounded() const noexcept { return bounded_; }
    Complex at_prime_power(std::uint64_t p, unsigned k) const { return rule_(p, k); }
    Complex at_prime(std::uint64_t p) const { return rule_(p, 1); }

    static MultiplicativeFunction one();
    static MultiplicativeFunction mobius();
    /// n -> n^{it}.
    static MultiplicativeFunction nit(double t);
    static MultiplicativeFunction character(DirichletCharacter chi);
    /// tau(n); unbounded.
    static MultiplicativeFunction divisor_count();
    /// sigma(n); unbounded.
    static MultiplicativeFunction divisor_sum();
    /// Completely multiplicative with f(p) = exp(i theta_p), theta_p a
    /// deterministic hash of (seed, p).
    static MultiplicativeFunction random_unimodular(std::uint64_t seed);

    /// n -> f(n)^2.
    MultiplicativeFunction squared() const;

private:
    std::string name_;
    PrimePowerRule rule_;
    bool bounded_;
};

Complex mf_eval(const MultiplicativeFunction& f, std::uint64_t n, const SieveConfig& cfg = default_config());

/// (1/N) sum_{n<=N} f(n). N >= 1.
Complex mean_value(const MultiplicativeFunction& f, std::uint64_t N, const SieveConfig& cfg = default_config());

struct NitMeanCheck {
    double t = 0.0;
    std::uint64_t N = 0;
    Complex computed;   // (1/N) sum n^{it}
    Complex predicted;  // N^{it} / (1 + it)
    double gap = 0.0;
};

/// Throws InvariantViolation if gap > 0.05 with N >= 10^4 and |t| <= 10.
NitMeanCheck nit_mean_check(double t, std::uint64_t N);

struct Distance {
    double value = 0.0;
    double squared = 0.0;
};

/// D(f, g; x)^2 = sum_{p<=x} (1 - Re f(p) conj(g(p))) / p. Both f, g bounded; x >= 2.
Distance distance(const MultiplicativeFunction& f, const MultiplicativeFunction& g, std::uint64_t x,
                  const SieveConfig& cfg = default_config());

/// sqrt(1 - Re(w conj(y))) for |w|, |y| <= 1.
double eta(Complex w, Complex y);

/// eta(w, y) <= eta(w, z) + eta(z, y), with 1e-12 slack.
bool eta_triangle_check(Complex w, Complex y, Complex z);

inline constexpr std::uint64_t kHalaszSeriesCap = 10'000'000;

struct HalaszRatio {
    std::uint64_t x = 0;
    double t = 0.0;
    double sigma = 0.0;         // 1 + 1/log x
    std::uint64_t cutoff = 0;   // terms summed
    double series_abs = 0.0;    // |sum_{n<=cutoff} f(n) n^{-sigma-it}|
    double tail_bound = 0.0;    // cutoff^{1-sigma} / (sigma - 1)
    double pretentious = 0.0;   // log x * exp(-D(f, n^{it}; x)^2)
    double ratio = 0.0;
};

/// f bounded, x >= 100, |t| <= 100. The series is summed to min(x^4, cap).
HalaszRatio halasz_ratio(const MultiplicativeFunction& f, std::uint64_t x, double t,
                         std::uint64_t cap = kHalaszSeriesCap, const SieveConfig& cfg = default_config());

struct DistanceMinimum {
    double t_min = 0.0;
    double d_min = 0.0;
};

/// Minimizes D(f, n^{it}; x) over the grid {k * step : |k * step| <= T},
/// ties going to the smaller t.
DistanceMinimum distance_min_t(const MultiplicativeFunction& f, std::uint64_t x, double T, double step,
                               const SieveConfig& cfg = default_config());

}  // namespace primelab
