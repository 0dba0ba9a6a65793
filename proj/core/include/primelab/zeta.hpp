#pragma once

// zeta(s) and -zeta'/zeta(s) for Re s > 1, Perron's integral, the Goldbach
// circle identity, the truncated explicit formula and the derivative bound
// for zeta'/zeta + 1/(s-1).

#include <complex>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "primelab/sieve.hpp"

namespace primelab {

struct ComplexPoint {
    double sigma = 0.0;
    double t = 0.0;
    std::complex<double> s() const noexcept { return {sigma, t}; }
};

/// A truncated series value and a bound on what was cut off.
struct SeriesValue {
    std::complex<double> value;
    double tail_bound = 0.0;
};

/// sum_{n<=terms} n^{-s} + terms^{1-s}/(s-1); tail_bound = |s| terms^{-sigma}.
/// sigma > 1, terms >= 10.
SeriesValue zeta_eval(ComplexPoint s, std::uint64_t terms);

/// zeta'(s) by the differentiated series with the matching integral tail.
SeriesValue zeta_derivative_eval(ComplexPoint s, std::uint64_t terms);

struct EulerProductCheck {
    std::complex<double> series;
    std::complex<double> product;
    double gap = 0.0;
    double tail_bound = 0.0;  // bound on |series - product| from both truncations
};

/// prod_{p<=cutoff} (1 - p^{-s})^{-1} against zeta_eval with 10^6 terms.
/// sigma >= 1.2. Throws InvariantViolation when sigma = 2, cutoff >= 10^5
/// and the gap exceeds 10^-3.
EulerProductCheck euler_product_check(ComplexPoint s, std::uint64_t prime_cutoff,
                                      const SieveConfig& cfg = default_config());

/// sum_{n<=terms} Lambda(n) n^{-s}; tail_bound = log(terms) terms^{1-sigma}/(sigma-1).
SeriesValue log_deriv_eval(ComplexPoint s, std::uint64_t terms, const SieveConfig& cfg = default_config());

struct PerronResult {
    double value = 0.0;      // (1/2pi) Re int_{-T}^{T} z^{sigma+it}/(sigma+it) dt
    double indicator = 0.0;  // 0, 1/2 or 1
    double error_bound = 0.0;
};

/// z > 0, sigma > 0, T >= 10. error_bound is z^sigma/(pi T |log z|), or
/// sigma/(pi T) at z = 1.
PerronResult perron_indicator(double z, double sigma, double T);

/// Ordinates gamma of zeros 1/2 + i gamma, strictly ascending and positive.
class ZeroTable {
public:
    ZeroTable() = default;
    /// Throws FormatError unless strictly ascending and positive.
    ZeroTable(std::vector<double> ordinates, std::string source);

    std::span<const double> ordinates() const noexcept { return gammas_; }
    std::size_t size() const noexcept { return gammas_.size(); }
    bool empty() const noexcept { return gammas_.empty(); }
    double max_ordinate() const;
    const std::string& source() const noexcept { return source_; }

    /// The first `count` ordinates.
    ZeroTable prefix(std::size_t count) const;

private:
    std::vector<double> gammas_;
    std::string source_;
};

/// One decimal ordinate per line. Blank lines are skipped; anything else that
/// does not parse is a ParseError naming the line.
ZeroTable parse_zeros(std::istream& in, const std::string& source = "<stream>");
ZeroTable load_zeros(const std::filesystem::path& path);

struct ExplicitPsi {
    double x = 0.0;
    double T = 0.0;
    std::size_t zeros_used = 0;
    double approx = 0.0;  // x - sum_{gamma<=T} 2 Re(x^rho/rho) - log 2pi
    double truth = 0.0;   // psi*(x)
    double error = 0.0;   // approx - truth
};

/// x >= 10, zeros nonempty, T <= zeros.max_ordinate().
ExplicitPsi explicit_psi(double x, const ZeroTable& zeros, double T, const SieveConfig& cfg = default_config());
/// T = zeros.max_ordinate().
ExplicitPsi explicit_psi(double x, const ZeroTable& zeros, const SieveConfig& cfg = default_config());

struct GoldbachCheck {
    std::uint64_t n = 0;
    std::uint64_t direct = 0;  // ordered pairs (p, q), p + q = n
    std::uint64_t circle = 0;  // the same count from a length-M DFT, M > 2n
};

/// Even n with 4 <= n <= 10^6. Throws InvariantViolation if the counts differ.
GoldbachCheck goldbach_check(std::uint64_t n, const SieveConfig& cfg = default_config());

inline constexpr double kPrhMaxT = 1e4;

struct PrhCheck {
    unsigned k = 0;
    ComplexPoint s;
    std::complex<double> series_part;  // (-1)^{k+1} sum Lambda(n) (log n)^k n^{-s}
    std::complex<double> pole_part;    // (-1)^k k! / (s-1)^{k+1}
    double magnitude = 0.0;            // |series_part + pole_part|
    double budget = 0.0;               // k! 2^k (1 + t)
    double ratio = 0.0;                // magnitude / budget
    double tail_bound = 0.0;           // Gamma(k+1, (sigma-1) log N) / (sigma-1)^{k+1}
};

/// 1 <= k <= 20, 1 < sigma < 2, 0 <= t <= min(e^k, kPrhMaxT).
PrhCheck prh_bound_check(unsigned k, ComplexPoint s, std::uint64_t terms, const SieveConfig& cfg = default_config());

}  // namespace primelab
