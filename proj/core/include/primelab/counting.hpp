#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primelab/sieve.hpp"

namespace primelab {

/// pi, theta, psi, psi*, and M at one point, all from a single sieve pass.
struct CountSnapshot {
    std::uint64_t x = 0;
    std::uint64_t pi = 0;
    double theta = 0.0;     // sum of log p, p <= x
    double psi = 0.0;       // sum of log p over prime powers p^m <= x
    double psi_star = 0.0;  // psi, less (log x)/2 when x is itself a prime power
    std::int64_t mertens = 0;
};

CountSnapshot count_snapshot(std::uint64_t x, const SieveConfig& cfg = default_config());
/// Snapshots at every checkpoint from one pass to the largest; input order preserved.
std::vector<CountSnapshot> count_snapshots(std::span<const std::uint64_t> xs,
                                           const SieveConfig& cfg = default_config());

/// psi*(x) for real x >= 1. The half-jump applies only at integer prime powers.
double psi_star(double x, const SieveConfig& cfg = default_config());

/// Principal value of the integral of dt/log t from 0 to x (x >= 2).
/// Differs from the integral taken from 2 by li(2) = 1.04516...
double li(double x);

inline constexpr double kLegendreA = 1.08366;

/// x / (log x - A).
double legendre_approx(double x, double A = kLegendreA);

/// sum_{p <= N} (log p) / p.
double mertens_logsum(std::uint64_t N, const SieveConfig& cfg = default_config());

struct ComparisonRow {
    std::uint64_t x = 0;
    std::uint64_t pi = 0;
    std::int64_t li_overcount = 0;  // round(li(x)) - pi(x)
    double legendre_error = 0.0;    // x/(log x - A) - pi(x)
    friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

std::vector<ComparisonRow> comparison_table(std::span<const std::uint64_t> xs,
                                            const SieveConfig& cfg = default_config());

/// Gauss's hand counts as printed in his letter to Encke. These overshoot the
/// true pi(x) (e.g. 41556 vs 41538 at 500000) and are kept only to reproduce
/// the historical Legendre error column.
struct HistoricalCount {
    std::uint64_t x;
    std::uint64_t pi;
};
std::span<const HistoricalCount> gauss_historical_counts();

/// The Legendre column against a historical count: legendre_approx(x, A) - pi.
double legendre_error(std::uint64_t x, std::uint64_t pi, double A = kLegendreA);

/// CSV with header x,pi,li_overcount,legendre_error.
std::string comparison_csv(std::span<const ComparisonRow> rows);
/// Column-aligned markdown table with the same payload as the CSV.
std::string comparison_markdown(std::span<const ComparisonRow> rows);
/// Inverse of comparison_csv. Throws ParseError on malformed lines.
std::vector<ComparisonRow> parse_comparison_csv(std::string_view csv);

}  // namespace primelab
