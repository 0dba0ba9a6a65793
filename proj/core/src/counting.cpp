#include "primelab/counting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "primelab/numeric.hpp"

namespace primelab {

namespace {

std::vector<std::uint64_t> sorted_unique(std::span<const std::uint64_t> xs) {
    std::vector<std::uint64_t> v(xs.begin(), xs.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::size_t index_of(const std::vector<std::uint64_t>& sorted, std::uint64_t x) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
}

bool is_prime_power(std::uint64_t n, const SieveConfig& cfg) {
    if (n < 2) return false;
    return factorize(n, cfg).factors.size() == 1;
}

}  // namespace

std::vector<CountSnapshot> count_snapshots(std::span<const std::uint64_t> xs, const SieveConfig& cfg) {
    if (xs.empty()) return {};
    const auto pts = sorted_unique(xs);
    if (pts.front() < 2) throw RangeError("count_snapshot: x must be at least 2");
    const std::uint64_t top = pts.back();
    check_sieve_bound(top, cfg, "count_snapshot");

    std::vector<CountSnapshot> snaps(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) snaps[k].x = pts[k];

    // pi and theta.
    {
        std::uint64_t count = 0;
        CompensatedSum theta;
        std::size_t k = 0;
        PrimeStream stream(2, top, cfg);
        for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch()) {
            for (std::uint64_t p : batch) {
                while (k < pts.size() && pts[k] < p) {
                    snaps[k].pi = count;
                    snaps[k].theta = theta.value();
                    ++k;
                }
                ++count;
                theta.add(std::log(static_cast<double>(p)));
            }
        }
        for (; k < pts.size(); ++k) {
            snaps[k].pi = count;
            snaps[k].theta = theta.value();
        }
    }

    // psi adds log p once more for each higher power p^m <= x, m >= 2.
    const auto roots = small_primes(isqrt(top));
    for (auto& s : snaps) {
        CompensatedSum extra;
        for (std::uint64_t p : roots) {
            if (p * p > s.x) break;
            const double lp = std::log(static_cast<double>(p));
            for (std::uint64_t pk = p * p; pk <= s.x; pk *= p) {
                extra.add(lp);
                if (pk > s.x / p) break;
            }
        }
        s.psi = s.theta + extra.value();
        s.psi_star = is_prime_power(s.x, cfg) ? s.psi - 0.5 * std::log(static_cast<double>(s.x)) : s.psi;
    }

    // Mertens.
    {
        std::int64_t running = 0;
        std::size_t k = 0;
        MobiusStream stream(1, top, cfg);
        for (auto seg = stream.next_segment(); !seg.mu.empty() && k < pts.size(); seg = stream.next_segment()) {
            for (std::size_t i = 0; i < seg.mu.size(); ++i) {
                running += seg.mu[i];
                while (k < pts.size() && pts[k] == seg.first + i) snaps[k++].mertens = running;
            }
        }
    }

    std::vector<CountSnapshot> out;
    out.reserve(xs.size());
    for (std::uint64_t x : xs) out.push_back(snaps[index_of(pts, x)]);
    return out;
}

CountSnapshot count_snapshot(std::uint64_t x, const SieveConfig& cfg) {
    const std::uint64_t xs[] = {x};
    return count_snapshots(xs, cfg)[0];
}

double psi_star(double x, const SieveConfig& cfg) {
    if (!(x >= 1.0)) throw DomainError("psi_star: x must be at least 1");
    const auto n = static_cast<std::uint64_t>(std::floor(x));
    if (n < 2) return 0.0;
    const auto snap = count_snapshot(n, cfg);
    return static_cast<double>(n) == x ? snap.psi_star : snap.psi;
}

namespace {

// 1/log t - 1/(t - 1); removable singularity at t = 1 with value 1/2.
double log_reciprocal_remainder(double t) {
    const double u = t - 1.0;
    if (std::fabs(u) < 1e-4) return 0.5 - u / 12.0 + u * u / 24.0 - 19.0 * u * u * u / 720.0;
    return 1.0 / std::log(t) - 1.0 / u;
}

}  // namespace

double li(double x) {
    if (!(x >= 2.0)) throw DomainError("li: x must be at least 2");
    // Excise (1 - d, 1 + d). Inside it 1/log t = 1/(t-1) + smooth; the 1/(t-1)
    // part has zero principal value over a symmetric interval, so only the
    // smooth remainder is integrated there.
    constexpr double d = 0.25;
    constexpr double tol = 1e-12;

    // [0, 1 - d] with t = exp(-u).
    const double u0 = -std::log1p(-d);
    const double left =
        -integrate([](double u) { return std::exp(-u) / u; }, u0, std::numeric_limits<double>::infinity(), tol).value;

    const double middle = integrate(log_reciprocal_remainder, 1.0 - d, 1.0 + d, tol).value;

    // [1 + d, x] with t = exp(u), in unit-width panels.
    CompensatedSum right;
    const double u_end = std::log(x);
    for (double a = std::log1p(d); a < u_end; a += 1.0) {
        const double b = std::min(a + 1.0, u_end);
        right.add(integrate([](double u) { return std::exp(u) / u; }, a, b, tol).value);
    }

    CompensatedSum total;
    total.add(left);
    total.add(middle);
    total.add(right.value());
    return total.value();
}

double legendre_approx(double x, double A) {
    if (!(x > 0.0)) throw DomainError("legendre_approx: x must be positive");
    const double denom = std::log(x) - A;
    if (!(denom > 0.0)) throw DomainError("legendre_approx: needs log x > A");
    return x / denom;
}

double mertens_logsum(std::uint64_t N, const SieveConfig& cfg) {
    if (N < 2) throw RangeError("mertens_logsum: N must be at least 2");
    CompensatedSum sum;
    PrimeStream stream(2, N, cfg);
    for (auto batch = stream.next_batch(); !batch.empty(); batch = stream.next_batch())
        for (std::uint64_t p : batch) sum.add(std::log(static_cast<double>(p)) / static_cast<double>(p));
    return sum.value();
}

std::vector<ComparisonRow> comparison_table(std::span<const std::uint64_t> xs, const SieveConfig& cfg) {
    std::vector<ComparisonRow> rows;
    if (xs.empty()) return rows;
    for (std::uint64_t x : xs)
        if (x < 3) throw RangeError("comparison_table: x must be at least 3");
    const auto pis = prime_counts(xs, cfg);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = static_cast<double>(xs[i]);
        ComparisonRow r;
        r.x = xs[i];
        r.pi = pis[i];
        r.li_overcount = std::llround(li(x)) - static_cast<std::int64_t>(pis[i]);
        r.legendre_error = legendre_approx(x) - static_cast<double>(pis[i]);
        rows.push_back(r);
    }
    return rows;
}

std::span<const HistoricalCount> gauss_historical_counts() {
    static constexpr std::array<HistoricalCount, 6> table{{
        {500'000, 41'556},
        {1'000'000, 78'501},
        {1'500'000, 114'112},
        {2'000'000, 148'883},
        {2'500'000, 183'016},
        {3'000'000, 216'745},
    }};
    return table;
}

double legendre_error(std::uint64_t x, std::uint64_t pi, double A) {
    return legendre_approx(static_cast<double>(x), A) - static_cast<double>(pi);
}

std::string comparison_csv(std::span<const ComparisonRow> rows) {
    std::string out = "x,pi,li_overcount,legendre_error\n";
    for (const auto& r : rows) out += fmt::format("{},{},{},{:.6f}\n", r.x, r.pi, r.li_overcount, r.legendre_error);
    return out;
}

std::string comparison_markdown(std::span<const ComparisonRow> rows) {
    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"x", "pi", "li_overcount", "legendre_error"});
    for (const auto& r : rows)
        cells.push_back({fmt::format("{}", r.x), fmt::format("{}", r.pi), fmt::format("{}", r.li_overcount),
                         fmt::format("{:.6f}", r.legendre_error)});
    std::array<std::size_t, 4> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());

    std::string out;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out += "|";
        for (std::size_t c = 0; c < 4; ++c) out += fmt::format(" {:>{}} |", cells[r][c], width[c]);
        out += "\n";
        if (r == 0) {
            out += "|";
            for (std::size_t c = 0; c < 4; ++c) out += std::string(width[c] + 1, '-') + ":|";
            out += "\n";
        }
    }
    return out;
}

std::vector<ComparisonRow> parse_comparison_csv(std::string_view csv) {
    std::vector<ComparisonRow> rows;
    std::istringstream in{std::string(csv)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) {
            if (line != "x,pi,li_overcount,legendre_error") throw ParseError(lineno, "unexpected header");
            continue;
        }
        if (line.empty()) continue;
        ComparisonRow r;
        char c1 = 0, c2 = 0, c3 = 0;
        std::istringstream fields(line);
        if (!(fields >> r.x >> c1 >> r.pi >> c2 >> r.li_overcount >> c3 >> r.legendre_error) || c1 != ',' ||
            c2 != ',' || c3 != ',')
            throw ParseError(lineno, "expected x,pi,li_overcount,legendre_error");
        rows.push_back(r);
    }
    return rows;
}

}  // namespace primelab
