#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "primelab/characters.hpp"
#include "primelab/counting.hpp"
#include "primelab/elementary.hpp"
#include "primelab/multiplicative.hpp"
#include "primelab/progressions.hpp"
#include "primelab/sieve.hpp"
#include "primelab/zeta.hpp"

namespace primelab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Plain, Csv, Markdown };

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// Verbatim text used for plain output instead of key=value rows.
    std::optional<std::string> plain_text;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

std::string render(const Table& t, Format f) {
    std::string out;
    switch (f) {
        case Format::Csv: {
            for (std::size_t c = 0; c < t.header.size(); ++c) out += (c ? "," : "") + t.header[c];
            out += "\n";
            for (const auto& row : t.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
                out += "\n";
            }
            return out;
        }
        case Format::Markdown: {
            std::vector<std::size_t> width(t.header.size());
            for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
            for (const auto& row : t.rows)
                for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
            auto line = [&](const std::vector<std::string>& cells) {
                out += "|";
                for (std::size_t c = 0; c < cells.size(); ++c) out += fmt::format(" {:>{}} |", cells[c], width[c]);
                out += "\n";
            };
            line(t.header);
            out += "|";
            for (std::size_t c = 0; c < width.size(); ++c) out += std::string(width[c] + 1, '-') + ":|";
            out += "\n";
            for (const auto& row : t.rows) line(row);
            return out;
        }
        case Format::Plain: break;
    }
    if (t.plain_text) return *t.plain_text;
    for (const auto& row : t.rows) {
        if (t.header.size() == 1) {
            out += row[0] + "\n";
            continue;
        }
        for (std::size_t c = 0; c < row.size(); ++c) out += fmt::format("{}{}={}", c ? " " : "", t.header[c], row[c]);
        out += "\n";
    }
    return out;
}

std::string num(double v) { return fmt::format("{:.6f}", v); }
std::string sci(double v) { return fmt::format("{:.6e}", v); }
template <typename I>
std::string integer(I v) {
    return fmt::format("{}", v);
}

std::uint64_t to_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    if (auto [p, ec] = std::from_chars(b, e, v); ec == std::errc() && p == e) return v;
    // 1e9-style literals.
    double d = 0.0;
    if (auto [p, ec] = std::from_chars(b, e, d); ec == std::errc() && p == e && d >= 0.0 && d < 1.8e19 &&
                                                 std::floor(d) == d)
        return static_cast<std::uint64_t>(d);
    throw UsageError(fmt::format("{}: '{}' is not a nonnegative integer", what, s));
}

std::int64_t to_i64(const std::string& s, const char* what) {
    std::int64_t v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    if (auto [p, ec] = std::from_chars(b, e, v); ec == std::errc() && p == e) return v;
    throw UsageError(fmt::format("{}: '{}' is not an integer", what, s));
}

std::complex<double> to_complex(const std::string& s, const char* what) {
    const auto comma = s.find(',');
    double re = 0.0, im = 0.0;
    auto parse = [&](std::string_view part, double& out) {
        auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        return ec == std::errc() && p == part.data() + part.size();
    };
    const std::string_view sv(s);
    const bool ok = comma == std::string::npos ? parse(sv, re) : parse(sv.substr(0, comma), re) && parse(sv.substr(comma + 1), im);
    if (!ok) throw UsageError(fmt::format("{}: '{}' is not a complex number (re or re,im)", what, s));
    return {re, im};
}

/// "1", "mu", "nit:T", "chi:Q:INDEX", "tau", "sigma", "random:SEED", each
/// optionally followed by "^2".
MultiplicativeFunction parse_function(std::string spec) {
    bool square = false;
    if (spec.size() > 2 && spec.ends_with("^2")) {
        square = true;
        spec.resize(spec.size() - 2);
    }
    auto args = [&](std::size_t colon) { return spec.substr(colon + 1); };
    auto make = [&]() -> MultiplicativeFunction {
        if (spec == "1" || spec == "one") return MultiplicativeFunction::one();
        if (spec == "mu") return MultiplicativeFunction::mobius();
        if (spec == "tau") return MultiplicativeFunction::divisor_count();
        if (spec == "sigma") return MultiplicativeFunction::divisor_sum();
        if (spec.starts_with("nit:")) {
            double t = 0.0;
            const auto a = args(3);
            if (auto [p, ec] = std::from_chars(a.data(), a.data() + a.size(), t); ec != std::errc() || p != a.data() + a.size())
                throw UsageError("function: bad t in '" + spec + "'");
            return MultiplicativeFunction::nit(t);
        }
        if (spec.starts_with("random:")) return MultiplicativeFunction::random_unimodular(to_u64(args(6), "function seed"));
        if (spec.starts_with("chi:")) {
            const auto rest = args(3);
            const auto colon = rest.find(':');
            if (colon == std::string::npos) throw UsageError("function: expected chi:Q:INDEX");
            const CharacterTable table(to_u64(rest.substr(0, colon), "chi modulus"));
            return MultiplicativeFunction::character(table.character(to_u64(rest.substr(colon + 1), "chi index")));
        }
        throw UsageError("function: unknown spec '" + spec + "' (1, mu, nit:T, chi:Q:I, tau, sigma, random:SEED)");
    };
    auto f = make();
    return square ? f.squared() : f;
}

struct Globals {
    std::string format = "plain";
    std::string zeros;
    std::string max = "1e9";
    std::uint64_t seed = 20131;
};

using Action = std::function<Table()>;

// ---- subcommand builders ------------------------------------------------

void add_sieve(CLI::App& app, Action& action) {
    auto* sieve = app.add_subcommand("sieve", "Primes, Moebius values, factorizations, von Mangoldt");
    sieve->require_subcommand(1);

    auto* primes = sieve->add_subcommand("primes", "List (or count) the primes in [from, hi]");
    auto hi = std::make_shared<std::string>();
    auto lo = std::make_shared<std::string>("2");
    auto count_only = std::make_shared<bool>(false);
    primes->add_option("hi", *hi, "Upper end")->required();
    primes->add_option("--from", *lo, "Lower end");
    primes->add_flag("--count", *count_only, "Print only the count");
    primes->callback([&action, hi, lo, count_only] {
        action = [hi, lo, count_only] {
            const auto a = to_u64(*lo, "from"), b = to_u64(*hi, "hi");
            Table t;
            if (*count_only) {
                t.header = {"from", "hi", "count"};
                const std::uint64_t below = a > 2 ? prime_count(a - 1) : 0;
                t.add({integer(a), integer(b), integer(prime_count(b) - below)});
            } else {
                t.header = {"p"};
                for (std::uint64_t p : primes_between(a, b)) t.add({integer(p)});
            }
            return t;
        };
    });

    auto* mob = sieve->add_subcommand("mobius", "mu(n) for lo <= n <= hi");
    auto mlo = std::make_shared<std::string>(), mhi = std::make_shared<std::string>();
    mob->add_option("lo", *mlo)->required();
    mob->add_option("hi", *mhi)->required();
    mob->callback([&action, mlo, mhi] {
        action = [mlo, mhi] {
            const auto a = to_u64(*mlo, "lo"), b = to_u64(*mhi, "hi");
            const auto mu = mobius_range(a, b);
            Table t{{"n", "mu"}, {}, {}};
            for (std::size_t i = 0; i < mu.size(); ++i) t.add({integer(a + i), integer(int{mu[i]})});
            return t;
        };
    });

    auto* fac = sieve->add_subcommand("factor", "Complete factorization by trial division");
    auto fns = std::make_shared<std::vector<std::string>>();
    fac->add_option("n", *fns)->required();
    fac->callback([&action, fns] {
        action = [fns] {
            Table t{{"n", "factorization"}, {}, {}};
            for (const auto& s : *fns) {
                const auto n = to_u64(s, "n");
                if (n == 0) throw RangeError("factorize: n must be positive");
                const auto f = factorize(n);
                t.add({integer(n), n == 1 ? "unit" : (f.is_prime() ? "prime" : f.to_string())});
            }
            return t;
        };
    });

    auto* mang = sieve->add_subcommand("mangoldt", "Lambda(n)");
    auto mns = std::make_shared<std::vector<std::string>>();
    mang->add_option("n", *mns)->required();
    mang->callback([&action, mns] {
        action = [mns] {
            Table t{{"n", "lambda"}, {}, {}};
            for (const auto& s : *mns) {
                const auto n = to_u64(s, "n");
                t.add({integer(n), num(mangoldt(n))});
            }
            return t;
        };
    });
}

void add_count(CLI::App& app, Action& action) {
    auto* count = app.add_subcommand("count", "pi, theta, psi, psi*, M; li and Legendre's approximation");
    count->require_subcommand(1);

    auto* snap = count->add_subcommand("snapshot", "All counting functions at each x, from one sieve pass");
    auto xs = std::make_shared<std::vector<std::string>>();
    snap->add_option("x", *xs)->required();
    snap->callback([&action, xs] {
        action = [xs] {
            std::vector<std::uint64_t> pts;
            for (const auto& s : *xs) pts.push_back(to_u64(s, "x"));
            Table t{{"x", "pi", "theta", "psi", "psi_star", "mertens"}, {}, {}};
            for (const auto& c : count_snapshots(pts))
                t.add({integer(c.x), integer(c.pi), num(c.theta), num(c.psi), num(c.psi_star), integer(c.mertens)});
            return t;
        };
    });

    auto* li_cmd = count->add_subcommand("li", "Principal-value logarithmic integral");
    auto lx = std::make_shared<std::vector<double>>();
    li_cmd->add_option("x", *lx)->required();
    li_cmd->callback([&action, lx] {
        action = [lx] {
            Table t{{"x", "li"}, {}, {}};
            for (double x : *lx) t.add({num(x), num(li(x))});
            return t;
        };
    });

    auto* leg = count->add_subcommand("legendre", "x / (log x - A)");
    auto gx = std::make_shared<std::vector<double>>();
    auto A = std::make_shared<double>(kLegendreA);
    leg->add_option("x", *gx)->required();
    leg->add_option("--A", *A, "Legendre's constant");
    leg->callback([&action, gx, A] {
        action = [gx, A] {
            Table t{{"x", "A", "legendre"}, {}, {}};
            for (double x : *gx) t.add({num(x), num(*A), num(legendre_approx(x, *A))});
            return t;
        };
    });
}

void add_tables(CLI::App& app, Action& action, const Globals& g) {
    auto* tables = app.add_subcommand("tables", "pi(10^k) against li and Legendre, or the historical comparison");
    auto which = std::make_shared<int>(3);
    tables->add_option("--which", *which, "3: powers of ten up to --max; 1: historical counts")
        ->check(CLI::IsMember({1, 3}));
    tables->callback([&action, which, &g] {
        action = [which, &g] {
            Table t;
            if (*which == 1) {
                t.header = {"x", "pi_historical", "legendre", "legendre_error"};
                for (const auto& h : gauss_historical_counts())
                    t.add({integer(h.x), integer(h.pi), num(legendre_approx(static_cast<double>(h.x))),
                           num(legendre_error(h.x, h.pi))});
                return t;
            }
            const auto top = to_u64(g.max, "--max");
            std::vector<std::uint64_t> xs;
            for (std::uint64_t x = 1000; x <= top; x *= 10) xs.push_back(x);
            t.header = {"x", "pi", "li_overcount", "legendre_error"};
            for (const auto& r : comparison_table(xs))
                t.add({integer(r.x), integer(r.pi), integer(r.li_overcount), num(r.legendre_error)});
            t.plain_text = render(t, Format::Csv);
            return t;
        };
    });
}

void add_mertens(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("mertens", "sum_{p<=N} log p / p against log N");
    auto ns = std::make_shared<std::vector<std::string>>();
    cmd->add_option("N", *ns)->required();
    cmd->callback([&action, ns] {
        action = [ns] {
            Table t{{"N", "sum", "log_N", "difference"}, {}, {}};
            for (const auto& s : *ns) {
                const auto N = to_u64(s, "N");
                const double v = mertens_logsum(N), l = std::log(static_cast<double>(N));
                t.add({integer(N), num(v), num(l), num(v - l)});
            }
            return t;
        };
    });
}

void add_chebyshev(CLI::App& app, Action& action) {
    auto* cheb = app.add_subcommand("chebyshev", "Central binomial bounds, valuations, Bertrand, Eratosthenes");
    cheb->require_subcommand(1);

    auto* binom = cheb->add_subcommand("binom", "prod_{n<p<=2n} p <= C(2n,n) <= 4^n and p^e_p <= 2n");
    auto bn = std::make_shared<std::string>();
    binom->add_option("n", *bn)->required();
    binom->callback([&action, bn] {
        action = [bn] {
            const auto r = binom_prime_bounds(to_u64(*bn, "n"));
            Table t{{"n", "prime_block_log", "central_log", "n_log4", "max_prime_power"}, {}, {}};
            t.add({integer(r.n), num(r.prime_block_log), num(r.central_log), num(2.0 * r.n * std::log(2.0)),
                   integer(r.max_prime_power)});
            return t;
        };
    });

    auto* kum = cheb->add_subcommand("kummer", "Exponent of p in C(2n, n)");
    auto kp = std::make_shared<std::string>(), kn = std::make_shared<std::string>();
    kum->add_option("p", *kp)->required();
    kum->add_option("n", *kn)->required();
    kum->callback([&action, kp, kn] {
        action = [kp, kn] {
            const auto p = to_u64(*kp, "p"), n = to_u64(*kn, "n");
            Table t{{"p", "n", "exponent"}, {}, {}};
            t.add({integer(p), integer(n), integer(kummer_exponent(p, n))});
            return t;
        };
    });

    auto* val = cheb->add_subcommand("valuation", "Exponent of p in N!");
    auto vp = std::make_shared<std::string>(), vn = std::make_shared<std::string>();
    val->add_option("p", *vp)->required();
    val->add_option("N", *vn)->required();
    val->callback([&action, vp, vn] {
        action = [vp, vn] {
            const auto p = to_u64(*vp, "p"), N = to_u64(*vn, "N");
            Table t{{"p", "N", "valuation"}, {}, {}};
            t.add({integer(p), integer(N), integer(factorial_valuation(p, N))});
            return t;
        };
    });

    auto* lf = cheb->add_subcommand("log-factorial", "log N! against N(log N - 1) + 1");
    auto lfn = std::make_shared<std::string>();
    lf->add_option("N", *lfn)->required();
    lf->callback([&action, lfn] {
        action = [lfn] {
            const auto r = log_factorial_estimate(to_u64(*lfn, "N"));
            Table t{{"N", "exact", "estimate", "gap"}, {}, {}};
            t.add({integer(r.N), num(r.exact), num(r.estimate), num(r.exact - r.estimate)});
            return t;
        };
    });

    auto* bert = cheb->add_subcommand("bertrand", "Least prime in (n, 2n)");
    auto btn = std::make_shared<std::string>();
    bert->add_option("n", *btn)->required();
    bert->callback([&action, btn] {
        action = [btn] {
            const auto n = to_u64(*btn, "n");
            Table t{{"n", "prime"}, {}, {}};
            t.add({integer(n), integer(bertrand_check(n))});
            return t;
        };
    });

    auto* era = cheb->add_subcommand("eratosthenes", "Integers <= x free of primes <= y, against the product bound");
    auto ex = std::make_shared<std::string>(), ey = std::make_shared<std::string>();
    era->add_option("x", *ex)->required();
    era->add_option("y", *ey)->required();
    era->callback([&action, ex, ey] {
        action = [ex, ey] {
            const auto r = eratosthenes_bound(to_u64(*ex, "x"), to_u64(*ey, "y"));
            Table t{{"x", "y", "rough_count", "bound", "primes_above_y"}, {}, {}};
            t.add({integer(r.x), integer(r.y), integer(r.rough_count), num(r.bound), integer(r.primes_above_y)});
            return t;
        };
    });
}

void add_lcm(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("lcm-identity", "log lcm(1..x) against sum mu(n) log floor(x/n)!");
    auto x = std::make_shared<std::string>();
    auto N = std::make_shared<std::string>();
    auto primes = std::make_shared<std::vector<std::string>>();
    cmd->add_option("x", *x)->required();
    cmd->add_option("--truncate", *N, "Keep only n <= N (requires x > N^2)");
    cmd->add_option("--primes", *primes, "Primes > sqrt(x) whose exponent to report")->delimiter(',');
    cmd->callback([&action, x, N, primes] {
        action = [x, N, primes] {
            const auto xv = to_u64(*x, "x");
            Table t;
            if (N->empty()) {
                if (!primes->empty()) throw UsageError("--primes needs --truncate");
                const auto r = lcm_identity_check(xv);
                t.header = {"x", "lhs_log", "rhs_log", "difference", "exact"};
                t.add({integer(r.x), num(r.lhs_log), num(r.rhs_log), sci(r.lhs_log - r.rhs_log),
                       r.exact_match ? (*r.exact_match ? "yes" : "no") : "-"});
                return t;
            }
            std::vector<std::uint64_t> ps;
            for (const auto& s : *primes) ps.push_back(to_u64(s, "prime"));
            const auto r = truncated_identity(xv, to_u64(*N, "N"), ps);
            t.header = {"x", "N", "log_value", "prime", "exponent"};
            if (r.exponents.empty()) t.add({integer(r.x), integer(r.N), num(r.log_value), "-", "-"});
            for (const auto& e : r.exponents)
                t.add({integer(r.x), integer(r.N), num(r.log_value), integer(e.prime), integer(e.exponent)});
            return t;
        };
    });
}

void add_selberg(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("selberg", "(theta(x) log x + sum_{pq<=x} log p log q - 2x log x) / x");
    auto xs = std::make_shared<std::vector<std::string>>();
    cmd->add_option("x", *xs)->required();
    cmd->callback([&action, xs] {
        action = [xs] {
            Table t{{"x", "error"}, {}, {}};
            for (const auto& s : *xs) {
                const auto x = to_u64(s, "x");
                t.add({integer(x), num(selberg_error(x))});
            }
            return t;
        };
    });
}

void add_functional(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("functional", "(G(x) log x + sum_p G(x/p) log p) / x for G = theta - t or M");
    auto which = std::make_shared<std::string>("theta");
    auto xs = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--which", *which)->check(CLI::IsMember({"theta", "mertens"}));
    cmd->add_option("x", *xs)->required();
    cmd->callback([&action, which, xs] {
        action = [which, xs] {
            const auto kind = *which == "theta" ? FunctionalKind::ThetaError : FunctionalKind::Mertens;
            Table t{{"x", "which", "error"}, {}, {}};
            for (const auto& s : *xs) {
                const auto x = to_u64(s, "x");
                t.add({integer(x), *which, num(functional_error(x, kind))});
            }
            return t;
        };
    });
}

void add_distance(CLI::App& app, Action& action) {
    auto* dist = app.add_subcommand("distance", "Multiplicative functions: distance, mean values, evaluation");
    dist->require_subcommand(1);
    dist->footer("Functions: 1, mu, nit:T, chi:Q:INDEX, tau, sigma, random:SEED; append ^2 to square.");

    auto* pair = dist->add_subcommand("pair", "D(f, g; x)");
    auto f = std::make_shared<std::string>(), g = std::make_shared<std::string>(), x = std::make_shared<std::string>();
    pair->add_option("--f", *f)->required();
    pair->add_option("--g", *g)->required();
    pair->add_option("--x", *x)->required();
    pair->callback([&action, f, g, x] {
        action = [f, g, x] {
            const auto d = distance(parse_function(*f), parse_function(*g), to_u64(*x, "x"));
            Table t{{"f", "g", "x", "distance", "distance_squared"}, {}, {}};
            t.add({*f, *g, *x, num(d.value), num(d.squared)});
            return t;
        };
    });

    auto* mint = dist->add_subcommand("min-t", "Grid minimum of D(f, n^{it}; x) over |t| <= T");
    auto mf = std::make_shared<std::string>(), mx = std::make_shared<std::string>();
    auto T = std::make_shared<double>(2.0), step = std::make_shared<double>(0.01);
    mint->add_option("--f", *mf)->required();
    mint->add_option("--x", *mx)->required();
    mint->add_option("--T", *T);
    mint->add_option("--step", *step);
    mint->callback([&action, mf, mx, T, step] {
        action = [mf, mx, T, step] {
            const auto r = distance_min_t(parse_function(*mf), to_u64(*mx, "x"), *T, *step);
            Table t{{"f", "x", "t_min", "d_min"}, {}, {}};
            t.add({*mf, *mx, num(r.t_min), num(r.d_min)});
            return t;
        };
    });

    auto* mean = dist->add_subcommand("mean", "(1/N) sum_{n<=N} f(n)");
    auto ef = std::make_shared<std::string>(), eN = std::make_shared<std::string>();
    mean->add_option("--f", *ef)->required();
    mean->add_option("--N", *eN)->required();
    mean->callback([&action, ef, eN] {
        action = [ef, eN] {
            const auto v = mean_value(parse_function(*ef), to_u64(*eN, "N"));
            Table t{{"f", "N", "re", "im", "abs"}, {}, {}};
            t.add({*ef, *eN, num(v.real()), num(v.imag()), num(std::abs(v))});
            return t;
        };
    });

    auto* ev = dist->add_subcommand("eval", "f(n) from the factorization of n");
    auto vf = std::make_shared<std::string>();
    auto vn = std::make_shared<std::vector<std::string>>();
    ev->add_option("--f", *vf)->required();
    ev->add_option("n", *vn)->required();
    ev->callback([&action, vf, vn] {
        action = [vf, vn] {
            const auto fn = parse_function(*vf);
            Table t{{"n", "re", "im"}, {}, {}};
            for (const auto& s : *vn) {
                const auto n = to_u64(s, "n");
                const auto v = mf_eval(fn, n);
                t.add({integer(n), num(v.real()), num(v.imag())});
            }
            return t;
        };
    });

    auto* nm = dist->add_subcommand("nit-mean", "(1/N) sum n^{it} against N^{it}/(1+it)");
    auto nt = std::make_shared<double>(1.0);
    auto nN = std::make_shared<std::string>("10000");
    nm->add_option("--t", *nt);
    nm->add_option("--N", *nN);
    nm->callback([&action, nt, nN] {
        action = [nt, nN] {
            const auto r = nit_mean_check(*nt, to_u64(*nN, "N"));
            Table t{{"t", "N", "computed_re", "computed_im", "predicted_re", "predicted_im", "gap"}, {}, {}};
            t.add({num(r.t), integer(r.N), num(r.computed.real()), num(r.computed.imag()), num(r.predicted.real()),
                   num(r.predicted.imag()), sci(r.gap)});
            return t;
        };
    });
}

void add_eta(CLI::App& app, Action& action, const Globals& g) {
    auto* cmd = app.add_subcommand("eta", "eta(w, y) = sqrt(1 - Re(w conj y)) and its triangle inequality");
    auto w = std::make_shared<std::string>(), y = std::make_shared<std::string>(), z = std::make_shared<std::string>();
    auto sweep = std::make_shared<std::string>();
    cmd->add_option("--w", *w, "re or re,im");
    cmd->add_option("--y", *y);
    cmd->add_option("--z", *z, "Check eta(w,y) <= eta(w,z) + eta(z,y)");
    cmd->add_option("--random", *sweep, "Check the triangle inequality on this many random disk triples (uses --seed)");
    cmd->callback([&action, w, y, z, sweep, &g] {
        action = [w, y, z, sweep, &g] {
            Table t;
            if (!sweep->empty()) {
                const auto count = to_u64(*sweep, "--random");
                std::mt19937_64 rng(g.seed);
                std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * std::acos(-1.0));
                auto draw = [&] { return std::polar(std::sqrt(radius(rng)), angle(rng)); };
                std::uint64_t violations = 0;
                for (std::uint64_t i = 0; i < count; ++i) violations += !eta_triangle_check(draw(), draw(), draw());
                t.header = {"triples", "seed", "violations"};
                t.add({integer(count), integer(g.seed), integer(violations)});
                return t;
            }
            if (w->empty() || y->empty()) throw UsageError("eta: need --w and --y, or --random");
            const auto wv = to_complex(*w, "--w"), yv = to_complex(*y, "--y");
            if (z->empty()) {
                t.header = {"w", "y", "eta"};
                t.add({*w, *y, num(eta(wv, yv))});
                return t;
            }
            const auto zv = to_complex(*z, "--z");
            t.header = {"eta_wy", "eta_wz", "eta_zy", "holds"};
            t.add({num(eta(wv, yv)), num(eta(wv, zv)), num(eta(zv, yv)), eta_triangle_check(wv, yv, zv) ? "yes" : "no"});
            return t;
        };
    });
}

void add_halasz(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("halasz", "|F(1+1/log x+it)| against log x exp(-D(f, n^{it}; x)^2)");
    auto f = std::make_shared<std::string>(), x = std::make_shared<std::string>("10000");
    auto t = std::make_shared<double>(0.0);
    auto cap = std::make_shared<std::string>(std::to_string(kHalaszSeriesCap));
    cmd->add_option("--f", *f)->required();
    cmd->add_option("--x", *x);
    cmd->add_option("--t", *t);
    cmd->add_option("--cap", *cap, "Most terms of the Dirichlet series to sum");
    cmd->callback([&action, f, x, t, cap] {
        action = [f, x, t, cap] {
            const auto r = halasz_ratio(parse_function(*f), to_u64(*x, "x"), *t, to_u64(*cap, "--cap"));
            Table out{{"f", "x", "t", "sigma", "cutoff", "series_mag", "tail_bound", "pretentious_mag", "ratio"}, {}, {}};
            out.add({*f, integer(r.x), num(r.t), num(r.sigma), integer(r.cutoff), num(r.series_abs), sci(r.tail_bound),
                     num(r.pretentious), num(r.ratio)});
            return out;
        };
    });
}

void add_zeta(CLI::App& app, Action& action) {
    auto* zeta = app.add_subcommand("zeta", "zeta(s), zeta'(s), the Euler product and -zeta'/zeta(s) for Re s > 1");
    zeta->require_subcommand(1);
    auto sigma = std::make_shared<double>(2.0), t = std::make_shared<double>(0.0);
    auto terms = std::make_shared<std::string>("1000000");
    auto cutoff = std::make_shared<std::string>("100000");
    auto common = [&](CLI::App* sub, bool with_cutoff) {
        sub->add_option("--sigma", *sigma);
        sub->add_option("--t", *t);
        if (with_cutoff)
            sub->add_option("--cutoff", *cutoff, "Largest prime in the product");
        else
            sub->add_option("--terms", *terms);
    };
    auto series_table = [](ComplexPoint s, const SeriesValue& v) {
        Table out{{"sigma", "t", "re", "im", "tail_bound"}, {}, {}};
        out.add({num(s.sigma), num(s.t), num(v.value.real()), num(v.value.imag()), sci(v.tail_bound)});
        return out;
    };

    auto* ev = zeta->add_subcommand("eval", "sum n^{-s} with the integral tail");
    common(ev, false);
    ev->callback([&action, sigma, t, terms, series_table] {
        action = [sigma, t, terms, series_table] {
            const ComplexPoint s{*sigma, *t};
            return series_table(s, zeta_eval(s, to_u64(*terms, "--terms")));
        };
    });
    auto* dv = zeta->add_subcommand("deriv", "zeta'(s) by the differentiated series");
    common(dv, false);
    dv->callback([&action, sigma, t, terms, series_table] {
        action = [sigma, t, terms, series_table] {
            const ComplexPoint s{*sigma, *t};
            return series_table(s, zeta_derivative_eval(s, to_u64(*terms, "--terms")));
        };
    });
    auto* ld = zeta->add_subcommand("logderiv", "sum Lambda(n) n^{-s}");
    common(ld, false);
    ld->callback([&action, sigma, t, terms, series_table] {
        action = [sigma, t, terms, series_table] {
            const ComplexPoint s{*sigma, *t};
            return series_table(s, log_deriv_eval(s, to_u64(*terms, "--terms")));
        };
    });
    auto* eu = zeta->add_subcommand("euler", "prod_{p<=cutoff} (1 - p^{-s})^{-1} against the series");
    common(eu, true);
    eu->callback([&action, sigma, t, cutoff] {
        action = [sigma, t, cutoff] {
            const auto r = euler_product_check({*sigma, *t}, to_u64(*cutoff, "--cutoff"));
            Table out{{"sigma", "t", "series_re", "series_im", "product_re", "product_im", "gap", "tail_bound"}, {}, {}};
            out.add({num(*sigma), num(*t), num(r.series.real()), num(r.series.imag()), num(r.product.real()),
                     num(r.product.imag()), sci(r.gap), sci(r.tail_bound)});
            return out;
        };
    });
}

void add_perron(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("perron", "(1/2pi) int_{-T}^{T} z^{sigma+it}/(sigma+it) dt against 0, 1/2, 1");
    auto z = std::make_shared<double>(), sigma = std::make_shared<double>(1.5), T = std::make_shared<double>(200.0);
    cmd->add_option("--z", *z)->required();
    cmd->add_option("--sigma", *sigma);
    cmd->add_option("--T", *T);
    cmd->callback([&action, z, sigma, T] {
        action = [z, sigma, T] {
            const auto r = perron_indicator(*z, *sigma, *T);
            Table out{{"z", "sigma", "T", "value", "indicator", "error", "error_bound"}, {}, {}};
            out.add({num(*z), num(*sigma), num(*T), num(r.value), num(r.indicator), num(r.value - r.indicator),
                     sci(r.error_bound)});
            return out;
        };
    });
}

void add_explicit(CLI::App& app, Action& action, const Globals& g) {
    auto* cmd = app.add_subcommand("explicit", "x - sum_{gamma<=T} 2 Re(x^rho/rho) - log 2pi against psi*(x)");
    auto xs = std::make_shared<std::vector<double>>();
    auto T = std::make_shared<double>(0.0);
    auto count = std::make_shared<std::string>();
    cmd->add_option("x", *xs)->required();
    cmd->add_option("--T", *T, "Largest ordinate used (default: all)");
    cmd->add_option("--count", *count, "Use only the first COUNT zeros");
    cmd->callback([&action, xs, T, count, &g] {
        action = [xs, T, count, &g] {
            if (g.zeros.empty()) throw UsageError("explicit: --zeros=PATH is required");
            auto zeros = load_zeros(g.zeros);
            if (!count->empty()) zeros = zeros.prefix(to_u64(*count, "--count"));
            Table out{{"x", "T", "zeros", "approx", "truth", "error"}, {}, {}};
            for (double x : *xs) {
                const auto r = *T > 0.0 ? explicit_psi(x, zeros, *T) : explicit_psi(x, zeros);
                out.add({num(r.x), num(r.T), integer(r.zeros_used), num(r.approx), num(r.truth), num(r.error)});
            }
            return out;
        };
    });
}

void add_goldbach(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("goldbach", "Ordered prime pairs p + q = n, directly and by the circle method");
    auto ns = std::make_shared<std::vector<std::string>>();
    cmd->add_option("n", *ns)->required();
    cmd->callback([&action, ns] {
        action = [ns] {
            Table out{{"direct", "circle"}, {}, {}};
            if (ns->size() > 1) out.header.insert(out.header.begin(), "n");
            for (const auto& s : *ns) {
                const auto r = goldbach_check(to_u64(s, "n"));
                if (ns->size() > 1)
                    out.add({integer(r.n), integer(r.direct), integer(r.circle)});
                else
                    out.add({integer(r.direct), integer(r.circle)});
            }
            return out;
        };
    });
}

void add_prh(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("prh", "|(zeta'/zeta + 1/(s-1))^(k)| against k! 2^k (1 + t)");
    auto k = std::make_shared<unsigned>(1);
    auto sigma = std::make_shared<double>(1.5), t = std::make_shared<double>(0.0);
    auto terms = std::make_shared<std::string>("1000000");
    cmd->add_option("--k", *k);
    cmd->add_option("--sigma", *sigma);
    cmd->add_option("--t", *t);
    cmd->add_option("--terms", *terms);
    cmd->callback([&action, k, sigma, t, terms] {
        action = [k, sigma, t, terms] {
            const auto r = prh_bound_check(*k, {*sigma, *t}, to_u64(*terms, "--terms"));
            Table out{{"k", "sigma", "t", "magnitude", "budget", "ratio", "tail_estimate"}, {}, {}};
            out.add({integer(r.k), num(*sigma), num(*t), num(r.magnitude), num(r.budget), sci(r.ratio), sci(r.tail_bound)});
            return out;
        };
    });
}

void add_chars(CLI::App& app, Action& action) {
    auto* chars = app.add_subcommand("chars", "Dirichlet characters mod q");
    chars->require_subcommand(1);

    auto* list = chars->add_subcommand("list", "Every character mod q with its order and kind");
    auto lq = std::make_shared<std::string>();
    list->add_option("q", *lq)->required();
    list->callback([&action, lq] {
        action = [lq] {
            const CharacterTable table(to_u64(*lq, "q"));
            Table out{{"index", "order", "kind"}, {}, {}};
            for (std::size_t i = 0; i < table.size(); ++i) {
                const auto ord = table.order_of(i);
                out.add({integer(i), integer(ord),
                         to_string(ord == 1 ? CharacterKind::Principal
                                            : (ord == 2 ? CharacterKind::Real : CharacterKind::Complex))});
            }
            return out;
        };
    });

    auto* values = chars->add_subcommand("values", "chi(n) for 0 <= n < q");
    auto vq = std::make_shared<std::string>(), vi = std::make_shared<std::string>();
    values->add_option("q", *vq)->required();
    values->add_option("index", *vi)->required();
    values->callback([&action, vq, vi] {
        action = [vq, vi] {
            const CharacterTable table(to_u64(*vq, "q"));
            const auto chi = table.character(to_u64(*vi, "index"));
            Table out{{"n", "exponent", "re", "im"}, {}, {}};
            for (std::uint64_t n = 0; n < chi.modulus(); ++n) {
                const auto e = chi.exponent(n);
                const auto v = chi(n);
                out.add({integer(n), e ? fmt::format("{}/{}", *e, chi.lambda()) : "-", num(v.real()), num(v.imag())});
            }
            return out;
        };
    });

    auto* mu = chars->add_subcommand("mu-mean", "(1/N) sum mu(n) chi(n)");
    auto mq = std::make_shared<std::string>(), mi = std::make_shared<std::string>(), mN = std::make_shared<std::string>();
    mu->add_option("q", *mq)->required();
    mu->add_option("index", *mi)->required();
    mu->add_option("N", *mN)->required();
    mu->callback([&action, mq, mi, mN] {
        action = [mq, mi, mN] {
            const CharacterTable table(to_u64(*mq, "q"));
            const auto v = mu_chi_mean(table.character(to_u64(*mi, "index")), to_u64(*mN, "N"));
            Table out{{"q", "index", "N", "re", "im", "abs"}, {}, {}};
            out.add({*mq, *mi, *mN, num(v.real()), num(v.imag()), num(std::abs(v))});
            return out;
        };
    });
}

void add_pi_ap(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("pi-ap", "#{p <= x : p = a mod q}");
    auto x = std::make_shared<std::string>(), q = std::make_shared<std::string>(), a = std::make_shared<std::string>();
    cmd->add_option("x", *x)->required();
    cmd->add_option("q", *q)->required();
    cmd->add_option("a", *a)->required();
    cmd->callback([&action, x, q, a] {
        action = [x, q, a] {
            const auto xv = to_u64(*x, "x"), qv = to_u64(*q, "q");
            const auto av = to_i64(*a, "a");
            Table out{{"x", "q", "a", "count"}, {}, {}};
            out.add({integer(xv), integer(qv), integer(av), integer(pi_ap(xv, qv, av))});
            return out;
        };
    });
}

void add_equidist(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("equidist", "Class counts mod q when the average first reaches a target");
    auto q = std::make_shared<std::string>(), target = std::make_shared<std::string>();
    auto classes = std::make_shared<bool>(false);
    cmd->add_option("q", *q)->required();
    cmd->add_option("target", *target)->required();
    cmd->add_flag("--classes", *classes, "Emit every class count (columns q,a,value)");
    cmd->callback([&action, q, target, classes] {
        action = [q, target, classes] {
            const auto st = equidist_stats(to_u64(*q, "q"), to_u64(*target, "target"));
            Table out;
            if (*classes) {
                out.header = {"q", "a", "value"};
                for (const auto& c : st.classes) out.add({integer(st.q), integer(c.a), integer(c.count)});
                return out;
            }
            out.header = {"q", "target", "x", "min", "max"};
            out.add({integer(st.q), integer(st.target_avg), integer(st.x_reached), integer(st.min_count),
                     integer(st.max_count)});
            return out;
        };
    });
}

void add_lone(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("lone", "sum_{n<=N} chi(n)/n with the tail bound q/N");
    auto q = std::make_shared<std::string>(), idx = std::make_shared<std::string>();
    auto N = std::make_shared<std::string>("10000000");
    cmd->add_option("q", *q)->required();
    cmd->add_option("index", *idx)->required();
    cmd->add_option("--N", *N);
    cmd->callback([&action, q, idx, N] {
        action = [q, idx, N] {
            const CharacterTable table(to_u64(*q, "q"));
            const auto r = l_one(table.character(to_u64(*idx, "index")), to_u64(*N, "--N"));
            Table out{{"q", "index", "N", "re", "im", "tail_bound"}, {}, {}};
            out.add({*q, *idx, *N, num(r.value.real()), num(r.value.imag()), sci(r.tail_bound)});
            return out;
        };
    });
}

void add_least_prime(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("least-prime", "Least prime = a mod q, or for every reduced a (columns q,a,value)");
    auto q = std::make_shared<std::string>(), a = std::make_shared<std::string>();
    auto linnik = std::make_shared<bool>(false);
    cmd->add_option("q", *q)->required();
    cmd->add_option("a", *a, "Omit to sweep every reduced class");
    cmd->add_flag("--exponent", *linnik, "Report log p / log q as the value");
    cmd->callback([&action, q, a, linnik] {
        action = [q, a, linnik] {
            const auto qv = to_u64(*q, "q");
            std::vector<LeastPrime> found;
            if (a->empty())
                found = least_prime_sweep(qv);
            else
                found.push_back(least_prime_ap(qv, to_i64(*a, "a")));
            Table out{{"q", "a", "value"}, {}, {}};
            for (const auto& l : found) {
                std::string value = integer(l.p);
                if (*linnik) value = l.linnik_exponent ? num(*l.linnik_exponent) : "-";
                out.add({integer(l.q), integer(l.a), value});
            }
            return out;
        };
    });
}

void add_chernac(CLI::App& app, Action& action) {
    auto* cmd = app.add_subcommand("chernac", "A factor-table page: n in [base, base+1000) coprime to 30");
    auto base = std::make_shared<std::string>();
    cmd->add_option("base", *base)->required();
    cmd->callback([&action, base] {
        action = [base] {
            const auto b = to_u64(*base, "base");
            Table out{{"offset", "factorization"}, {}, chernac_page(b)};
            for (const auto& e : chernac_entries(b)) out.add({integer(e.offset), e.text});
            return out;
        };
    });
}

}  // namespace

std::vector<ChernacEntry> chernac_entries(std::uint64_t base) {
    if (base % 1000 != 0) throw ArgumentError("chernac_page: base must be a multiple of 1000");
    if (base + 1000 > default_config().max_factorize) throw RangeError("chernac_page: base beyond the factorization bound");
    std::vector<ChernacEntry> out;
    for (std::uint64_t n = std::max<std::uint64_t>(base, 1); n < base + 1000; ++n) {
        if (n % 2 == 0 || n % 3 == 0 || n % 5 == 0) continue;
        std::string text;
        if (n == 1) {
            text = "unit";
        } else {
            const auto f = factorize(n);
            text = f.is_prime() ? "prime" : f.to_string();
        }
        out.push_back({n - base, n, std::move(text)});
    }
    return out;
}

std::string chernac_page(std::uint64_t base) {
    std::string page = fmt::format("{} - {}\n", base, base + 999);
    for (const auto& e : chernac_entries(base)) page += fmt::format("{:>3} : {}\n", e.offset, e.text);
    return page;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"primelab: prime counting, zeta and pretentious diagnostics", "primelab"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"plain", "csv", "markdown"}));
    app.add_option("--zeros", g.zeros, "Zero ordinate file (one per line, ascending)");
    app.add_option("--max", g.max, "Largest x for tables (1e9 style accepted)");
    app.add_option("--seed", g.seed, "Seed for random property sweeps");

    Action action;
    add_sieve(app, action);
    add_count(app, action);
    add_tables(app, action, g);
    add_mertens(app, action);
    add_chebyshev(app, action);
    add_lcm(app, action);
    add_selberg(app, action);
    add_functional(app, action);
    add_distance(app, action);
    add_eta(app, action, g);
    add_halasz(app, action);
    add_zeta(app, action);
    add_perron(app, action);
    add_explicit(app, action, g);
    add_goldbach(app, action);
    add_prh(app, action);
    add_chars(app, action);
    add_pi_ap(app, action);
    add_equidist(app, action);
    add_lone(app, action);
    add_least_prime(app, action);
    add_chernac(app, action);

    std::function<void(CLI::App*)> fall_through = [&](CLI::App* a) {
        for (auto* sub : a->get_subcommands({})) {
            sub->fallthrough();
            fall_through(sub);
        }
    };
    fall_through(&app);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const Format format = g.format == "csv" ? Format::Csv : (g.format == "markdown" ? Format::Markdown : Format::Plain);
    try {
        out << render(action(), format);
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace primelab::cli
