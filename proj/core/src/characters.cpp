#include "primelab/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "primelab/errors.hpp"
#include "primelab/sieve.hpp"

namespace primelab {

const char* to_string(CharacterKind kind) noexcept {
    switch (kind) {
        case CharacterKind::Principal: return "principal";
        case CharacterKind::Real: return "real";
        case CharacterKind::Complex: return "complex";
    }
    return "?";
}

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
    }
    return r;
}

std::uint64_t primitive_root_mod_prime(std::uint64_t p) {
    if (p == 2) return 1;
    const auto f = factorize(p - 1);
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (const auto& pp : f.factors)
            if (powmod(g, (p - 1) / pp.prime, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

// Discrete log table on Z/mZ for the cyclic group generated by g of order `ord`.
std::vector<std::uint32_t> log_table(std::uint64_t g, std::uint64_t ord, std::uint64_t m) {
    std::vector<std::uint32_t> table(m, 0);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k < ord; ++k) {
        table[x] = static_cast<std::uint32_t>(k);
        x = x * g % m;
    }
    if (x != 1) throw InvariantViolation("characters: generator order mismatch");
    return table;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::uint64_t lambda, std::size_t index,
                                       std::uint64_t order, std::vector<std::int32_t> exponents)
    : q_(modulus), lambda_(lambda), index_(index), order_(order), exps_(std::move(exponents)) {
    values_.resize(exps_.size());
    for (std::size_t n = 0; n < exps_.size(); ++n) {
        if (exps_[n] == kZero) continue;
        if (exps_[n] == 0) {
            values_[n] = 1.0;
        } else if (2 * static_cast<std::uint64_t>(exps_[n]) == lambda_) {
            values_[n] = -1.0;
        } else {
            const double a = 2.0 * std::numbers::pi * static_cast<double>(exps_[n]) / static_cast<double>(lambda_);
            values_[n] = {std::cos(a), std::sin(a)};
        }
    }
}

CharacterKind DirichletCharacter::kind() const noexcept {
    if (order_ == 1) return CharacterKind::Principal;
    return order_ == 2 ? CharacterKind::Real : CharacterKind::Complex;
}

std::optional<std::uint32_t> DirichletCharacter::exponent(std::uint64_t n) const {
    const std::int32_t e = exps_[n % q_];
    if (e == kZero) return std::nullopt;
    return static_cast<std::uint32_t>(e);
}

std::complex<double> DirichletCharacter::operator()(std::uint64_t n) const { return values_[n % q_]; }

int DirichletCharacter::real_value(std::uint64_t n) const {
    if (!is_real()) throw ArgumentError("real_value: character is not real");
    const std::int32_t e = exps_[n % q_];
    if (e == kZero) return 0;
    return e == 0 ? 1 : -1;
}

CharacterTable::CharacterTable(std::uint64_t q) : q_(q) {
    if (q < 1 || q > kMaxModulus) throw RangeError("CharacterTable: q outside [1, 10^5]");

    coprime_.assign(q, 0);
    for (std::uint64_t n = 0; n < q; ++n) coprime_[n] = std::gcd(n, q) == 1;

    // (Z/2^eZ)^* = <-1> x <5> for e >= 3; the sign factor alone for e = 2.
    enum class Kind { Sign, PowerOfFive, Cyclic };
    struct Component {
        Kind kind;
        std::uint64_t pe;
        std::uint64_t order;
        std::vector<std::uint32_t> table;  // log on residues mod pe
        std::uint32_t log(std::uint64_t r) const {
            switch (kind) {
                case Kind::Sign: return r % 4 == 1 ? 0 : 1;
                case Kind::PowerOfFive: return table[r % 4 == 1 ? r : pe - r];
                case Kind::Cyclic: break;
            }
            return table[r];
        }
    };
    std::vector<Component> comps;

    if (q > 1) {
        for (const auto& [p, e] : factorize(q).factors) {
            std::uint64_t pe = 1;
            for (unsigned i = 0; i < e; ++i) pe *= p;
            if (p == 2) {
                if (e == 1) continue;
                comps.push_back({Kind::Sign, pe, 2, {}});
                if (e >= 3) comps.push_back({Kind::PowerOfFive, pe, pe / 4, log_table(5, pe / 4, pe)});
            } else {
                std::uint64_t g = primitive_root_mod_prime(p);
                if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
                const std::uint64_t ord = pe / p * (p - 1);
                comps.push_back({Kind::Cyclic, pe, ord, log_table(g, ord, pe)});
            }
        }
    }

    for (const auto& c : comps) {
        orders_.push_back(c.order);
        size_ *= static_cast<std::size_t>(c.order);
        lambda_ = std::lcm(lambda_, c.order);
    }

    logs_.assign(comps.size(), std::vector<std::uint32_t>(q, 0));
    // Each reduced residue must get a distinct tuple of logs: the map to the
    // product of cyclic groups is then a bijection.
    std::vector<std::uint8_t> seen(size_, 0);
    std::size_t reduced = 0;
    for (std::uint64_t n = 0; n < q; ++n) {
        if (!coprime_[n]) continue;
        ++reduced;
        std::size_t code = 0, radix = 1;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const std::uint32_t l = comps[i].log(n % comps[i].pe);
            logs_[i][n] = l;
            code += l * radix;
            radix *= static_cast<std::size_t>(comps[i].order);
        }
        if (seen[code]) throw InvariantViolation("CharacterTable: discrete logs are not injective");
        seen[code] = 1;
    }
    if (reduced != size_) throw InvariantViolation("CharacterTable: group order differs from phi(q)");
}

std::vector<std::uint64_t> CharacterTable::digits(std::size_t index) const {
    if (index >= size_) throw RangeError("CharacterTable: character index out of range");
    std::vector<std::uint64_t> d(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        d[i] = index % orders_[i];
        index /= orders_[i];
    }
    return d;
}

std::uint64_t CharacterTable::order_of(std::size_t index) const {
    const auto d = digits(index);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < d.size(); ++i) ord = std::lcm(ord, orders_[i] / std::gcd(d[i], orders_[i]));
    return ord;
}

DirichletCharacter CharacterTable::character(std::size_t index) const {
    const auto d = digits(index);
    std::vector<std::uint64_t> scale(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) scale[i] = d[i] * (lambda_ / orders_[i]) % lambda_;

    std::vector<std::int32_t> exps(q_, DirichletCharacter::kZero);
    for (std::uint64_t n = 0; n < q_; ++n) {
        if (!coprime_[n]) continue;
        std::uint64_t e = 0;
        for (std::size_t i = 0; i < d.size(); ++i) e = (e + scale[i] * logs_[i][n]) % lambda_;
        exps[n] = static_cast<std::int32_t>(e);
    }
    return DirichletCharacter(q_, lambda_, index, order_of(index), std::move(exps));
}

std::vector<DirichletCharacter> CharacterTable::all() const {
    std::vector<DirichletCharacter> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(character(i));
    return out;
}

std::vector<std::size_t> CharacterTable::real_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i) {
        const auto d = digits(i);
        bool real = true;
        for (std::size_t k = 0; k < d.size() && real; ++k) real = (2 * d[k]) % orders_[k] == 0;
        if (real) out.push_back(i);
    }
    return out;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n) {
    if (n < 1) throw RangeError("cyclotomic_polynomial: n must be positive");
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }

    // Phi_n = prod_{d | n} (X^d - 1)^{mu(n/d)}: multiply the numerators, then
    // divide out the denominators exactly.
    std::vector<std::uint64_t> up, down;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        const auto m = n / d;
        int mu_m = 1;
        if (m > 1) {
            for (const auto& pp : factorize(m).factors) {
                if (pp.exponent > 1) {
                    mu_m = 0;
                    break;
                }
                mu_m = -mu_m;
            }
        }
        if (mu_m == 1) up.push_back(d);
        if (mu_m == -1) down.push_back(d);
    }
    std::vector<std::int64_t> poly{1};
    for (std::uint64_t d : up) {
        std::vector<std::int64_t> next(poly.size() + d, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + d] += poly[i];
            next[i] -= poly[i];
        }
        poly = std::move(next);
    }
    for (std::uint64_t d : down) {
        const std::size_t deg = poly.size() - 1 - d;
        std::vector<std::int64_t> quo(deg + 1, 0);
        for (std::size_t k = deg + 1; k-- > 0;) quo[k] = poly[k + d] + (k + d <= deg ? quo[k + d] : 0);
        for (std::size_t k = 0; k < d; ++k)
            if (poly[k] != (k <= deg ? -quo[k] : 0)) throw InvariantViolation("cyclotomic_polynomial: inexact division");
        poly = std::move(quo);
    }

    std::lock_guard lock(mu);
    cache.emplace(n, poly);
    return poly;
}

bool root_of_unity_sum_is_zero(std::span<const std::int64_t> counts) {
    const std::uint64_t lambda = counts.size();
    if (lambda == 0) throw ArgumentError("root_of_unity_sum_is_zero: empty histogram");

    // Fast path: equal counts on a nontrivial subgroup of Z/lambda sum to zero.
    std::uint64_t g = lambda;
    std::size_t support = 0;
    std::int64_t level = 0;
    bool flat = true;
    for (std::uint64_t e = 0; e < lambda; ++e) {
        if (counts[e] == 0) continue;
        g = std::gcd(g, e);
        if (support++ == 0) level = counts[e];
        flat = flat && counts[e] == level;
    }
    if (support == 0) return true;
    if (flat && support == lambda / g && support > 1) return true;

    // General case: reduce sum c_e X^e modulo the minimal polynomial of zeta_lambda.
    const auto phi = cyclotomic_polynomial(lambda);
    const std::size_t deg = phi.size() - 1;
    using wide = boost::multiprecision::int128_t;
    std::vector<wide> r(counts.begin(), counts.end());
    for (std::size_t k = r.size(); k-- > deg;) {
        const wide c = r[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) r[k - deg + j] -= c * phi[j];
        const wide limit = wide(1) << 100;
        if (r[k - deg] > limit || r[k - deg] < -limit)
            throw ResourceError("root_of_unity_sum_is_zero: coefficient growth");
    }
    for (std::size_t k = 0; k < std::min(deg, r.size()); ++k)
        if (r[k] != 0) return false;
    return true;
}

}  // namespace primelab
