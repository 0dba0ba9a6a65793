#pragma once

// The full group of Dirichlet characters mod q, built from discrete logarithms
// on the prime-power components of (Z/qZ)^*. Every character value is stored
// as an exponent e with chi(n) = exp(2 pi i e / lambda), lambda the exponent
// of the group, so sums of character values can be checked exactly.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace primelab {

enum class CharacterKind { Principal, Real, Complex };

const char* to_string(CharacterKind kind) noexcept;

class DirichletCharacter {
public:
    static constexpr std::int32_t kZero = -1;  // exponent marker for gcd(n, q) > 1

    DirichletCharacter(std::uint64_t modulus, std::uint64_t lambda, std::size_t index, std::uint64_t order,
                       std::vector<std::int32_t> exponents);

    std::uint64_t modulus() const noexcept { return q_; }
    /// Values are lambda-th roots of unity.
    std::uint64_t lambda() const noexcept { return lambda_; }
    std::size_t index() const noexcept { return index_; }
    /// Order of the character in the character group.
    std::uint64_t order() const noexcept { return order_; }

    bool is_principal() const noexcept { return order_ == 1; }
    bool is_real() const noexcept { return order_ <= 2; }
    CharacterKind kind() const noexcept;

    /// e with chi(n) = exp(2 pi i e / lambda); nullopt when gcd(n, q) > 1.
    std::optional<std::uint32_t> exponent(std::uint64_t n) const;
    std::complex<double> operator()(std::uint64_t n) const;
    /// -1, 0 or 1; only for real characters.
    int real_value(std::uint64_t n) const;

    /// Exponent per residue 0..q-1, kZero off the reduced residues.
    std::span<const std::int32_t> exponents() const noexcept { return exps_; }

private:
    std::uint64_t q_;
    std::uint64_t lambda_;
    std::size_t index_;
    std::uint64_t order_;
    std::vector<std::int32_t> exps_;
    std::vector<std::complex<double>> values_;
};

class CharacterTable {
public:
    static constexpr std::uint64_t kMaxModulus = 100'000;

    /// 1 <= q <= 10^5.
    explicit CharacterTable(std::uint64_t q);

    std::uint64_t modulus() const noexcept { return q_; }
    /// phi(q).
    std::size_t size() const noexcept { return size_; }
    /// Exponent of (Z/qZ)^*.
    std::uint64_t lambda() const noexcept { return lambda_; }
    /// Orders of the cyclic factors the group is split into.
    std::span<const std::uint64_t> cyclic_orders() const noexcept { return orders_; }

    /// Character number `index` in [0, size()); index 0 is principal.
    DirichletCharacter character(std::size_t index) const;
    DirichletCharacter principal() const { return character(0); }
    std::vector<DirichletCharacter> all() const;
    /// Indices of the real characters (principal included).
    std::vector<std::size_t> real_indices() const;
    /// Order of character `index`, without materializing it.
    std::uint64_t order_of(std::size_t index) const;

    /// True when gcd(n, q) = 1.
    bool is_reduced(std::uint64_t n) const noexcept { return coprime_[n % q_] != 0; }

private:
    std::vector<std::uint64_t> digits(std::size_t index) const;

    std::uint64_t q_;
    std::size_t size_ = 1;
    std::uint64_t lambda_ = 1;
    std::vector<std::uint64_t> orders_;
    std::vector<std::vector<std::uint32_t>> logs_;  // logs_[i][n mod q], valid where coprime_
    std::vector<std::uint8_t> coprime_;
};

/// Exact test that sum_e counts[e] * exp(2 pi i e / lambda) is zero
/// (counts.size() == lambda). Integer arithmetic only.
bool root_of_unity_sum_is_zero(std::span<const std::int64_t> counts);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n);

}  // namespace primelab
