#pragma once

#include <cstdint>
#include <vector>

#include "gfwilson/error.hpp"

namespace gfwilson {

/// Largest supported modulus. Two canonical residues multiply to < 2^60,
/// so every intermediate fits in an unsigned 64-bit word.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 30;

class Modulus {
public:
    /// Throws Error(InvalidModulus) unless 2 <= m <= 2^30.
    explicit Modulus(std::uint64_t m);

    std::uint64_t value() const noexcept { return m_; }

    friend bool operator==(Modulus, Modulus) = default;

private:
    std::uint64_t m_;
};

/// Canonical residue class: 0 <= value() < modulus().value().
class Residue {
public:
    /// Reduces `v` into [0, m).
    Residue(std::uint64_t v, Modulus m) noexcept : v_(v % m.value()), m_(m) {}

    /// Signed constructor: maps z to its class modulo m (so -1 becomes m-1).
    static Residue from_signed(std::int64_t z, Modulus m) noexcept;

    std::uint64_t value() const noexcept { return v_; }
    Modulus modulus() const noexcept { return m_; }

    friend bool operator==(const Residue&, const Residue&) = default;

private:
    std::uint64_t v_;
    Modulus m_;
};

// All binary operations throw Error(ModulusMismatch) when the moduli differ.
Residue mod_add(Residue a, Residue b);
Residue mod_sub(Residue a, Residue b);
Residue mod_mul(Residue a, Residue b);
Residue mod_neg(Residue a) noexcept;

/// Inverse by extended Euclid, so composite moduli (p^2) work for units.
/// Throws Error(NotInvertible) when gcd(a, m) != 1.
Residue mod_inv(Residue a);

/// Square-and-multiply; e = 0 gives 1.
Residue mod_pow(Residue a, std::uint64_t e) noexcept;

inline Residue operator+(Residue a, Residue b) { return mod_add(a, b); }
inline Residue operator-(Residue a, Residue b) { return mod_sub(a, b); }
inline Residue operator*(Residue a, Residue b) { return mod_mul(a, b); }
inline Residue operator-(Residue a) noexcept { return mod_neg(a); }

/// Raw helpers on already-reduced words, used by the hot loops elsewhere.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

/// Deterministic for every 64-bit input (strong probable-prime test with a
/// base set known to have no pseudoprimes below 2^64).
bool is_prime(std::uint64_t n) noexcept;

/// Sieve of Eratosthenes; ascending primes <= limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// n! mod m by running product.
Residue factorial_mod(std::uint64_t n, Modulus m) noexcept;

}  // namespace gfwilson
