#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gfwilson/error.hpp"

namespace gfwilson {

/// Dense polynomial over Z_p, little-endian: coeffs()[i] is the coefficient
/// of x^i. Always stored trimmed; the zero polynomial has no coefficients.
/// `p` is assumed prime (divisions invert the leading coefficient mod p).
class PolyZp {
public:
    using Coeff = std::uint32_t;

    /// Coefficients are reduced mod p and trailing zeros trimmed.
    PolyZp(std::vector<std::uint64_t> coeffs, std::uint32_t p);
    explicit PolyZp(std::uint32_t p) : p_(p) {}

    static PolyZp zero(std::uint32_t p) { return PolyZp(p); }
    static PolyZp constant(std::uint64_t c, std::uint32_t p) { return PolyZp({c}, p); }
    /// The monomial x.
    static PolyZp x(std::uint32_t p) { return PolyZp({0, 1}, p); }

    /// Monic degree-n polynomial x^n + sum_{i<n} c_i x^i where
    /// encoding = sum c_i p^i.
    static PolyZp monic_from_encoding(std::uint64_t encoding, unsigned degree, std::uint32_t p);

    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    std::uint32_t p() const noexcept { return p_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Coeff leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }
    Coeff operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    /// Scales to leading coefficient 1; the zero polynomial maps to itself.
    PolyZp monic() const;

    /// Descending-degree text, e.g. "x^2+x+1" or "2x^3+4".
    std::string to_string() const;

    friend bool operator==(const PolyZp&, const PolyZp&) = default;

private:
    void trim() noexcept;

    std::vector<Coeff> coeffs_;
    std::uint32_t p_;
};

// Binary operations throw Error(ModulusMismatch) when the characteristics differ.
PolyZp poly_add(const PolyZp& f, const PolyZp& g);
PolyZp poly_sub(const PolyZp& f, const PolyZp& g);
PolyZp poly_mul(const PolyZp& f, const PolyZp& g);

struct DivMod {
    PolyZp quotient;
    PolyZp remainder;
};

/// f = quotient*g + remainder with deg remainder < deg g.
/// Throws Error(DivisionByZeroPoly) for g = 0.
DivMod poly_divmod(const PolyZp& f, const PolyZp& g);

/// Monic gcd. Throws Error(BothZero) when f = g = 0.
PolyZp poly_gcd(const PolyZp& f, const PolyZp& g);

/// Extended Euclid: returns (g, s) with s*f = g (mod m), g = monic gcd(f, m).
std::pair<PolyZp, PolyZp> poly_gcd_inverse(const PolyZp& f, const PolyZp& m);

/// base^e mod modpoly. Throws Error(DivisionByZeroPoly) when deg modpoly < 1.
PolyZp poly_powmod(const PolyZp& base, std::uint64_t e, const PolyZp& modpoly);

/// Rabin's test. Throws Error(NotMonic) for non-monic input and
/// Error(InvalidArgument) for constants.
bool is_irreducible(const PolyZp& f);

/// Exhaustive trial division by every monic polynomial of degree
/// 1..deg/2. Limited to deg <= 6 and p <= 7 (Error(BudgetExceeded)).
bool is_irreducible_trial(const PolyZp& f);

/// Monic irreducible of degree n with the smallest encoding of its
/// lower coefficients. Requires p prime and p^n <= 2^20.
PolyZp find_canonical_irreducible(std::uint32_t p, unsigned n);

}  // namespace gfwilson
