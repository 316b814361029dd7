#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gfwilson/poly.hpp"

namespace gfwilson {

/// Largest field order a Field may be built for.
inline constexpr std::uint32_t kMaxFieldOrder = std::uint32_t{1} << 20;
/// q <= 2^20 bounds the extension degree by 20 (reached at p = 2).
inline constexpr unsigned kMaxDegree = 20;

struct FieldParams {
    std::uint32_t p;
    unsigned n;
    std::uint32_t q;
    PolyZp modulus;  // canonical monic irreducible of degree n
};

namespace detail {

/// Barrett reduction by a fixed word-size modulus: exact for any 64-bit x.
struct Reducer {
    std::uint64_t p = 1;
    std::uint64_t factor = 0;  // floor((2^64 - 1) / p)

    explicit Reducer(std::uint64_t modulus) noexcept : p(modulus), factor(~std::uint64_t{0} / modulus) {}

    std::uint64_t operator()(std::uint64_t x) const noexcept {
        const auto est = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * factor) >> 64);
        std::uint64_t r = x - est * p;
        return r >= p ? r - p : r;
    }
};

struct FieldData {
    FieldParams params;
    Reducer reduce;
};

}  // namespace detail

/// An element of GF(p^n) as its residue polynomial, zero-padded to length n.
/// Elements carry (p, n) so that mixing fields is detected; all arithmetic
/// goes through the owning Field.
class FieldElement {
public:
    using Coeff = std::uint32_t;

    /// Detached placeholder; belongs to no field until assigned.
    FieldElement() = default;

    std::span<const Coeff> coeffs() const noexcept { return {c_.data(), n_}; }
    std::uint32_t p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }

    /// sum coeffs[i] * p^i, in [0, q).
    std::uint32_t encoding() const noexcept;
    bool is_zero() const noexcept;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    friend class Field;
    FieldElement(std::uint32_t p, unsigned n) noexcept : p_(p), n_(n) {}

    std::array<Coeff, kMaxDegree> c_{};
    std::uint32_t p_ = 0;
    unsigned n_ = 0;
};

/// GF(p^n) = Z_p[x] / (canonical irreducible). Cheap to copy; the
/// parameters are shared and immutable.
class Field {
public:
    const FieldParams& params() const noexcept { return data_->params; }
    std::uint32_t p() const noexcept { return data_->params.p; }
    unsigned n() const noexcept { return data_->params.n; }
    std::uint32_t q() const noexcept { return data_->params.q; }
    const PolyZp& modulus() const noexcept { return data_->params.modulus; }

    /// "GF(p^n)"
    std::string name() const;

    FieldElement zero() const noexcept { return FieldElement(p(), n()); }
    FieldElement one() const noexcept;
    /// Throws Error(InvalidArgument) for encodings >= q.
    FieldElement from_encoding(std::uint32_t encoding) const;
    /// Reduces an arbitrary Z_p polynomial modulo the field modulus.
    FieldElement from_poly(const PolyZp& poly) const;
    PolyZp to_poly(const FieldElement& a) const;

    /// Image of z under the ring map Z -> GF(p^n).
    FieldElement embed(std::int64_t z) const noexcept;

    // Binary operations throw Error(FieldMismatch) for foreign elements.
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// k-fold sum a + a + ... + a.
    FieldElement scale(const FieldElement& a, std::uint64_t k) const;
    /// Extended Euclid against the modulus. Throws Error(ZeroInverse) for 0.
    FieldElement inv(const FieldElement& a) const;
    /// Square-and-multiply; pow(0, 0) = 1.
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    /// The q-1 nonzero elements in ascending encoding order.
    std::vector<FieldElement> enumerate_nonzero() const;

    /// Coefficient rendering such as "x+1" (the residue polynomial in x).
    std::string format(const FieldElement& a) const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p() == b.p() && a.n() == b.n();
    }

private:
    friend Field make_field(std::uint32_t p, unsigned n);
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    void check(const FieldElement& a) const;

    std::shared_ptr<const detail::FieldData> data_;
};

/// Builds GF(p^n) with the canonical modulus. Throws Error(NotPrime) or
/// Error(SizeBudgetExceeded) when p^n > 2^20.
Field make_field(std::uint32_t p, unsigned n);

/// All prime powers q = p^n with lo <= q <= hi, ascending q.
struct PrimePower {
    std::uint32_t p;
    unsigned n;
    std::uint32_t q;
};
std::vector<PrimePower> prime_powers_between(std::uint32_t lo, std::uint32_t hi);

}  // namespace gfwilson
