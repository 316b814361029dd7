#include "gfwilson/field.hpp"

#include <algorithm>

#include "gfwilson/modnum.hpp"

namespace gfwilson {

std::uint32_t FieldElement::encoding() const noexcept {
    std::uint32_t enc = 0;
    for (unsigned i = n_; i-- > 0;) enc = enc * p_ + c_[i];
    return enc;
}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.begin() + n_, [](Coeff c) { return c == 0; });
}

Field make_field(std::uint32_t p, unsigned n) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw Error(ErrorCode::SizeBudgetExceeded,
                        std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^20");
        }
    }
    auto data = std::make_shared<const detail::FieldData>(detail::FieldData{
        FieldParams{p, n, static_cast<std::uint32_t>(q), find_canonical_irreducible(p, n)},
        detail::Reducer(p)});
    return Field(std::move(data));
}

std::string Field::name() const {
    return "GF(" + std::to_string(p()) + "^" + std::to_string(n()) + ")";
}

void Field::check(const FieldElement& a) const {
    if (a.p() != p() || a.n() != n()) {
        throw Error(ErrorCode::FieldMismatch, "element does not belong to " + name());
    }
}

FieldElement Field::one() const noexcept {
    FieldElement r(p(), n());
    r.c_[0] = 1;
    return r;
}

FieldElement Field::from_encoding(std::uint32_t encoding) const {
    if (encoding >= q()) {
        throw Error(ErrorCode::InvalidArgument,
                    "encoding " + std::to_string(encoding) + " outside " + name());
    }
    FieldElement r(p(), n());
    for (unsigned i = 0; i < n(); ++i) {
        r.c_[i] = encoding % p();
        encoding /= p();
    }
    return r;
}

FieldElement Field::from_poly(const PolyZp& poly) const {
    if (poly.p() != p()) throw Error(ErrorCode::FieldMismatch, "polynomial over a different prime");
    const PolyZp reduced = poly_divmod(poly, modulus()).remainder;
    FieldElement r(p(), n());
    for (unsigned i = 0; i < n(); ++i) r.c_[i] = reduced[i];
    return r;
}

PolyZp Field::to_poly(const FieldElement& a) const {
    check(a);
    return PolyZp(std::vector<std::uint64_t>(a.c_.begin(), a.c_.begin() + n()), p());
}

FieldElement Field::embed(std::int64_t z) const noexcept {
    FieldElement r(p(), n());
    r.c_[0] = static_cast<FieldElement::Coeff>(Residue::from_signed(z, Modulus(p())).value());
    return r;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r(p(), n());
    for (unsigned i = 0; i < n(); ++i) {
        const std::uint32_t s = a.c_[i] + b.c_[i];
        r.c_[i] = s >= p() ? s - p() : s;
    }
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    FieldElement r(p(), n());
    for (unsigned i = 0; i < n(); ++i) {
        r.c_[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p() - b.c_[i];
    }
    return r;
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    FieldElement r(p(), n());
    for (unsigned i = 0; i < n(); ++i) r.c_[i] = a.c_[i] == 0 ? 0 : p() - a.c_[i];
    return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    const detail::Reducer& reduce = data_->reduce;
    const std::uint64_t pp = p();
    const unsigned nn = n();
    FieldElement r(p(), nn);
    if (nn == 1) {
        r.c_[0] = static_cast<FieldElement::Coeff>(reduce(std::uint64_t{a.c_[0]} * b.c_[0]));
        return r;
    }
    // Coefficients are < 2^20, so each product is < 2^40 and a column of at
    // most 20 products plus 20 reduction updates stays below 2^46.
    std::array<std::uint64_t, 2 * kMaxDegree - 1> t{};
    for (unsigned i = 0; i < nn; ++i) {
        const std::uint64_t ai = a.c_[i];
        if (ai == 0) continue;
        for (unsigned j = 0; j < nn; ++j) t[i + j] += ai * b.c_[j];
    }
    const auto m = modulus().coeffs();
    for (unsigned d = 2 * nn - 1; d-- > nn;) {
        const std::uint64_t c = reduce(t[d]);
        if (c == 0) continue;
        const std::uint64_t negc = pp - c;
        // x^n = -(m_0 + m_1 x + ... + m_{n-1} x^{n-1})
        for (unsigned i = 0; i < nn; ++i) t[d - nn + i] += negc * m[i];
    }
    for (unsigned i = 0; i < nn; ++i) r.c_[i] = static_cast<FieldElement::Coeff>(reduce(t[i]));
    return r;
}

FieldElement Field::scale(const FieldElement& a, std::uint64_t k) const {
    check(a);
    const std::uint64_t km = k % p();
    FieldElement r(p(), n());
    for (unsigned i = 0; i < n(); ++i) {
        r.c_[i] = static_cast<FieldElement::Coeff>(a.c_[i] * km % p());
    }
    return r;
}

FieldElement Field::inv(const FieldElement& a) const {
    check(a);
    if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "zero has no inverse in " + name());
    auto [g, s] = poly_gcd_inverse(to_poly(a), modulus());
    // g == 1 because the modulus is irreducible and a != 0.
    return from_poly(s);
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
    check(a);
    FieldElement result = one();
    FieldElement base = a;
    while (e != 0) {
        if (e & 1U) result = mul(result, base);
        e >>= 1U;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

std::vector<FieldElement> Field::enumerate_nonzero() const {
    std::vector<FieldElement> out;
    out.reserve(q() - 1);
    for (std::uint32_t enc = 1; enc < q(); ++enc) out.push_back(from_encoding(enc));
    return out;
}

std::string Field::format(const FieldElement& a) const { return to_poly(a).to_string(); }

std::vector<PrimePower> prime_powers_between(std::uint32_t lo, std::uint32_t hi) {
    std::vector<PrimePower> out;
    for (std::uint64_t p : primes_up_to(hi)) {
        std::uint64_t q = p;
        for (unsigned n = 1; q <= hi; ++n, q *= p) {
            if (q >= lo) {
                out.push_back({static_cast<std::uint32_t>(p), n, static_cast<std::uint32_t>(q)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) {
        return a.q != b.q ? a.q < b.q : a.p < b.p;
    });
    return out;
}

}  // namespace gfwilson
