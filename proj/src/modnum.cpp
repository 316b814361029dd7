#include "gfwilson/modnum.hpp"

#include <array>
#include <string>

namespace gfwilson {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::QTooSmall: return "QTooSmall";
    case ErrorCode::QTooSmallForWolstenholme: return "QTooSmallForWolstenholme";
    case ErrorCode::PTooSmall: return "PTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Modulus::Modulus(std::uint64_t m) : m_(m) {
    if (m < 2 || m > kMaxModulus) {
        throw Error(ErrorCode::InvalidModulus,
                    "modulus " + std::to_string(m) + " outside [2, 2^30]");
    }
}

Residue Residue::from_signed(std::int64_t z, Modulus m) noexcept {
    const auto mm = static_cast<std::int64_t>(m.value());
    std::int64_t r = z % mm;
    if (r < 0) r += mm;
    return Residue(static_cast<std::uint64_t>(r), m);
}

namespace {

void require_same(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus()) {
        throw Error(ErrorCode::ModulusMismatch,
                    "residues modulo " + std::to_string(a.modulus().value()) + " and " +
                        std::to_string(b.modulus().value()));
    }
}

}  // namespace

Residue mod_add(Residue a, Residue b) {
    require_same(a, b);
    const std::uint64_t m = a.modulus().value();
    std::uint64_t s = a.value() + b.value();
    if (s >= m) s -= m;
    return Residue(s, a.modulus());
}

Residue mod_sub(Residue a, Residue b) {
    require_same(a, b);
    const std::uint64_t m = a.modulus().value();
    return Residue(a.value() >= b.value() ? a.value() - b.value() : a.value() + m - b.value(),
                   a.modulus());
}

Residue mod_mul(Residue a, Residue b) {
    require_same(a, b);
    return Residue(a.value() * b.value(), a.modulus());
}

Residue mod_neg(Residue a) noexcept {
    const std::uint64_t m = a.modulus().value();
    return Residue(a.value() == 0 ? 0 : m - a.value(), a.modulus());
}

Residue mod_inv(Residue a) {
    const auto m = static_cast<std::int64_t>(a.modulus().value());
    std::int64_t old_r = static_cast<std::int64_t>(a.value()), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw Error(ErrorCode::NotInvertible,
                    std::to_string(a.value()) + " is not invertible modulo " + std::to_string(m));
    }
    return Residue::from_signed(old_s, a.modulus());
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1U) result = mulmod(result, a, m);
        a = mulmod(a, a, m);
        e >>= 1U;
    }
    return result;
}

Residue mod_pow(Residue a, std::uint64_t e) noexcept {
    return Residue(powmod(a.value(), e, a.modulus().value()), a.modulus());
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // Jaeschke / Sinclair base set, exact below 2^64.
    constexpr std::array<std::uint64_t, 7> bases{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (std::uint64_t base : bases) {
        const std::uint64_t a = base % n;
        if (a == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    if (limit > (std::uint64_t{1} << 32)) {
        throw Error(ErrorCode::InvalidArgument, "sieve limit above 2^32");
    }
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

Residue factorial_mod(std::uint64_t n, Modulus m) noexcept {
    const std::uint64_t mm = m.value();
    std::uint64_t acc = 1 % mm;
    for (std::uint64_t i = 2; i <= n && acc != 0; ++i) acc = mulmod(acc, i % mm, mm);
    return Residue(acc, m);
}

}  // namespace gfwilson
