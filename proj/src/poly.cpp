#include "gfwilson/poly.hpp"

#include <algorithm>

#include "gfwilson/modnum.hpp"

namespace gfwilson {

namespace {

void require_same(const PolyZp& f, const PolyZp& g) {
    if (f.p() != g.p()) {
        throw Error(ErrorCode::ModulusMismatch, "polynomials over Z_" + std::to_string(f.p()) +
                                                    " and Z_" + std::to_string(g.p()));
    }
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(mod_inv(Residue(a, Modulus(p))).value());
}

std::vector<std::uint64_t> widen(std::span<const PolyZp::Coeff> c) {
    return {c.begin(), c.end()};
}

/// Distinct prime divisors of n, ascending.
std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned t = 2; t * t <= n; ++t) {
        if (n % t != 0) continue;
        out.push_back(t);
        while (n % t == 0) n /= t;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

PolyZp::PolyZp(std::vector<std::uint64_t> coeffs, std::uint32_t p) : p_(p) {
    if (p < 2 || p > (1U << 30)) throw Error(ErrorCode::InvalidModulus, "polynomial modulus outside [2, 2^30]");
    coeffs_.reserve(coeffs.size());
    for (std::uint64_t c : coeffs) coeffs_.push_back(static_cast<Coeff>(c % p));
    trim();
}

PolyZp PolyZp::monic_from_encoding(std::uint64_t encoding, unsigned degree, std::uint32_t p) {
    std::vector<std::uint64_t> c(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        c[i] = encoding % p;
        encoding /= p;
    }
    c[degree] = 1;
    return PolyZp(std::move(c), p);
}

void PolyZp::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyZp PolyZp::monic() const {
    if (is_zero() || leading() == 1) return *this;
    const std::uint64_t inv = inverse_mod(leading(), p_);
    std::vector<std::uint64_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mulmod(coeffs_[i], inv, p_);
    return PolyZp(std::move(c), p_);
}

std::string PolyZp::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Coeff c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (c != 1 || d == 0) out += std::to_string(c);
        if (d >= 1) out += 'x';
        if (d >= 2) out += '^' + std::to_string(d);
    }
    return out;
}

PolyZp poly_add(const PolyZp& f, const PolyZp& g) {
    require_same(f, g);
    std::vector<std::uint64_t> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::uint64_t{f[i]} + g[i];
    return PolyZp(std::move(c), f.p());
}

PolyZp poly_sub(const PolyZp& f, const PolyZp& g) {
    require_same(f, g);
    std::vector<std::uint64_t> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::uint64_t{f[i]} + f.p() - g[i];
    return PolyZp(std::move(c), f.p());
}

PolyZp poly_mul(const PolyZp& f, const PolyZp& g) {
    require_same(f, g);
    if (f.is_zero() || g.is_zero()) return PolyZp::zero(f.p());
    const std::uint64_t p = f.p();
    const auto a = f.coeffs();
    const auto b = g.coeffs();
    std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    return PolyZp(std::move(c), f.p());
}

DivMod poly_divmod(const PolyZp& f, const PolyZp& g) {
    require_same(f, g);
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "polynomial division by zero");
    const std::uint64_t p = f.p();
    if (f.degree() < g.degree()) return {PolyZp::zero(f.p()), f};

    const auto gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const std::uint64_t lead_inv = inverse_mod(g.leading(), f.p());
    std::vector<std::uint64_t> rem = widen(f.coeffs());
    std::vector<std::uint64_t> quot(rem.size() - dg, 0);
    for (std::size_t d = rem.size(); d-- > dg;) {
        const std::uint64_t c = mulmod(rem[d], lead_inv, p);
        if (c == 0) continue;
        quot[d - dg] = c;
        const std::uint64_t neg = p - c;
        for (std::size_t i = 0; i <= dg; ++i) rem[d - dg + i] = (rem[d - dg + i] + neg * gc[i]) % p;
    }
    rem.resize(dg);
    return {PolyZp(std::move(quot), f.p()), PolyZp(std::move(rem), f.p())};
}

PolyZp poly_gcd(const PolyZp& f, const PolyZp& g) {
    require_same(f, g);
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    PolyZp a = f, b = g;
    while (!b.is_zero()) {
        PolyZp r = poly_divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::pair<PolyZp, PolyZp> poly_gcd_inverse(const PolyZp& f, const PolyZp& m) {
    require_same(f, m);
    if (f.is_zero() && m.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
    // Invariant: old_s*f == old_r (mod m), s*f == r (mod m).
    PolyZp old_r = f, r = m;
    PolyZp old_s = PolyZp::constant(1, f.p()), s = PolyZp::zero(f.p());
    while (!r.is_zero()) {
        auto [quot, rem] = poly_divmod(old_r, r);
        old_r = std::exchange(r, std::move(rem));
        PolyZp next_s = poly_sub(old_s, poly_mul(quot, s));
        old_s = std::exchange(s, std::move(next_s));
    }
    const std::uint64_t scale = inverse_mod(old_r.leading(), f.p());
    old_s = poly_mul(old_s, PolyZp::constant(scale, f.p()));
    if (m.degree() >= 1) old_s = poly_divmod(old_s, m).remainder;
    return {old_r.monic(), std::move(old_s)};
}

PolyZp poly_powmod(const PolyZp& base, std::uint64_t e, const PolyZp& modpoly) {
    require_same(base, modpoly);
    if (modpoly.degree() < 1) {
        throw Error(ErrorCode::DivisionByZeroPoly, "powmod modulus must have degree >= 1");
    }
    PolyZp result = PolyZp::constant(1, base.p());
    PolyZp acc = poly_divmod(base, modpoly).remainder;
    while (e != 0) {
        if (e & 1U) result = poly_divmod(poly_mul(result, acc), modpoly).remainder;
        e >>= 1U;
        if (e != 0) acc = poly_divmod(poly_mul(acc, acc), modpoly).remainder;
    }
    return result;
}

bool is_irreducible(const PolyZp& f) {
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "irreducibility of a constant");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic");
    const auto n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;

    // frob[i] = x^(p^i) mod f, i = 0..n
    const PolyZp x = PolyZp::x(f.p());
    std::vector<PolyZp> frob{poly_divmod(x, f).remainder};
    for (unsigned i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), f.p(), f));

    if (frob[n] != frob[0]) return false;
    for (unsigned t : prime_divisors(n)) {
        const PolyZp diff = poly_sub(frob[n / t], x);
        if (diff.is_zero() || poly_gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

bool is_irreducible_trial(const PolyZp& f) {
    if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "irreducibility of a constant");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic");
    if (f.degree() > 6 || f.p() > 7) {
        throw Error(ErrorCode::BudgetExceeded, "trial division limited to degree <= 6, p <= 7");
    }
    const auto n = static_cast<unsigned>(f.degree());
    for (unsigned d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= f.p();
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            const PolyZp divisor = PolyZp::monic_from_encoding(enc, d, f.p());
            if (poly_divmod(f, divisor).remainder.is_zero()) return false;
        }
    }
    return true;
}

PolyZp find_canonical_irreducible(std::uint32_t p, unsigned n) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) {
        count *= p;
        if (count > (std::uint64_t{1} << 20)) {
            throw Error(ErrorCode::SizeBudgetExceeded,
                        std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^20");
        }
    }
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        PolyZp candidate = PolyZp::monic_from_encoding(enc, n, p);
        if (is_irreducible(candidate)) return candidate;
    }
    // Unreachable: irreducibles of every degree exist over every prime field.
    throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace gfwilson
