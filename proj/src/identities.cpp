#include "gfwilson/identities.hpp"

#include <algorithm>

#include "gfwilson/modnum.hpp"

namespace gfwilson {

namespace {

std::string enc(const FieldElement& a) { return std::to_string(a.encoding()); }

void require_q3(const Field& field) {
    if (field.q() < 3) {
        throw Error(ErrorCode::QTooSmall,
                    field.name() + " has q = " + std::to_string(field.q()) + " < 3");
    }
}

void require_prime_at_least(std::uint64_t p, std::uint64_t lo) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p < lo) {
        throw Error(ErrorCode::PTooSmall, "p = " + std::to_string(p) + " below " + std::to_string(lo));
    }
}

ParamList field_params(const Field& field) {
    return {{"p", field.p()}, {"n", field.n()}, {"q", field.q()}};
}

CheckResult make_check(std::string name, ParamList params, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    return {std::move(name), std::move(params), pass, std::move(expected), std::move(actual)};
}

}  // namespace

bool VerificationReport::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

VerificationReport field_report(const Field& field) {
    VerificationReport report;
    report.subject = field.name();
    report.params = field_params(field);
    const auto m = field.modulus().coeffs();
    report.modulus.assign(m.begin(), m.end());
    return report;
}

VerificationReport verify_generalized_wilson(const Field& field) {
    require_q3(field);
    return verify_generalized_wilson(esp_all_product(field));
}

VerificationReport verify_generalized_wilson(const SymmetricProfile& profile) {
    const Field& field = profile.field;
    require_q3(field);
    VerificationReport report = field_report(field);
    for (std::uint64_t k = 1; k <= field.q() - 1; ++k) {
        ParamList params = field_params(field);
        params.emplace_back("k", static_cast<std::int64_t>(k));
        report.checks.push_back(make_check("generalized_wilson", std::move(params),
                                           enc(predicted_sk(field, k)), enc(profile.s(k))));
    }
    return report;
}

VerificationReport verify_vieta_evaluation(const Field& field) {
    require_q3(field);
    return verify_vieta_evaluation(esp_all_product(field));
}

VerificationReport verify_vieta_evaluation(const SymmetricProfile& profile) {
    const Field& field = profile.field;
    require_q3(field);
    const std::uint64_t m = field.q() - 1;
    // signed[k-1] = (-1)^k s_k
    std::vector<FieldElement> signed_s;
    signed_s.reserve(m);
    for (std::uint64_t k = 1; k <= m; ++k) {
        signed_s.push_back(k % 2 == 0 ? profile.s(k) : field.neg(profile.s(k)));
    }
    VerificationReport report = field_report(field);
    for (const FieldElement& x : field.enumerate_nonzero()) {
        // Horner: the k = 1 term carries x^{q-2}, the k = q-1 term x^0.
        FieldElement acc = field.zero();
        for (const FieldElement& c : signed_s) acc = field.add(field.mul(acc, x), c);
        acc = field.add(acc, field.one());
        ParamList params = field_params(field);
        params.emplace_back("x", x.encoding());
        report.checks.push_back(make_check("vieta_evaluation", std::move(params), "0", enc(acc)));
    }
    return report;
}

CheckResult verify_wilson_prime(std::uint64_t p) {
    require_prime_at_least(p, 3);
    const Modulus mod(p);
    return make_check("wilson", {{"p", static_cast<std::int64_t>(p)}}, std::to_string(p - 1),
                      std::to_string(factorial_mod(p - 1, mod).value()));
}

CheckResult verify_wilson_type(std::uint64_t p, std::uint64_t k) {
    require_prime_at_least(p, 3);
    if (k < 1 || k > p - 1) {
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " + std::to_string(p - 1) + "]");
    }
    return verify_wilson_type(esp_all_product(make_field(static_cast<std::uint32_t>(p), 1)), k);
}

CheckResult verify_wilson_type(const SymmetricProfile& prime_field_profile, std::uint64_t k) {
    const Field& field = prime_field_profile.field;
    if (field.n() != 1) {
        throw Error(ErrorCode::InvalidArgument, "Wilson-type congruences need a prime field");
    }
    const std::uint64_t p = field.p();
    require_prime_at_least(p, 3);
    if (k < 1 || k > p - 1) {
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " + std::to_string(p - 1) + "]");
    }
    const auto expected =
        Residue::from_signed(-static_cast<std::int64_t>(k / (p - 1)), Modulus(p)).value();
    // In GF(p) the encoding of an element is its residue.
    return make_check("wilson_type",
                      {{"p", static_cast<std::int64_t>(p)}, {"k", static_cast<std::int64_t>(k)}},
                      std::to_string(expected), enc(prime_field_profile.s(k)));
}

CheckResult verify_wolstenholme_field(const Field& field) {
    if (field.q() < 5) {
        throw Error(ErrorCode::QTooSmallForWolstenholme,
                    field.name() + " has q = " + std::to_string(field.q()) + " < 5");
    }
    return verify_wolstenholme_field(esp_all_product(field));
}

CheckResult verify_wolstenholme_field(const SymmetricProfile& profile) {
    const Field& field = profile.field;
    if (field.q() < 5) {
        throw Error(ErrorCode::QTooSmallForWolstenholme,
                    field.name() + " has q = " + std::to_string(field.q()) + " < 5");
    }
    const std::vector<FieldElement> units = field.enumerate_nonzero();
    FieldElement product = field.one();
    for (const FieldElement& a : units) product = field.mul(product, a);
    FieldElement direct = field.zero();
    for (const FieldElement& a : units) direct = field.add(direct, field.mul(product, field.inv(a)));
    const FieldElement& from_profile = profile.s(field.q() - 2);

    std::string actual = direct == from_profile
                             ? enc(direct)
                             : "direct=" + enc(direct) + ",profile=" + enc(from_profile);
    return make_check("wolstenholme_field", field_params(field), "0", std::move(actual));
}

std::uint64_t wolstenholme_classical_sum(std::uint64_t p) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    const Modulus mod(p * p);  // throws past 2^30
    const std::uint64_t m = mod.value();
    // prefix[i] = 1*2*...*i, suffix[i] = i*(i+1)*...*(p-1), both mod p^2
    std::vector<std::uint64_t> prefix(p, 1), suffix(p + 1, 1);
    for (std::uint64_t i = 1; i < p; ++i) prefix[i] = mulmod(prefix[i - 1], i, m);
    for (std::uint64_t i = p - 1; i >= 1; --i) suffix[i] = mulmod(suffix[i + 1], i, m);
    std::uint64_t sum = 0;
    for (std::uint64_t k = 1; k < p; ++k) sum = (sum + mulmod(prefix[k - 1], suffix[k + 1], m)) % m;
    return sum;
}

CheckResult verify_wolstenholme_classical(std::uint64_t p, bool allow_negative_control) {
    require_prime_at_least(p, (allow_negative_control && p == 3) ? 3 : 5);
    return make_check("wolstenholme_classical", {{"p", static_cast<std::int64_t>(p)}}, "0",
                      std::to_string(wolstenholme_classical_sum(p)));
}

}  // namespace gfwilson
