#include <doctest.h>

#include <random>
#include <set>

#include "gfwilson/field.hpp"
#include "gfwilson/modnum.hpp"
#include "oracles.hpp"

using namespace gfwilson;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

std::vector<std::uint64_t> raw(const FieldElement& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

/// Product via independent polynomial long division.
std::vector<std::uint64_t> oracle_mul(const Field& f, const FieldElement& a, const FieldElement& b) {
    const auto m = f.modulus().coeffs();
    return oracle::poly_rem_monic(oracle::poly_mul(raw(a), raw(b), f.p()), {m.begin(), m.end()}, f.p());
}

}  // namespace

TEST_CASE("make_field") {
    const Field f3 = make_field(3, 1);
    CHECK(f3.q() == 3);
    CHECK(f3.modulus() == PolyZp::x(3));
    const Field f4 = make_field(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus().to_string() == "x^2+x+1");
    CHECK(f4.name() == "GF(2^2)");
    CHECK(make_field(2, 1).q() == 2);  // permitted at construction
    CHECK(make_field(2, 20).q() == (1U << 20));
    CHECK(code_of([] { make_field(4, 1); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { make_field(2, 21); }) == ErrorCode::SizeBudgetExceeded);
    CHECK(code_of([] { make_field(1031, 2); }) == ErrorCode::SizeBudgetExceeded);
}

TEST_CASE("element encoding round trip") {
    const Field f = make_field(3, 3);
    for (std::uint32_t e = 0; e < f.q(); ++e) CHECK(f.from_encoding(e).encoding() == e);
    CHECK(code_of([&] { f.from_encoding(27); }) == ErrorCode::InvalidArgument);
    CHECK(f.zero().is_zero());
    CHECK_FALSE(f.one().is_zero());
    CHECK(f.from_encoding(5).coeffs().size() == 3);
}

TEST_CASE("GF(4) and GF(5) products") {
    const Field f4 = make_field(2, 2);
    const FieldElement alpha = f4.from_encoding(2), alpha1 = f4.from_encoding(3);
    CHECK(f4.mul(alpha, alpha1) == f4.one());
    CHECK(f4.mul(alpha, alpha) == alpha1);  // alpha^2 = alpha + 1
    CHECK(f4.mul(alpha, f4.one()) == alpha);
    CHECK(f4.format(alpha1) == "x+1");
    const Field f5 = make_field(5, 1);
    CHECK(f5.mul(f5.from_encoding(2), f5.from_encoding(3)) == f5.one());
}

TEST_CASE("inverse") {
    const Field f4 = make_field(2, 2);
    CHECK(f4.inv(f4.from_encoding(2)) == f4.from_encoding(3));
    CHECK(f4.inv(f4.one()) == f4.one());
    CHECK(code_of([&] { f4.inv(f4.zero()); }) == ErrorCode::ZeroInverse);
}

TEST_CASE("pow") {
    const Field f4 = make_field(2, 2);
    CHECK(f4.pow(f4.from_encoding(2), 3) == f4.one());
    const Field f7 = make_field(7, 1);
    CHECK(f7.pow(f7.from_encoding(3), 6) == f7.one());
    CHECK(f7.pow(f7.from_encoding(3), 1) == f7.from_encoding(3));
    CHECK(f7.pow(f7.zero(), 0) == f7.one());
    CHECK(f7.pow(f7.zero(), 5) == f7.zero());
}

TEST_CASE("enumerate_nonzero") {
    auto encodings = [](const Field& f) {
        std::vector<std::uint32_t> out;
        for (const auto& a : f.enumerate_nonzero()) out.push_back(a.encoding());
        return out;
    };
    CHECK(encodings(make_field(3, 1)) == std::vector<std::uint32_t>{1, 2});
    CHECK(encodings(make_field(2, 2)) == std::vector<std::uint32_t>{1, 2, 3});
    const Field f = make_field(5, 2);
    const auto all = f.enumerate_nonzero();
    CHECK(all.size() == 24);
    std::set<std::uint32_t> distinct;
    for (const auto& a : all) {
        CHECK_FALSE(a.is_zero());
        distinct.insert(a.encoding());
    }
    CHECK(distinct.size() == 24);
}

TEST_CASE("embed") {
    CHECK(make_field(7, 1).embed(-1).encoding() == 6);
    CHECK(make_field(2, 2).embed(-1).encoding() == 1);
    CHECK(make_field(3, 2).embed(0).is_zero());
    CHECK(make_field(3, 2).embed(-4).encoding() == 2);
}

TEST_CASE("embed is a ring homomorphism") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> dist(-1000000, 1000000);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 3}, {3, 2}, {7, 1}, {13, 2}}) {
        const Field f = make_field(p, n);
        for (int i = 0; i < 500; ++i) {
            const std::int64_t x = dist(rng), y = dist(rng);
            CHECK(f.embed(x + y) == f.add(f.embed(x), f.embed(y)));
            CHECK(f.embed(x * y) == f.mul(f.embed(x), f.embed(y)));
        }
    }
}

TEST_CASE("mixing fields is rejected") {
    const Field f9 = make_field(3, 2), f27 = make_field(3, 3), f7 = make_field(7, 1);
    CHECK(code_of([&] { f9.add(f9.one(), f27.one()); }) == ErrorCode::FieldMismatch);
    CHECK(code_of([&] { f9.mul(f7.one(), f9.one()); }) == ErrorCode::FieldMismatch);
    CHECK(code_of([&] { f7.inv(f9.one()); }) == ErrorCode::FieldMismatch);
    CHECK(code_of([&] { f7.neg(FieldElement{}); }) == ErrorCode::FieldMismatch);
    // a second construction of the same field is interchangeable
    const Field again = make_field(3, 2);
    CHECK(again.mul(f9.from_encoding(4), f9.from_encoding(5)) == f9.mul(f9.from_encoding(4), f9.from_encoding(5)));
}

TEST_CASE("field axioms exhaustively for q <= 16") {
    for (std::uint32_t q : {3U, 4U, 5U, 7U, 8U, 9U, 11U, 13U, 16U}) {
        std::uint32_t p = 2;
        while (q % p != 0) ++p;
        unsigned n = 0;
        for (std::uint32_t r = q; r > 1; r /= p) ++n;
        const Field f = make_field(p, n);
        CAPTURE(q);
        std::vector<FieldElement> all{f.zero()};
        for (const auto& a : f.enumerate_nonzero()) all.push_back(a);
        for (const auto& a : all) {
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            CHECK(f.pow(a, q) == a);
            if (!a.is_zero()) {
                CHECK(f.mul(a, f.inv(a)) == f.one());
                CHECK(f.inv(a) == f.pow(a, q - 2));
            }
            for (const auto& b : all) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(f.add(a, b), b) == a);
                CHECK(raw(f.mul(a, b)) == oracle_mul(f, a, b));
                for (const auto& c : all) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("random products match polynomial long division, including n = 20") {
    std::mt19937_64 rng(99);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
             {2, 20}, {2, 11}, {3, 12}, {1021, 2}, {1048573, 1}, {101, 3}}) {
        const Field f = make_field(p, n);
        std::uniform_int_distribution<std::uint32_t> dist(0, f.q() - 1);
        for (int i = 0; i < 500; ++i) {
            const FieldElement a = f.from_encoding(dist(rng)), b = f.from_encoding(dist(rng));
            CHECK(raw(f.mul(a, b)) == oracle_mul(f, a, b));
            if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
        }
    }
}

TEST_CASE("scale is repeated addition") {
    const Field f = make_field(5, 2);
    const FieldElement a = f.from_encoding(17);
    FieldElement acc = f.zero();
    for (std::uint64_t k = 0; k < 12; ++k) {
        CHECK(f.scale(a, k) == acc);
        acc = f.add(acc, a);
    }
}

TEST_CASE("prime_powers_between") {
    std::vector<std::uint32_t> qs;
    for (const auto& pp : prime_powers_between(3, 16)) qs.push_back(pp.q);
    CHECK(qs == std::vector<std::uint32_t>{3, 4, 5, 7, 8, 9, 11, 13, 16});
    CHECK(prime_powers_between(3, 100).size() == 34);
    CHECK(prime_powers_between(3, 2).empty());
    std::vector<std::uint64_t> got;
    for (const auto& pp : prime_powers_between(3, 2048)) got.push_back(pp.q);
    CHECK(got == oracle::prime_powers_by_trial(2048));
}
