#include <doctest.h>

#include <random>

#include "gfwilson/modnum.hpp"
#include "oracles.hpp"

using namespace gfwilson;

TEST_CASE("modulus bounds") {
    CHECK_THROWS_AS(Modulus(0), Error);
    CHECK_THROWS_AS(Modulus(1), Error);
    CHECK_THROWS_AS(Modulus(kMaxModulus + 1), Error);
    CHECK(Modulus(2).value() == 2);
    CHECK(Modulus(kMaxModulus).value() == kMaxModulus);
    try {
        Modulus bad(1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidModulus);
    }
}

TEST_CASE("mod_add and mod_mul") {
    const Modulus five(5);
    CHECK(mod_mul(Residue(3, five), Residue(4, five)).value() == 2);
    CHECK(mod_add(Residue(3, five), Residue(0, five)) == Residue(3, five));
    CHECK(mod_sub(Residue(1, five), Residue(3, five)).value() == 3);
    CHECK(mod_neg(Residue(0, five)).value() == 0);
    CHECK(Residue::from_signed(-1, five).value() == 4);
    CHECK(Residue::from_signed(-10, five).value() == 0);

    // 2^58 mod (2^30 - 1): 2^30 == 1, so 2^58 == 2^28.
    const Modulus big((1U << 30) - 1);
    const Residue half(1U << 29, big);
    CHECK(mod_mul(half, half).value() == (1U << 28));
    const auto wide = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 58) % big.value());
    CHECK(mod_mul(half, half).value() == wide);
}

TEST_CASE("mismatched moduli are rejected") {
    const Residue a(1, Modulus(5)), b(1, Modulus(7));
    CHECK_THROWS_AS(mod_add(a, b), Error);
    CHECK_THROWS_AS(mod_sub(a, b), Error);
    try {
        (void)mod_mul(a, b);
        FAIL("expected ModulusMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ModulusMismatch);
    }
}

TEST_CASE("mod_inv") {
    CHECK(mod_inv(Residue(3, Modulus(7))).value() == 5);
    CHECK(mod_inv(Residue(1, Modulus(12))).value() == 1);
    try {
        (void)mod_inv(Residue(2, Modulus(4)));
        FAIL("expected NotInvertible");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInvertible);
    }
    // composite modulus: units mod 25
    const Modulus m25(25);
    for (std::uint64_t a = 1; a < 25; ++a) {
        if (a % 5 == 0) {
            CHECK_THROWS_AS(mod_inv(Residue(a, m25)), Error);
        } else {
            CHECK(mod_mul(Residue(a, m25), mod_inv(Residue(a, m25))).value() == 1);
        }
    }
}

TEST_CASE("mod_inv is an involution") {
    for (std::uint64_t m : {2U, 9U, 25U, 97U, 1000U, 65537U}) {
        const Modulus mod(m);
        for (std::uint64_t a = 1; a < std::min<std::uint64_t>(m, 500); ++a) {
            const Residue r(a, mod);
            bool invertible = true;
            Residue inv = r;
            try {
                inv = mod_inv(r);
            } catch (const Error&) {
                invertible = false;
            }
            if (invertible) CHECK(mod_inv(inv) == r);
        }
    }
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(Residue(2, Modulus(1000)), 10).value() == 24);
    CHECK(mod_pow(Residue(0, Modulus(13)), 0).value() == 1);
    CHECK(mod_pow(Residue(5, Modulus(13)), 0).value() == 1);
    // 3^6 mod 7 by repeated multiplication
    std::uint64_t brute = 1;
    for (int i = 0; i < 6; ++i) brute = brute * 3 % 7;
    CHECK(brute == 1);
    CHECK(mod_pow(Residue(3, Modulus(7)), 6).value() == brute);
}

TEST_CASE("Fermat: a^(p-1) = 1 for every unit, p <= 97") {
    for (std::uint64_t p : primes_up_to(97)) {
        const Modulus mod(p);
        for (std::uint64_t a = 1; a < p; ++a) CHECK(mod_pow(Residue(a, mod), p - 1).value() == 1);
    }
}

TEST_CASE("ring laws exhaustively for m <= 11") {
    for (std::uint64_t m = 2; m <= 11; ++m) {
        const Modulus mod(m);
        for (std::uint64_t x = 0; x < m; ++x) {
            for (std::uint64_t y = 0; y < m; ++y) {
                const Residue a(x, mod), b(y, mod);
                CHECK((a + b) == (b + a));
                CHECK((a * b) == (b * a));
                CHECK((a + b).value() == (x + y) % m);
                CHECK((a * b).value() == (x * y) % m);
                for (std::uint64_t z = 0; z < m; ++z) {
                    const Residue c(z, mod);
                    CHECK(((a + b) + c) == (a + (b + c)));
                    CHECK(((a * b) * c) == (a * (b * c)));
                    CHECK((a * (b + c)) == (a * b + a * c));
                }
            }
        }
    }
}

TEST_CASE("ring laws on random large moduli") {
    std::mt19937_64 rng(20261019);
    for (int round = 0; round < 2000; ++round) {
        const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(12, kMaxModulus)(rng);
        const Modulus mod(m);
        std::uniform_int_distribution<std::uint64_t> dist(0, m - 1);
        const Residue a(dist(rng), mod), b(dist(rng), mod), c(dist(rng), mod);
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a - b) + b == a);
        const auto wide = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.value()) * b.value() % m);
        CHECK((a * b).value() == wide);
    }
}

TEST_CASE("is_prime") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(561));         // Carmichael
    CHECK_FALSE(is_prime(3215031751));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(2147483647));
    CHECK(is_prime(1073741789));        // largest prime below 2^30
    CHECK_FALSE(is_prime(std::uint64_t{1} << 30));
    for (std::uint64_t n = 0; n < 100000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
}

TEST_CASE("is_prime near 2^30 agrees with trial division") {
    for (std::uint64_t n = kMaxModulus - 5000; n <= kMaxModulus; ++n) {
        REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
    }
}

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(0).empty());
    CHECK(primes_up_to(100).size() == 25);
    CHECK(primes_up_to(10000).size() == 1229);
    for (std::uint64_t p : primes_up_to(5000)) CHECK(oracle::is_prime_trial(p));
}

TEST_CASE("factorial_mod") {
    CHECK(factorial_mod(6, Modulus(7)).value() == 6);
    CHECK(factorial_mod(0, Modulus(5)).value() == 1);
    CHECK(factorial_mod(4, Modulus(25)).value() == 24);
    CHECK(factorial_mod(10, Modulus(7)).value() == 0);
    CHECK(factorial_mod(1, Modulus(2)).value() == 1);
}

TEST_CASE("Wilson: (p-1)! = p-1 mod p for p <= 10000") {
    for (std::uint64_t p : primes_up_to(10000)) CHECK(factorial_mod(p - 1, Modulus(p)).value() == p - 1);
}
