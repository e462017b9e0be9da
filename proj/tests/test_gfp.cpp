#include <doctest.h>

#include <random>

#include "wildram/gfp.hpp"

using namespace wildram;

namespace {

// independent oracle: (p-1)!/(i!(p-i)!) over exact integers, then mod p
std::uint32_t dp_oracle(std::uint32_t p, std::uint32_t i)
{
    auto fact = [](std::uint32_t m) {
        std::uint64_t r = 1;
        for (std::uint32_t k = 2; k <= m; ++k)
            r *= k;
        return r;
    };
    std::uint64_t v = fact(p - 1) / (fact(i) * fact(p - i));
    return static_cast<std::uint32_t>(v % p);
}

}  // namespace

TEST_CASE("inverses")
{
    CHECK(Fp(2, 5).inv() == Fp(3, 5));
    CHECK(Fp(1, 2).inv() == Fp(1, 2));
    CHECK(Fp(3, 7).inv() == Fp(5, 7));
    CHECK_THROWS_AS(Fp(0, 5).inv(), division_error);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u})
        for (std::uint32_t a = 1; a < p; ++a)
            CHECK((Fp(a, p) * Fp(a, p).inv()).value() == 1);
}

TEST_CASE("dp coefficients")
{
    CHECK(dp_coeff(2, 1) == Fp(1, 2));
    CHECK(dp_coeff(3, 1) == Fp(1, 3));   // 2!/(1! 2!) = 1
    CHECK(dp_coeff(5, 2) == Fp(2, 5));   // 24/(2*6) = 2
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t i = 1; i < p; ++i) {
            CHECK(dp_coeff(p, i).value() == dp_oracle(p, i));
            CHECK(dp_coeff(p, i) == dp_coeff(p, p - i));  // symmetry
        }
    CHECK_THROWS_AS(dp_coeff(5, 0), domain_error);
    CHECK_THROWS_AS(dp_coeff(5, 5), domain_error);
}

TEST_CASE("binomials")
{
    CHECK(binom_mod_p(4, 2, 3) == Fp(0, 3));
    CHECK(binom_mod_p(100, 0, 7) == Fp(1, 7));
    CHECK(binom_mod_p(7, 3, 2) == Fp(1, 2));  // 35 mod 2
    // Lucas agrees with the exact binomial reduced
    for (std::uint64_t n = 0; n <= 20; ++n)
        for (std::uint64_t k = 0; k <= n; ++k)
            for (std::uint32_t p : {2u, 3u, 5u}) {
                BigInt exact = binom_z(n, k) % p;
                CHECK(binom_mod_p(n, k, p).value() ==
                      static_cast<std::uint32_t>(exact));
            }
    CHECK(binom_z(40, 4) == 91390);
    CHECK(binom_z(3, 5) == 0);
}

TEST_CASE("field axioms on randomized triples")
{
    std::mt19937_64 rng(20240901);
    for (std::uint32_t p : {2u, 3u, 5u, 13u, 19u}) {
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        for (int t = 0; t < 200; ++t) {
            Fp a(d(rng), p), b(d(rng), p), c(d(rng), p);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Fp(0, p));
            if (!a.is_zero())
                CHECK(a * a.inv() == Fp(1, p));
        }
    }
}

TEST_CASE("prime cap")
{
    CHECK_THROWS_AS(require_supported_prime(23), domain_error);
    CHECK_THROWS_AS(require_supported_prime(4), domain_error);
    CHECK_NOTHROW(require_supported_prime(23, 29));
    CHECK_NOTHROW(require_supported_prime(19));
}
