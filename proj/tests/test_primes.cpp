#include <catch2/catch.hpp>

#include "zetalab/primes.hpp"

using namespace zetalab;

TEST_CASE("small primes come out in order") {
    const auto primes = sieve_primes(30);
    REQUIRE(primes == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("prime counts match known pi(x)") {
    std::uint64_t count = 0;
    for_each_prime(1'000'000, [&](std::uint64_t) { ++count; });
    CHECK(count == 78498);

    count = 0;
    for_each_prime(97, [&](std::uint64_t) { ++count; });
    CHECK(count == 25);
}

TEST_CASE("is_prime spot checks") {
    PrimeSieve sieve(10'000);
    CHECK(sieve.is_prime(2));
    CHECK(sieve.is_prime(9973));
    CHECK_FALSE(sieve.is_prime(1));
    CHECK_FALSE(sieve.is_prime(9999));
    CHECK_FALSE(sieve.is_prime(10'001));  // out of range
}

TEST_CASE("degenerate sieve limits") {
    CHECK(sieve_primes(0).empty());
    CHECK(sieve_primes(1).empty());
    CHECK(sieve_primes(2) == std::vector<std::uint32_t>{2});
}
