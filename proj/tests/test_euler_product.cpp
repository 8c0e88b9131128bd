#include <catch2/catch.hpp>

#include <cmath>
#include <vector>

#include "zetalab/euler_product.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/prime_zeta.hpp"

using namespace zetalab;

TEST_CASE("prime zeta: first-prime dominance at large k") {
    const double p60 = prime_zeta(60);
    CHECK(std::abs(p60 - std::exp2(-60.0)) < 2.0 * std::pow(3.0, -60.0));
}

TEST_CASE("prime zeta rejects divergent k") {
    CHECK_THROWS_AS(prime_zeta(1), std::invalid_argument);
    CHECK_THROWS_AS(prime_zeta(0), std::invalid_argument);
}

TEST_CASE("prime zeta P(2) matches direct summation over primes to 1e8") {
    double direct = 0.0;
    for_each_prime(100'000'000ull, [&](std::uint64_t p) {
        direct += 1.0 / (static_cast<double>(p) * static_cast<double>(p));
    });
    // omitted tail: sum_{p > 1e8} p^-2 < 1/(1e8 - 1)
    const double tail_bound = 1.0 / 99'999'999.0;
    const double p2 = prime_zeta(2);
    CHECK(p2 > direct);
    CHECK(p2 - direct < tail_bound);
}

TEST_CASE("prime zeta P(3) stable under truncation refinement") {
    // precision controls the Moebius truncation; tightening it twice over
    // must not move the value at the requested precision
    const double coarse = prime_zeta(3, 1e-12);
    const double fine = prime_zeta(3, 1e-14);
    CHECK(std::abs(coarse - fine) < 1e-12);
}

TEST_CASE("log-factor series: closed form against the power-series recurrence") {
    // log(1 + u) with u = -9x^2 + 16x^3 - 9x^4 + x^6:
    // c_n = a_n - (1/n) sum_{j<n} j c_j a_{n-j}
    const std::vector<double> a{0.0, 0.0, -9.0, 16.0, -9.0, 0.0, 1.0};
    std::vector<double> c(26, 0.0);
    for (std::size_t n = 1; n < c.size(); ++n) {
        double acc = n < a.size() ? a[n] : 0.0;
        for (std::size_t j = 1; j < n; ++j) {
            const std::size_t k = n - j;
            if (k < a.size()) acc -= static_cast<double>(j) / static_cast<double>(n) * c[j] * a[k];
        }
        c[n] = acc;
    }
    CHECK(a3_log_series_coeff(1) == 0.0);  // the k=1 cancellation: -4 + 4
    for (int k = 1; k < 26; ++k)
        CHECK(a3_log_series_coeff(k) == Approx(c[k]).epsilon(1e-12).margin(1e-12));
}

TEST_CASE("a3 direct: pinned small products") {
    const auto at2 = a3_direct(2);
    CHECK(at2.value == Approx(13.0 / 64.0).epsilon(1e-15));
    CHECK(at2.prime_limit == 2);

    const auto at3 = a3_direct(3);
    CHECK(at3.value == Approx(13.0 / 64.0 * 352.0 / 729.0).epsilon(1e-14));

    CHECK_THROWS_AS(a3_direct(1), std::invalid_argument);
}

TEST_CASE("a3 local factors lie in (0,1)") {
    for_each_prime(10'000, [&](std::uint64_t p) {
        const double x = 1.0 / static_cast<double>(p);
        const double factor = std::pow(1.0 - x, 4) * (1.0 + 4.0 * x + x * x);
        REQUIRE(factor > 0.0);
        REQUIRE(factor < 1.0);
    });
    const auto v = a3_direct(10'000);
    CHECK(v.value > 0.0);
    CHECK(v.value < 1.0);
}

TEST_CASE("a3 direct is nonincreasing in the prime limit") {
    double prev = a3_direct(5).value;
    for (std::uint64_t limit : {7, 11, 13, 100, 1000, 10'000}) {
        const double next = a3_direct(limit).value;
        CHECK(next <= prev);
        prev = next;
    }
}

TEST_CASE("a3 tail bounds decrease with the prime limit") {
    double prev = a3_direct(2).tail_bound;
    for (std::uint64_t limit : {3, 5, 7, 50, 1000, 100'000}) {
        const double next = a3_direct(limit).tail_bound;
        CHECK(next < prev);
        prev = next;
    }
}

TEST_CASE("a3 accelerated: self-consistency across series depth") {
    const auto shallow = a3_accelerated(2, 1000);
    const auto deep = a3_accelerated(12, 1000);
    CHECK(std::abs(shallow.value - deep.value) <= shallow.tail_bound + deep.tail_bound);
    CHECK(deep.tail_bound < shallow.tail_bound);
    CHECK_THROWS_AS(a3_accelerated(1, 1000), std::invalid_argument);
}

TEST_CASE("a3: the two routes agree") {
    const auto direct = a3_direct(10'000'000);
    const auto accel = a3_accelerated(12, 1000);

    // plain truncation differs from the full product by its omitted tail
    CHECK(std::abs(std::log(direct.value / accel.value)) <=
          direct.tail_bound + accel.tail_bound);

    // with the rigorous tail correction the direct route reaches 1e-10
    const auto corr = a3_tail_correction(10'000'000, 8);
    const double corrected = direct.value * std::exp(corr.log_correction);
    CHECK(std::abs(corrected - accel.value) <= 1e-10);
    CHECK(corr.remainder_bound <= 1e-10);
    CHECK(accel.tail_bound <= 1e-10);
}
