#pragma once

// Exact integer sieves for the divisor functions d(n) and d3(n), plus the
// shifted correlation sums sum_{n<=x} d3(n) d3(n+h).
//
// d is sieved by the divisor double loop, d3 = d * 1 by a second pass of the
// same loop (Dirichlet convolution over multiples). Both are O(limit log limit)
// and cache-friendly. After construction the table is immutable, so concurrent
// readers need no synchronization.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zetalab {

struct DivisorTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> d;   // d[n], valid for 1 <= n <= limit; d[0] unused
    std::vector<std::uint32_t> d3;  // d3[n], same indexing

    std::uint32_t divisor_count(std::uint64_t n) const { return d[n]; }
    std::uint32_t triple_count(std::uint64_t n) const { return d3[n]; }
};

// Memory guidance: two 4-byte arrays per entry, so limit = 1e8 needs ~800 MB
// and is the practical ceiling; limits near 1e9 are rejected outright.
inline constexpr std::uint64_t kMaxSieveLimit = 500'000'000;

inline DivisorTable sieve_divisor_tables(std::uint64_t limit) {
    if (limit == 0) throw std::invalid_argument("sieve_divisor_tables: limit must be >= 1");
    if (limit > kMaxSieveLimit)
        throw std::invalid_argument("sieve_divisor_tables: limit " + std::to_string(limit) +
                                    " exceeds supported ceiling " + std::to_string(kMaxSieveLimit));

    DivisorTable table;
    table.limit = limit;
    table.d.assign(limit + 1, 0);
    for (std::uint64_t k = 1; k <= limit; ++k)
        for (std::uint64_t m = k; m <= limit; m += k) ++table.d[m];

    table.d3.assign(limit + 1, 0);
    for (std::uint64_t k = 1; k <= limit; ++k) {
        const std::uint32_t dk = table.d[k];
        for (std::uint64_t m = k; m <= limit; m += k) table.d3[m] += dk;
    }
    return table;
}

// Exact sum_{n<=x} d3(n) d3(n+h). The accumulator is 64-bit with overflow
// detection; at the supported sieve limits genuine overflow would require
// x beyond any feasible table anyway.
inline std::uint64_t correlation_sum(const DivisorTable& table, std::uint64_t x, std::uint64_t h) {
    if (x == 0) throw std::invalid_argument("correlation_sum: x must be >= 1");
    if (h == 0) throw std::invalid_argument("correlation_sum: h must be >= 1");
    if (x + h > table.limit)
        throw std::invalid_argument("correlation_sum: x + h = " + std::to_string(x + h) +
                                    " exceeds sieve limit " + std::to_string(table.limit));

    std::uint64_t sum = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        const std::uint64_t prod = std::uint64_t{table.d3[n]} * table.d3[n + h];
        if (__builtin_add_overflow(sum, prod, &sum))
            throw std::overflow_error("correlation_sum: 64-bit accumulator overflow");
    }
    return sum;
}

}  // namespace zetalab
