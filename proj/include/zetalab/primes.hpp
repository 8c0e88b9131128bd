#pragma once

// Odd-only Eratosthenes bit sieve. Enough for the desk-scale limits used
// here (prime enumeration to ~1e8 takes well under a second).

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zetalab {

// Bit-packed composite flags for odd numbers 3,5,7,... up to limit.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t limit) : limit_(limit) {
        if (limit_ < 2) {
            bits_.clear();
            return;
        }
        const std::uint64_t n_odds = (limit_ - 1) / 2;  // count of odd numbers in [3, limit]
        bits_.assign((n_odds + 63) / 64, 0);
        for (std::uint64_t i = 0; i < n_odds; ++i) {
            if (bit(i)) continue;
            const std::uint64_t p = 2 * i + 3;
            if (p * p > limit_) break;
            for (std::uint64_t j = (p * p - 3) / 2; j < n_odds; j += p) set(j);
        }
    }

    std::uint64_t limit() const { return limit_; }

    bool is_prime(std::uint64_t n) const {
        if (n < 2 || n > limit_) return false;
        if (n == 2) return true;
        if (n % 2 == 0) return false;
        return !bit((n - 3) / 2);
    }

    template <typename F>
    void for_each_prime(F&& fn) const {
        if (limit_ >= 2) fn(std::uint64_t{2});
        const std::uint64_t n_odds = limit_ >= 3 ? (limit_ - 1) / 2 : 0;
        for (std::uint64_t i = 0; i < n_odds; ++i)
            if (!bit(i)) fn(2 * i + 3);
    }

private:
    bool bit(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint64_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    std::uint64_t limit_;
    std::vector<std::uint64_t> bits_;
};

inline std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
    if (limit > 0xFFFFFFFFull) throw std::invalid_argument("sieve_primes: limit exceeds 32-bit range");
    std::vector<std::uint32_t> primes;
    PrimeSieve sieve(limit);
    sieve.for_each_prime([&](std::uint64_t p) { primes.push_back(static_cast<std::uint32_t>(p)); });
    return primes;
}

template <typename F>
inline void for_each_prime(std::uint64_t limit, F&& fn) {
    PrimeSieve sieve(limit);
    sieve.for_each_prime(fn);
}

}  // namespace zetalab
