#pragma once

#include <cstdint>
#include <vector>

#include "robinlab/bigfloat.hpp"

namespace robinlab {

// Sieve-backed prime list with cumulative log sums, so that Chebyshev's
// first summatory function theta(x) = sum_{p <= x} log p is an O(log)
// lookup.  Immutable after construction; safe for concurrent reads.
class PrimeTable {
public:
    // Segmented sieve of Eratosthenes up to `limit` (inclusive).
    // Cumulative logs are stored at `digits` working precision.
    static PrimeTable build(std::uint64_t limit, unsigned digits = kDefaultDigits);

    std::uint64_t limit() const { return limit_; }
    std::size_t count() const { return primes_.size(); }
    const std::vector<std::uint64_t>& primes() const { return primes_; }
    unsigned digits() const { return digits_; }

    // p_m, 1-indexed so that nth_prime(1) == 2.
    std::uint64_t nth_prime(std::size_t m) const;

    // Cumulative log sum over the first k+1 primes (0-indexed).
    const BigFloat& cumlog(std::size_t k) const;

    // Number of primes <= x.
    std::size_t count_upto(double x) const;

    // theta(x) = sum_{p <= x} log p.  Empty sum below 2 is 0 by convention;
    // x above the sieve limit is a range error.
    BigFloat theta(double x) const;

    // (theta(x) - x) * log(x) / x, the normalized prime-number-theorem
    // residual.  Requires 2 <= x <= limit.
    BigFloat theta_pnt_residual(double x) const;

private:
    PrimeTable() = default;

    std::uint64_t limit_ = 0;
    unsigned digits_ = kDefaultDigits;
    std::vector<std::uint64_t> primes_;
    std::vector<BigFloat> cumlog_;
};

} // namespace robinlab
