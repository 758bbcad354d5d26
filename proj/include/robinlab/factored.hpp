#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robinlab/bigfloat.hpp"
#include "robinlab/primes.hpp"

namespace robinlab {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// An integer as its sorted prime-exponent vector; the empty vector is 1.
// The integer itself is only materialized on request, so values far beyond
// machine range stay representable.
class FactoredInteger {
public:
    FactoredInteger() = default;

    // Validates: strictly increasing prime bases, exponents >= 1.
    static FactoredInteger from_factors(std::vector<PrimePower> factors);

    // Trial division against the table.  A leftover cofactor above
    // limit^2 cannot be certified prime and is a range error.
    static FactoredInteger factorize(std::uint64_t n, const PrimeTable& table);

    const std::vector<PrimePower>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::size_t factor_count() const { return factors_.size(); }
    std::uint64_t largest_prime() const;

    // Upper estimate of log2(n); used for exact-mode gating.
    double bit_length_estimate() const;

    // Exact value (use bit_length_estimate to avoid absurd requests).
    mpz_class value() const;

    // Exact sum of divisors, prod (q^(a+1) - 1) / (q - 1).
    mpz_class sigma() const;

    // `2^4·3^2·5·7` (exponent 1 omitted, middle-dot separated); "1" for 1.
    std::string to_string() const;
    // Accepts '·' or '*' as separator; rejects unsorted or non-prime bases.
    static FactoredInteger parse(const std::string& text);

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    std::vector<PrimePower> factors_;
};

// The map replacing the primes of n by the first primes, exponents kept in
// order; never increases the value.
FactoredInteger canonicalize(const FactoredInteger& n, const PrimeTable& table);

struct SigmaRatio {
    BigFloat log_value;                 // log of sigma(n)/n
    std::optional<mpq_class> exact;     // reduced sigma(n)/n when materializable
};

// sigma(x^a)/x^a = 1 + 1/x + ... + 1/x^a, exact.  Requires a >= 1, x >= 2.
mpq_class prime_power_sigma_ratio_exact(std::uint32_t a, std::uint64_t x);

// Same quantity as an enclosure, computed by the explicit term sum with a
// geometric bound on the dropped tail.  Internal callers may pass a = 0.
Interval prime_power_sigma_ratio_interval(std::uint32_t a, std::uint64_t x, mpfr_prec_t prec);

// Rounded-to-nearest image of the enclosure above.
BigFloat prime_power_sigma_ratio(std::uint32_t a, std::uint64_t x, unsigned digits = kDefaultDigits);

// sigma(n)/n over all prime-power factors.  The exact rational is filled in
// when n fits below `exact_bit_limit` bits.
SigmaRatio sigma_ratio(const FactoredInteger& n, unsigned digits = kDefaultDigits,
                       unsigned exact_bit_limit = 512);

// Enclosure of log(sigma(n)/n).
Interval log_sigma_ratio_interval(const FactoredInteger& n, mpfr_prec_t prec);

// log n = sum a_i log q_i.
BigFloat log_of(const FactoredInteger& n, unsigned digits = kDefaultDigits);
Interval log_interval_of(const FactoredInteger& n, mpfr_prec_t prec);

// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime_u64(std::uint64_t n);

} // namespace robinlab
