#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robinlab/bigfloat.hpp"
#include "robinlab/factored.hpp"
#include "robinlab/primes.hpp"

namespace robinlab {

struct EvalOptions {
    unsigned digits = kDefaultDigits;
    unsigned max_escalations = kMaxEscalations;
    unsigned exact_bit_limit = 512;
    unsigned parallelism = 1;
};

struct Constants {
    BigFloat euler_gamma;
    BigFloat e_gamma;
    static Constants at(unsigned digits = kDefaultDigits);
};

// Everything the workbench reports about one integer: sigma(n)/n, the
// deficit d(n) = e^gamma log log n - sigma(n)/n, the Robin verdict, and the
// scaled deficit d(n) sqrt(log n).
struct RobinReport {
    std::string n_label;
    BigFloat log_n;
    BigFloat loglog_n;
    BigFloat sigma_ratio;
    BigFloat d;
    std::optional<BigFloat> big_d;  // D(n) = n * d(n); exact mode only
    BigFloat band_stat;             // d(n) * sqrt(log n)
    bool violates_robin = false;
    unsigned escalations = 0;       // precision doublings spent on the verdict
};

// Full report for n given as an exponent vector.  n == 1 is a domain error
// (log log undefined); n == 2 is computable, has negative log log, and is
// always a violator.  The verdict compares the exact rational sigma(n)/n
// (log-space enclosure beyond the exact-mode bit bound) against certified
// enclosures of e^gamma log log n, doubling precision on a straddle.
RobinReport assess(const FactoredInteger& n, const EvalOptions& opts = {});

// Convenience overload for machine-size n.
RobinReport assess(std::uint64_t n, const PrimeTable& table, const EvalOptions& opts = {});

BigFloat band_stat(const FactoredInteger& n, const EvalOptions& opts = {});

// All n in [lo, hi] with sigma(n) >= e^gamma n log log n, decided exactly.
// Ordered by n regardless of opts.parallelism.
std::vector<RobinReport> verify_range(std::uint64_t lo, std::uint64_t hi,
                                      const EvalOptions& opts = {});

// Deficit comparison across the canonicalization map.
struct CanonicalComparison {
    FactoredInteger input;
    FactoredInteger canonical;
    RobinReport input_report;
    RobinReport canonical_report;
    bool deficit_preserved = false;       // d(n) >= d(canonical) - tolerance
    bool skipped_small_canonical = false; // canonical value was 2: outside the claim's domain
};

CanonicalComparison compare_with_canonical(const FactoredInteger& n, const PrimeTable& table,
                                           const EvalOptions& opts = {});

} // namespace robinlab
