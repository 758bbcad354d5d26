#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "robinlab/bigfloat.hpp"
#include "robinlab/factored.hpp"
#include "robinlab/primes.hpp"
#include "robinlab/robin.hpp"

namespace robinlab {

// One entry of the structured sequence n_m = (product of the first m
// primes)^m, evaluated in log space.  main_term is
// e^gamma log log n (1 - 1/zeta(m+1)); residual is d(n) - main_term.
struct PrimorialPowerItem {
    unsigned m = 0;
    FactoredInteger n;
    RobinReport report;
    BigFloat main_term;
    BigFloat residual;
};

PrimorialPowerItem primorial_power_item(unsigned m, const PrimeTable& table,
                                        const EvalOptions& opts = {});

// Items for m = 2..m_max.
std::vector<PrimorialPowerItem> primorial_power_sweep(unsigned m_max, const PrimeTable& table,
                                                      const EvalOptions& opts = {});

// A colossally abundant number with the epsilon interval on which its
// exponent pattern is optimal.
struct CAItem {
    std::size_t index = 0;  // 1-based position in the CA sequence
    FactoredInteger n;
    BigFloat eps_lo;
    BigFloat eps_hi;
    RobinReport report;
};

// First `count` CA numbers in increasing order via the epsilon-breakpoint
// method: the exponent of p steps from a-1 to a at
// eps = log(1 + 1/(p + p^2 + ... + p^a)) / log p, and one number is emitted
// per breakpoint interval.  Breakpoints are compared through enclosures
// with precision escalation; an unresolvable comparison is treated as a
// simultaneous transition (both applied, intermediate emitted, duplicates
// dropped).
std::vector<CAItem> ca_generate(std::size_t count, const PrimeTable& table,
                                const EvalOptions& opts = {});

enum class DReportMode { Exact, LogScale, Indeterminate };

struct CATraceRow {
    CAItem item;
    DReportMode mode = DReportMode::Indeterminate;
    int d_sign = 0;
    // D(n) itself in Exact mode, log |D(n)| in LogScale mode.
    BigFloat d_value;
};

std::vector<CATraceRow> ca_trace(std::size_t count, const PrimeTable& table,
                                 const EvalOptions& opts = {});

// The prime power q^j with next = prev * q^j, when the quotient has that
// shape; nullopt otherwise.
std::optional<PrimePower> ca_step_quotient(const FactoredInteger& prev,
                                           const FactoredInteger& next);

} // namespace robinlab
