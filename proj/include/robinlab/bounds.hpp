#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robinlab/bigfloat.hpp"
#include "robinlab/factored.hpp"
#include "robinlab/primes.hpp"

namespace robinlab {

// Rosser-Schoenfeld effective Mertens bounds are stated for x >= this;
// checks below it are evaluated anyway but flagged.
constexpr double kMertensSandwichThreshold = 286.0;

// One evaluated sandwich lhs <= mid <= rhs with a certified verdict.
struct BoundCheck {
    std::string name;
    BigFloat parameter;       // x or t
    BigFloat lhs;
    BigFloat mid;
    BigFloat rhs;
    bool holds = false;
    BigFloat margin;          // min distance from mid to either side
    bool below_threshold = false;
    BigFloat enclosure_width; // widest enclosure involved in the verdict
};

// prod_{p <= x} (1 - 1/p)^-1, computed as exp of the negated log1p sum.
BigFloat mertens_product(const PrimeTable& table, double x, unsigned digits = kDefaultDigits);

// e^gamma log x (1 - 1/(2 log^2 x)) <= mertens product <= e^gamma log x (1 + 1/log^2 x).
BoundCheck mertens_sandwich_check(const PrimeTable& table, double x, unsigned digits = kDefaultDigits);

// The same sandwich at every prime x <= x_hi, via one incremental product.
std::vector<BoundCheck> sweep_mertens_sandwich(const PrimeTable& table, std::uint64_t x_hi,
                                               unsigned digits = 40);

// 1/zeta(t) <= prod_{p <= x} (1 - p^-t) <= exp(t x^(1-t) / (t-1)) / zeta(t).
BoundCheck euler_product_zeta_check(const PrimeTable& table, unsigned t, double x,
                                    unsigned digits = kDefaultDigits);

// zeta at an integer t >= 2.  Direct series plus an Euler-Maclaurin tail
// whose remainder is enclosed by the first omitted term; total error below
// 10^-(digits+5).
BigFloat zeta_int(unsigned t, unsigned digits = kDefaultDigits);
Interval zeta_interval(unsigned t, mpfr_prec_t prec);
// zeta(t) - 1 with full *relative* accuracy, usable far beyond the point
// where zeta(t) rounds to 1.
Interval zeta_minus_one_interval(unsigned t, mpfr_prec_t prec);

// 1/2^t <= zeta(t) - 1 <= 2^-t / (1 - 2^-t).  Both sides exact rationals;
// the upper side is checked literally and reported as found.
BoundCheck zeta_tail_check(unsigned t, unsigned digits = kDefaultDigits);
std::vector<BoundCheck> sweep_zeta_tail(unsigned t_lo, unsigned t_hi,
                                        unsigned digits = kDefaultDigits);

// sigma(nbar)/nbar < e^gamma log p_m (1 + 1/log^2 p_m) for the
// canonicalized form of n (m = factor count).
BoundCheck canonical_sigma_bound_check(const FactoredInteger& n, const PrimeTable& table,
                                       unsigned digits = kDefaultDigits);

// The bound above along primorials, m = 1..m_max, incremental.
std::vector<BoundCheck> sweep_primorial_sigma_bound(const PrimeTable& table, std::size_t m_max,
                                                    unsigned digits = kDefaultDigits);

// (t, x) grid used by the Euler-product suite.
std::vector<BoundCheck> sweep_euler_product(const PrimeTable& table,
                                            unsigned digits = kDefaultDigits);

} // namespace robinlab
