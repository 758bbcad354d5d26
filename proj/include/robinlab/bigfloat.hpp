#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "robinlab/errors.hpp"

namespace robinlab {

constexpr unsigned kDefaultDigits = 30;
constexpr unsigned kMinDigits = 15;
constexpr unsigned kMaxEscalations = 4;

// Significand bits needed for the requested decimal digits, plus guard bits.
inline mpfr_prec_t bits_for_digits(unsigned digits) {
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 1.0) + 16;
}

// Value-semantic wrapper around mpfr_t.  Every operation states its target
// precision and rounding mode; the operator overloads round to nearest at
// the wider operand precision and exist for report/test convenience.  All
// enclosure work goes through Interval below.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = bits_for_digits(kDefaultDigits)) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_ui(unsigned long x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_double(double x, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigFloat from_mpz(const mpz_class& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), rnd);
        return r;
    }
    static BigFloat from_mpq(const mpq_class& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), rnd);
        return r;
    }
    static BigFloat nan(mpfr_prec_t prec = bits_for_digits(kDefaultDigits)) {
        return BigFloat(prec);
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

    // Shortest-faithful decimal with at most `digits` significant digits.
    std::string str(unsigned digits = kDefaultDigits) const;

    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

private:
    mpfr_t v_;
};

BigFloat log_rn(const BigFloat& x);
BigFloat exp_rn(const BigFloat& x);
BigFloat sqrt_rn(const BigFloat& x);

// Outward-rounded enclosure [lo, hi].  Only the operations the enclosure
// discipline needs; no attempt at a general interval library.
class Interval {
public:
    Interval() = default;
    Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

    static Interval from_ui(unsigned long x, mpfr_prec_t prec);
    static Interval from_mpz(const mpz_class& x, mpfr_prec_t prec);
    static Interval from_mpq(const mpq_class& x, mpfr_prec_t prec);
    static Interval from_double(double x, mpfr_prec_t prec);
    // [x, x] at the value's own precision.
    static Interval exact(const BigFloat& x);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec_t prec() const { return std::max(lo_.prec(), hi_.prec()); }

    BigFloat mid() const;
    BigFloat width() const;
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    // Sign of every point in the interval: -1, +1, or 0 when straddling.
    int definite_sign() const {
        if (hi_.sign() < 0) return -1;
        if (lo_.sign() > 0) return 1;
        return 0;
    }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    Interval operator-() const { return Interval(-hi_, -lo_); }

    friend Interval log(const Interval& x);    // requires x.lo > 0
    friend Interval log1p(const Interval& x);  // requires x.lo > -1
    friend Interval exp(const Interval& x);
    friend Interval sqrt(const Interval& x);   // requires x.lo >= 0

    Interval add_ui(unsigned long x) const;
    Interval mul_ui(unsigned long x) const;
    Interval div_ui(unsigned long x) const;
    // x^e for integer e (x > 0).
    static Interval pow_si(unsigned long x, long e, mpfr_prec_t prec);
    // this^e for integer e; requires a positive interval.
    Interval pow_si(long e) const;

    // Comparison against an exact rational: -1 if the whole interval is
    // below q, +1 if wholly above, 0 if q is inside (undecided).
    int compare_mpq(const mpq_class& q) const;

    bool certainly_less(const Interval& o) const { return hi_ < o.lo_; }
    bool certainly_greater(const Interval& o) const { return lo_ > o.hi_; }

private:
    BigFloat lo_, hi_;
};

// Enclosures of the constants used throughout.
Interval euler_gamma_interval(mpfr_prec_t prec);
Interval e_gamma_interval(mpfr_prec_t prec);
Interval pi_interval(mpfr_prec_t prec);

// Runs `attempt` at `digits`, doubling up to `max_doublings` times until it
// yields a value.  `attempt` returns std::nullopt when the enclosure is
// still ambiguous at the given precision.
template <typename F>
auto resolve_with_escalation(unsigned digits, unsigned max_doublings, const char* what, F&& attempt)
    -> typename std::invoke_result_t<F, unsigned>::value_type {
    unsigned d = digits;
    for (unsigned k = 0; k <= max_doublings; ++k) {
        if (auto r = attempt(d)) return *r;
        d *= 2;
    }
    throw PrecisionExhausted(std::string("enclosure still ambiguous after precision escalation: ") + what);
}

} // namespace robinlab
