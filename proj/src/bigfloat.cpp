#include "robinlab/bigfloat.hpp"

#include <array>
#include <cstdio>
#include <stdexcept>

namespace robinlab {

std::string BigFloat::str(unsigned digits) const {
    char* buf = nullptr;
    int n = mpfr_asprintf(&buf, "%.*Rg", static_cast<int>(digits), v_);
    if (n < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigFloat log_rn(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat exp_rn(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat sqrt_rn(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Interval Interval::from_ui(unsigned long x, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_set_ui(lo.raw(), x, MPFR_RNDD);
    mpfr_set_ui(hi.raw(), x, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_mpz(const mpz_class& x, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_set_z(lo.raw(), x.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi.raw(), x.get_mpz_t(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_mpq(const mpq_class& x, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_set_q(lo.raw(), x.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.raw(), x.get_mpq_t(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_double(double x, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_set_d(lo.raw(), x, MPFR_RNDD);
    mpfr_set_d(hi.raw(), x, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::exact(const BigFloat& x) {
    return Interval(x, x);
}

BigFloat Interval::mid() const {
    BigFloat r(prec());
    mpfr_add(r.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(r.raw(), r.raw(), 1, MPFR_RNDN);
    return r;
}

BigFloat Interval::width() const {
    BigFloat r(prec());
    mpfr_sub(r.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    BigFloat lo(p), hi(p);
    mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator-(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    BigFloat lo(p), hi(p);
    mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    // min/max over the four endpoint products, each rounded outward.
    std::array<mpfr_srcptr, 2> as{a.lo_.raw(), a.hi_.raw()};
    std::array<mpfr_srcptr, 2> bs{b.lo_.raw(), b.hi_.raw()};
    BigFloat lo(p), hi(p), t(p);
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || t < lo) { mpfr_set(lo.raw(), t.raw(), MPFR_RNDD); }
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || t > hi) { mpfr_set(hi.raw(), t.raw(), MPFR_RNDU); }
            first = false;
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    std::array<mpfr_srcptr, 2> as{a.lo_.raw(), a.hi_.raw()};
    std::array<mpfr_srcptr, 2> bs{b.lo_.raw(), b.hi_.raw()};
    BigFloat lo(p), hi(p), t(p);
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_div(t.raw(), x, y, MPFR_RNDD);
            if (first || t < lo) { mpfr_set(lo.raw(), t.raw(), MPFR_RNDD); }
            mpfr_div(t.raw(), x, y, MPFR_RNDU);
            if (first || t > hi) { mpfr_set(hi.raw(), t.raw(), MPFR_RNDU); }
            first = false;
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval log(const Interval& x) {
    if (x.lo_.sign() <= 0) throw std::domain_error("interval log requires a positive lower bound");
    mpfr_prec_t p = x.prec();
    BigFloat lo(p), hi(p);
    mpfr_log(lo.raw(), x.lo_.raw(), MPFR_RNDD);
    mpfr_log(hi.raw(), x.hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval log1p(const Interval& x) {
    mpfr_prec_t p = x.prec();
    BigFloat lo(p), hi(p);
    mpfr_log1p(lo.raw(), x.lo_.raw(), MPFR_RNDD);
    mpfr_log1p(hi.raw(), x.hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval exp(const Interval& x) {
    mpfr_prec_t p = x.prec();
    BigFloat lo(p), hi(p);
    mpfr_exp(lo.raw(), x.lo_.raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), x.hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval sqrt(const Interval& x) {
    if (x.lo_.sign() < 0) throw std::domain_error("interval sqrt requires a nonnegative lower bound");
    mpfr_prec_t p = x.prec();
    BigFloat lo(p), hi(p);
    mpfr_sqrt(lo.raw(), x.lo_.raw(), MPFR_RNDD);
    mpfr_sqrt(hi.raw(), x.hi_.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::add_ui(unsigned long x) const {
    mpfr_prec_t p = prec();
    BigFloat lo(p), hi(p);
    mpfr_add_ui(lo.raw(), lo_.raw(), x, MPFR_RNDD);
    mpfr_add_ui(hi.raw(), hi_.raw(), x, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::mul_ui(unsigned long x) const {
    // Nonnegative scalar, so the endpoint order is preserved.
    mpfr_prec_t p = prec();
    BigFloat lo(p), hi(p);
    mpfr_mul_ui(lo.raw(), lo_.raw(), x, MPFR_RNDD);
    mpfr_mul_ui(hi.raw(), hi_.raw(), x, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::div_ui(unsigned long x) const {
    if (x == 0) throw std::domain_error("interval division by zero");
    mpfr_prec_t p = prec();
    BigFloat lo(p), hi(p);
    mpfr_div_ui(lo.raw(), lo_.raw(), x, MPFR_RNDD);
    mpfr_div_ui(hi.raw(), hi_.raw(), x, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow_si(unsigned long x, long e, mpfr_prec_t prec) {
    if (x == 0) throw std::domain_error("pow_si requires a positive base");
    BigFloat base_lo(prec), base_hi(prec), lo(prec), hi(prec);
    mpfr_set_ui(base_lo.raw(), x, MPFR_RNDD);
    mpfr_set_ui(base_hi.raw(), x, MPFR_RNDU);
    if (e >= 0) {
        mpfr_pow_si(lo.raw(), base_lo.raw(), e, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), base_hi.raw(), e, MPFR_RNDU);
    } else {
        mpfr_pow_si(lo.raw(), base_hi.raw(), e, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), base_lo.raw(), e, MPFR_RNDU);
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow_si(long e) const {
    if (lo_.sign() <= 0) throw std::domain_error("interval pow requires a positive interval");
    mpfr_prec_t p = prec();
    BigFloat lo(p), hi(p);
    if (e >= 0) {
        mpfr_pow_si(lo.raw(), lo_.raw(), e, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), hi_.raw(), e, MPFR_RNDU);
    } else {
        mpfr_pow_si(lo.raw(), hi_.raw(), e, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), lo_.raw(), e, MPFR_RNDU);
    }
    return Interval(std::move(lo), std::move(hi));
}

int Interval::compare_mpq(const mpq_class& q) const {
    if (mpfr_cmp_q(hi_.raw(), q.get_mpq_t()) < 0) return -1;
    if (mpfr_cmp_q(lo_.raw(), q.get_mpq_t()) > 0) return 1;
    return 0;
}

Interval euler_gamma_interval(mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_const_euler(lo.raw(), MPFR_RNDD);
    mpfr_const_euler(hi.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval e_gamma_interval(mpfr_prec_t prec) {
    return exp(euler_gamma_interval(prec));
}

Interval pi_interval(mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_const_pi(lo.raw(), MPFR_RNDD);
    mpfr_const_pi(hi.raw(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

} // namespace robinlab
