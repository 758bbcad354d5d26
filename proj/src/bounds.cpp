#include "robinlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace robinlab {

namespace {

// B_2 .. B_32 as exact rationals.
const char* kBernoulli[] = {
    "1/6", "-1/30", "1/42", "-1/30", "5/66", "-691/2730", "7/6", "-3617/510",
    "43867/798", "-174611/330", "854513/138", "-236364091/2730", "8553103/6",
    "-23749461029/870", "8615841276005/14322", "-7709321041217/510",
};

Interval recip_ui(unsigned long x, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec);
    mpfr_set_ui(lo.raw(), 1, MPFR_RNDD);
    mpfr_div_ui(lo.raw(), lo.raw(), x, MPFR_RNDD);
    mpfr_set_ui(hi.raw(), 1, MPFR_RNDU);
    mpfr_div_ui(hi.raw(), hi.raw(), x, MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval one_i(mpfr_prec_t prec) { return Interval::from_ui(1, prec); }

// Enclosure of the log of the Mertens partial product over p <= x.
Interval log_mertens_interval(const PrimeTable& table, double x, mpfr_prec_t prec) {
    Interval acc = Interval::from_ui(0, prec);
    for (std::uint64_t p : table.primes()) {
        if (static_cast<double>(p) > x) break;
        acc = acc - log1p(-recip_ui(static_cast<unsigned long>(p), prec));
    }
    return acc;
}

struct SandwichVerdict {
    int state; // 1 holds, -1 fails, 0 ambiguous
};

SandwichVerdict sandwich_verdict(const Interval& lhs, const Interval& mid, const Interval& rhs) {
    bool left_ok = lhs.hi() <= mid.lo();
    bool right_ok = mid.hi() <= rhs.lo();
    if (left_ok && right_ok) return {1};
    if (mid.hi() < lhs.lo() || mid.lo() > rhs.hi()) return {-1};
    return {0};
}

BigFloat margin_of(const Interval& lhs, const Interval& mid, const Interval& rhs) {
    BigFloat a = (mid - lhs).mid();
    BigFloat b = (rhs - mid).mid();
    return a < b ? a : b;
}

BigFloat max_width(const Interval& a, const Interval& b, const Interval& c) {
    BigFloat w = a.width();
    if (b.width() > w) w = b.width();
    if (c.width() > w) w = c.width();
    return w;
}

BoundCheck make_check(std::string name, const BigFloat& parameter, const Interval& lhs,
                      const Interval& mid, const Interval& rhs, int state, bool below_threshold) {
    BoundCheck c;
    c.name = std::move(name);
    c.parameter = parameter;
    c.lhs = lhs.mid();
    c.mid = mid.mid();
    c.rhs = rhs.mid();
    c.holds = state > 0;
    c.margin = margin_of(lhs, mid, rhs);
    c.below_threshold = below_threshold;
    c.enclosure_width = max_width(lhs, mid, rhs);
    return c;
}

// Rosser-Schoenfeld-style sandwich sides at x, as enclosures.
std::pair<Interval, Interval> mertens_sandwich_sides(double x, const Interval& eg,
                                                     mpfr_prec_t prec) {
    Interval lx = log(Interval::from_double(x, prec));
    Interval lx2 = lx * lx;
    Interval lhs = eg * lx * (one_i(prec) - one_i(prec) / lx2.mul_ui(2));
    Interval rhs = eg * lx * (one_i(prec) + one_i(prec) / lx2);
    return {lhs, rhs};
}

} // namespace

BigFloat mertens_product(const PrimeTable& table, double x, unsigned digits) {
    if (x < 2) throw std::range_error("mertens product requires x >= 2");
    if (x > static_cast<double>(table.limit()))
        throw std::range_error("mertens product argument exceeds the sieve limit");
    mpfr_prec_t prec = bits_for_digits(digits);
    return exp(log_mertens_interval(table, x, prec)).mid();
}

BoundCheck mertens_sandwich_check(const PrimeTable& table, double x, unsigned digits) {
    if (x < 2) throw std::range_error("mertens sandwich requires x >= 2");
    if (x > static_cast<double>(table.limit()))
        throw std::range_error("mertens sandwich argument exceeds the sieve limit");
    return resolve_with_escalation(digits, kMaxEscalations, "mertens sandwich",
        [&](unsigned d) -> std::optional<BoundCheck> {
            mpfr_prec_t prec = bits_for_digits(d);
            Interval eg = e_gamma_interval(prec);
            Interval mid = exp(log_mertens_interval(table, x, prec));
            auto [lhs, rhs] = mertens_sandwich_sides(x, eg, prec);
            auto v = sandwich_verdict(lhs, mid, rhs);
            if (v.state == 0) return std::nullopt;
            return make_check("mertens_sandwich", BigFloat::from_double(x, prec), lhs, mid, rhs,
                              v.state, x < kMertensSandwichThreshold);
        });
}

std::vector<BoundCheck> sweep_mertens_sandwich(const PrimeTable& table, std::uint64_t x_hi,
                                               unsigned digits) {
    mpfr_prec_t prec = bits_for_digits(digits);
    Interval eg = e_gamma_interval(prec);
    Interval prod = one_i(prec);
    std::vector<BoundCheck> out;
    for (std::uint64_t p : table.primes()) {
        if (p > x_hi) break;
        // (1 - 1/p)^-1 = p / (p - 1)
        prod = prod.mul_ui(static_cast<unsigned long>(p)).div_ui(static_cast<unsigned long>(p - 1));
        double x = static_cast<double>(p);
        auto [lhs, rhs] = mertens_sandwich_sides(x, eg, prec);
        auto v = sandwich_verdict(lhs, prod, rhs);
        if (v.state == 0)
            throw PrecisionExhausted("mertens sweep enclosure too wide at x = " + std::to_string(p));
        out.push_back(make_check("mertens_sandwich", BigFloat::from_double(x, prec), lhs, prod,
                                 rhs, v.state, x < kMertensSandwichThreshold));
    }
    return out;
}

Interval zeta_minus_one_interval(unsigned t, mpfr_prec_t prec) {
    if (t < 2) throw std::domain_error("zeta evaluation requires integer t >= 2");

    auto pow_neg = [&](unsigned long k) { return Interval::pow_si(k, -static_cast<long>(t), prec); };

    if (t >= 40) {
        // Plain series with the integral tail bound; the tail is already
        // negligible relative to 2^-t after a handful of terms.
        unsigned long K = 4;
        double need = (static_cast<double>(t + prec) + 5.0) * 0.6931471805599453;
        while ((static_cast<double>(t) - 1.0) * std::log(static_cast<double>(K)) -
                   std::log(static_cast<double>(t - 1)) < need && K < (1u << 30))
            K *= 2;
        Interval s = Interval::from_ui(0, prec);
        for (unsigned long k = 2; k <= K; ++k) s = s + pow_neg(k);
        BigFloat tail(prec);
        mpfr_set_ui(tail.raw(), K, MPFR_RNDU);
        mpfr_pow_si(tail.raw(), tail.raw(), 1 - static_cast<long>(t), MPFR_RNDU);
        mpfr_div_ui(tail.raw(), tail.raw(), t - 1, MPFR_RNDU);
        BigFloat hi(prec);
        mpfr_add(hi.raw(), s.hi().raw(), tail.raw(), MPFR_RNDU);
        return Interval(s.lo(), hi);
    }

    // Euler-Maclaurin: sum_{k=2}^{N-1} k^-t + N^(1-t)/(t-1) + N^-t/2
    //                  + sum_j B_2j/(2j)! (t)_(2j-1) N^(1-t-2j),
    // remainder enclosed by the first omitted term.
    const int kMaxJ = static_cast<int>(sizeof(kBernoulli) / sizeof(kBernoulli[0]));
    BigFloat target(prec);
    mpfr_set_ui(target.raw(), 1, MPFR_RNDN);
    mpfr_div_2ui(target.raw(), target.raw(), prec + 8, MPFR_RNDN);

    for (unsigned long N = 64; N <= (1u << 16); N *= 2) {
        Interval s = Interval::from_ui(0, prec);
        for (unsigned long k = 2; k < N; ++k) s = s + pow_neg(k);
        s = s + Interval::pow_si(N, 1 - static_cast<long>(t), prec).div_ui(t - 1);
        s = s + pow_neg(N).div_ui(2);

        mpz_class rising = t;          // (t)_(2j-1) for the current j
        mpz_class factorial = 2;       // (2j)!
        bool done = false;
        BigFloat prev_mag(prec);
        for (int j = 1; j <= kMaxJ; ++j) {
            mpq_class coef(kBernoulli[j - 1]);
            coef.canonicalize();
            coef *= rising;
            coef /= factorial;
            Interval term = Interval::from_mpq(coef, prec) *
                            Interval::pow_si(N, 1 - static_cast<long>(t) - 2 * j, prec);
            BigFloat mag = term.hi().abs();
            if (term.lo().abs() > mag) mag = term.lo().abs();
            if (j > 1 && !(mag < prev_mag)) break; // diverging: N too small
            if (mag < target || j == kMaxJ) {
                if (!(mag < target)) break;
                // stop before adding term j; remainder has its magnitude
                BigFloat lo(prec), hi(prec);
                mpfr_sub(lo.raw(), s.lo().raw(), mag.raw(), MPFR_RNDD);
                mpfr_add(hi.raw(), s.hi().raw(), mag.raw(), MPFR_RNDU);
                s = Interval(std::move(lo), std::move(hi));
                done = true;
                break;
            }
            s = s + term;
            prev_mag = mag;
            rising *= (t + 2 * j - 1);
            rising *= (t + 2 * j);
            factorial *= (2 * j + 1);
            factorial *= (2 * j + 2);
        }
        if (done) return s;
    }
    throw PrecisionExhausted("zeta series did not converge to the requested accuracy");
}

Interval zeta_interval(unsigned t, mpfr_prec_t prec) {
    return one_i(prec) + zeta_minus_one_interval(t, prec);
}

BigFloat zeta_int(unsigned t, unsigned digits) {
    return zeta_interval(t, bits_for_digits(digits)).mid();
}

BoundCheck zeta_tail_check(unsigned t, unsigned digits) {
    if (t < 2) throw std::domain_error("zeta tail check requires t >= 2");
    mpz_class two_t;
    mpz_ui_pow_ui(two_t.get_mpz_t(), 2, t);
    mpq_class lhs_q(1, two_t);
    lhs_q.canonicalize();
    mpq_class rhs_q(1, two_t - 1);
    rhs_q.canonicalize();

    return resolve_with_escalation(digits, kMaxEscalations, "zeta tail sandwich",
        [&](unsigned d) -> std::optional<BoundCheck> {
            mpfr_prec_t prec = bits_for_digits(d);
            Interval mid = zeta_minus_one_interval(t, prec);
            int state;
            if (mpfr_cmp_q(mid.lo().raw(), lhs_q.get_mpq_t()) >= 0 &&
                mpfr_cmp_q(mid.hi().raw(), rhs_q.get_mpq_t()) <= 0)
                state = 1;
            else if (mpfr_cmp_q(mid.hi().raw(), lhs_q.get_mpq_t()) < 0 ||
                     mpfr_cmp_q(mid.lo().raw(), rhs_q.get_mpq_t()) > 0)
                state = -1;
            else
                return std::nullopt;
            return make_check("zeta_tail_sandwich", BigFloat::from_ui(t, prec),
                              Interval::from_mpq(lhs_q, prec), mid,
                              Interval::from_mpq(rhs_q, prec), state, false);
        });
}

std::vector<BoundCheck> sweep_zeta_tail(unsigned t_lo, unsigned t_hi, unsigned digits) {
    std::vector<BoundCheck> out;
    for (unsigned t = t_lo; t <= t_hi; ++t) out.push_back(zeta_tail_check(t, digits));
    return out;
}

BoundCheck euler_product_zeta_check(const PrimeTable& table, unsigned t, double x,
                                    unsigned digits) {
    if (t < 2) throw std::domain_error("euler product check requires integer t >= 2");
    if (x < 2 || x > static_cast<double>(table.limit()))
        throw std::range_error("euler product check requires 2 <= x <= sieve limit");

    return resolve_with_escalation(digits, kMaxEscalations, "euler product sandwich",
        [&](unsigned d) -> std::optional<BoundCheck> {
            mpfr_prec_t prec = bits_for_digits(d);
            Interval mid = one_i(prec);
            for (std::uint64_t p : table.primes()) {
                if (static_cast<double>(p) > x) break;
                mid = mid * (one_i(prec) -
                             Interval::pow_si(static_cast<unsigned long>(p),
                                              -static_cast<long>(t), prec));
            }
            Interval zi = zeta_interval(t, prec);
            Interval lhs = one_i(prec) / zi;
            Interval xe = Interval::from_double(x, prec)
                              .pow_si(1 - static_cast<long>(t))
                              .mul_ui(t)
                              .div_ui(t - 1);
            Interval rhs = exp(xe) / zi;
            auto v = sandwich_verdict(lhs, mid, rhs);
            if (v.state == 0) return std::nullopt;
            BoundCheck c = make_check("euler_product_sandwich", BigFloat::from_ui(t, prec), lhs,
                                      mid, rhs, v.state, false);
            c.name += "(x=" + std::to_string(static_cast<std::uint64_t>(x)) + ")";
            return c;
        });
}

BoundCheck canonical_sigma_bound_check(const FactoredInteger& n, const PrimeTable& table,
                                       unsigned digits) {
    if (n.is_one()) throw std::domain_error("canonical sigma bound requires n > 1");
    FactoredInteger nbar = canonicalize(n, table);
    std::uint64_t pm = nbar.largest_prime();

    return resolve_with_escalation(digits, kMaxEscalations, "canonical sigma bound",
        [&](unsigned d) -> std::optional<BoundCheck> {
            mpfr_prec_t prec = bits_for_digits(d);
            Interval mid = exp(log_sigma_ratio_interval(nbar, prec));
            Interval lp = log(Interval::from_ui(static_cast<unsigned long>(pm), prec));
            Interval rhs = e_gamma_interval(prec) * lp * (one_i(prec) + one_i(prec) / (lp * lp));
            Interval lhs = one_i(prec); // sigma(n)/n >= 1 always
            auto v = sandwich_verdict(lhs, mid, rhs);
            if (v.state == 0) return std::nullopt;
            return make_check("canonical_sigma_bound", BigFloat::from_ui(static_cast<unsigned long>(pm), prec),
                              lhs, mid, rhs, v.state,
                              static_cast<double>(pm) < kMertensSandwichThreshold);
        });
}

std::vector<BoundCheck> sweep_primorial_sigma_bound(const PrimeTable& table, std::size_t m_max,
                                                    unsigned digits) {
    if (m_max > table.count())
        throw std::range_error("primorial sweep needs more primes; rebuild with a larger sieve limit");
    mpfr_prec_t prec = bits_for_digits(digits);
    Interval eg = e_gamma_interval(prec);
    Interval logsig = Interval::from_ui(0, prec);
    std::vector<BoundCheck> out;
    out.reserve(m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
        std::uint64_t p = table.primes()[m - 1];
        // sigma(p)/p = (p + 1)/p for the squarefree primorial
        logsig = logsig + log(Interval::from_ui(static_cast<unsigned long>(p + 1), prec)
                                  .div_ui(static_cast<unsigned long>(p)));
        Interval mid = exp(logsig);
        Interval lp = log(Interval::from_ui(static_cast<unsigned long>(p), prec));
        Interval rhs = eg * lp * (one_i(prec) + one_i(prec) / (lp * lp));
        Interval lhs = one_i(prec);
        auto v = sandwich_verdict(lhs, mid, rhs);
        if (v.state == 0)
            throw PrecisionExhausted("primorial sweep enclosure too wide at m = " + std::to_string(m));
        BoundCheck c = make_check("canonical_sigma_bound", BigFloat::from_ui(static_cast<unsigned long>(p), prec),
                                  lhs, mid, rhs, v.state,
                                  static_cast<double>(p) < kMertensSandwichThreshold);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<BoundCheck> sweep_euler_product(const PrimeTable& table, unsigned digits) {
    std::vector<BoundCheck> out;
    for (unsigned t = 2; t <= 10; ++t)
        for (double x : {10.0, 100.0, 1000.0, 10000.0})
            out.push_back(euler_product_zeta_check(table, t, x, digits));
    return out;
}

} // namespace robinlab
