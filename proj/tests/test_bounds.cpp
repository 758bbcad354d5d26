#include <doctest.h>

#include "robinlab/bounds.hpp"
#include "support/approx.hpp"

using namespace robinlab;
using testsupport::bf;
using testsupport::within_abs;
using testsupport::within_rel;

namespace {
const PrimeTable& table_20k() {
    static PrimeTable t = PrimeTable::build(20'000);
    return t;
}

BigFloat pi_power_over(unsigned k, unsigned den, unsigned digits = 45) {
    // pi^k / den through the library constant, as an independent route.
    mpfr_prec_t prec = bits_for_digits(digits);
    Interval p = pi_interval(prec);
    Interval r = Interval::from_ui(1, prec);
    for (unsigned i = 0; i < k; ++i) r = r * p;
    return r.div_ui(den).mid();
}
} // namespace

TEST_SUITE("bounds") {

TEST_CASE("mertens product small values") {
    CHECK(within_abs(mertens_product(table_20k(), 2), "2", 1e-28));
    CHECK(within_abs(mertens_product(table_20k(), 10), "4.375", 1e-28));
    CHECK(within_abs(mertens_product(table_20k(), 10'000), "16.42448963219008265259875", 1e-20));
    CHECK_THROWS_AS(mertens_product(table_20k(), 1.5), std::range_error);
    CHECK_THROWS_AS(mertens_product(table_20k(), 1e9), std::range_error);
}

TEST_CASE("mertens sandwich at spot values") {
    BoundCheck c100 = mertens_sandwich_check(table_20k(), 100);
    CHECK(c100.holds);
    CHECK(c100.margin.sign() > 0);
    CHECK(c100.below_threshold); // stated validity starts at 286
    CHECK_FALSE(mertens_sandwich_check(table_20k(), 300).below_threshold);

    BoundCheck c2 = mertens_sandwich_check(table_20k(), 2);
    CHECK(c2.below_threshold);
    CHECK(within_abs(c2.mid, "2", 1e-25));
}

TEST_CASE("mertens sweep holds at every prime up to 20000") {
    auto checks = sweep_mertens_sandwich(table_20k(), 20'000);
    CHECK(checks.size() == table_20k().count());
    for (const auto& c : checks) {
        CHECK(c.holds);
        CHECK(c.enclosure_width <= BigFloat::from_double(1e-20, 64));
    }
    // relative margin narrows like 1/log^2 x
    const BoundCheck& early = checks[30];
    const BoundCheck& late = checks.back();
    CHECK(late.margin / late.mid < early.margin / early.mid);
}

TEST_CASE("zeta against closed forms") {
    CHECK(within_abs(zeta_int(2, 35), pi_power_over(2, 6), 1e-25));
    CHECK(within_abs(zeta_int(4, 35), pi_power_over(4, 90), 1e-25));
    CHECK(within_abs(zeta_int(6, 35), pi_power_over(6, 945), 1e-25));
    CHECK_THROWS_AS(zeta_int(1), std::domain_error);
}

TEST_CASE("zeta minus one keeps relative accuracy at large t") {
    mpfr_prec_t prec = bits_for_digits(30);
    Interval h40 = zeta_minus_one_interval(40, prec);
    // 1 + 2^-40 (1 + delta) with delta of order (2/3)^40
    Interval scaled = h40 * Interval::pow_si(2, 40, prec);
    CHECK(scaled.lo() > BigFloat::from_ui(1, 64));
    CHECK(scaled.hi() < BigFloat::from_double(1.0001, 64));

    // At t = 400 the 3^-t correction sits far below working precision;
    // the enclosure still brackets 2^-400 exactly.
    Interval h400 = zeta_minus_one_interval(400, prec);
    Interval scaled400 = h400 * Interval::pow_si(2, 400, prec);
    CHECK(scaled400.lo() >= BigFloat::from_ui(1, 64));
    CHECK(scaled400.hi() < BigFloat::from_double(1.0001, 64));
}

TEST_CASE("zeta tail sandwich: evaluated literally, upper side fails") {
    BoundCheck t2 = zeta_tail_check(2);
    CHECK(within_abs(t2.lhs, "0.25", 1e-28));
    CHECK(within_abs(t2.mid, "0.644934066848226436472415166646", 1e-25));
    CHECK(within_abs(t2.rhs, "0.333333333333333333333333333333", 1e-25));
    CHECK_FALSE(t2.holds);
    CHECK(t2.margin.sign() < 0);

    BoundCheck t5 = zeta_tail_check(5);
    CHECK(within_abs(t5.mid, "0.036927755143369926331365486457", 1e-25));
    CHECK_FALSE(t5.holds); // 1/31 < zeta(5) - 1

    auto sweep = sweep_zeta_tail(2, 64);
    for (const auto& c : sweep) {
        // lower side 1/2^t <= zeta(t)-1 always holds ...
        CHECK(c.mid >= c.lhs);
        // ... and the upper side fails at every t: 3^-t beats 4^-t.
        CHECK_FALSE(c.holds);
    }
}

TEST_CASE("euler product sandwich examples") {
    BoundCheck e = euler_product_zeta_check(table_20k(), 2, 10);
    CHECK(e.holds);
    CHECK(within_abs(e.mid, "0.626938775510204081632653061224", 1e-25)); // 27648/44100
    CHECK(within_abs(e.lhs, "0.607927101854026628663276779258", 1e-25)); // 6/pi^2

    CHECK(euler_product_zeta_check(table_20k(), 3, 100).holds);
    BoundCheck single = euler_product_zeta_check(table_20k(), 2, 2);
    CHECK(single.holds);
    CHECK(within_abs(single.mid, "0.75", 1e-28));
    CHECK_THROWS_AS(euler_product_zeta_check(table_20k(), 1, 10), std::domain_error);
}

TEST_CASE("euler product grid all holds") {
    auto grid = sweep_euler_product(table_20k());
    CHECK(grid.size() == 36);
    for (const auto& c : grid) CHECK(c.holds);
}

TEST_CASE("canonical sigma bound") {
    const PrimeTable& t = table_20k();
    BoundCheck c = canonical_sigma_bound_check(FactoredInteger::factorize(5040, t), t);
    CHECK(c.holds);
    CHECK(c.below_threshold); // p_4 = 7 < 286
    CHECK(within_abs(c.mid, "3.8380952380952380952380952381", 1e-20));

    // primorial of the first 25 primes
    std::vector<PrimePower> f;
    for (std::size_t i = 0; i < 25; ++i) f.push_back({t.primes()[i], 1});
    BoundCheck c25 = canonical_sigma_bound_check(FactoredInteger::from_factors(f), t);
    CHECK(c25.holds);

    BoundCheck c2 = canonical_sigma_bound_check(FactoredInteger::factorize(2, t), t);
    CHECK(c2.below_threshold);
}

TEST_CASE("primorial sigma bound sweep holds from m = 1") {
    auto sweep = sweep_primorial_sigma_bound(table_20k(), 2000);
    CHECK(sweep.size() == 2000);
    for (const auto& c : sweep) CHECK(c.holds);
}

} // TEST_SUITE
