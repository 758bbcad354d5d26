#include <doctest.h>

#include "robinlab/generators.hpp"
#include "support/approx.hpp"
#include "support/oracles.hpp"

using namespace robinlab;
using testsupport::bf;
using testsupport::within_abs;
using testsupport::within_rel;

namespace {
const PrimeTable& table_100k() {
    static PrimeTable t = PrimeTable::build(100'000);
    return t;
}

std::uint64_t small_value(const FactoredInteger& n) {
    return static_cast<std::uint64_t>(n.value().get_ui());
}
} // namespace

TEST_SUITE("generators") {

TEST_CASE("sequence items at small m") {
    CHECK_THROWS_AS(primorial_power_item(0, table_100k()), std::domain_error);

    PrimorialPowerItem i1 = primorial_power_item(1, table_100k());
    CHECK(small_value(i1.n) == 2);
    CHECK(i1.report.violates_robin); // n = 2 policy

    PrimorialPowerItem i2 = primorial_power_item(2, table_100k());
    CHECK(small_value(i2.n) == 36);
    CHECK(i2.report.d.sign() < 0);

    PrimorialPowerItem i3 = primorial_power_item(3, table_100k());
    CHECK(small_value(i3.n) == 27'000);
    CHECK(within_abs(i3.report.log_n, "10.203592144986466126", 1e-16));
    CHECK(within_abs(i3.report.d, "0.670301177590878553451057111435", 1e-15));
    CHECK(within_abs(i3.main_term, "0.314664381296255126438219698135", 1e-15));
    CHECK(within_rel(i3.residual, i3.report.d - i3.main_term, 1e-20));
}

TEST_CASE("sweep matches individual items and records the d trend") {
    auto items = primorial_power_sweep(10, table_100k());
    CHECK(items.size() == 9);
    PrimorialPowerItem i2 = primorial_power_item(2, table_100k());
    CHECK(items[0].report.d == i2.report.d);
    CHECK(items[0].main_term == i2.main_term);

    // d(n_2) < 0, positive from m = 3 on; the measured trend is upward.
    CHECK(items[0].report.d.sign() < 0);
    for (std::size_t k = 1; k < items.size(); ++k) CHECK(items[k].report.d.sign() > 0);
    CHECK(within_abs(items[8].report.d, "3.3255067", 1e-6));
}

TEST_CASE("large-m items run in log space") {
    PrimorialPowerItem i40 = primorial_power_item(40, table_100k());
    CHECK_FALSE(i40.report.big_d.has_value()); // beyond the exact-mode bound
    CHECK(i40.report.d.sign() > 0);
    // main term collapses like 2^-(m+1)
    CHECK(i40.main_term < BigFloat::from_double(1e-10, 64));
    CHECK(i40.main_term.sign() > 0);
}

TEST_CASE("ca generation: first twelve values") {
    auto items = ca_generate(12, table_100k());
    std::vector<std::uint64_t> got;
    for (const auto& it : items) got.push_back(small_value(it.n));
    CHECK(got == std::vector<std::uint64_t>{2, 6, 12, 60, 120, 360, 2520, 5040, 55440, 720720,
                                            1441440, 4324320});
    CHECK_THROWS_AS(ca_generate(0, table_100k()), std::domain_error);
}

TEST_CASE("ca epsilon intervals chain downward") {
    auto items = ca_generate(30, table_100k());
    CHECK(within_abs(items[0].eps_hi, "0.584962500721156181453738943948", 1e-20));
    for (std::size_t k = 0; k < items.size(); ++k) {
        CHECK(items[k].eps_lo < items[k].eps_hi);
        if (k + 1 < items.size()) CHECK(items[k + 1].eps_hi == items[k].eps_lo);
    }
}

TEST_CASE("ca exponents are nonincreasing and 55440 has the known shape") {
    auto items = ca_generate(60, table_100k());
    for (const auto& it : items) {
        const auto& f = it.n.factors();
        for (std::size_t i = 0; i + 1 < f.size(); ++i)
            CHECK(f[i].exponent >= f[i + 1].exponent);
    }
    CHECK(items[8].n == FactoredInteger::parse("2^4*3^2*5*7*11"));
}

TEST_CASE("consecutive ca quotients are prime powers") {
    auto items = ca_generate(60, table_100k());
    for (std::size_t k = 0; k + 1 < items.size(); ++k) {
        auto q = ca_step_quotient(items[k].n, items[k + 1].n);
        REQUIRE(q.has_value());
        CHECK(q->exponent >= 1);
    }
}

TEST_CASE("ca membership matches the definitional oracle up to 10^4") {
    auto oracle = oracles::ca_numbers_oracle(10'000, 160'000);
    auto items = ca_generate(12, table_100k());
    std::vector<std::uint64_t> gen;
    for (const auto& it : items)
        if (it.n.bit_length_estimate() <= 63 && small_value(it.n) <= 10'000)
            gen.push_back(small_value(it.n));
    CHECK(gen == oracle);
    // 5040 in, 24 out
    CHECK(std::find(oracle.begin(), oracle.end(), 5040) != oracle.end());
    CHECK(std::find(oracle.begin(), oracle.end(), 24) == oracle.end());
}

TEST_CASE("ca trace reports D by the right mode") {
    auto rows = ca_trace(40, table_100k());
    for (const auto& row : rows) {
        if (row.item.report.big_d) {
            CHECK(row.mode == DReportMode::Exact);
        } else {
            CHECK(row.mode == DReportMode::LogScale);
        }
        CHECK(row.d_sign != 0);
    }
    // the 9th item is the first CA beyond 5040: D > 0 from there on
    for (std::size_t k = 8; k < rows.size(); ++k) CHECK(rows[k].d_sign > 0);
    // small CA values violate and carry D < 0
    CHECK(rows[0].d_sign < 0);
    CHECK(rows[7].d_sign < 0); // 5040 itself
}

TEST_CASE("ca quotient helper rejects non-prime-power steps") {
    FactoredInteger a = FactoredInteger::parse("2^2*3");
    FactoredInteger b = FactoredInteger::parse("2^3*3^2");     // two primes moved
    CHECK_FALSE(ca_step_quotient(a, b).has_value());
    FactoredInteger c = FactoredInteger::parse("2*3");         // exponent dropped
    CHECK_FALSE(ca_step_quotient(a, c).has_value());
    FactoredInteger d = FactoredInteger::parse("2^2*3^2");
    auto q = ca_step_quotient(a, d);
    REQUIRE(q.has_value());
    CHECK(q->prime == 3);
    CHECK(q->exponent == 1);
}

} // TEST_SUITE
