#include <doctest.h>

#include "robinlab/robin.hpp"
#include "support/approx.hpp"
#include "support/oracles.hpp"

using namespace robinlab;
using testsupport::bf;
using testsupport::within_abs;
using testsupport::within_rel;

namespace {
const PrimeTable& table_1k() {
    static PrimeTable t = PrimeTable::build(1000);
    return t;
}

std::vector<std::uint64_t> violator_values(const std::vector<RobinReport>& rs) {
    std::vector<std::uint64_t> v;
    for (const auto& r : rs) v.push_back(std::stoull(r.n_label));
    return v;
}
} // namespace

TEST_SUITE("robin") {

TEST_CASE("constants") {
    Constants c = Constants::at(40);
    CHECK(within_abs(c.euler_gamma, "0.5772156649015328606065120900824024310422", 1e-35));
    CHECK(within_abs(c.e_gamma, "1.7810724179901979852365041031071795491696", 1e-35));
}

TEST_CASE("report for 5040: the boundary case violates") {
    RobinReport r = assess(5040, table_1k());
    CHECK(r.n_label == "5040");
    CHECK(within_abs(r.loglog_n, "2.1430219509746612755", 1e-15));
    CHECK(within_abs(r.sigma_ratio, "3.83809523809523809523809523810", 1e-20));
    CHECK(within_abs(r.d, "-0.021217950066726613364988954944", 1e-20));
    CHECK(r.violates_robin);
    REQUIRE(r.big_d.has_value());
    // D(n) = n d(n)
    CHECK(within_rel(*r.big_d, r.d * BigFloat::from_ui(5040, 64), 1e-20));
    CHECK(r.escalations == 0);
}

TEST_CASE("reports for known small violators") {
    RobinReport r36 = assess(36, table_1k());
    CHECK(r36.violates_robin);
    CHECK(within_abs(r36.d, "-0.254514436967973818483469235946", 1e-18));

    RobinReport r3 = assess(3, table_1k());
    CHECK(within_abs(r3.loglog_n, "0.0940478276166990161743343320845", 1e-18));
    CHECK(r3.d.sign() < 0);
    CHECK(r3.violates_robin);
}

TEST_CASE("n = 1 is rejected, n = 2 is flagged") {
    CHECK_THROWS_AS(assess(1, table_1k()), std::domain_error);
    RobinReport r2 = assess(2, table_1k());
    CHECK(r2.loglog_n.sign() < 0);
    CHECK(r2.violates_robin);
}

TEST_CASE("band statistic composes d and sqrt(log n)") {
    RobinReport r = assess(5040, table_1k());
    CHECK(within_rel(r.band_stat, r.d * sqrt_rn(r.log_n), 1e-25));
    CHECK(assess(6, table_1k()).band_stat.sign() < 0);
    // canonical fixed point gives the same statistic
    FactoredInteger n = FactoredInteger::factorize(5040, table_1k());
    CHECK(band_stat(n) == band_stat(canonicalize(n, table_1k())));
}

TEST_CASE("verify_range census in [3, 10]") {
    auto v = verify_range(3, 10);
    CHECK(violator_values(v) == std::vector<std::uint64_t>{3, 4, 5, 6, 8, 9, 10});
}

TEST_CASE("verify_range boundary and empty window") {
    auto only5040 = verify_range(5040, 5040);
    CHECK(violator_values(only5040) == std::vector<std::uint64_t>{5040});
    CHECK(verify_range(5041, 100'000).empty());
}

TEST_CASE("verify_range rejects bad ranges") {
    CHECK_THROWS_AS(verify_range(2, 10), std::domain_error);
    CHECK_THROWS_AS(verify_range(10, 3), std::domain_error);
    CHECK_THROWS_AS(verify_range(3, 5'000'000'000'000ull), ResourceError);
}

TEST_CASE("verify_range output does not depend on parallelism") {
    EvalOptions seq_opts;
    EvalOptions par_opts;
    par_opts.parallelism = 4;
    auto a = verify_range(3, 50'000, seq_opts);
    auto b = verify_range(3, 50'000, par_opts);
    CHECK(violator_values(a) == violator_values(b));
}

TEST_CASE("exact and log-space deficits agree") {
    EvalOptions log_only;
    log_only.exact_bit_limit = 0; // forces the log-space route
    for (std::uint64_t n = 3; n <= 20'000; ++n) {
        FactoredInteger f = FactoredInteger::factorize(n, table_1k());
        RobinReport exact = assess(f);
        RobinReport logs = assess(f, log_only);
        CHECK(within_rel(logs.d, exact.d, 1e-12));
        CHECK(exact.violates_robin == logs.violates_robin);
    }
}

TEST_CASE("no verdict needs escalation at default precision in 3..20000") {
    for (std::uint64_t n = 3; n <= 20'000; ++n)
        CHECK(assess(n, table_1k()).escalations == 0);
}

TEST_CASE("canonical comparison holds on the examples") {
    auto c50 = compare_with_canonical(FactoredInteger::factorize(50, table_1k()), table_1k());
    CHECK(c50.canonical_report.n_label == "18");
    CHECK(c50.deficit_preserved);
    CHECK_FALSE(c50.skipped_small_canonical);

    auto c5040 = compare_with_canonical(FactoredInteger::factorize(5040, table_1k()), table_1k());
    CHECK(c5040.deficit_preserved);
    CHECK(c5040.input_report.d == c5040.canonical_report.d); // fixed point

    auto c2431 = compare_with_canonical(FactoredInteger::parse("11·13·17"), table_1k());
    CHECK(c2431.canonical_report.n_label == "30");
    CHECK(c2431.deficit_preserved);
}

TEST_CASE("prime inputs canonicalize to 2 and are flagged") {
    auto c = compare_with_canonical(FactoredInteger::factorize(97, table_1k()), table_1k());
    CHECK(c.skipped_small_canonical);
}

TEST_CASE("deficit never drops under canonicalization, 3..20000") {
    for (std::uint64_t n = 3; n <= 20'000; ++n) {
        auto c = compare_with_canonical(FactoredInteger::factorize(n, table_1k()), table_1k());
        if (c.skipped_small_canonical) continue;
        CHECK(c.deficit_preserved);
    }
}

TEST_CASE("verdicts match the independent oracle on a window") {
    auto oracle = oracles::robin_violators_oracle(3, 6000);
    auto got = violator_values(verify_range(3, 6000));
    CHECK(got == oracle);
}

} // TEST_SUITE
