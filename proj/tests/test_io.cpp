#include <doctest.h>

#include <sstream>

#include "robinlab/io.hpp"
#include "support/approx.hpp"

using namespace robinlab;

TEST_SUITE("io") {

TEST_CASE("report csv uses the documented columns") {
    auto reports = verify_range(3, 10);
    std::ostringstream os;
    write_reports_csv(os, reports, 30);
    std::string text = os.str();
    CHECK(text.rfind("n_or_factorization,log_n,loglog_n,sigma_ratio,d,band_stat,violates\n", 0) ==
          0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 8); // header + 7 violators
    CHECK(text.find("true") != std::string::npos);
    CHECK(text.find(',') != std::string::npos);
    CHECK(text.find(';') == std::string::npos); // '.' decimals, ',' separators only
}

TEST_CASE("identical inputs serialize byte-identically") {
    auto a = verify_range(3, 2000);
    auto b = verify_range(3, 2000);
    std::ostringstream osa, osb;
    write_reports_csv(osa, a, 30);
    write_reports_csv(osb, b, 30);
    CHECK(osa.str() == osb.str());
}

TEST_CASE("json mirrors the domain field names") {
    auto reports = verify_range(5040, 5040);
    std::ostringstream os;
    write_reports_json(os, reports, 30);
    std::string text = os.str();
    for (const char* key : {"n_label", "log_n", "loglog_n", "sigma_ratio", "d", "D",
                            "violates_robin", "band_stat"})
        CHECK(text.find(key) != std::string::npos);
}

TEST_CASE("factor json round trip and validation") {
    FactoredInteger n = FactoredInteger::parse("2^4*3^2*5*7");
    CHECK(factors_to_json(n) == "[[2,4],[3,2],[5,1],[7,1]]");
    CHECK(parse_factors_json(factors_to_json(n)) == n);
    CHECK_THROWS_AS(parse_factors_json("[[4,1]]"), std::domain_error);       // non-prime base
    CHECK_THROWS_AS(parse_factors_json("[[3,1],[2,1]]"), std::domain_error); // unsorted
    CHECK_THROWS_AS(parse_factors_json("[[2,0]]"), std::domain_error);       // zero exponent
    CHECK_THROWS_AS(parse_factors_json("{"), std::domain_error);             // malformed
}

TEST_CASE("bound check serialization carries the verdict") {
    auto checks = sweep_zeta_tail(2, 4);
    std::ostringstream os;
    write_bounds_csv(os, checks, 30);
    std::string text = os.str();
    CHECK(text.rfind("name,parameter,lhs,mid,rhs,holds,margin,below_threshold\n", 0) == 0);
    CHECK(text.find("zeta_tail_sandwich") != std::string::npos);
    CHECK(text.find("false") != std::string::npos); // the honest failing rows
}

} // TEST_SUITE
