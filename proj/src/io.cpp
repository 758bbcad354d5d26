#include "robinlab/io.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace robinlab {

using ordered_json = nlohmann::ordered_json;

std::string fmt_hp(const BigFloat& x, unsigned digits) {
    return x.str(digits);
}

namespace {

const char* kReportColumns = "n_or_factorization,log_n,loglog_n,sigma_ratio,d,band_stat,violates";

void report_row(std::ostream& os, const RobinReport& r, unsigned digits) {
    os << r.n_label << ',' << fmt_hp(r.log_n, digits) << ',' << fmt_hp(r.loglog_n, digits) << ','
       << fmt_hp(r.sigma_ratio, digits) << ',' << fmt_hp(r.d, digits) << ','
       << fmt_hp(r.band_stat, digits) << ',' << (r.violates_robin ? "true" : "false");
}

ordered_json report_json(const RobinReport& r, unsigned digits) {
    ordered_json j;
    j["n_label"] = r.n_label;
    j["log_n"] = fmt_hp(r.log_n, digits);
    j["loglog_n"] = fmt_hp(r.loglog_n, digits);
    j["sigma_ratio"] = fmt_hp(r.sigma_ratio, digits);
    j["d"] = fmt_hp(r.d, digits);
    if (r.big_d)
        j["D"] = fmt_hp(*r.big_d, digits);
    else
        j["D"] = nullptr;
    j["violates_robin"] = r.violates_robin;
    j["band_stat"] = fmt_hp(r.band_stat, digits);
    return j;
}

const char* d_mode_name(DReportMode m) {
    switch (m) {
        case DReportMode::Exact: return "exact";
        case DReportMode::LogScale: return "log_scale";
        default: return "indeterminate";
    }
}

} // namespace

void write_reports_csv(std::ostream& os, const std::vector<RobinReport>& reports, unsigned digits) {
    os << kReportColumns << '\n';
    for (const auto& r : reports) {
        report_row(os, r, digits);
        os << '\n';
    }
}

void write_canon_csv(std::ostream& os, const CanonicalComparison& c, unsigned digits) {
    os << "input,canonical,d_input,d_canonical,deficit_preserved,skipped_small_canonical\n"
       << c.input_report.n_label << ',' << c.canonical_report.n_label << ','
       << fmt_hp(c.input_report.d, digits) << ',' << fmt_hp(c.canonical_report.d, digits) << ','
       << (c.deficit_preserved ? "true" : "false") << ','
       << (c.skipped_small_canonical ? "true" : "false") << '\n';
}

void write_seq_csv(std::ostream& os, const std::vector<PrimorialPowerItem>& items,
                   unsigned digits) {
    os << "m," << kReportColumns << ",main_term,residual\n";
    for (const auto& it : items) {
        os << it.m << ',';
        report_row(os, it.report, digits);
        os << ',' << fmt_hp(it.main_term, digits) << ',' << fmt_hp(it.residual, digits) << '\n';
    }
}

void write_ca_csv(std::ostream& os, const std::vector<CATraceRow>& rows, unsigned digits) {
    os << "index,eps_lo,eps_hi," << kReportColumns << ",d_mode,d_sign,D_or_log_abs_D\n";
    for (const auto& row : rows) {
        os << row.item.index << ',' << fmt_hp(row.item.eps_lo, digits) << ','
           << fmt_hp(row.item.eps_hi, digits) << ',';
        report_row(os, row.item.report, digits);
        os << ',' << d_mode_name(row.mode) << ',' << row.d_sign << ','
           << (row.mode == DReportMode::Indeterminate ? "" : fmt_hp(row.d_value, digits)) << '\n';
    }
}

void write_bounds_csv(std::ostream& os, const std::vector<BoundCheck>& checks, unsigned digits) {
    os << "name,parameter,lhs,mid,rhs,holds,margin,below_threshold\n";
    for (const auto& c : checks) {
        os << c.name << ',' << fmt_hp(c.parameter, digits) << ',' << fmt_hp(c.lhs, digits) << ','
           << fmt_hp(c.mid, digits) << ',' << fmt_hp(c.rhs, digits) << ','
           << (c.holds ? "true" : "false") << ',' << fmt_hp(c.margin, digits) << ','
           << (c.below_threshold ? "true" : "false") << '\n';
    }
}

void write_reports_json(std::ostream& os, const std::vector<RobinReport>& reports,
                        unsigned digits) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, digits));
    os << arr.dump(2) << '\n';
}

void write_canon_json(std::ostream& os, const CanonicalComparison& c, unsigned digits) {
    ordered_json j;
    j["input"] = report_json(c.input_report, digits);
    j["canonical"] = report_json(c.canonical_report, digits);
    j["deficit_preserved"] = c.deficit_preserved;
    j["skipped_small_canonical"] = c.skipped_small_canonical;
    os << j.dump(2) << '\n';
}

void write_seq_json(std::ostream& os, const std::vector<PrimorialPowerItem>& items,
                    unsigned digits) {
    ordered_json arr = ordered_json::array();
    for (const auto& it : items) {
        ordered_json j;
        j["m"] = it.m;
        j["report"] = report_json(it.report, digits);
        j["main_term"] = fmt_hp(it.main_term, digits);
        j["residual"] = fmt_hp(it.residual, digits);
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

void write_ca_json(std::ostream& os, const std::vector<CATraceRow>& rows, unsigned digits) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json j;
        j["index"] = row.item.index;
        j["factors"] = ordered_json::parse(factors_to_json(row.item.n));
        j["eps_lo"] = fmt_hp(row.item.eps_lo, digits);
        j["eps_hi"] = fmt_hp(row.item.eps_hi, digits);
        j["report"] = report_json(row.item.report, digits);
        j["d_mode"] = d_mode_name(row.mode);
        j["d_sign"] = row.d_sign;
        if (row.mode == DReportMode::Indeterminate)
            j["D_or_log_abs_D"] = nullptr;
        else
            j["D_or_log_abs_D"] = fmt_hp(row.d_value, digits);
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

void write_bounds_json(std::ostream& os, const std::vector<BoundCheck>& checks, unsigned digits) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json j;
        j["name"] = c.name;
        j["parameter"] = fmt_hp(c.parameter, digits);
        j["lhs"] = fmt_hp(c.lhs, digits);
        j["mid"] = fmt_hp(c.mid, digits);
        j["rhs"] = fmt_hp(c.rhs, digits);
        j["holds"] = c.holds;
        j["margin"] = fmt_hp(c.margin, digits);
        j["below_threshold"] = c.below_threshold;
        arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
}

FactoredInteger parse_factors_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::domain_error(std::string("malformed factor JSON: ") + e.what());
    }
    if (!j.is_array()) throw std::domain_error("factor JSON must be an array of [prime, exponent] pairs");
    std::vector<PrimePower> factors;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned())
            throw std::domain_error("factor JSON entries must be [prime, exponent] pairs");
        factors.push_back({pair[0].get<std::uint64_t>(),
                           static_cast<std::uint32_t>(pair[1].get<std::uint64_t>())});
    }
    return FactoredInteger::from_factors(std::move(factors));
}

std::string factors_to_json(const FactoredInteger& n) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : n.factors()) arr.push_back({f.prime, f.exponent});
    return arr.dump();
}

} // namespace robinlab
