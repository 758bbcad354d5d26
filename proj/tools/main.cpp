#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "robinlab/bounds.hpp"
#include "robinlab/generators.hpp"
#include "robinlab/io.hpp"
#include "robinlab/primes.hpp"
#include "robinlab/robin.hpp"

namespace {

using namespace robinlab;

struct RunConfig {
    unsigned precision_digits = kDefaultDigits;
    std::uint64_t sieve_limit = 1'000'000;
    std::string format = "csv";
    std::string output_path;
    unsigned parallelism = 1;
};

std::uint64_t default_sieve_limit() {
    if (const char* env = std::getenv("ROBINLAB_SIEVE_LIMIT")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::domain_error("ROBINLAB_SIEVE_LIMIT is not a valid integer");
        }
    }
    return 1'000'000;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--precision", cfg.precision_digits,
                    "significant decimal digits for all transcendental work (>= 15)")
        ->capture_default_str();
    cmd->add_option("--sieve-limit", cfg.sieve_limit,
                    "prime table bound (default from ROBINLAB_SIEVE_LIMIT or 1000000)");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", cfg.output_path, "write output to this file instead of stdout");
    cmd->add_option("--parallelism", cfg.parallelism, "worker threads (output is order-stable)")
        ->capture_default_str();
}

void validate(const RunConfig& cfg) {
    if (cfg.precision_digits < kMinDigits)
        throw std::domain_error("precision must be at least 15 significant digits");
    if (cfg.sieve_limit < 2) throw std::domain_error("sieve limit must be at least 2");
    if (cfg.parallelism < 1) throw std::domain_error("parallelism must be at least 1");
}

EvalOptions eval_options(const RunConfig& cfg) {
    EvalOptions o;
    o.digits = cfg.precision_digits;
    o.parallelism = cfg.parallelism;
    return o;
}

// Writes through a buffer so a failed run never leaves a half-written file.
void emit(const RunConfig& cfg, const std::string& body, unsigned max_escalations_seen) {
    if (cfg.output_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(cfg.output_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + cfg.output_path);
        f << body;
    }
    std::cerr << "summary: precision_digits=" << cfg.precision_digits
              << " escalations_used=" << max_escalations_seen << '\n';
}

unsigned max_escalations(const std::vector<RobinReport>& rs) {
    unsigned m = 0;
    for (const auto& r : rs) m = std::max(m, r.escalations);
    return m;
}

FactoredInteger resolve_input(std::uint64_t n_flag, const std::string& factors_flag,
                              const PrimeTable& table) {
    if (n_flag != 0 && !factors_flag.empty())
        throw std::domain_error("give either --n or --factors, not both");
    if (n_flag != 0) return FactoredInteger::factorize(n_flag, table);
    if (!factors_flag.empty()) {
        if (factors_flag.front() == '[') return parse_factors_json(factors_flag);
        return FactoredInteger::parse(factors_flag);
    }
    throw std::domain_error("missing --n or --factors");
}

int run(int argc, char** argv) {
    CLI::App app{
        "robinlab: a workbench for the Robin inequality\n"
        "  sigma(n) < e^gamma n log log n, its deficit d(n), and the effective\n"
        "  bounds and integer sequences used to study it.\n\n"
        "CSV columns per report row:\n"
        "  n_or_factorization,log_n,loglog_n,sigma_ratio,d,band_stat,violates\n"
        "seq adds m,main_term,residual; ca adds index,eps_lo,eps_hi,d_mode,d_sign,\n"
        "D_or_log_abs_D; bounds tables use name,parameter,lhs,mid,rhs,holds,margin,\n"
        "below_threshold. High-precision values are decimal strings in JSON."};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.sieve_limit = default_sieve_limit();

    std::uint64_t from = 0, to = 0, n_flag = 0;
    unsigned mmax = 0;
    std::size_t count = 0;
    std::string factors_flag, suite = "all";

    CLI::App* verify = app.add_subcommand("verify", "exact Robin verdicts over [from, to]");
    verify->add_option("--from", from, "range start (>= 3)")->required();
    verify->add_option("--to", to, "range end")->required();
    add_common_options(verify, cfg);

    CLI::App* canon = app.add_subcommand(
        "canon", "map n to its canonical form (first primes, same exponents) and compare deficits");
    canon->add_option("--n", n_flag, "integer input");
    canon->add_option("--factors", factors_flag, "factorization input, e.g. 2^4*3^2*5*7 or JSON");
    add_common_options(canon, cfg);

    CLI::App* seq = app.add_subcommand(
        "seq", "the sequence n_m = (2*3*...*p_m)^m with deficit decomposition, m = 2..mmax");
    seq->add_option("--mmax", mmax, "last index (>= 2)")->required();
    add_common_options(seq, cfg);

    CLI::App* ca = app.add_subcommand("ca", "colossally abundant numbers with epsilon intervals");
    ca->add_option("--count", count, "how many CA numbers (>= 1)")->required();
    add_common_options(ca, cfg);

    CLI::App* bounds = app.add_subcommand("bounds", "effective-bound sweep tables");
    bounds->add_option("--suite", suite, "mertens | euler-product | zeta-tail | sigma-bound | all")
        ->check(CLI::IsMember({"mertens", "euler-product", "zeta-tail", "sigma-bound", "all"}))
        ->capture_default_str();
    add_common_options(bounds, cfg);

    CLI::App* report = app.add_subcommand("report", "full report for a single integer");
    report->add_option("--n", n_flag, "integer input");
    report->add_option("--factors", factors_flag, "factorization input");
    add_common_options(report, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n' << app.help();
        return 64;
    }
    validate(cfg);
    EvalOptions opts = eval_options(cfg);

    std::ostringstream body;
    unsigned esc = 0;
    bool json = cfg.format == "json";

    if (*verify) {
        auto violators = verify_range(from, to, opts);
        esc = max_escalations(violators);
        json ? write_reports_json(body, violators, cfg.precision_digits)
             : write_reports_csv(body, violators, cfg.precision_digits);
    } else if (*canon) {
        PrimeTable table = PrimeTable::build(cfg.sieve_limit, cfg.precision_digits);
        auto c = compare_with_canonical(resolve_input(n_flag, factors_flag, table), table, opts);
        esc = std::max(c.input_report.escalations, c.canonical_report.escalations);
        json ? write_canon_json(body, c, cfg.precision_digits)
             : write_canon_csv(body, c, cfg.precision_digits);
    } else if (*seq) {
        PrimeTable table = PrimeTable::build(cfg.sieve_limit, cfg.precision_digits);
        auto items = primorial_power_sweep(mmax, table, opts);
        for (const auto& it : items) esc = std::max(esc, it.report.escalations);
        json ? write_seq_json(body, items, cfg.precision_digits)
             : write_seq_csv(body, items, cfg.precision_digits);
    } else if (*ca) {
        PrimeTable table = PrimeTable::build(cfg.sieve_limit, cfg.precision_digits);
        auto rows = ca_trace(count, table, opts);
        for (const auto& r : rows) esc = std::max(esc, r.item.report.escalations);
        json ? write_ca_json(body, rows, cfg.precision_digits)
             : write_ca_csv(body, rows, cfg.precision_digits);
    } else if (*bounds) {
        PrimeTable table = PrimeTable::build(cfg.sieve_limit, cfg.precision_digits);
        std::vector<BoundCheck> checks;
        auto append = [&](std::vector<BoundCheck> v) {
            checks.insert(checks.end(), std::make_move_iterator(v.begin()),
                          std::make_move_iterator(v.end()));
        };
        if (suite == "mertens" || suite == "all")
            append(sweep_mertens_sandwich(table, table.limit()));
        if (suite == "euler-product" || suite == "all")
            append(sweep_euler_product(table, cfg.precision_digits));
        if (suite == "zeta-tail" || suite == "all")
            append(sweep_zeta_tail(2, 64, cfg.precision_digits));
        if (suite == "sigma-bound" || suite == "all")
            append(sweep_primorial_sigma_bound(
                table, std::min<std::size_t>(10'000, table.count()), cfg.precision_digits));
        json ? write_bounds_json(body, checks, cfg.precision_digits)
             : write_bounds_csv(body, checks, cfg.precision_digits);
    } else if (*report) {
        PrimeTable table = PrimeTable::build(cfg.sieve_limit, cfg.precision_digits);
        std::vector<RobinReport> one{assess(resolve_input(n_flag, factors_flag, table), opts)};
        esc = max_escalations(one);
        json ? write_reports_json(body, one, cfg.precision_digits)
             : write_reports_csv(body, one, cfg.precision_digits);
    }

    emit(cfg, body.str(), esc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const robinlab::PrecisionExhausted& e) {
        std::cerr << "error: precision: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << '\n';
        return 1;
    } catch (const std::range_error& e) {
        std::cerr << "error: range: " << e.what() << '\n';
        return 1;
    } catch (const robinlab::ResourceError& e) {
        std::cerr << "error: resource: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
