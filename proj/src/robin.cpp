#include "robinlab/robin.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

namespace robinlab {

namespace {

constexpr std::uint64_t kVerifyRangeCap = 4'000'000'000'000ull;
constexpr std::uint64_t kSigmaBlock = 1u << 16;
// Below this the bound e^gamma log log n moves too fast for the block
// filter to pay off; every n goes straight to the exact path.
constexpr std::uint64_t kFilterFloor = 10'000;

struct VerdictParts {
    bool violates;
    Interval bound;       // e^gamma * log log n
    Interval log_n;
    Interval sigma;       // sigma(n)/n
    unsigned escalations;
};

// One enclosure attempt at a fixed precision; nullopt when the verdict
// straddles and the caller should escalate.
std::optional<VerdictParts> try_verdict(const FactoredInteger& n,
                                        const std::optional<mpq_class>& exact_ratio,
                                        unsigned digits, unsigned level) {
    mpfr_prec_t prec = bits_for_digits(digits);
    Interval logn = log_interval_of(n, prec);
    if (logn.lo().sign() <= 0)
        throw std::domain_error("log log undefined for n <= 1");
    Interval bound = e_gamma_interval(prec) * log(logn);

    bool violates;
    Interval sigma{BigFloat(prec), BigFloat(prec)};
    if (exact_ratio) {
        // Violation is sigma(n)/n >= bound, with the rational side exact.
        if (mpfr_cmp_q(bound.hi().raw(), exact_ratio->get_mpq_t()) <= 0)
            violates = true;
        else if (mpfr_cmp_q(bound.lo().raw(), exact_ratio->get_mpq_t()) > 0)
            violates = false;
        else
            return std::nullopt;
        sigma = Interval::from_mpq(*exact_ratio, prec);
    } else {
        Interval logsig = log_sigma_ratio_interval(n, prec);
        if (bound.lo().sign() <= 0) {
            // Bound nonpositive while sigma(n)/n >= 1: violation certain.
            if (bound.hi().sign() > 0) return std::nullopt;
            violates = true;
        } else {
            int s = (logsig - log(bound)).definite_sign();
            if (s == 0) return std::nullopt;
            violates = s > 0;
        }
        sigma = exp(logsig);
    }
    return VerdictParts{violates, bound, logn, sigma, level};
}

VerdictParts verdict_with_escalation(const FactoredInteger& n, const EvalOptions& opts) {
    std::optional<mpq_class> exact_ratio;
    if (n.bit_length_estimate() <= static_cast<double>(opts.exact_bit_limit)) {
        mpq_class q(n.sigma(), n.value());
        q.canonicalize();
        exact_ratio = std::move(q);
    }
    unsigned level = 0;
    return resolve_with_escalation(opts.digits, opts.max_escalations, "Robin verdict",
        [&](unsigned digits) {
            return try_verdict(n, exact_ratio, digits, level++);
        });
}

std::string label_for(const FactoredInteger& n) {
    if (n.bit_length_estimate() <= 64.0) return n.value().get_str();
    return n.to_string();
}

// Exact-arithmetic violation decision for machine-size n with known sigma.
bool violation_decision(std::uint64_t n, std::uint64_t sigma_n, const EvalOptions& opts) {
    mpq_class r(mpz_class(static_cast<unsigned long>(sigma_n)),
                mpz_class(static_cast<unsigned long>(n)));
    r.canonicalize();
    return resolve_with_escalation(opts.digits, opts.max_escalations, "Robin verdict",
        [&](unsigned digits) -> std::optional<bool> {
            mpfr_prec_t prec = bits_for_digits(digits);
            Interval logn = log(Interval::from_ui(n, prec));
            Interval bound = e_gamma_interval(prec) * log(logn);
            if (mpfr_cmp_q(bound.hi().raw(), r.get_mpq_t()) <= 0) return true;
            if (mpfr_cmp_q(bound.lo().raw(), r.get_mpq_t()) > 0) return false;
            return std::nullopt;
        });
}

// sigma(n) for every n in [lo, hi] via a segmented multiplicative sieve.
void sigma_block(std::uint64_t lo, std::uint64_t hi,
                 const std::vector<std::uint32_t>& small_primes,
                 std::vector<std::uint64_t>& sigma, std::vector<std::uint64_t>& rem) {
    std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    sigma.assign(len, 1);
    rem.resize(len);
    for (std::size_t i = 0; i < len; ++i) rem[i] = lo + i;
    for (std::uint32_t p : small_primes) {
        std::uint64_t pp = static_cast<std::uint64_t>(p);
        if (pp * pp > hi) break;
        std::uint64_t first = (lo + pp - 1) / pp * pp;
        for (std::uint64_t j = first; j <= hi; j += pp) {
            std::size_t i = static_cast<std::size_t>(j - lo);
            std::uint64_t pk = 1, series = 1;
            while (rem[i] % pp == 0) {
                rem[i] /= pp;
                pk *= pp;
                series += pk;
            }
            sigma[i] *= series;
        }
    }
    for (std::size_t i = 0; i < len; ++i)
        if (rem[i] > 1) sigma[i] *= rem[i] + 1;
}

std::vector<std::uint32_t> primes_up_to_u32(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

// Violators within [lo, hi]; bound filtering in certified doubles, final
// decisions on the exact path.
std::vector<std::uint64_t> scan_chunk(std::uint64_t lo, std::uint64_t hi,
                                      const std::vector<std::uint32_t>& small_primes,
                                      const EvalOptions& opts) {
    std::vector<std::uint64_t> out;
    std::vector<std::uint64_t> sigma, rem;
    mpfr_prec_t fprec = 96;
    for (std::uint64_t blo = lo / kSigmaBlock * kSigmaBlock; blo <= hi; blo += kSigmaBlock) {
        std::uint64_t bhi = std::min(hi, blo + kSigmaBlock - 1);
        std::uint64_t start = std::max(lo, blo);
        sigma_block(start, bhi, small_primes, sigma, rem);
        double bound_floor = 0.0;
        bool use_filter = start >= kFilterFloor;
        if (use_filter) {
            // Certified lower bound of e^gamma log log n over the block
            // (the bound is increasing in n).
            Interval b = e_gamma_interval(fprec) * log(log(Interval::from_ui(start, fprec)));
            bound_floor = b.lo().to_double(MPFR_RNDD) * (1.0 - 1e-12);
        }
        for (std::uint64_t n = start; n <= bhi; ++n) {
            std::uint64_t s = sigma[static_cast<std::size_t>(n - start)];
            if (use_filter) {
                double q = static_cast<double>(s) / static_cast<double>(n);
                if (q * (1.0 + 1e-12) < bound_floor) continue;
            }
            if (violation_decision(n, s, opts)) out.push_back(n);
        }
    }
    return out;
}

} // namespace

Constants Constants::at(unsigned digits) {
    mpfr_prec_t prec = bits_for_digits(digits);
    Constants c{BigFloat(prec), BigFloat(prec)};
    mpfr_const_euler(c.euler_gamma.raw(), MPFR_RNDN);
    mpfr_exp(c.e_gamma.raw(), c.euler_gamma.raw(), MPFR_RNDN);
    return c;
}

RobinReport assess(const FactoredInteger& n, const EvalOptions& opts) {
    if (n.is_one()) throw std::domain_error("log log undefined for n = 1");
    VerdictParts v = verdict_with_escalation(n, opts);

    RobinReport r;
    r.n_label = label_for(n);
    r.log_n = v.log_n.mid();
    r.loglog_n = log(v.log_n).mid();
    r.sigma_ratio = v.sigma.mid();
    Interval d = v.bound - v.sigma;
    r.d = d.mid();
    r.band_stat = (d * sqrt(v.log_n)).mid();
    r.violates_robin = v.violates;
    r.escalations = v.escalations;

    if (n.bit_length_estimate() <= static_cast<double>(opts.exact_bit_limit)) {
        mpz_class nv = n.value();
        mpfr_prec_t dprec = v.bound.prec() + mpz_sizeinbase(nv.get_mpz_t(), 2) + 8;
        Interval big = d * Interval::from_mpz(nv, dprec);
        r.big_d = big.mid();
    }
    return r;
}

RobinReport assess(std::uint64_t n, const PrimeTable& table, const EvalOptions& opts) {
    return assess(FactoredInteger::factorize(n, table), opts);
}

BigFloat band_stat(const FactoredInteger& n, const EvalOptions& opts) {
    return assess(n, opts).band_stat;
}

std::vector<RobinReport> verify_range(std::uint64_t lo, std::uint64_t hi, const EvalOptions& opts) {
    if (lo < 3) throw std::domain_error("verification starts at n = 3 (log log n must be positive)");
    if (lo > hi) throw std::domain_error("empty range: lo > hi");
    if (hi > kVerifyRangeCap)
        throw ResourceError("range end exceeds the configured verification cap of 4e12");

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 2;
    std::vector<std::uint32_t> small_primes = primes_up_to_u32(root);

    unsigned workers = std::max(1u, opts.parallelism);
    std::vector<std::uint64_t> violators;
    if (workers == 1) {
        violators = scan_chunk(lo, hi, small_primes, opts);
    } else {
        // Chunks split on absolute block boundaries so per-n decisions are
        // identical for every parallelism level.
        std::uint64_t span = (hi - lo) / workers + 1;
        span = (span / kSigmaBlock + 1) * kSigmaBlock;
        std::vector<std::future<std::vector<std::uint64_t>>> parts;
        for (std::uint64_t clo = lo; clo <= hi; clo += span) {
            std::uint64_t chi = std::min(hi, clo + span - 1);
            parts.push_back(std::async(std::launch::async, [&, clo, chi] {
                return scan_chunk(clo, chi, small_primes, opts);
            }));
        }
        for (auto& f : parts) {
            auto part = f.get();
            violators.insert(violators.end(), part.begin(), part.end());
        }
    }

    // Reports are rebuilt per violator; the list is tiny.
    PrimeTable mini = PrimeTable::build(std::max<std::uint64_t>(root, 8), opts.digits);
    std::vector<RobinReport> out;
    out.reserve(violators.size());
    for (std::uint64_t n : violators)
        out.push_back(assess(FactoredInteger::factorize(n, mini), opts));
    return out;
}

CanonicalComparison compare_with_canonical(const FactoredInteger& n, const PrimeTable& table,
                                           const EvalOptions& opts) {
    CanonicalComparison c;
    c.input = n;
    c.canonical = canonicalize(n, table);
    c.input_report = assess(n, opts);
    c.canonical_report = assess(c.canonical, opts);
    c.skipped_small_canonical =
        c.canonical.factor_count() == 1 && c.canonical.factors()[0] == PrimePower{2, 1};

    // d(n) >= d(canonical) with a relative rounding guard.
    mpfr_prec_t prec = bits_for_digits(opts.digits);
    BigFloat tol = BigFloat::from_double(1e-15, prec);
    BigFloat scale = c.canonical_report.d.abs();
    if (scale < BigFloat::from_ui(1, prec)) scale = BigFloat::from_ui(1, prec);
    c.deficit_preserved = c.input_report.d >= c.canonical_report.d - tol * scale;
    return c;
}

} // namespace robinlab
