#include "robinlab/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "robinlab/bounds.hpp"

namespace robinlab {

namespace {

// Breakpoint at which the exponent of `p` steps up to `to_exp`:
// p^eps = 1 + 1/(p + p^2 + ... + p^to_exp).
Interval transition_eps(std::uint64_t p, std::uint32_t to_exp, mpfr_prec_t prec) {
    mpz_class s = 0;
    mpz_class pw = 1;
    for (std::uint32_t i = 0; i < to_exp; ++i) {
        pw *= static_cast<unsigned long>(p);
        s += pw;
    }
    mpq_class inv(1, s);
    inv.canonicalize();
    Interval num = log1p(Interval::from_mpq(inv, prec));
    Interval den = log(Interval::from_ui(static_cast<unsigned long>(p), prec));
    return num / den;
}

struct Transition {
    std::size_t prime_idx;
    std::uint32_t to_exp;
    unsigned digits;
    Interval eps;
};

Transition make_transition(std::size_t idx, std::uint32_t to_exp, const PrimeTable& table,
                           unsigned digits) {
    if (idx >= table.count())
        throw std::range_error("prime table exhausted while generating CA numbers; "
                               "rebuild with a larger sieve limit");
    return Transition{idx, to_exp, digits,
                      transition_eps(table.primes()[idx], to_exp, bits_for_digits(digits))};
}

void refine(Transition& t, const PrimeTable& table) {
    t.digits *= 2;
    t.eps = transition_eps(table.primes()[t.prime_idx], t.to_exp, bits_for_digits(t.digits));
}

} // namespace

PrimorialPowerItem primorial_power_item(unsigned m, const PrimeTable& table,
                                        const EvalOptions& opts) {
    if (m < 1) throw std::domain_error("sequence index m must be >= 1");
    if (m > table.count())
        throw std::range_error("sequence item needs more primes; rebuild with a larger sieve limit");

    std::vector<PrimePower> factors;
    factors.reserve(m);
    for (unsigned i = 0; i < m; ++i) factors.push_back({table.primes()[i], m});

    PrimorialPowerItem item;
    item.m = m;
    item.n = FactoredInteger::from_factors(std::move(factors));
    item.report = assess(item.n, opts);
    if (item.n.bit_length_estimate() > 64.0)
        item.report.n_label =
            "primorial(" + std::to_string(table.primes()[m - 1]) + ")^" + std::to_string(m);

    mpfr_prec_t prec = bits_for_digits(opts.digits);
    Interval logn = log_interval_of(item.n, prec);
    Interval f1 = e_gamma_interval(prec) * log(logn);
    Interval h = zeta_minus_one_interval(m + 1, prec);
    Interval one = Interval::from_ui(1, prec);
    item.main_term = (f1 * (h / (one + h))).mid();
    item.residual = item.report.d - item.main_term;
    return item;
}

std::vector<PrimorialPowerItem> primorial_power_sweep(unsigned m_max, const PrimeTable& table,
                                                      const EvalOptions& opts) {
    if (m_max < 2) throw std::domain_error("sweep requires m_max >= 2");
    std::vector<PrimorialPowerItem> out;
    out.reserve(m_max - 1);
    for (unsigned m = 2; m <= m_max; ++m) out.push_back(primorial_power_item(m, table, opts));
    return out;
}

std::vector<CAItem> ca_generate(std::size_t count, const PrimeTable& table,
                                const EvalOptions& opts) {
    if (count < 1) throw std::domain_error("CA generation requires count >= 1");

    std::vector<std::uint32_t> exps;          // exponent of prime i
    std::vector<Transition> pending;          // next transition per prime, plus the first unused prime
    pending.push_back(make_transition(0, 1, table, opts.digits));

    // Certified strict comparison of two breakpoints, refining both sides on
    // a straddle.  Returns 0 for an unresolvable (treated-as-tie) pair.
    auto compare = [&](Transition& a, Transition& b) -> int {
        for (unsigned lvl = 0; lvl <= opts.max_escalations; ++lvl) {
            if (a.eps.certainly_greater(b.eps)) return 1;
            if (a.eps.certainly_less(b.eps)) return -1;
            refine(a, table);
            refine(b, table);
        }
        return 0;
    };

    std::vector<FactoredInteger> values;
    std::vector<BigFloat> fired_eps;
    auto snapshot = [&]() {
        std::vector<PrimePower> f;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) f.push_back({table.primes()[i], exps[i]});
        return FactoredInteger::from_factors(std::move(f));
    };

    while (values.size() < count + 1) {
        // Locate the pending transition with the largest breakpoint.
        std::size_t best = 0;
        std::vector<std::size_t> ties;
        for (std::size_t i = 1; i < pending.size(); ++i) {
            int c = compare(pending[i], pending[best]);
            if (c > 0) {
                best = i;
                ties.clear();
            } else if (c == 0) {
                ties.push_back(i);
            }
        }

        std::vector<std::size_t> fire{best};
        // Algebraic-coincidence path: apply every tied transition in
        // increasing prime order, emitting after each step.
        for (std::size_t i : ties) fire.push_back(i);
        std::sort(fire.begin(), fire.end(), [&](std::size_t x, std::size_t y) {
            return pending[x].prime_idx < pending[y].prime_idx;
        });

        for (std::size_t slot : fire) {
            Transition t = pending[slot];
            if (t.prime_idx == exps.size()) {
                exps.push_back(1);
                pending.push_back(make_transition(exps.size(), 1, table, opts.digits));
            } else {
                ++exps[t.prime_idx];
            }
            pending[slot] = make_transition(t.prime_idx, exps[t.prime_idx] + 1, table, opts.digits);
            FactoredInteger v = snapshot();
            if (!values.empty() && values.back() == v) continue; // dedupe by value
            values.push_back(std::move(v));
            fired_eps.push_back(t.eps.mid());
            if (values.size() == count + 1) break;
        }
    }

    std::vector<CAItem> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        CAItem item;
        item.index = k + 1;
        item.n = values[k];
        item.eps_hi = fired_eps[k];
        item.eps_lo = fired_eps[k + 1];
        item.report = assess(item.n, opts);
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<CATraceRow> ca_trace(std::size_t count, const PrimeTable& table,
                                 const EvalOptions& opts) {
    std::vector<CAItem> items = ca_generate(count, table, opts);
    std::vector<CATraceRow> out;
    out.reserve(items.size());
    for (auto& item : items) {
        CATraceRow row;
        row.item = std::move(item);
        const RobinReport& r = row.item.report;
        if (r.big_d) {
            row.mode = DReportMode::Exact;
            row.d_sign = r.big_d->sign();
            row.d_value = *r.big_d;
        } else if (!r.d.is_nan() && r.d.sign() != 0) {
            // Sign was certified by the verdict enclosure; report log |D|.
            row.mode = DReportMode::LogScale;
            row.d_sign = r.violates_robin ? -1 : 1;
            row.d_value = log_rn(r.d.abs()) + r.log_n;
        } else {
            row.mode = DReportMode::Indeterminate;
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::optional<PrimePower> ca_step_quotient(const FactoredInteger& prev,
                                           const FactoredInteger& next) {
    std::optional<PrimePower> q;
    std::size_t i = 0, j = 0;
    const auto& a = prev.factors();
    const auto& b = next.factors();
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i].prime == b[j].prime) {
            if (a[i].exponent > b[j].exponent) return std::nullopt;
            if (a[i].exponent < b[j].exponent) {
                if (q) return std::nullopt;
                q = PrimePower{b[j].prime, b[j].exponent - a[i].exponent};
            }
            ++i;
            ++j;
        } else if (j < b.size() && (i == a.size() || b[j].prime < a[i].prime)) {
            if (q) return std::nullopt;
            q = PrimePower{b[j].prime, b[j].exponent};
            ++j;
        } else {
            return std::nullopt; // prev has a prime that next lacks
        }
    }
    return q;
}

} // namespace robinlab
