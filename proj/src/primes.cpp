#include "robinlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace robinlab {

namespace {

// Odd-only base sieve up to `n` (inclusive); returns all primes <= n.
std::vector<std::uint64_t> simple_sieve(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    out.push_back(2);
    std::vector<bool> comp((n + 1) / 2, false); // comp[i] marks 2i+1
    for (std::uint64_t i = 1; 2 * i + 1 <= n; ++i) {
        std::uint64_t p = 2 * i + 1;
        if (comp[i]) continue;
        out.push_back(p);
        if (p * p > n) continue;
        for (std::uint64_t j = (p * p - 1) / 2; j < comp.size(); j += p)
            comp[j] = true;
    }
    return out;
}

constexpr std::uint64_t kSegmentSize = 1u << 20;

} // namespace

PrimeTable PrimeTable::build(std::uint64_t limit, unsigned digits) {
    if (limit < 2) throw std::domain_error("sieve limit must be at least 2");

    PrimeTable t;
    t.limit_ = limit;
    t.digits_ = digits;

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 2;
    std::vector<std::uint64_t> base = simple_sieve(std::min(limit, root));

    if (root >= limit) {
        t.primes_ = std::move(base);
    } else {
        t.primes_ = base;
        std::vector<bool> seg;
        for (std::uint64_t lo = root + 1; lo <= limit; lo += kSegmentSize) {
            std::uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
            seg.assign(hi - lo + 1, true);
            for (std::uint64_t p : base) {
                if (p * p > hi) break;
                std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
                for (std::uint64_t j = first; j <= hi; j += p)
                    seg[j - lo] = false;
            }
            for (std::uint64_t j = lo; j <= hi; ++j)
                if (seg[j - lo]) t.primes_.push_back(j);
        }
    }

    mpfr_prec_t prec = bits_for_digits(digits);
    t.cumlog_.reserve(t.primes_.size());
    BigFloat acc = BigFloat::from_ui(0, prec);
    BigFloat lp(prec);
    for (std::uint64_t p : t.primes_) {
        mpfr_set_ui(lp.raw(), static_cast<unsigned long>(p), MPFR_RNDN);
        mpfr_log(lp.raw(), lp.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), lp.raw(), MPFR_RNDN);
        t.cumlog_.push_back(acc);
    }
    return t;
}

std::uint64_t PrimeTable::nth_prime(std::size_t m) const {
    if (m < 1 || m > primes_.size())
        throw std::range_error("prime index out of range; rebuild with a larger sieve limit");
    return primes_[m - 1];
}

const BigFloat& PrimeTable::cumlog(std::size_t k) const {
    if (k >= cumlog_.size())
        throw std::range_error("cumlog index out of range; rebuild with a larger sieve limit");
    return cumlog_[k];
}

std::size_t PrimeTable::count_upto(double x) const {
    if (x < 2) return 0;
    auto it = std::upper_bound(primes_.begin(), primes_.end(),
                               static_cast<std::uint64_t>(std::floor(x)));
    return static_cast<std::size_t>(it - primes_.begin());
}

BigFloat PrimeTable::theta(double x) const {
    if (x > static_cast<double>(limit_))
        throw std::range_error("theta argument exceeds the sieve limit");
    std::size_t k = count_upto(x);
    if (k == 0) return BigFloat::from_ui(0, bits_for_digits(digits_));
    return cumlog_[k - 1];
}

BigFloat PrimeTable::theta_pnt_residual(double x) const {
    if (x < 2) throw std::domain_error("theta residual requires x >= 2");
    mpfr_prec_t prec = bits_for_digits(digits_);
    BigFloat th = theta(x);
    BigFloat xv = BigFloat::from_double(x, prec);
    return (th - xv) * log_rn(xv) / xv;
}

} // namespace robinlab
