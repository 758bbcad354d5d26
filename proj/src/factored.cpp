#include "robinlab/factored.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace robinlab {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is deterministic for all 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FactoredInteger FactoredInteger::from_factors(std::vector<PrimePower> factors) {
    std::uint64_t prev = 0;
    for (const auto& f : factors) {
        if (f.exponent < 1) throw std::domain_error("factor exponents must be >= 1");
        if (f.prime <= prev) throw std::domain_error("factor bases must be strictly increasing");
        if (!is_prime_u64(f.prime))
            throw std::domain_error("factor base " + std::to_string(f.prime) + " is not prime");
        prev = f.prime;
    }
    FactoredInteger n;
    n.factors_ = std::move(factors);
    return n;
}

FactoredInteger FactoredInteger::factorize(std::uint64_t n, const PrimeTable& table) {
    if (n == 0) throw std::domain_error("cannot factorize 0");
    FactoredInteger out;
    std::uint64_t rem = n;
    for (std::uint64_t p : table.primes()) {
        if (static_cast<unsigned __int128>(p) * p > rem) break;
        if (rem % p) continue;
        std::uint32_t a = 0;
        while (rem % p == 0) { rem /= p; ++a; }
        out.factors_.push_back({p, a});
    }
    if (rem > 1) {
        unsigned __int128 cap = static_cast<unsigned __int128>(table.limit()) * table.limit();
        if (static_cast<unsigned __int128>(rem) > cap)
            throw std::range_error("cofactor exceeds sieve limit squared; rebuild with a larger sieve limit");
        out.factors_.push_back({rem, 1});
    }
    return out;
}

std::uint64_t FactoredInteger::largest_prime() const {
    if (factors_.empty()) throw std::domain_error("1 has no prime factors");
    return factors_.back().prime;
}

double FactoredInteger::bit_length_estimate() const {
    double bits = 0;
    for (const auto& f : factors_)
        bits += f.exponent * std::log2(static_cast<double>(f.prime));
    return bits;
}

mpz_class FactoredInteger::value() const {
    mpz_class n = 1;
    mpz_class pw;
    for (const auto& f : factors_) {
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(f.prime), f.exponent);
        n *= pw;
    }
    return n;
}

mpz_class FactoredInteger::sigma() const {
    mpz_class s = 1;
    mpz_class pw;
    for (const auto& f : factors_) {
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(f.prime), f.exponent + 1);
        pw -= 1;
        mpz_divexact_ui(pw.get_mpz_t(), pw.get_mpz_t(), static_cast<unsigned long>(f.prime - 1));
        s *= pw;
    }
    return s;
}

std::string FactoredInteger::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (!first) os << "·";
        first = false;
        os << f.prime;
        if (f.exponent > 1) os << '^' << f.exponent;
    }
    return os.str();
}

FactoredInteger FactoredInteger::parse(const std::string& text) {
    if (text == "1") return FactoredInteger{};
    // Normalize both accepted separators to '*'.
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == 0xC2 && i + 1 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0xB7) {
            s += '*';
            ++i;
        } else if (c == '*') {
            s += '*';
        } else {
            s += static_cast<char>(c);
        }
    }
    std::vector<PrimePower> factors;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, '*')) {
        if (tok.empty()) throw std::domain_error("empty factor in '" + text + "'");
        std::size_t caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        std::string expo = caret == std::string::npos ? "1" : tok.substr(caret + 1);
        std::uint64_t p = 0;
        std::uint64_t a = 0;
        try {
            std::size_t pos = 0;
            p = std::stoull(base, &pos);
            if (pos != base.size()) throw std::invalid_argument(base);
            pos = 0;
            a = std::stoull(expo, &pos);
            if (pos != expo.size()) throw std::invalid_argument(expo);
        } catch (const std::exception&) {
            throw std::domain_error("malformed factor token '" + tok + "'");
        }
        if (a < 1 || a > 0xFFFFFFFFull)
            throw std::domain_error("exponent out of range in '" + tok + "'");
        factors.push_back({p, static_cast<std::uint32_t>(a)});
    }
    if (factors.empty()) throw std::domain_error("empty factorization '" + text + "'");
    return from_factors(std::move(factors)); // validates primality and order
}

FactoredInteger canonicalize(const FactoredInteger& n, const PrimeTable& table) {
    std::size_t m = n.factor_count();
    if (m > table.count())
        throw std::range_error("canonicalization needs at least " + std::to_string(m) +
                               " primes; rebuild with a larger sieve limit");
    std::vector<PrimePower> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        out.push_back({table.primes()[i], n.factors()[i].exponent});
    return FactoredInteger::from_factors(std::move(out));
}

mpq_class prime_power_sigma_ratio_exact(std::uint32_t a, std::uint64_t x) {
    if (a < 1 || x < 2) throw std::domain_error("prime-power sigma ratio requires a >= 1, x >= 2");
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(x), a + 1);
    num -= 1;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(x), a);
    den *= static_cast<unsigned long>(x - 1);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Interval prime_power_sigma_ratio_interval(std::uint32_t a, std::uint64_t x, mpfr_prec_t prec) {
    if (x < 2) throw std::domain_error("prime-power sigma ratio requires x >= 2");
    // Explicit sum 1 + 1/x + ... + 1/x^a; once a term drops below the
    // rounding floor the rest is absorbed into the geometric tail bound
    // tail < x^-i / (x - 1).
    BigFloat lo(prec), hi(prec), term_lo(prec), term_hi(prec), t(prec);
    mpfr_set_ui(lo.raw(), 1, MPFR_RNDD);
    mpfr_set_ui(hi.raw(), 1, MPFR_RNDU);
    mpfr_set_ui(term_lo.raw(), 1, MPFR_RNDD);
    mpfr_set_ui(term_hi.raw(), 1, MPFR_RNDU);
    for (std::uint32_t i = 1; i <= a; ++i) {
        mpfr_div_ui(term_lo.raw(), term_lo.raw(), static_cast<unsigned long>(x), MPFR_RNDD);
        mpfr_div_ui(term_hi.raw(), term_hi.raw(), static_cast<unsigned long>(x), MPFR_RNDU);
        mpfr_add(lo.raw(), lo.raw(), term_lo.raw(), MPFR_RNDD);
        mpfr_add(hi.raw(), hi.raw(), term_hi.raw(), MPFR_RNDU);
        if (mpfr_get_exp(term_hi.raw()) < -(prec + 4) && i < a) {
            mpfr_div_ui(t.raw(), term_hi.raw(), static_cast<unsigned long>(x - 1), MPFR_RNDU);
            mpfr_add(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
            break;
        }
    }
    return Interval(lo, hi);
}

BigFloat prime_power_sigma_ratio(std::uint32_t a, std::uint64_t x, unsigned digits) {
    if (a < 1) throw std::domain_error("prime-power sigma ratio requires a >= 1, x >= 2");
    return prime_power_sigma_ratio_interval(a, x, bits_for_digits(digits)).mid();
}

SigmaRatio sigma_ratio(const FactoredInteger& n, unsigned digits, unsigned exact_bit_limit) {
    mpfr_prec_t prec = bits_for_digits(digits);
    SigmaRatio out{log_sigma_ratio_interval(n, prec).mid(), std::nullopt};
    if (n.bit_length_estimate() <= static_cast<double>(exact_bit_limit)) {
        mpq_class q(n.sigma(), n.value());
        q.canonicalize();
        out.exact = std::move(q);
    }
    return out;
}

Interval log_sigma_ratio_interval(const FactoredInteger& n, mpfr_prec_t prec) {
    Interval acc = Interval::from_ui(0, prec);
    for (const auto& f : n.factors())
        acc = acc + log(prime_power_sigma_ratio_interval(f.exponent, f.prime, prec));
    return acc;
}

BigFloat log_of(const FactoredInteger& n, unsigned digits) {
    return log_interval_of(n, bits_for_digits(digits)).mid();
}

Interval log_interval_of(const FactoredInteger& n, mpfr_prec_t prec) {
    BigFloat lo(prec), hi(prec), t(prec);
    mpfr_set_ui(lo.raw(), 0, MPFR_RNDD);
    mpfr_set_ui(hi.raw(), 0, MPFR_RNDU);
    for (const auto& f : n.factors()) {
        mpfr_set_ui(t.raw(), static_cast<unsigned long>(f.prime), MPFR_RNDD);
        mpfr_log(t.raw(), t.raw(), MPFR_RNDD);
        mpfr_mul_ui(t.raw(), t.raw(), f.exponent, MPFR_RNDD);
        mpfr_add(lo.raw(), lo.raw(), t.raw(), MPFR_RNDD);
        mpfr_set_ui(t.raw(), static_cast<unsigned long>(f.prime), MPFR_RNDU);
        mpfr_log(t.raw(), t.raw(), MPFR_RNDU);
        mpfr_mul_ui(t.raw(), t.raw(), f.exponent, MPFR_RNDU);
        mpfr_add(hi.raw(), hi.raw(), t.raw(), MPFR_RNDU);
    }
    return Interval(lo, hi);
}

} // namespace robinlab
