#pragma once

#include <string>

#include "robinlab/bigfloat.hpp"

namespace testsupport {

inline robinlab::BigFloat bf(const char* decimal, unsigned digits = 60) {
    robinlab::BigFloat x(robinlab::bits_for_digits(digits));
    if (mpfr_set_str(x.raw(), decimal, 10, MPFR_RNDN) != 0)
        throw std::invalid_argument(std::string("bad decimal literal: ") + decimal);
    return x;
}

inline bool within_abs(const robinlab::BigFloat& a, const robinlab::BigFloat& b, double tol) {
    return (a - b).abs() <= robinlab::BigFloat::from_double(tol, 64);
}

inline bool within_abs(const robinlab::BigFloat& a, const char* b, double tol) {
    return within_abs(a, bf(b), tol);
}

inline bool within_rel(const robinlab::BigFloat& a, const robinlab::BigFloat& b, double tol) {
    robinlab::BigFloat scale = b.abs();
    if (scale < robinlab::BigFloat::from_ui(1, 64)) scale = robinlab::BigFloat::from_ui(1, 64);
    return (a - b).abs() <= robinlab::BigFloat::from_double(tol, 64) * scale;
}

inline bool within_rel(const robinlab::BigFloat& a, const char* b, double tol) {
    return within_rel(a, bf(b), tol);
}

} // namespace testsupport
