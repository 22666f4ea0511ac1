#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "relkin/errors.hpp"

namespace relkin::oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational; boost keeps it in lowest terms with a
/// positive denominator, which is exactly the invariant we need.
using BigRational = boost::multiprecision::cpp_rational;

/// Exact complex number over the rationals. Field arithmetic throughout;
/// division by zero throws.
struct ComplexRational {
    BigRational re;
    BigRational im;

    ComplexRational() = default;
    ComplexRational(BigRational r, BigRational i = 0)
        : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    /// |z|^2 = re^2 + im^2 (always rational, unlike |z|).
    BigRational abs2() const { return re * re + im * im; }

    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) {
        return {-a.re, -a.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        const BigRational d = b.abs2();
        if (d == 0) throw DegenerateDenominator("complex division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
};

inline ComplexRational imaginary(const BigRational& v) { return {0, v}; }

/// Exact square root of a nonnegative rational, or nullopt when the root is
/// irrational.
std::optional<BigRational> try_exact_sqrt(const BigRational& v);

/// As try_exact_sqrt, but throws IrrationalRoot instead of rounding.
BigRational exact_sqrt(const BigRational& v);

/// Parses "3/5", "-7", "0.6", "1.25e2" forms exactly (finite decimals are
/// exact rationals). Throws InvalidParameters on anything else.
BigRational parse_rational(std::string_view text);

/// Always "num/den", including "0/1", matching the exact-mode report format.
std::string to_fraction_string(const BigRational& v);

/// "a/b+c/d i" (compact, no spaces); real values print as "a/b".
std::string to_fraction_string(const ComplexRational& v);

double to_double(const BigRational& v);

}  // namespace relkin::oracle
