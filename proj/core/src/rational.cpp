#include "relkin/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace relkin::oracle {

std::optional<BigRational> try_exact_sqrt(const BigRational& v) {
    if (v < 0) return std::nullopt;
    const BigInt num = numerator(v);
    const BigInt den = denominator(v);
    const BigInt rn = boost::multiprecision::sqrt(num);
    if (rn * rn != num) return std::nullopt;
    const BigInt rd = boost::multiprecision::sqrt(den);
    if (rd * rd != den) return std::nullopt;
    return BigRational(rn, rd);
}

BigRational exact_sqrt(const BigRational& v) {
    auto root = try_exact_sqrt(v);
    if (!root)
        throw IrrationalRoot("sqrt(" + to_fraction_string(v) +
                             ") is not rational");
    return *root;
}

BigRational parse_rational(std::string_view text) {
    const std::string s(text);
    const auto bad = [&] {
        return InvalidParameters("cannot parse '" + s + "' as a rational");
    };
    if (s.empty()) throw bad();

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        try {
            const BigInt n(num);
            const BigInt d(den);
            if (d == 0) throw bad();
            return BigRational(n, d);
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }

    // Decimal form: sign, digits, optional fraction, optional exponent.
    // Finite decimals are exact, so this never rounds.
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = (s[i++] == '-');
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw bad();
            seen_dot = true;
        } else {
            digits.push_back(s[i]);
            if (seen_dot) ++frac_digits;
            seen_digit = true;
        }
    }
    if (!seen_digit) throw bad();
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        const char* start = s.c_str() + i + 1;
        char* end = nullptr;
        exponent = std::strtol(start, &end, 10);
        if (end == start) throw bad();
        i = static_cast<std::size_t>(end - s.c_str());
    }
    if (i != s.size()) throw bad();

    // cpp_int's string constructor treats a leading zero as a base prefix.
    const std::size_t first = digits.find_first_not_of('0');
    digits = (first == std::string::npos) ? "0" : digits.substr(first);

    BigInt mantissa(digits);
    if (negative) mantissa = -mantissa;
    BigRational value(mantissa, 1);
    const long ten_power = exponent - frac_digits;
    BigInt scale(1);
    for (long k = 0; k < std::labs(ten_power); ++k) scale *= 10;
    if (ten_power >= 0)
        value *= BigRational(scale, 1);
    else
        value /= BigRational(scale, 1);
    return value;
}

std::string to_fraction_string(const BigRational& v) {
    return numerator(v).str() + "/" + denominator(v).str();
}

std::string to_fraction_string(const ComplexRational& v) {
    if (v.is_real()) return to_fraction_string(v.re);
    const std::string im = to_fraction_string(v.im);
    const std::string sep = (v.im < 0) ? "" : "+";
    return to_fraction_string(v.re) + sep + im + "i";
}

double to_double(const BigRational& v) { return v.convert_to<double>(); }

}  // namespace relkin::oracle
