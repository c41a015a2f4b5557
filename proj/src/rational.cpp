#include "prips/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace prips {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

// Integer's string constructor reads a leading 0 as an octal prefix.
Integer decimal_integer(std::string_view digits)
{
    const auto first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

Integer pow10(long exponent)
{
    Integer result = 1;
    for (long i = 0; i < exponent; ++i) {
        result *= 10;
    }
    return result;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Rational parse_decimal(std::string_view s, std::string_view original)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) {
            throw std::invalid_argument("malformed exponent in number '" + std::string(original) + "'");
        }
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) {
            exponent = -exponent;
        }
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw std::invalid_argument("malformed number '" + std::string(original) + "'");
    }

    const Integer numerator = decimal_integer(std::string(int_part) + std::string(frac_part));
    exponent -= static_cast<long>(frac_part.size());

    Rational value;
    if (exponent >= 0) {
        value = Rational(numerator * pow10(exponent));
    } else {
        value = Rational(numerator, pow10(-exponent));
    }
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    if (s.empty()) {
        throw std::invalid_argument("empty number");
    }
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = trim(s.substr(0, slash));
        std::string_view den = trim(s.substr(slash + 1));
        bool negative = false;
        if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
            negative = num.front() == '-';
            num.remove_prefix(1);
        }
        if (!all_digits(num) || !all_digits(den)) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        const Integer d = decimal_integer(den);
        if (d == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        Rational value(decimal_integer(num), d);
        return negative ? Rational(-value) : value;
    }
    return parse_decimal(s, text);
}

std::string to_string(const Rational& value)
{
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational rationalize(double value, std::int64_t resolution)
{
    if (!std::isfinite(value)) {
        throw std::invalid_argument("cannot rationalize a non-finite value");
    }
    if (resolution <= 0) {
        throw std::invalid_argument("resolution must be positive");
    }
    const double scaled = std::round(value * static_cast<double>(resolution));
    return Rational(Integer(static_cast<long long>(scaled)), Integer(resolution));
}

}  // namespace prips
