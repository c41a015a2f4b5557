#ifndef PRIPS_RATIONAL_HPP
#define PRIPS_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace prips {

// Exact rational scalar. Expression templates are off so that Eigen sees a
// plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

using Point2 = Vector2<Rational>;

/// Parses "p/q", "-3", "0.125" or "1.5e-3" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Nearest multiple of 1/resolution (ties away from zero).
Rational rationalize(double value, std::int64_t resolution);

inline Point2 make_point(const Rational& x, const Rational& y) { return Point2(x, y); }

inline Point2 make_point(std::string_view x, std::string_view y)
{
    return Point2(parse_rational(x), parse_rational(y));
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace prips

#endif  // PRIPS_RATIONAL_HPP
