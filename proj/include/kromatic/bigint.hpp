#ifndef KROMATIC_BIGINT_HPP
#define KROMATIC_BIGINT_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kromatic
{

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt & value);
std::string to_string(const Rational & value);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

inline bool is_integral(const Rational & value)
{
    return boost::multiprecision::denominator(value) == 1;
}

/// Numerator of an integral rational; throws std::domain_error otherwise.
BigInt to_integer(const Rational & value);

}

#endif
