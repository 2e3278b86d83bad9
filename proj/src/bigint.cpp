#include <kromatic/bigint.hpp>

#include <cctype>
#include <stdexcept>

namespace kromatic
{

std::string to_string(const BigInt & value)
{
    return value.str();
}

std::string to_string(const Rational & value)
{
    if (is_integral(value))
        return boost::multiprecision::numerator(value).str();
    return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

BigInt parse_bigint(std::string_view text)
{
    std::size_t start = (! text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (! std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");

    BigInt result{std::string(text.substr(start))};
    return text[0] == '-' ? BigInt(-result) : result;
}

BigInt to_integer(const Rational & value)
{
    if (! is_integral(value))
        throw std::domain_error("non-integral rational " + to_string(value));
    return boost::multiprecision::numerator(value);
}

}
