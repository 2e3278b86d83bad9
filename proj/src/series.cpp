#include <kromatic/series.hpp>

#include <stdexcept>
#include <string>

namespace kromatic
{

namespace
{
    void require_same_degree(const TruncatedSeries & a, const TruncatedSeries & b)
    {
        if (a.degree() != b.degree())
            throw std::invalid_argument("truncation degree mismatch: " + std::to_string(a.degree())
                    + " vs " + std::to_string(b.degree()));
    }
}

TruncatedSeries::TruncatedSeries(int degree)
{
    if (degree < 0)
        throw std::invalid_argument("negative truncation degree");
    _coefficients.resize(degree + 1);
}

TruncatedSeries::TruncatedSeries(int degree, std::vector<Rational> coefficients) : TruncatedSeries(degree)
{
    if (static_cast<int>(coefficients.size()) > degree + 1)
        throw std::invalid_argument("more coefficients than the truncation degree allows");
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        _coefficients[k] = std::move(coefficients[k]);
}

auto TruncatedSeries::one(int degree) -> TruncatedSeries
{
    TruncatedSeries result(degree);
    result._coefficients[0] = 1;
    return result;
}

auto TruncatedSeries::from_polynomial(const IntPolynomial & polynomial, int degree) -> TruncatedSeries
{
    TruncatedSeries result(degree);
    for (int k = 0; k <= degree && k < static_cast<int>(polynomial.coefficients().size()); ++k)
        result._coefficients[k] = Rational(polynomial.coefficients()[k]);
    return result;
}

auto TruncatedSeries::is_integral() const -> bool
{
    for (const auto & c : _coefficients)
        if (! kromatic::is_integral(c))
            return false;
    return true;
}

auto TruncatedSeries::integer_coefficients() const -> std::vector<BigInt>
{
    std::vector<BigInt> result;
    result.reserve(_coefficients.size());
    for (const auto & c : _coefficients)
        result.push_back(to_integer(c));
    return result;
}

auto operator+(const TruncatedSeries & a, const TruncatedSeries & b) -> TruncatedSeries
{
    require_same_degree(a, b);
    TruncatedSeries result = a;
    for (int k = 0; k <= a.degree(); ++k)
        result._coefficients[k] += b._coefficients[k];
    return result;
}

auto operator-(const TruncatedSeries & a, const TruncatedSeries & b) -> TruncatedSeries
{
    require_same_degree(a, b);
    TruncatedSeries result = a;
    for (int k = 0; k <= a.degree(); ++k)
        result._coefficients[k] -= b._coefficients[k];
    return result;
}

auto operator*(const Rational & scale, const TruncatedSeries & f) -> TruncatedSeries
{
    TruncatedSeries result = f;
    for (auto & c : result._coefficients)
        c *= scale;
    return result;
}

auto series_mul(const TruncatedSeries & f, const TruncatedSeries & g) -> TruncatedSeries
{
    require_same_degree(f, g);
    const int degree = f.degree();
    TruncatedSeries result(degree);
    for (int i = 0; i <= degree; ++i) {
        if (f[i] == 0)
            continue;
        for (int j = 0; i + j <= degree; ++j)
            if (g[j] != 0)
                result.set(i + j, result[i + j] + f[i] * g[j]);
    }
    return result;
}

auto series_log(const TruncatedSeries & f) -> TruncatedSeries
{
    if (f[0] != 1)
        throw std::invalid_argument("series_log needs constant term 1, got " + to_string(f[0]));

    const int degree = f.degree();
    TruncatedSeries shifted = f - TruncatedSeries::one(degree);
    TruncatedSeries power = shifted;
    TruncatedSeries result(degree);

    // (f-1)^i has valuation >= i, so terms with i > degree vanish
    for (int i = 1; i <= degree; ++i) {
        Rational scale(i % 2 == 1 ? 1 : -1, i);
        result = result + scale * power;
        power = series_mul(power, shifted);
    }
    return result;
}

auto series_exp(const TruncatedSeries & g) -> TruncatedSeries
{
    if (g[0] != 0)
        throw std::invalid_argument("series_exp needs constant term 0, got " + to_string(g[0]));

    // n e_n = sum_{k=1..n} k g_k e_{n-k}, from e' = g' e
    const int degree = g.degree();
    TruncatedSeries result = TruncatedSeries::one(degree);
    for (int n = 1; n <= degree; ++n) {
        Rational sum = 0;
        for (int k = 1; k <= n; ++k)
            sum += k * g[k] * result[n - k];
        result.set(n, sum / n);
    }
    return result;
}

auto gen_binomial(const BigInt & a, int i) -> BigInt
{
    if (i < 0)
        throw std::invalid_argument("gen_binomial needs i >= 0");
    // each prefix a(a-1)...(a-j)/(j+1)! is an integer
    BigInt result = 1;
    for (int j = 0; j < i; ++j)
        result = result * (a - j) / (j + 1);
    return result;
}

auto binomial_power(int k, const BigInt & a, int degree) -> TruncatedSeries
{
    if (k < 1)
        throw std::invalid_argument("binomial_power needs k >= 1");
    TruncatedSeries result(degree);
    for (int i = 0; k * i <= degree; ++i)
        result.set(k * i, Rational(gen_binomial(a, i)));
    return result;
}

auto product_of_binomial_powers(const ExponentVector & a, int degree) -> TruncatedSeries
{
    if (a.degree() < degree)
        throw std::invalid_argument("exponent vector of degree " + std::to_string(a.degree())
                + " cannot determine a product to degree " + std::to_string(degree));
    TruncatedSeries result = TruncatedSeries::one(degree);
    for (int k = 1; k <= degree; ++k)
        if (a.at(k) != 0)
            result = series_mul(result, binomial_power(k, a.at(k), degree));
    return result;
}

}
