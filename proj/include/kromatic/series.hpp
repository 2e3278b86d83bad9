#ifndef KROMATIC_SERIES_HPP
#define KROMATIC_SERIES_HPP

#include <vector>

#include <kromatic/bigint.hpp>
#include <kromatic/graph.hpp>

namespace kromatic
{

/**
 * Power series in t modulo t^(D+1) with exact rational coefficients. The
 * truncation degree D travels with every value; combining series of
 * different degrees throws std::invalid_argument.
 */
class TruncatedSeries
{
public:
    explicit TruncatedSeries(int degree);

    /// Coefficients beyond the list are zero; a list longer than degree+1 is rejected.
    TruncatedSeries(int degree, std::vector<Rational> coefficients);

    static auto one(int degree) -> TruncatedSeries;

    /// Drops the terms of `polynomial` above `degree`.
    static auto from_polynomial(const IntPolynomial & polynomial, int degree) -> TruncatedSeries;

    auto degree() const -> int { return static_cast<int>(_coefficients.size()) - 1; }
    auto operator[](int k) const -> const Rational & { return _coefficients.at(k); }
    void set(int k, Rational value) { _coefficients.at(k) = std::move(value); }
    auto coefficients() const -> const std::vector<Rational> & { return _coefficients; }

    auto is_integral() const -> bool;

    /// Throws std::domain_error when some coefficient is not an integer.
    auto integer_coefficients() const -> std::vector<BigInt>;

    friend auto operator+(const TruncatedSeries & a, const TruncatedSeries & b) -> TruncatedSeries;
    friend auto operator-(const TruncatedSeries & a, const TruncatedSeries & b) -> TruncatedSeries;
    friend auto operator*(const Rational & scale, const TruncatedSeries & f) -> TruncatedSeries;
    friend auto operator==(const TruncatedSeries &, const TruncatedSeries &) -> bool = default;

private:
    std::vector<Rational> _coefficients;
};

/// Cauchy product truncated at the shared degree.
auto series_mul(const TruncatedSeries & f, const TruncatedSeries & g) -> TruncatedSeries;

/// log f for a series with constant term 1; throws std::invalid_argument otherwise.
auto series_log(const TruncatedSeries & f) -> TruncatedSeries;

/// exp g for a series with constant term 0; throws std::invalid_argument otherwise.
auto series_exp(const TruncatedSeries & g) -> TruncatedSeries;

/// a(a-1)...(a-i+1)/i! for any integer a and i >= 0.
auto gen_binomial(const BigInt & a, int i) -> BigInt;

/**
 * Exponents a(1..D) of a factorization prod_k (1+t^k)^a(k). at(k) is
 * 1-based.
 */
class ExponentVector
{
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<BigInt> values) : _values(std::move(values)) { }

    auto degree() const -> int { return static_cast<int>(_values.size()); }
    auto at(int k) const -> const BigInt & { return _values.at(k - 1); }
    auto values() const -> const std::vector<BigInt> & { return _values; }

    friend auto operator==(const ExponentVector &, const ExponentVector &) -> bool = default;

private:
    std::vector<BigInt> _values;
};

/// (1+t^k)^a truncated at `degree`.
auto binomial_power(int k, const BigInt & a, int degree) -> TruncatedSeries;

/// prod_{k=1}^{degree} (1+t^k)^a(k); needs a.degree() >= degree.
auto product_of_binomial_powers(const ExponentVector & a, int degree) -> TruncatedSeries;

}

#endif
