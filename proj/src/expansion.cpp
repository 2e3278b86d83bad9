#include <kromatic/expansion.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "parallel.hpp"

namespace kromatic
{

auto basis_name(Basis basis) -> std::string_view
{
    switch (basis) {
        case Basis::pbar: return "pbar";
        case Basis::mtilde: return "mtilde";
        case Basis::classical_p: return "p";
    }
    return "?";
}

auto basis_from_name(std::string_view name) -> Basis
{
    for (Basis b : {Basis::pbar, Basis::mtilde, Basis::classical_p})
        if (basis_name(b) == name)
            return b;
    throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

// SymExpansion

SymExpansion::SymExpansion(Basis basis, int degree) : _basis(basis), _degree(degree)
{
    if (degree < 0)
        throw std::invalid_argument("negative truncation degree");
}

auto SymExpansion::coefficient(const Partition & partition) const -> BigInt
{
    auto found = _terms.find(partition);
    return found == _terms.end() ? BigInt(0) : found->second;
}

void SymExpansion::add(const Partition & partition, const BigInt & value)
{
    if (partition.size() > _degree)
        throw std::out_of_range("partition " + partition.to_string() + " exceeds truncation degree "
                + std::to_string(_degree));
    if (value == 0)
        return;
    auto [where, inserted] = _terms.try_emplace(partition, value);
    if (! inserted) {
        where->second += value;
        if (where->second == 0)
            _terms.erase(where);
    }
}

void SymExpansion::set(const Partition & partition, const BigInt & value)
{
    if (partition.size() > _degree)
        throw std::out_of_range("partition " + partition.to_string() + " exceeds truncation degree "
                + std::to_string(_degree));
    if (value == 0)
        _terms.erase(partition);
    else
        _terms[partition] = value;
}

auto SymExpansion::slice(int size) const -> SymExpansion
{
    SymExpansion result(_basis, _degree);
    for (const auto & [partition, c] : _terms)
        if (partition.size() == size)
            result._terms.emplace(partition, c);
    return result;
}

auto pbar_multiply(const SymExpansion & a, const SymExpansion & b, int degree) -> SymExpansion
{
    if (a.basis() != Basis::pbar || b.basis() != Basis::pbar)
        throw std::invalid_argument("pbar_multiply needs p̄ expansions");
    SymExpansion result(Basis::pbar, degree);
    for (const auto & [lambda, x] : a.terms()) {
        if (lambda.size() > degree)
            continue;
        for (const auto & [mu, y] : b.terms()) {
            if (lambda.size() + mu.size() > degree)
                continue;
            std::vector<int> parts = lambda.parts();
            parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
            result.add(Partition(std::move(parts)), x * y);
        }
    }
    return result;
}

// Exponents

namespace
{
    void require_unit_constant(const IntPolynomial & polynomial)
    {
        if (polynomial.coefficient(0) != 1)
            throw std::invalid_argument("polynomial " + polynomial.to_string() + " does not have constant term 1");
    }

    // partitions_of(k) is reused across every solve
    auto cached_partitions(int k) -> const std::vector<Partition> &
    {
        static std::mutex mutex;
        static std::map<int, std::vector<Partition>> cache;
        std::lock_guard lock(mutex);
        auto found = cache.find(k);
        if (found == cache.end())
            found = cache.emplace(k, partitions_of(k)).first;
        return found->second;
    }

    auto binomial_product(const ExponentVector & a, const Partition & lambda) -> BigInt
    {
        BigInt product = 1;
        for (auto [part, count] : multiplicity_view(lambda)) {
            product *= gen_binomial(a.at(part), count);
            if (product == 0)
                break;
        }
        return product;
    }
}

auto rational_exponents_by_log(const IntPolynomial & polynomial, int degree) -> std::vector<Rational>
{
    require_unit_constant(polynomial);
    auto log = series_log(TruncatedSeries::from_polynomial(polynomial, degree));

    std::vector<Rational> a(degree + 1);
    for (int k = 1; k <= degree; ++k) {
        Rational value = log[k];
        for (int d = 1; d < k; ++d)
            if (k % d == 0)
                value += Rational(((k / d) % 2 == 0 ? 1 : -1) * d) * a[d] / k;
        a[k] = value;
    }
    a.erase(a.begin());
    return a;
}

auto exponents_by_log(const IntPolynomial & polynomial, int degree) -> ExponentVector
{
    auto rational = rational_exponents_by_log(polynomial, degree);
    std::vector<BigInt> values;
    values.reserve(rational.size());
    for (std::size_t k = 0; k < rational.size(); ++k) {
        if (! is_integral(rational[k]))
            throw std::logic_error("non-integral exponent a(" + std::to_string(k + 1) + ") = " + to_string(rational[k]));
        values.push_back(to_integer(rational[k]));
    }
    return ExponentVector(std::move(values));
}

auto exponents_by_integer_recurrence(const IntPolynomial & polynomial, int degree) -> ExponentVector
{
    require_unit_constant(polynomial);

    std::vector<BigInt> values;
    values.reserve(degree);
    for (int k = 1; k <= degree; ++k) {
        // a(k) itself is still unset; the partition (k) is skipped below
        values.emplace_back(0);
        ExponentVector known(values);

        BigInt value = polynomial.coefficient(k);
        for (const auto & lambda : cached_partitions(k))
            if (lambda.length() > 1)
                value -= binomial_product(known, lambda);
        values.back() = value;
    }
    return ExponentVector(std::move(values));
}

auto exponents(const IntPolynomial & polynomial, int degree, ExponentSolver solver) -> ExponentVector
{
    return solver == ExponentSolver::log_recurrence
        ? exponents_by_log(polynomial, degree)
        : exponents_by_integer_recurrence(polynomial, degree);
}

// Subgraph table

SubgraphExponentTable::SubgraphExponentTable(int vertex_count, int degree, std::vector<Class> classes,
        std::vector<std::uint32_t> class_of) :
    _vertex_count(vertex_count),
    _degree(degree),
    _classes(std::move(classes)),
    _class_of(std::move(class_of))
{
}

auto SubgraphExponentTable::at(VertexSubset subset) const -> const ExponentVector &
{
    return _classes.at(_class_of.at(subset.bits())).exponents;
}

auto SubgraphExponentTable::polynomial(VertexSubset subset) const -> const IntPolynomial &
{
    return _classes.at(_class_of.at(subset.bits())).polynomial;
}

namespace
{
    void require_table_size(const WeightedGraph & graph)
    {
        if (graph.vertex_count() > max_table_vertices)
            throw std::length_error("graph has " + std::to_string(graph.vertex_count())
                    + " vertices; subset enumeration supports at most " + std::to_string(max_table_vertices));
    }
}

auto subgraph_exponent_table(const WeightedGraph & graph, int degree, const ExpansionOptions & options)
    -> SubgraphExponentTable
{
    require_table_size(graph);
    if (degree < 0)
        throw std::invalid_argument("negative truncation degree");

    const int n = graph.vertex_count();
    const std::size_t subsets = std::size_t{1} << n;

    std::vector<IntPolynomial> polynomials(subsets);
    detail::parallel_for(subsets, options.parallel, [&] (std::size_t mask) {
        polynomials[mask] = independence_polynomial(graph, VertexSubset(mask));
    });

    // classes are numbered in order of their first (smallest) member mask
    std::map<std::vector<BigInt>, std::uint32_t> memo;
    std::vector<SubgraphExponentTable::Class> classes;
    std::vector<std::uint32_t> class_of(subsets);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        auto [where, inserted] = memo.try_emplace(polynomials[mask].coefficients(), static_cast<std::uint32_t>(classes.size()));
        if (inserted)
            classes.push_back({polynomials[mask], {}, 0, 0});
        auto & cls = classes[where->second];
        int outside = n - VertexSubset(mask).size();
        cls.signed_count += outside % 2 == 0 ? 1 : -1;
        ++cls.members;
        class_of[mask] = where->second;
    }

    detail::parallel_for(classes.size(), options.parallel, [&] (std::size_t i) {
        classes[i].exponents = exponents(classes[i].polynomial, degree, options.solver);
    });

    return SubgraphExponentTable(n, degree, std::move(classes), std::move(class_of));
}

// Expansions

auto kromatic_pbar_expansion(const WeightedGraph & graph, int degree, const ExpansionOptions & options)
    -> SymExpansion
{
    auto table = subgraph_exponent_table(graph, degree, options);
    auto partitions = partitions_up_to(degree);

    std::vector<BigInt> coefficients(partitions.size());
    detail::parallel_for(partitions.size(), options.parallel, [&] (std::size_t i) {
        BigInt sum = 0;
        for (const auto & cls : table.classes())
            if (cls.signed_count != 0)
                sum += cls.signed_count * binomial_product(cls.exponents, partitions[i]);
        coefficients[i] = std::move(sum);
    });

    SymExpansion result(Basis::pbar, degree);
    for (std::size_t i = 0; i < partitions.size(); ++i)
        result.set(partitions[i], coefficients[i]);
    return result;
}

namespace
{
    auto y_from_exponents(const ExponentVector & a, int degree) -> SymExpansion
    {
        SymExpansion product(Basis::pbar, degree);
        product.set(Partition(), 1);
        for (int k = 1; k <= degree; ++k) {
            if (a.at(k) == 0)
                continue;
            SymExpansion factor(Basis::pbar, degree);
            for (int i = 0; k * i <= degree; ++i)
                factor.set(Partition(std::vector<int>(i, k)), gen_binomial(a.at(k), i));
            product = pbar_multiply(product, factor, degree);
        }
        return product;
    }
}

auto kromatic_pbar_expansion_by_products(const WeightedGraph & graph, int degree, const ExpansionOptions & options)
    -> SymExpansion
{
    require_table_size(graph);
    const int n = graph.vertex_count();
    const std::size_t subsets = std::size_t{1} << n;

    std::map<std::vector<BigInt>, SymExpansion> y_by_polynomial;
    SymExpansion result(Basis::pbar, degree);
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        auto polynomial = independence_polynomial(graph, VertexSubset(mask));
        auto found = y_by_polynomial.find(polynomial.coefficients());
        if (found == y_by_polynomial.end())
            found = y_by_polynomial.emplace(polynomial.coefficients(),
                    y_from_exponents(exponents(polynomial, degree, options.solver), degree)).first;

        BigInt sign = (n - VertexSubset(mask).size()) % 2 == 0 ? 1 : -1;
        for (const auto & [lambda, c] : found->second.terms())
            result.add(lambda, sign * c);
    }
    return result;
}

auto y_function_expansion(const WeightedGraph & graph, int degree, ExponentSolver solver) -> SymExpansion
{
    return y_from_exponents(exponents(independence_polynomial(graph), degree, solver), degree);
}

auto pbar_coefficient(const WeightedGraph & graph, const Partition & partition) -> BigInt
{
    auto table = subgraph_exponent_table(graph, partition.largest());
    BigInt sum = 0;
    for (const auto & cls : table.classes())
        if (cls.signed_count != 0)
            sum += cls.signed_count * binomial_product(cls.exponents, partition);
    return sum;
}

auto k21_coefficient_rule(const Partition & partition) -> BigInt
{
    if (partition.size() < 3)
        return 0;

    auto is_power_of_two = [] (int x) { return x > 0 && (x & (x - 1)) == 0; };
    int multiples_of_three = 0;
    for (auto [part, count] : multiplicity_view(partition)) {
        if (is_power_of_two(part)) {
            if (count > 1)
                return 0;
        }
        else if (part % 3 == 0 && is_power_of_two(part / 3))
            multiples_of_three += count;
        else
            return 0;
    }
    return multiples_of_three % 2 == 0 ? 1 : -1;
}

auto classical_p_expansion(const WeightedGraph & graph) -> SymExpansion
{
    auto edges = graph.edges();
    if (edges.size() > 30)
        throw std::length_error("classical_p_expansion enumerates 2^|E| edge subsets; too many edges");

    const auto weight = total_weight(graph);
    SymExpansion result(Basis::classical_p, static_cast<int>(weight));
    const std::size_t subsets = std::size_t{1} << edges.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<std::pair<int, int>> chosen;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((mask >> e) & 1u)
                chosen.push_back(edges[e]);
        WeightedGraph spanning(graph.weights(), chosen);

        std::vector<int> parts;
        for (auto component : connected_components(spanning))
            parts.push_back(static_cast<int>(spanning.weight_of(component)));
        result.add(Partition(std::move(parts)), chosen.size() % 2 == 0 ? 1 : -1);
    }
    return result;
}

auto leading_terms_check(const WeightedGraph & graph) -> LeadingTermsReport
{
    const int weight = static_cast<int>(total_weight(graph));
    auto expansion = kromatic_pbar_expansion(graph, weight);
    auto classical = classical_p_expansion(graph);

    LeadingTermsReport report;
    for (const auto & lambda : partitions_of(weight)) {
        auto ours = expansion.coefficient(lambda);
        auto theirs = classical.coefficient(lambda);
        if (ours != theirs) {
            report.leading_slice_matches = false;
            report.mismatches.push_back("[" + lambda.to_string() + "] pbar " + to_string(ours) + " vs p " + to_string(theirs));
        }
    }
    for (const auto & [lambda, c] : expansion.terms())
        if (lambda.size() < weight) {
            report.lower_slices_vanish = false;
            report.mismatches.push_back("[" + lambda.to_string() + "] pbar " + to_string(c) + " below leading degree");
        }
    return report;
}

auto sign_report(const WeightedGraph & graph, int degree) -> SignReport
{
    if (! graph.is_unweighted())
        throw std::invalid_argument("sign_report applies to unweighted graphs only");

    auto table = subgraph_exponent_table(graph, degree);
    auto expansion = kromatic_pbar_expansion(graph, degree);

    SignReport report;
    for (const auto & lambda : partitions_up_to(degree)) {
        auto c = expansion.coefficient(lambda);
        ++report.coefficients_checked;
        if (c == 0) {
            report.any_zero = true;
            if (lambda.size() >= graph.vertex_count())
                report.zeros_at_or_above_vertex_count.push_back(lambda);
            continue;
        }
        bool expect_positive = (lambda.size() - lambda.length()) % 2 == 0;
        if ((c > 0) != expect_positive)
            report.coefficient_violations.push_back("[" + lambda.to_string() + "] = " + to_string(c));
    }

    for (const auto & cls : table.classes())
        for (int k = 1; k <= degree; ++k) {
            report.exponents_checked += cls.members;
            const auto & a = cls.exponents.at(k);
            if (a != 0 && (a > 0) != (k % 2 == 1))
                report.exponent_violations.push_back("a(" + std::to_string(k) + ") = " + to_string(a)
                        + " for I = " + cls.polynomial.to_string());
        }
    return report;
}

}
