#include <kromatic/oracle.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kromatic
{

// Stable set covers

auto StableSetCover::shape(const WeightedGraph & graph) const -> Partition
{
    std::vector<int> parts;
    for (auto member : members)
        parts.push_back(static_cast<int>(graph.weight_of(member)));
    return Partition(std::move(parts));
}

namespace
{
    struct CoverSearch
    {
        const WeightedGraph & graph;
        std::int64_t bound;
        const std::function<void (const StableSetCover &)> & visit;
        std::vector<VertexSubset> stable_sets;
        std::vector<std::int64_t> set_weights;
        StableSetCover current;

        void run(std::size_t next, std::int64_t weight, VertexSubset covered)
        {
            if (covered == graph.vertices())
                visit(current);

            for (std::size_t j = next; j < stable_sets.size(); ++j) {
                std::int64_t with = weight + set_weights[j];
                if (with > bound)
                    continue;
                VertexSubset now = covered | stable_sets[j];
                // every uncovered vertex still costs at least its own weight
                if (with + graph.weight_of(graph.vertices() - now) > bound)
                    continue;
                current.members.push_back(stable_sets[j]);
                run(j + 1, with, now);
                current.members.pop_back();
            }
        }
    };
}

void for_each_stable_set_cover(const WeightedGraph & graph, std::int64_t max_total_weight,
        const std::function<void (const StableSetCover &)> & visit)
{
    CoverSearch search{graph, max_total_weight, visit, {}, {}, {}};
    for_each_independent_set(graph, [&] (VertexSubset s) {
        if (! s.empty())
            search.stable_sets.push_back(s);
    });
    std::sort(search.stable_sets.begin(), search.stable_sets.end());
    for (auto s : search.stable_sets)
        search.set_weights.push_back(graph.weight_of(s));

    if (total_weight(graph) <= max_total_weight)
        search.run(0, 0, VertexSubset());
}

auto stable_set_covers(const WeightedGraph & graph, std::int64_t max_total_weight) -> std::vector<StableSetCover>
{
    std::vector<StableSetCover> result;
    for_each_stable_set_cover(graph, max_total_weight, [&] (const StableSetCover & c) { result.push_back(c); });
    return result;
}

auto mtilde_expansion(const WeightedGraph & graph, int degree) -> SymExpansion
{
    SymExpansion result(Basis::mtilde, degree);
    std::map<Partition, std::uint64_t> counts;
    for_each_stable_set_cover(graph, degree, [&] (const StableSetCover & c) { ++counts[c.shape(graph)]; });
    for (const auto & [shape, count] : counts)
        result.add(shape, BigInt(count));
    return result;
}

auto pbar_in_mtilde(const Partition & partition, int degree) -> SymExpansion
{
    if (partition.size() > degree)
        throw std::out_of_range("partition " + partition.to_string() + " exceeds degree " + std::to_string(degree));
    return mtilde_expansion(WeightedGraph(partition.parts(), {}), degree);
}

// Transition matrix

PbarMtildeTransition::PbarMtildeTransition(int degree) :
    _degree(degree),
    _order(partitions_up_to(degree)),
    _matrix(_order.size(), std::vector<BigInt>(_order.size()))
{
    for (std::size_t row = 0; row < _order.size(); ++row) {
        auto expansion = pbar_in_mtilde(_order[row], degree);
        for (const auto & [mu, c] : expansion.terms())
            _matrix[row][index_of(mu)] = c;
    }

    if (! is_unit_upper_triangular())
        throw std::logic_error("p̄ -> m̃ transition is not unit upper triangular under partition_compare");
}

auto PbarMtildeTransition::index_of(const Partition & partition) const -> std::size_t
{
    auto found = std::lower_bound(_order.begin(), _order.end(), partition);
    if (found == _order.end() || *found != partition)
        throw std::out_of_range("partition " + partition.to_string() + " outside the transition basis");
    return static_cast<std::size_t>(found - _order.begin());
}

auto PbarMtildeTransition::is_unit_upper_triangular() const -> bool
{
    for (std::size_t row = 0; row < _order.size(); ++row) {
        if (_matrix[row][row] != 1)
            return false;
        for (std::size_t column = 0; column < row; ++column)
            if (_matrix[row][column] != 0)
                return false;
    }
    return true;
}

auto PbarMtildeTransition::inverse() const -> std::vector<std::vector<Rational>>
{
    const std::size_t size = _order.size();
    std::vector<std::vector<Rational>> inverse(size, std::vector<Rational>(size));
    // solve M X = I column by column, bottom row first
    for (std::size_t column = 0; column < size; ++column)
        for (std::size_t row = size; row-- > 0; ) {
            Rational value = row == column ? 1 : 0;
            for (std::size_t k = row + 1; k < size; ++k)
                if (_matrix[row][k] != 0)
                    value -= Rational(_matrix[row][k]) * inverse[k][column];
            inverse[row][column] = value / Rational(_matrix[row][row]);
        }
    return inverse;
}

auto PbarMtildeTransition::to_pbar(const SymExpansion & mtilde) const -> SymExpansion
{
    if (mtilde.basis() != Basis::mtilde)
        throw std::invalid_argument("to_pbar expects an m̃ expansion");

    // c_μ = sum_{λ <= μ} b_λ M[λ][μ]; solve for b in increasing order
    std::vector<BigInt> b(_order.size());
    for (std::size_t column = 0; column < _order.size(); ++column) {
        BigInt value = mtilde.coefficient(_order[column]);
        for (std::size_t row = 0; row < column; ++row)
            if (b[row] != 0 && _matrix[row][column] != 0)
                value -= b[row] * _matrix[row][column];
        b[column] = value;
    }

    SymExpansion result(Basis::pbar, _degree);
    for (std::size_t i = 0; i < _order.size(); ++i)
        result.set(_order[i], b[i]);
    return result;
}

auto PbarMtildeTransition::to_mtilde(const SymExpansion & pbar) const -> SymExpansion
{
    if (pbar.basis() != Basis::pbar)
        throw std::invalid_argument("to_mtilde expects a p̄ expansion");
    SymExpansion result(Basis::mtilde, _degree);
    for (const auto & [lambda, b] : pbar.terms()) {
        if (lambda.size() > _degree)
            continue;
        std::size_t row = index_of(lambda);
        for (std::size_t column = row; column < _order.size(); ++column)
            if (_matrix[row][column] != 0)
                result.add(_order[column], b * _matrix[row][column]);
    }
    return result;
}

auto mtilde_to_pbar(const SymExpansion & expansion, int degree) -> SymExpansion
{
    return PbarMtildeTransition(degree).to_pbar(expansion);
}

// Monomial tables

auto canonical_exponents(MonomialTable::Exponents exponents) -> MonomialTable::Exponents
{
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    while (! exponents.empty() && exponents.back() == 0)
        exponents.pop_back();
    return exponents;
}

MonomialTable::MonomialTable(int variables, int degree) : _variables(variables), _degree(degree)
{
    if (variables < 1)
        throw std::invalid_argument("a monomial table needs at least one variable");
}

namespace
{
    // distinct rearrangements of `exponents` padded to `variables` entries
    auto orbit_size(const MonomialTable::Exponents & exponents, int variables) -> BigInt
    {
        std::map<int, int> multiplicity;
        for (int e : exponents)
            ++multiplicity[e];
        multiplicity[0] += variables - static_cast<int>(exponents.size());

        BigInt result = 1;
        for (int i = 2; i <= variables; ++i)
            result *= i;
        for (auto [e, m] : multiplicity)
            for (int i = 2; i <= m; ++i)
                result /= i;
        return result;
    }

    auto total_degree(const MonomialTable::Exponents & exponents) -> int
    {
        return std::accumulate(exponents.begin(), exponents.end(), 0);
    }
}

auto MonomialTable::from_polynomial(int variables, int degree, const Raw & polynomial) -> MonomialTable
{
    MonomialTable table(variables, degree);
    std::map<Exponents, BigInt> seen;
    for (const auto & [exponents, c] : polynomial) {
        if (static_cast<int>(exponents.size()) != variables)
            throw std::invalid_argument("exponent vector length does not match the variable count");
        if (c == 0 || total_degree(exponents) > degree)
            continue;
        auto key = canonical_exponents(exponents);
        auto [where, inserted] = table._terms.try_emplace(key, c);
        if (! inserted && where->second != c)
            throw std::logic_error("polynomial is not symmetric");
        ++seen[key];
    }
    for (const auto & [key, count] : seen)
        if (count != orbit_size(key, variables))
            throw std::logic_error("polynomial is not symmetric: incomplete orbit");
    return table;
}

auto MonomialTable::coefficient(Exponents exponents) const -> BigInt
{
    auto found = _terms.find(canonical_exponents(std::move(exponents)));
    return found == _terms.end() ? BigInt(0) : found->second;
}

namespace
{
    void require_colors(int colors)
    {
        if (colors < 1 || colors > 20)
            throw std::invalid_argument("color count must be in 1..20");
    }

    struct ColoringSearch
    {
        const WeightedGraph & graph;
        int colors;
        int degree;
        std::vector<std::uint32_t> assignment;
        std::vector<std::int64_t> suffix_weight;
        std::map<MonomialTable::Exponents, std::uint64_t> counts;

        void run(int v, std::int64_t used)
        {
            if (v == graph.vertex_count()) {
                MonomialTable::Exponents exponents(colors, 0);
                for (int u = 0; u < graph.vertex_count(); ++u)
                    for (int i = 0; i < colors; ++i)
                        if ((assignment[u] >> i) & 1u)
                            exponents[i] += graph.weight(u);
                ++counts[exponents];
                return;
            }

            std::uint32_t blocked = 0;
            for (int u : graph.neighbors(v).vertices())
                if (u < v)
                    blocked |= assignment[u];

            for (std::uint32_t mask = 1; mask < (1u << colors); ++mask) {
                if (mask & blocked)
                    continue;
                std::int64_t cost = used + std::int64_t{graph.weight(v)} * std::popcount(mask);
                if (cost + suffix_weight[v + 1] > degree)
                    continue;
                assignment[v] = mask;
                run(v + 1, cost);
            }
        }
    };

    using RawPolynomial = MonomialTable::Raw;

    auto multiply(const RawPolynomial & a, const RawPolynomial & b, int degree) -> RawPolynomial
    {
        RawPolynomial result;
        for (const auto & [x, c] : a)
            for (const auto & [y, d] : b) {
                MonomialTable::Exponents sum(x.size());
                for (std::size_t i = 0; i < x.size(); ++i)
                    sum[i] = x[i] + y[i];
                if (total_degree(sum) > degree)
                    continue;
                result[sum] += c * d;
            }
        return result;
    }

    // p̄_k = sum over nonempty color sets S of prod_{i in S} x_i^k
    auto pbar_single(int k, int colors, int degree) -> RawPolynomial
    {
        RawPolynomial result;
        for (std::uint32_t mask = 1; mask < (1u << colors); ++mask) {
            if (k * std::popcount(mask) > degree)
                continue;
            MonomialTable::Exponents exponents(colors, 0);
            for (int i = 0; i < colors; ++i)
                if ((mask >> i) & 1u)
                    exponents[i] = k;
            result[exponents] += 1;
        }
        return result;
    }
}

auto enumerate_set_colorings(const WeightedGraph & graph, int colors, int degree) -> MonomialTable
{
    require_colors(colors);
    const int n = graph.vertex_count();
    ColoringSearch search{graph, colors, degree, std::vector<std::uint32_t>(n), std::vector<std::int64_t>(n + 1), {}};
    for (int v = n - 1; v >= 0; --v)
        search.suffix_weight[v] = search.suffix_weight[v + 1] + graph.weight(v);
    if (search.suffix_weight[0] <= degree)
        search.run(0, 0);

    RawPolynomial raw;
    for (const auto & [exponents, count] : search.counts)
        raw.emplace(exponents, BigInt(count));
    return MonomialTable::from_polynomial(colors, degree, raw);
}

auto specialize_pbar(const SymExpansion & expansion, int colors, int degree) -> MonomialTable
{
    require_colors(colors);
    if (expansion.basis() != Basis::pbar)
        throw std::invalid_argument("specialize_pbar expects a p̄ expansion");
    if (expansion.degree() < degree)
        throw std::invalid_argument("expansion is truncated below the requested degree");

    std::map<int, RawPolynomial> singles;
    RawPolynomial total;
    for (const auto & [lambda, c] : expansion.terms()) {
        if (lambda.size() > degree)
            continue;
        RawPolynomial product{{MonomialTable::Exponents(colors, 0), BigInt(1)}};
        for (int part : lambda.parts()) {
            auto found = singles.find(part);
            if (found == singles.end())
                found = singles.emplace(part, pbar_single(part, colors, degree)).first;
            product = multiply(product, found->second, degree);
        }
        for (const auto & [exponents, d] : product)
            total[exponents] += c * d;
    }
    return MonomialTable::from_polynomial(colors, degree, total);
}

// Verification

auto status_name(CheckResult::Status status) -> std::string_view
{
    switch (status) {
        case CheckResult::Status::pass: return "pass";
        case CheckResult::Status::fail: return "fail";
        case CheckResult::Status::skipped: return "skipped";
    }
    return "?";
}

auto VerificationReport::passed() const -> bool
{
    return std::none_of(checks.begin(), checks.end(),
            [] (const CheckResult & c) { return c.status == CheckResult::Status::fail; });
}

namespace
{
    void compare_expansions(CheckResult & result, const SymExpansion & expected, const SymExpansion & actual,
            const std::string & expected_name, const std::string & actual_name)
    {
        std::map<Partition, std::pair<BigInt, BigInt>> joined;
        for (const auto & [lambda, c] : expected.terms())
            joined[lambda].first = c;
        for (const auto & [lambda, c] : actual.terms())
            joined[lambda].second = c;
        for (const auto & [lambda, values] : joined)
            if (values.first != values.second) {
                result.status = CheckResult::Status::fail;
                result.details.push_back("[" + lambda.to_string() + "] " + expected_name + " " + to_string(values.first)
                        + " vs " + actual_name + " " + to_string(values.second));
            }
    }

    auto format_exponents(const MonomialTable::Exponents & exponents) -> std::string
    {
        std::string out = "x^(";
        for (std::size_t i = 0; i < exponents.size(); ++i)
            out += (i ? "," : "") + std::to_string(exponents[i]);
        return out + ")";
    }

    template <typename Body>
    auto run_check(const std::string & name, Body && body) -> CheckResult
    {
        CheckResult result;
        result.check = name;
        try {
            body(result);
        }
        catch (const std::exception & e) {
            result.status = CheckResult::Status::fail;
            result.details.push_back(std::string("exception: ") + e.what());
        }
        return result;
    }
}

auto verify_graph(const WeightedGraph & graph, int degree, std::optional<int> colors, const ExpansionOptions & options)
    -> VerificationReport
{
    if (degree < 0)
        throw std::invalid_argument("negative truncation degree");
    const int n_colors = colors.value_or(std::max(degree, 1));
    require_colors(n_colors);

    ExpansionOptions coefficient_route = options;
    coefficient_route.solver = ExponentSolver::integer_recurrence;
    const auto expansion = kromatic_pbar_expansion(graph, degree, coefficient_route);
    const auto table = subgraph_exponent_table(graph, degree, coefficient_route);

    VerificationReport report;

    report.checks.push_back(run_check("recurrence_agreement", [&] (CheckResult & r) {
        for (const auto & cls : table.classes()) {
            auto by_log = exponents_by_log(cls.polynomial, degree);
            if (by_log != cls.exponents) {
                r.status = CheckResult::Status::fail;
                r.details.push_back("I = " + cls.polynomial.to_string() + ": recurrences disagree");
            }
        }
        r.details.push_back(std::to_string(std::size_t{1} << graph.vertex_count()) + " subsets, "
                + std::to_string(table.classes().size()) + " distinct independence polynomials");
    }));

    report.checks.push_back(run_check("product_vs_coefficient", [&] (CheckResult & r) {
        ExpansionOptions product_route = options;
        product_route.solver = ExponentSolver::log_recurrence;
        compare_expansions(r, expansion, kromatic_pbar_expansion_by_products(graph, degree, product_route),
                "coefficient", "product");
    }));

    report.checks.push_back(run_check("mtilde_route", [&] (CheckResult & r) {
        compare_expansions(r, expansion, mtilde_to_pbar(mtilde_expansion(graph, degree), degree),
                "coefficient", "mtilde");
    }));

    report.checks.push_back(run_check("set_coloring_specialization", [&] (CheckResult & r) {
        auto specialized = specialize_pbar(expansion, n_colors, degree);
        auto enumerated = enumerate_set_colorings(graph, n_colors, degree);
        std::map<MonomialTable::Exponents, std::pair<BigInt, BigInt>> joined;
        for (const auto & [e, c] : specialized.terms())
            joined[e].first = c;
        for (const auto & [e, c] : enumerated.terms())
            joined[e].second = c;
        for (const auto & [e, values] : joined)
            if (values.first != values.second) {
                r.status = CheckResult::Status::fail;
                r.details.push_back(format_exponents(e) + " specialized " + to_string(values.first)
                        + " vs enumerated " + to_string(values.second));
            }
        r.details.push_back(std::to_string(joined.size()) + " monomial orbits in " + std::to_string(n_colors) + " variables");
    }));

    report.checks.push_back(run_check("leading_terms", [&] (CheckResult & r) {
        auto leading = leading_terms_check(graph);
        if (! leading.ok())
            r.status = CheckResult::Status::fail;
        r.details = leading.mismatches;
    }));

    report.checks.push_back(run_check("integrality", [&] (CheckResult & r) {
        for (const auto & cls : table.classes()) {
            auto rational = rational_exponents_by_log(cls.polynomial, degree);
            for (std::size_t k = 0; k < rational.size(); ++k)
                if (! is_integral(rational[k])) {
                    r.status = CheckResult::Status::fail;
                    r.details.push_back("I = " + cls.polynomial.to_string() + ": a(" + std::to_string(k + 1)
                            + ") = " + to_string(rational[k]));
                }
        }
        for (const auto & row : PbarMtildeTransition(degree).inverse())
            for (const auto & entry : row)
                if (! is_integral(entry)) {
                    r.status = CheckResult::Status::fail;
                    r.details.push_back("non-integral m̃ -> p̄ transition entry " + to_string(entry));
                }
    }));

    report.checks.push_back(run_check("sign_pattern", [&] (CheckResult & r) {
        if (! graph.is_unweighted()) {
            r.status = CheckResult::Status::skipped;
            r.details.push_back("weighted graph");
            return;
        }
        auto signs = sign_report(graph, degree);
        if (! signs.ok())
            r.status = CheckResult::Status::fail;
        r.details.insert(r.details.end(), signs.coefficient_violations.begin(), signs.coefficient_violations.end());
        r.details.insert(r.details.end(), signs.exponent_violations.begin(), signs.exponent_violations.end());
        r.details.push_back(std::to_string(signs.zeros_at_or_above_vertex_count.size())
                + " zero coefficients with |λ| >= |V|");
    }));

    return report;
}

}
