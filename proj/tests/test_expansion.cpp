#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <kromatic/expansion.hpp>
#include <kromatic/oracle.hpp>

#include "support/graph_families.hpp"

using namespace kromatic;
using namespace kromatic::testing;

namespace
{
    const auto k21 = WeightedGraph({2, 1}, {{0, 1}});
    const auto edge = WeightedGraph::unweighted(2, {{0, 1}});
    const auto triangle = WeightedGraph::unweighted(3, {{0, 1}, {1, 2}, {0, 2}});

    auto expansion(Basis basis, int degree, std::initializer_list<std::pair<const char *, long long>> terms)
        -> SymExpansion
    {
        SymExpansion result(basis, degree);
        for (auto [partition, value] : terms)
            result.set(Partition::parse(partition), value);
        return result;
    }

    // Exponents by peeling: divide I by (1+t^k)^a(k) for k = 1, 2, ... and
    // read a(k+1) off the lowest surviving coefficient.
    auto exponents_by_peeling(const IntPolynomial & polynomial, int degree) -> std::vector<BigInt>
    {
        auto rest = TruncatedSeries::from_polynomial(polynomial, degree);
        std::vector<BigInt> result;
        for (int k = 1; k <= degree; ++k) {
            BigInt a = to_integer(rest[k]);
            result.push_back(a);
            rest = series_mul(rest, binomial_power(k, -a, degree));
        }
        return result;
    }

    auto weighted_family() -> std::vector<WeightedGraph>
    {
        std::vector<WeightedGraph> family;
        for (const auto & g : graphs_up_to_isomorphism_through(4))
            for (const auto & w : all_weightings(g.vertex_count(), 2))
                family.push_back(with_weights(g, w));
        return family;
    }
}

TEST_CASE("basis names")
{
    CHECK(basis_name(Basis::pbar) == "pbar");
    CHECK(basis_name(Basis::mtilde) == "mtilde");
    CHECK(basis_name(Basis::classical_p) == "p");
    CHECK(basis_from_name("mtilde") == Basis::mtilde);
    CHECK_THROWS_AS(basis_from_name("q"), std::invalid_argument);
}

TEST_CASE("SymExpansion stores no zeros and guards the degree")
{
    SymExpansion e(Basis::pbar, 3);
    e.add(Partition({2, 1}), 2);
    e.add(Partition({2, 1}), -2);
    CHECK(e.empty());
    e.set(Partition({3}), 5);
    e.set(Partition({1}), 0);
    CHECK(e.terms().size() == 1);
    CHECK(e.coefficient(Partition({3})) == 5);
    CHECK(e.coefficient(Partition({1, 1})) == 0);
    CHECK_THROWS_AS(e.add(Partition({4}), 1), std::out_of_range);
    CHECK(e.slice(3) == expansion(Basis::pbar, 3, {{"3", 5}}));
    CHECK(e.slice(2).empty());
}

TEST_CASE("pbar_multiply concatenates partitions and truncates")
{
    auto a = expansion(Basis::pbar, 4, {{"()", 1}, {"1", 2}});
    auto b = expansion(Basis::pbar, 4, {{"2", -1}, {"3", 1}});
    CHECK(pbar_multiply(a, b, 4) == expansion(Basis::pbar, 4, {{"2", -1}, {"3", 1}, {"21", -2}, {"31", 2}}));
    CHECK(pbar_multiply(a, b, 3) == expansion(Basis::pbar, 3, {{"2", -1}, {"3", 1}, {"21", -2}}));
}

TEST_CASE("exponent examples")
{
    for (auto solver : {ExponentSolver::integer_recurrence, ExponentSolver::log_recurrence}) {
        CHECK(exponents(IntPolynomial{1, 2}, 5, solver) == ExponentVector({2, -1, 2, -4, 6}));
        CHECK(exponents(IntPolynomial{1, 1}, 6, solver) == ExponentVector({1, 0, 0, 0, 0, 0}));
        CHECK(exponents(IntPolynomial{1}, 3, solver) == ExponentVector({0, 0, 0}));
        CHECK(exponents(IntPolynomial{1, 0, 1}, 4, solver) == ExponentVector({0, 1, 0, 0}));
        // 1 + t + t^2 = (1+t)(1+t^2)(1+t^3)^-1(1+t^4)(1+t^6)^-1 ...
        auto a = exponents(IntPolynomial{1, 1, 1}, 12, solver);
        CHECK(a == ExponentVector({1, 1, -1, 1, 0, -1, 0, 1, 0, 0, 0, -1}));
    }
}

TEST_CASE("1 + t + t^2 exponents against peeling")
{
    auto a = exponents(IntPolynomial{1, 1, 1}, 24, ExponentSolver::integer_recurrence);
    CHECK(a.values() == exponents_by_peeling(IntPolynomial{1, 1, 1}, 24));
}

TEST_CASE("exponent solvers reject bad input")
{
    CHECK_THROWS_AS(exponents_by_log(IntPolynomial{2, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(exponents_by_integer_recurrence(IntPolynomial{0, 1}, 3), std::invalid_argument);
    auto rational = rational_exponents_by_log(IntPolynomial{1, 2}, 5);
    for (std::size_t k = 0; k < rational.size(); ++k)
        CHECK(is_integral(rational[k]));
}

TEST_CASE("both recurrences agree with peeling on small weighted graphs")
{
    std::set<std::vector<BigInt>> seen;
    for (int n = 0; n <= 5; ++n)
        for (const auto & g : graphs_up_to_isomorphism(n)) {
            std::mt19937_64 rng(n * 1000 + g.edge_count());
            for (int trial = 0; trial < 4; ++trial) {
                std::uniform_int_distribution<int> weight(1, 3);
                std::vector<int> weights(n);
                for (auto & w : weights)
                    w = weight(rng);
                auto polynomial = independence_polynomial(with_weights(g, weights));
                if (!seen.insert(polynomial.coefficients()).second)
                    continue;
                auto peeled = exponents_by_peeling(polynomial, 12);
                REQUIRE(exponents_by_integer_recurrence(polynomial, 12).values() == peeled);
                REQUIRE(exponents_by_log(polynomial, 12).values() == peeled);
            }
        }
    CHECK(seen.size() > 50);
}

TEST_CASE("subgraph exponent table")
{
    auto table = subgraph_exponent_table(k21, 4);
    CHECK(table.vertex_count() == 2);
    CHECK(table.degree() == 4);
    CHECK(table.polynomial(VertexSubset()) == IntPolynomial{1});
    CHECK(table.polynomial(VertexSubset::of({0})) == IntPolynomial{1, 0, 1});
    CHECK(table.polynomial(VertexSubset::of({0, 1})) == IntPolynomial{1, 1, 1});
    CHECK(table.at(VertexSubset::of({1})) == ExponentVector({1, 0, 0, 0}));
    CHECK(table.at(VertexSubset::of({0})) == ExponentVector({0, 1, 0, 0}));
    CHECK(table.classes().size() == 4);

    std::int64_t signed_total = 0;
    std::size_t members = 0;
    for (const auto & c : table.classes()) {
        signed_total += c.signed_count;
        members += c.members;
    }
    CHECK(signed_total == 0);
    CHECK(members == 4);

    // edgeless graphs on 3 unit vertices: W of equal size share a class
    auto edgeless = subgraph_exponent_table(WeightedGraph::unweighted(3, {}), 3);
    CHECK(edgeless.classes().size() == 4);
}

TEST_CASE("K_21 expansion to degree 4")
{
    auto expected = expansion(Basis::pbar, 4, {{"3", -1}, {"21", 1}, {"4", 1}, {"31", -1}});
    CHECK(kromatic_pbar_expansion(k21, 4) == expected);
    CHECK(kromatic_pbar_expansion_by_products(k21, 4) == expected);
}

TEST_CASE("unweighted edge expansion slices")
{
    auto x = kromatic_pbar_expansion(edge, 6);
    CHECK(x.slice(1).empty());
    CHECK(x.slice(2) == expansion(Basis::pbar, 6, {{"2", -1}, {"11", 1}}));
    CHECK(x.slice(6) == expansion(Basis::pbar, 6,
            {{"6", -9}, {"51", 12}, {"42", 4}, {"411", -4}, {"33", 1}, {"321", -4}, {"222", -1}, {"2211", 1}}));
}

TEST_CASE("single vertex of weight k is p̄_k")
{
    for (int k = 1; k <= 4; ++k) {
        auto x = kromatic_pbar_expansion(WeightedGraph({k}, {}), 6);
        CHECK(x == expansion(Basis::pbar, 6, {{std::to_string(k).c_str(), 1}}));
    }
}

TEST_CASE("edgeless graph with weights λ is p̄_λ")
{
    for (const auto & lambda : partitions_up_to(5)) {
        auto g = WeightedGraph(lambda.parts(), {});
        SymExpansion expected(Basis::pbar, 6);
        expected.set(lambda, 1);
        CHECK(kromatic_pbar_expansion(g, 6) == expected);
    }
}

TEST_CASE("empty graph is 1")
{
    CHECK(kromatic_pbar_expansion(WeightedGraph(), 3) == expansion(Basis::pbar, 3, {{"()", 1}}));
}

TEST_CASE("slices sum to the one-variable evaluation")
{
    // with one color only an edgeless graph has a set coloring, giving x^ω(G)
    std::mt19937_64 rng(59);
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(rng, 1 + i % 4, i % 5 == 0 ? 0.0 : 0.5, 3);
        auto x = kromatic_pbar_expansion(g, 9);
        for (int size = 0; size <= 9; ++size) {
            BigInt sum = 0;
            for (const auto & [p, value] : x.slice(size).terms())
                sum += value;
            bool expected = g.edge_count() == 0 && size == total_weight(g);
            CHECK(sum == (expected ? 1 : 0));
        }
    }
}

TEST_CASE("pbar_coefficient")
{
    CHECK(pbar_coefficient(k21, Partition({3, 3, 2, 1})) == 1);
    CHECK(pbar_coefficient(k21, Partition({2, 2})) == 0);
    CHECK(pbar_coefficient(edge, Partition({4, 1})) == -8);
    CHECK(pbar_coefficient(edge, Partition({2, 2, 2})) == -1);
    for (const auto & lambda : partitions_up_to(6))
        CHECK(pbar_coefficient(triangle, lambda) == kromatic_pbar_expansion(triangle, 6).coefficient(lambda));
}

TEST_CASE("K_21 closed form on small partitions")
{
    auto x = kromatic_pbar_expansion(k21, 7);
    for (const auto & lambda : partitions_up_to(7))
        CHECK(k21_coefficient_rule(lambda) == x.coefficient(lambda));
}

TEST_CASE("Y function")
{
    // a = (2, -1, ...): (1+p̄_1)^2 (1+p̄_2)^-1
    CHECK(y_function_expansion(edge, 2) == expansion(Basis::pbar, 2, {{"()", 1}, {"1", 2}, {"11", 1}, {"2", -1}}));
    CHECK(y_function_expansion(edge, 3, ExponentSolver::log_recurrence) == y_function_expansion(edge, 3));
    // the constant term is always 1 and the degree-1 term counts weight-1 vertices
    auto y = y_function_expansion(k21, 5);
    CHECK(y.coefficient(Partition({})) == 1);
    CHECK(y.coefficient(Partition({1})) == 1);
}

TEST_CASE("classical power-sum expansion")
{
    CHECK(classical_p_expansion(triangle) == expansion(Basis::classical_p, 3, {{"111", 1}, {"21", -3}, {"3", 2}}));
    CHECK(classical_p_expansion(edge) == expansion(Basis::classical_p, 2, {{"11", 1}, {"2", -1}}));
    CHECK(classical_p_expansion(k21) == expansion(Basis::classical_p, 3, {{"21", 1}, {"3", -1}}));
}

TEST_CASE("classical expansion counts proper colorings")
{
    // p_λ(1^q) = q^ℓ(λ), so X_G(1^q) is the chromatic polynomial
    auto count_colorings = [] (const WeightedGraph & g, int q) {
        std::int64_t count = 0;
        std::vector<int> color(g.vertex_count(), 0);
        std::function<void (int)> go = [&] (int v) {
            if (v == g.vertex_count()) {
                ++count;
                return;
            }
            for (int c = 0; c < q; ++c) {
                bool ok = true;
                for (int u = 0; u < v; ++u)
                    if (g.adjacent(u, v) && color[u] == c)
                        ok = false;
                if (ok) {
                    color[v] = c;
                    go(v + 1);
                }
            }
        };
        go(0);
        return count;
    };
    for (const auto & g : graphs_up_to_isomorphism_through(5))
        for (int q = 1; q <= 4; ++q) {
            BigInt value = 0;
            auto classical = classical_p_expansion(g);
            for (const auto & [lambda, c] : classical.terms()) {
                BigInt power = 1;
                for (int i = 0; i < lambda.length(); ++i)
                    power *= q;
                value += c * power;
            }
            CHECK(value == count_colorings(g, q));
        }
}

TEST_CASE("leading terms")
{
    for (const auto & g : weighted_family())
        CHECK(leading_terms_check(g).ok());
}

TEST_CASE("sign report")
{
    auto edgeless = WeightedGraph::unweighted(2, {});
    CHECK(kromatic_pbar_expansion(edgeless, 4) == expansion(Basis::pbar, 4, {{"11", 1}}));
    auto report = sign_report(edgeless, 4);
    CHECK(report.ok());
    CHECK(report.any_zero);

    auto path = WeightedGraph::unweighted(3, {{0, 1}, {1, 2}});
    CHECK(sign_report(path, 7).ok());
    CHECK(sign_report(triangle, 7).ok());
    CHECK(sign_report(edge, 8).coefficients_checked > 0);

    CHECK_THROWS_AS(sign_report(k21, 4), std::invalid_argument);
}

TEST_CASE("parallel and sequential expansion agree bit for bit")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        auto g = random_graph(rng, 3 + i % 4, 0.5, 2);
        ExpansionOptions parallel{ExponentSolver::integer_recurrence, true};
        CHECK(kromatic_pbar_expansion(g, 7, parallel) == kromatic_pbar_expansion(g, 7));
        CHECK(kromatic_pbar_expansion_by_products(g, 6, parallel) == kromatic_pbar_expansion(g, 6));
    }
}

TEST_CASE("product route matches coefficient route")
{
    for (const auto & g : weighted_family()) {
        auto coefficients = kromatic_pbar_expansion(g, 6);
        CHECK(kromatic_pbar_expansion_by_products(g, 6) == coefficients);
        CHECK(kromatic_pbar_expansion(g, 6, {ExponentSolver::log_recurrence, false}) == coefficients);
    }
}

TEST_CASE("expansion is multiplicative over disjoint unions")
{
    std::mt19937_64 rng(37);
    for (int i = 0; i < 30; ++i) {
        auto a = random_graph(rng, 1 + i % 3, 0.5, 2);
        auto b = random_graph(rng, 1 + (i / 3) % 3, 0.5, 2);
        CHECK(kromatic_pbar_expansion(disjoint_union(a, b), 7) ==
                pbar_multiply(kromatic_pbar_expansion(a, 7), kromatic_pbar_expansion(b, 7), 7));
    }
}

TEST_CASE("isomorphic graphs have equal expansions")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 20; ++i) {
        auto g = random_graph(rng, 4, 0.5, 3);
        std::vector<int> perm{0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> weights(4);
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < 4; ++v)
            weights[perm[v]] = g.weight(v);
        for (auto [u, v] : g.edges())
            edges.emplace_back(perm[u], perm[v]);
        CHECK(kromatic_pbar_expansion(WeightedGraph(weights, edges), 7) == kromatic_pbar_expansion(g, 7));
    }
}
