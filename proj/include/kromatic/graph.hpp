#ifndef KROMATIC_GRAPH_HPP
#define KROMATIC_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <kromatic/bigint.hpp>

namespace kromatic
{

/// Hard cap on vertices; subsets are single 64-bit masks.
inline constexpr int max_vertices = 63;

/**
 * A set of dense vertex indices stored as a bitmask. Iteration over
 * vertices() is in increasing index order.
 */
class VertexSubset
{
public:
    using Mask = std::uint64_t;

    constexpr VertexSubset() = default;
    constexpr explicit VertexSubset(Mask bits) : _bits(bits) { }

    static VertexSubset of(std::initializer_list<int> vertices);

    /// {0, ..., n-1}
    static constexpr auto full(int n) -> VertexSubset
    {
        return VertexSubset(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
    }

    constexpr auto bits() const -> Mask { return _bits; }
    constexpr auto empty() const -> bool { return _bits == 0; }
    constexpr auto size() const -> int { return std::popcount(_bits); }
    constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1u; }

    /// Lowest vertex index; undefined on the empty set.
    constexpr auto first() const -> int { return std::countr_zero(_bits); }

    constexpr auto with(int v) const -> VertexSubset { return VertexSubset(_bits | (Mask{1} << v)); }
    constexpr auto without(int v) const -> VertexSubset { return VertexSubset(_bits & ~(Mask{1} << v)); }

    constexpr auto subset_of(VertexSubset other) const -> bool { return (_bits & ~other._bits) == 0; }
    constexpr auto intersects(VertexSubset other) const -> bool { return (_bits & other._bits) != 0; }

    auto vertices() const -> std::vector<int>;

    friend constexpr auto operator|(VertexSubset a, VertexSubset b) -> VertexSubset { return VertexSubset(a._bits | b._bits); }
    friend constexpr auto operator&(VertexSubset a, VertexSubset b) -> VertexSubset { return VertexSubset(a._bits & b._bits); }
    friend constexpr auto operator-(VertexSubset a, VertexSubset b) -> VertexSubset { return VertexSubset(a._bits & ~b._bits); }
    friend constexpr auto operator==(VertexSubset, VertexSubset) -> bool = default;
    friend constexpr auto operator<=>(VertexSubset, VertexSubset) = default;

private:
    Mask _bits = 0;
};

/**
 * Integer polynomial c_0 + c_1 t + ... + c_d t^d. The zero polynomial has
 * no stored coefficients; otherwise the leading coefficient is nonzero.
 */
class IntPolynomial
{
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long long> coefficients);

    static auto monomial(int exponent, BigInt coefficient = 1) -> IntPolynomial;

    auto coefficients() const -> const std::vector<BigInt> & { return _coefficients; }
    auto coefficient(int k) const -> BigInt;
    auto is_zero() const -> bool { return _coefficients.empty(); }

    /// 0 for constants, including the zero polynomial.
    auto degree() const -> int;

    auto evaluate(const BigInt & t) const -> BigInt;
    auto to_string() const -> std::string;

    friend auto operator+(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial;
    friend auto operator*(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial;
    friend auto operator==(const IntPolynomial &, const IntPolynomial &) -> bool = default;

private:
    void trim();

    std::vector<BigInt> _coefficients;
};

/// Invalid graph construction: self-loop, bad weight, or unknown endpoint.
class GraphError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Undirected simple graph on dense vertices 0..n-1 with positive integer
 * vertex weights. Duplicate edges collapse; self-loops are rejected.
 */
class WeightedGraph
{
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<int> weights, const std::vector<std::pair<int, int>> & edges,
            std::vector<std::string> labels = {});

    /// All weights 1.
    static auto unweighted(int n, const std::vector<std::pair<int, int>> & edges) -> WeightedGraph;

    auto vertex_count() const -> int { return static_cast<int>(_weights.size()); }
    auto edge_count() const -> std::size_t;
    auto weight(int v) const -> int { return _weights.at(v); }
    auto weights() const -> const std::vector<int> & { return _weights; }
    auto label(int v) const -> const std::string & { return _labels.at(v); }
    auto labels() const -> const std::vector<std::string> & { return _labels; }
    auto neighbors(int v) const -> VertexSubset { return _adjacency.at(v); }
    auto adjacent(int u, int v) const -> bool { return _adjacency.at(u).contains(v); }
    auto vertices() const -> VertexSubset { return VertexSubset::full(vertex_count()); }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    auto edges() const -> std::vector<std::pair<int, int>>;

    auto is_unweighted() const -> bool;
    auto is_independent(VertexSubset subset) const -> bool;
    auto weight_of(VertexSubset subset) const -> std::int64_t;

    friend auto operator==(const WeightedGraph & a, const WeightedGraph & b) -> bool
    {
        return a._weights == b._weights && a._adjacency == b._adjacency;
    }

private:
    std::vector<int> _weights;
    std::vector<VertexSubset> _adjacency;
    std::vector<std::string> _labels;
};

/// Graph-file parse failure; line() is 1-based.
class ParseError : public std::runtime_error
{
public:
    enum class Kind
    {
        malformed,
        self_loop,
        unknown_vertex,
        bad_weight,
        duplicate_vertex,
    };

    ParseError(Kind kind, int line, const std::string & message);

    auto kind() const -> Kind { return _kind; }
    auto line() const -> int { return _line; }

private:
    Kind _kind;
    int _line;
};

/**
 * Parses the line-oriented graph format:
 *
 *     # comment
 *     v <id> [weight]
 *     e <id1> <id2>
 *
 * Vertices are numbered densely in declaration order; the weight defaults
 * to 1.
 */
auto parse_graph(std::string_view text) -> WeightedGraph;

/// Renders a graph in the format accepted by parse_graph.
auto format_graph(const WeightedGraph & graph) -> std::string;

/// Induced subgraph on `subset`, renumbered in increasing vertex order.
auto induced_subgraph(const WeightedGraph & graph, VertexSubset subset) -> WeightedGraph;

/// Disjoint union; the vertices of `b` follow those of `a`.
auto disjoint_union(const WeightedGraph & a, const WeightedGraph & b) -> WeightedGraph;

/// Calls `visit` once for every independent set, including the empty one.
void for_each_independent_set(const WeightedGraph & graph, const std::function<void (VertexSubset)> & visit);
auto independent_sets(const WeightedGraph & graph) -> std::vector<VertexSubset>;

/// Independent sets of `graph` restricted to `within`, weight-generating.
auto independence_polynomial(const WeightedGraph & graph, VertexSubset within) -> IntPolynomial;
auto independence_polynomial(const WeightedGraph & graph) -> IntPolynomial;

auto total_weight(const WeightedGraph & graph) -> std::int64_t;

/// Components ordered by smallest vertex.
auto connected_components(const WeightedGraph & graph) -> std::vector<VertexSubset>;

}

#endif
