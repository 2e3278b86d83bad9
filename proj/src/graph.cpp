#include <kromatic/graph.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace kromatic
{

auto VertexSubset::of(std::initializer_list<int> vertices) -> VertexSubset
{
    VertexSubset result;
    for (int v : vertices) {
        if (v < 0 || v >= 64)
            throw std::out_of_range("vertex index out of range");
        result = result.with(v);
    }
    return result;
}

auto VertexSubset::vertices() const -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(size());
    for (Mask rest = _bits; rest != 0; rest &= rest - 1)
        result.push_back(std::countr_zero(rest));
    return result;
}

// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : _coefficients(std::move(coefficients))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients)
{
    for (long long c : coefficients)
        _coefficients.emplace_back(c);
    trim();
}

auto IntPolynomial::monomial(int exponent, BigInt coefficient) -> IntPolynomial
{
    std::vector<BigInt> coefficients(exponent + 1);
    coefficients[exponent] = std::move(coefficient);
    return IntPolynomial(std::move(coefficients));
}

void IntPolynomial::trim()
{
    while (! _coefficients.empty() && _coefficients.back() == 0)
        _coefficients.pop_back();
}

auto IntPolynomial::coefficient(int k) const -> BigInt
{
    if (k < 0 || k >= static_cast<int>(_coefficients.size()))
        return 0;
    return _coefficients[k];
}

auto IntPolynomial::degree() const -> int
{
    return _coefficients.empty() ? 0 : static_cast<int>(_coefficients.size()) - 1;
}

auto IntPolynomial::evaluate(const BigInt & t) const -> BigInt
{
    BigInt result = 0;
    for (auto c = _coefficients.rbegin(); c != _coefficients.rend(); ++c)
        result = result * t + *c;
    return result;
}

auto IntPolynomial::to_string() const -> std::string
{
    if (_coefficients.empty())
        return "0";

    std::string out;
    for (std::size_t k = 0; k < _coefficients.size(); ++k) {
        const BigInt & c = _coefficients[k];
        if (c == 0)
            continue;
        BigInt magnitude = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (k == 0 || magnitude != 1)
            out += magnitude.str();
        if (k >= 1)
            out += "t";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

auto operator+(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial
{
    std::vector<BigInt> sum(std::max(a._coefficients.size(), b._coefficients.size()));
    for (std::size_t k = 0; k < a._coefficients.size(); ++k)
        sum[k] += a._coefficients[k];
    for (std::size_t k = 0; k < b._coefficients.size(); ++k)
        sum[k] += b._coefficients[k];
    return IntPolynomial(std::move(sum));
}

auto operator*(const IntPolynomial & a, const IntPolynomial & b) -> IntPolynomial
{
    if (a.is_zero() || b.is_zero())
        return IntPolynomial();
    std::vector<BigInt> product(a._coefficients.size() + b._coefficients.size() - 1);
    for (std::size_t i = 0; i < a._coefficients.size(); ++i)
        for (std::size_t j = 0; j < b._coefficients.size(); ++j)
            product[i + j] += a._coefficients[i] * b._coefficients[j];
    return IntPolynomial(std::move(product));
}

// WeightedGraph

WeightedGraph::WeightedGraph(std::vector<int> weights, const std::vector<std::pair<int, int>> & edges,
        std::vector<std::string> labels) :
    _weights(std::move(weights)),
    _adjacency(_weights.size()),
    _labels(std::move(labels))
{
    const int n = vertex_count();
    if (n > max_vertices)
        throw GraphError("graph has " + std::to_string(n) + " vertices; at most " + std::to_string(max_vertices) + " supported");
    for (int v = 0; v < n; ++v)
        if (_weights[v] < 1)
            throw GraphError("vertex " + std::to_string(v) + " has weight " + std::to_string(_weights[v]) + " < 1");

    if (_labels.empty())
        for (int v = 0; v < n; ++v)
            _labels.push_back(std::to_string(v));
    else if (static_cast<int>(_labels.size()) != n)
        throw GraphError("label count does not match vertex count");

    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        _adjacency[u] = _adjacency[u].with(v);
        _adjacency[v] = _adjacency[v].with(u);
    }
}

auto WeightedGraph::unweighted(int n, const std::vector<std::pair<int, int>> & edges) -> WeightedGraph
{
    return WeightedGraph(std::vector<int>(n, 1), edges);
}

auto WeightedGraph::edge_count() const -> std::size_t
{
    std::size_t twice = 0;
    for (auto row : _adjacency)
        twice += row.size();
    return twice / 2;
}

auto WeightedGraph::edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> result;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : _adjacency[u].vertices())
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto WeightedGraph::is_unweighted() const -> bool
{
    return std::all_of(_weights.begin(), _weights.end(), [] (int w) { return w == 1; });
}

auto WeightedGraph::is_independent(VertexSubset subset) const -> bool
{
    for (int v : subset.vertices())
        if (_adjacency.at(v).intersects(subset))
            return false;
    return true;
}

auto WeightedGraph::weight_of(VertexSubset subset) const -> std::int64_t
{
    std::int64_t total = 0;
    for (int v : subset.vertices())
        total += _weights.at(v);
    return total;
}

// Parsing

ParseError::ParseError(Kind kind, int line, const std::string & message) :
    std::runtime_error("line " + std::to_string(line) + ": " + message),
    _kind(kind),
    _line(line)
{
}

namespace
{
    auto tokenize(std::string_view line) -> std::vector<std::string>
    {
        std::istringstream stream{std::string(line)};
        std::vector<std::string> tokens;
        for (std::string token; stream >> token; )
            tokens.push_back(token);
        return tokens;
    }

    auto parse_weight(const std::string & token, int line_number) -> int
    {
        std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
        if (start == token.size() || ! std::all_of(token.begin() + start, token.end(),
                    [] (char c) { return c >= '0' && c <= '9'; }))
            throw ParseError(ParseError::Kind::malformed, line_number, "weight '" + token + "' is not an integer");

        long long value = 0;
        for (std::size_t i = start; i < token.size(); ++i) {
            value = value * 10 + (token[i] - '0');
            if (value > 1'000'000'000)
                throw ParseError(ParseError::Kind::bad_weight, line_number, "weight '" + token + "' is too large");
        }
        if (token[0] == '-')
            value = -value;
        if (value < 1)
            throw ParseError(ParseError::Kind::bad_weight, line_number, "weight " + token + " must be at least 1");
        return static_cast<int>(value);
    }
}

auto parse_graph(std::string_view text) -> WeightedGraph
{
    std::vector<int> weights;
    std::vector<std::string> labels;
    std::map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;

    int line_number = 0;
    std::size_t position = 0;
    while (position < text.size()) {
        std::size_t end = text.find('\n', position);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(position, end - position);
        position = end + 1;
        ++line_number;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty())
            continue;

        if (tokens[0] == "v") {
            if (tokens.size() < 2 || tokens.size() > 3)
                throw ParseError(ParseError::Kind::malformed, line_number, "expected 'v <id> [weight]'");
            if (index.contains(tokens[1]))
                throw ParseError(ParseError::Kind::duplicate_vertex, line_number, "vertex '" + tokens[1] + "' declared twice");
            int weight = tokens.size() == 3 ? parse_weight(tokens[2], line_number) : 1;
            if (static_cast<int>(weights.size()) == max_vertices)
                throw ParseError(ParseError::Kind::malformed, line_number, "too many vertices");
            index.emplace(tokens[1], static_cast<int>(weights.size()));
            weights.push_back(weight);
            labels.push_back(tokens[1]);
        }
        else if (tokens[0] == "e") {
            if (tokens.size() != 3)
                throw ParseError(ParseError::Kind::malformed, line_number, "expected 'e <id1> <id2>'");
            for (int i : {1, 2})
                if (! index.contains(tokens[i]))
                    throw ParseError(ParseError::Kind::unknown_vertex, line_number, "unknown vertex '" + tokens[i] + "'");
            if (tokens[1] == tokens[2])
                throw ParseError(ParseError::Kind::self_loop, line_number, "self-loop at '" + tokens[1] + "'");
            edges.emplace_back(index.at(tokens[1]), index.at(tokens[2]));
        }
        else
            throw ParseError(ParseError::Kind::malformed, line_number, "unknown directive '" + tokens[0] + "'");
    }

    return WeightedGraph(std::move(weights), edges, std::move(labels));
}

auto format_graph(const WeightedGraph & graph) -> std::string
{
    std::string out;
    for (int v = 0; v < graph.vertex_count(); ++v)
        out += "v " + graph.label(v) + " " + std::to_string(graph.weight(v)) + "\n";
    for (auto [u, v] : graph.edges())
        out += "e " + graph.label(u) + " " + graph.label(v) + "\n";
    return out;
}

// Structure

auto induced_subgraph(const WeightedGraph & graph, VertexSubset subset) -> WeightedGraph
{
    if (! subset.subset_of(graph.vertices()))
        throw std::out_of_range("subset contains vertices outside the graph");

    auto kept = subset.vertices();
    std::vector<int> position(graph.vertex_count(), -1);
    std::vector<int> weights;
    std::vector<std::string> labels;
    for (int v : kept) {
        position[v] = static_cast<int>(weights.size());
        weights.push_back(graph.weight(v));
        labels.push_back(graph.label(v));
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : graph.edges())
        if (subset.contains(u) && subset.contains(v))
            edges.emplace_back(position[u], position[v]);

    return WeightedGraph(std::move(weights), edges, std::move(labels));
}

auto disjoint_union(const WeightedGraph & a, const WeightedGraph & b) -> WeightedGraph
{
    std::vector<int> weights = a.weights();
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.vertex_count(), v + a.vertex_count());
    return WeightedGraph(std::move(weights), edges);
}

namespace
{
    // Vertex of maximum degree inside `within`, or -1 if `within` has no
    // internal edges.
    auto branching_vertex(const WeightedGraph & graph, VertexSubset within) -> int
    {
        int best = -1, best_degree = 0;
        for (int v : within.vertices()) {
            int degree = (graph.neighbors(v) & within).size();
            if (degree > best_degree) {
                best = v;
                best_degree = degree;
            }
        }
        return best;
    }

    void enumerate_independent(const WeightedGraph & graph, VertexSubset chosen, VertexSubset within,
            const std::function<void (VertexSubset)> & visit)
    {
        int v = branching_vertex(graph, within);
        if (v < 0) {
            // every subset of an edgeless remainder is independent
            auto free = within.bits();
            for (auto sub = free; ; sub = (sub - 1) & free) {
                visit(chosen | VertexSubset(sub));
                if (sub == 0)
                    break;
            }
            return;
        }
        enumerate_independent(graph, chosen, within.without(v), visit);
        enumerate_independent(graph, chosen.with(v), within - graph.neighbors(v).with(v), visit);
    }

    void add_shifted(std::vector<std::uint64_t> & into, const std::vector<std::uint64_t> & from, int shift)
    {
        if (into.size() < from.size() + shift)
            into.resize(from.size() + shift, 0);
        for (std::size_t k = 0; k < from.size(); ++k)
            into[k + shift] += from[k];
    }

    auto count_by_weight(const WeightedGraph & graph, VertexSubset within) -> std::vector<std::uint64_t>
    {
        int v = branching_vertex(graph, within);
        if (v < 0) {
            std::vector<std::uint64_t> product{1};
            for (int u : within.vertices()) {
                std::vector<std::uint64_t> next = product;
                add_shifted(next, product, graph.weight(u));
                product = std::move(next);
            }
            return product;
        }
        auto result = count_by_weight(graph, within.without(v));
        add_shifted(result, count_by_weight(graph, within - graph.neighbors(v).with(v)), graph.weight(v));
        return result;
    }
}

void for_each_independent_set(const WeightedGraph & graph, const std::function<void (VertexSubset)> & visit)
{
    enumerate_independent(graph, VertexSubset(), graph.vertices(), visit);
}

auto independent_sets(const WeightedGraph & graph) -> std::vector<VertexSubset>
{
    std::vector<VertexSubset> result;
    for_each_independent_set(graph, [&] (VertexSubset s) { result.push_back(s); });
    return result;
}

auto independence_polynomial(const WeightedGraph & graph, VertexSubset within) -> IntPolynomial
{
    if (! within.subset_of(graph.vertices()))
        throw std::out_of_range("subset contains vertices outside the graph");
    auto counts = count_by_weight(graph, within);
    std::vector<BigInt> coefficients(counts.begin(), counts.end());
    return IntPolynomial(std::move(coefficients));
}

auto independence_polynomial(const WeightedGraph & graph) -> IntPolynomial
{
    return independence_polynomial(graph, graph.vertices());
}

auto total_weight(const WeightedGraph & graph) -> std::int64_t
{
    return graph.weight_of(graph.vertices());
}

auto connected_components(const WeightedGraph & graph) -> std::vector<VertexSubset>
{
    std::vector<VertexSubset> components;
    VertexSubset unvisited = graph.vertices();
    while (! unvisited.empty()) {
        VertexSubset component = VertexSubset().with(unvisited.first());
        VertexSubset frontier = component;
        while (! frontier.empty()) {
            VertexSubset next;
            for (int v : frontier.vertices())
                next = next | graph.neighbors(v);
            frontier = next - component;
            component = component | frontier;
        }
        components.push_back(component);
        unvisited = unvisited - component;
    }
    return components;
}

}
