#ifndef KROMATIC_TESTS_GRAPH_FAMILIES_HPP
#define KROMATIC_TESTS_GRAPH_FAMILIES_HPP

// Test-only graph generators: exhaustive labeled graphs, isomorphism
// classes by brute-force canonical form, and seeded random graphs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <kromatic/graph.hpp>

namespace kromatic::testing
{

inline auto vertex_pairs(int n) -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

/// Every unweighted labeled graph on n vertices (2^(n choose 2) of them).
inline auto all_labeled_graphs(int n) -> std::vector<WeightedGraph>
{
    auto pairs = vertex_pairs(n);
    std::vector<WeightedGraph> graphs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((mask >> e) & 1u)
                edges.push_back(pairs[e]);
        graphs.push_back(WeightedGraph::unweighted(n, edges));
    }
    return graphs;
}

/// Smallest edge bitmask over all vertex relabelings.
inline auto canonical_form(const WeightedGraph & graph) -> std::uint64_t
{
    const int n = graph.vertex_count();
    auto pairs = vertex_pairs(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (graph.adjacent(perm[pairs[e].first], perm[pairs[e].second]))
                code |= std::uint64_t{1} << e;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// One unweighted representative per isomorphism class on exactly n vertices.
inline auto graphs_up_to_isomorphism(int n) -> std::vector<WeightedGraph>
{
    std::set<std::uint64_t> seen;
    std::vector<WeightedGraph> result;
    for (auto & graph : all_labeled_graphs(n))
        if (seen.insert(canonical_form(graph)).second)
            result.push_back(std::move(graph));
    return result;
}

/// Isomorphism classes on 0..max_n vertices.
inline auto graphs_up_to_isomorphism_through(int max_n) -> std::vector<WeightedGraph>
{
    std::vector<WeightedGraph> result;
    for (int n = 0; n <= max_n; ++n)
        for (auto & g : graphs_up_to_isomorphism(n))
            result.push_back(std::move(g));
    return result;
}

inline auto with_weights(const WeightedGraph & graph, std::vector<int> weights) -> WeightedGraph
{
    return WeightedGraph(std::move(weights), graph.edges());
}

/// Every weight vector in {1..max_weight}^n.
inline auto all_weightings(int n, int max_weight) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> result{{}};
    for (int v = 0; v < n; ++v) {
        std::vector<std::vector<int>> next;
        for (const auto & prefix : result)
            for (int w = 1; w <= max_weight; ++w) {
                next.push_back(prefix);
                next.back().push_back(w);
            }
        result = std::move(next);
    }
    return result;
}

inline auto random_graph(std::mt19937_64 & rng, int n, double edge_probability, int max_weight) -> WeightedGraph
{
    std::bernoulli_distribution edge(edge_probability);
    std::uniform_int_distribution<int> weight(1, max_weight);
    std::vector<int> weights(n);
    for (auto & w : weights)
        w = weight(rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : vertex_pairs(n))
        if (edge(rng))
            edges.emplace_back(u, v);
    return WeightedGraph(std::move(weights), edges);
}

inline auto is_connected(const WeightedGraph & graph) -> bool
{
    return connected_components(graph).size() <= 1;
}

}

#endif
