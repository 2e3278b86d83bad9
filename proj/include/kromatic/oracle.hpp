#ifndef KROMATIC_ORACLE_HPP
#define KROMATIC_ORACLE_HPP

// Brute-force routes to the Kromatic symmetric function that share no code
// with the exponent machinery: stable set covers in the K-augmented
// monomial basis, and explicit proper set colorings in finitely many
// variables.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <kromatic/expansion.hpp>
#include <kromatic/graph.hpp>
#include <kromatic/partition.hpp>

namespace kromatic
{

/// Distinct nonempty independent sets whose union is V, sorted by mask.
struct StableSetCover
{
    std::vector<VertexSubset> members;

    /// λ(C): the weights of the members as a partition.
    auto shape(const WeightedGraph & graph) const -> Partition;
};

void for_each_stable_set_cover(const WeightedGraph & graph, std::int64_t max_total_weight,
        const std::function<void (const StableSetCover &)> & visit);

auto stable_set_covers(const WeightedGraph & graph, std::int64_t max_total_weight) -> std::vector<StableSetCover>;

/// [m̃_μ] = #{covers C : λ(C) = μ} for |μ| <= degree.
auto mtilde_expansion(const WeightedGraph & graph, int degree) -> SymExpansion;

/// m̃-expansion of p̄_λ, i.e. of the edgeless graph with weights λ.
auto pbar_in_mtilde(const Partition & partition, int degree) -> SymExpansion;

/**
 * The matrix M[λ][μ] = [m̃_μ] p̄_λ over all partitions of size <= degree,
 * rows and columns in partition_compare order. Construction throws
 * std::logic_error unless M is unit upper triangular.
 */
class PbarMtildeTransition
{
public:
    explicit PbarMtildeTransition(int degree);

    auto degree() const -> int { return _degree; }
    auto order() const -> const std::vector<Partition> & { return _order; }
    auto entry(std::size_t row, std::size_t column) const -> const BigInt & { return _matrix.at(row).at(column); }
    auto is_unit_upper_triangular() const -> bool;

    /// M^{-1} by back-substitution in exact rationals.
    auto inverse() const -> std::vector<std::vector<Rational>>;

    auto to_pbar(const SymExpansion & mtilde) const -> SymExpansion;
    auto to_mtilde(const SymExpansion & pbar) const -> SymExpansion;

private:
    auto index_of(const Partition & partition) const -> std::size_t;

    int _degree;
    std::vector<Partition> _order;
    std::vector<std::vector<BigInt>> _matrix;
};

auto mtilde_to_pbar(const SymExpansion & expansion, int degree) -> SymExpansion;

/**
 * Symmetric polynomial in a fixed number of variables, truncated at total
 * degree. Keys are sorted exponent vectors (descending, no zeros); the
 * value is the coefficient of every monomial with that exponent multiset.
 */
class MonomialTable
{
public:
    using Exponents = std::vector<int>;
    using Raw = std::map<Exponents, BigInt>;

    MonomialTable(int variables, int degree);

    /// Canonicalizes a full polynomial (keys of length `variables`); throws std::logic_error if it is not symmetric.
    static auto from_polynomial(int variables, int degree, const Raw & polynomial) -> MonomialTable;

    auto variables() const -> int { return _variables; }
    auto degree() const -> int { return _degree; }
    auto terms() const & -> const std::map<Exponents, BigInt> & { return _terms; }
    auto terms() && -> std::map<Exponents, BigInt> { return std::move(_terms); }

    /// Coefficient of the monomial with these exponents, in any order.
    auto coefficient(Exponents exponents) const -> BigInt;

    friend auto operator==(const MonomialTable &, const MonomialTable &) -> bool = default;

private:
    int _variables;
    int _degree;
    std::map<Exponents, BigInt> _terms;
};

auto canonical_exponents(MonomialTable::Exponents exponents) -> MonomialTable::Exponents;

/// Sum over proper set colorings with colors 1..colors, dropping total degree > degree.
auto enumerate_set_colorings(const WeightedGraph & graph, int colors, int degree) -> MonomialTable;

/// Evaluates p̄_k = prod_i (1 + x_i^k) - 1 in `colors` variables.
auto specialize_pbar(const SymExpansion & expansion, int colors, int degree) -> MonomialTable;

struct CheckResult
{
    enum class Status
    {
        pass,
        fail,
        skipped,
    };

    std::string check;
    Status status = Status::pass;
    std::vector<std::string> details;
};

auto status_name(CheckResult::Status status) -> std::string_view;

struct VerificationReport
{
    std::vector<CheckResult> checks;

    auto passed() const -> bool;
};

/**
 * Runs every cross-check on one graph, in fixed order: recurrence
 * agreement, product route, m̃ route, set-coloring specialization, leading
 * terms, integrality, sign pattern (unweighted graphs only). `colors`
 * defaults to max(degree, 1).
 */
auto verify_graph(const WeightedGraph & graph, int degree, std::optional<int> colors = std::nullopt,
        const ExpansionOptions & options = {}) -> VerificationReport;

}

#endif
