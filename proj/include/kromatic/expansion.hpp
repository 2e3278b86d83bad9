#ifndef KROMATIC_EXPANSION_HPP
#define KROMATIC_EXPANSION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <kromatic/bigint.hpp>
#include <kromatic/graph.hpp>
#include <kromatic/partition.hpp>
#include <kromatic/series.hpp>

namespace kromatic
{

enum class Basis
{
    pbar,        ///< K-theoretic power sums
    mtilde,      ///< K-theoretic augmented monomials
    classical_p, ///< ordinary power sums
};

auto basis_name(Basis basis) -> std::string_view;

/// Throws std::invalid_argument on an unknown name.
auto basis_from_name(std::string_view name) -> Basis;

/**
 * A finite piece of a symmetric function in one basis: partition ->
 * coefficient for every partition of size at most degree(). Zero
 * coefficients are never stored; iteration follows partition_compare.
 */
class SymExpansion
{
public:
    using Terms = std::map<Partition, BigInt>;

    SymExpansion(Basis basis, int degree);

    auto basis() const -> Basis { return _basis; }
    auto degree() const -> int { return _degree; }
    auto terms() const & -> const Terms & { return _terms; }
    auto terms() && -> Terms { return std::move(_terms); }
    auto empty() const -> bool { return _terms.empty(); }

    auto coefficient(const Partition & partition) const -> BigInt;

    /// Adds to the coefficient at `partition`; throws std::out_of_range when |partition| > degree().
    void add(const Partition & partition, const BigInt & value);
    void set(const Partition & partition, const BigInt & value);

    /// The terms with |λ| == size.
    auto slice(int size) const -> SymExpansion;

    friend auto operator==(const SymExpansion &, const SymExpansion &) -> bool = default;

private:
    Basis _basis;
    int _degree;
    Terms _terms;
};

/// Product in the p̄ algebra (p̄_λ p̄_μ = p̄_{λ∪μ}), truncated at `degree`.
auto pbar_multiply(const SymExpansion & a, const SymExpansion & b, int degree) -> SymExpansion;

enum class ExponentSolver
{
    integer_recurrence, ///< binomial recurrence in integer arithmetic (default)
    log_recurrence,     ///< logarithm recurrence in rational arithmetic
};

struct ExpansionOptions
{
    ExponentSolver solver = ExponentSolver::integer_recurrence;
    bool parallel = false;
};

/// The log-recurrence exponents before the integrality assertion.
auto rational_exponents_by_log(const IntPolynomial & polynomial, int degree) -> std::vector<Rational>;

/**
 * Exponents of prod_k (1+t^k)^a(k) = I(t) for k = 1..degree, from
 *
 *     a(k) = [t^k] log I + sum_{d | k, d < k} (-1)^(k/d) d a(d) / k
 *
 * Throws std::invalid_argument when I(0) != 1 and std::logic_error if an
 * exponent comes out non-integral.
 */
auto exponents_by_log(const IntPolynomial & polynomial, int degree) -> ExponentVector;

/**
 * Same exponents from
 *
 *     a(k) = [t^k] I - sum_{λ ⊢ k, λ != (k)} prod_j binom(a(j), i_j)
 *
 * with i_j the multiplicity of j in λ. Integer arithmetic only.
 */
auto exponents_by_integer_recurrence(const IntPolynomial & polynomial, int degree) -> ExponentVector;

auto exponents(const IntPolynomial & polynomial, int degree, ExponentSolver solver) -> ExponentVector;

/**
 * Exponent vectors for every induced subgraph G|W. Subgraphs with equal
 * independence polynomials share one solved vector ("class").
 */
class SubgraphExponentTable
{
public:
    struct Class
    {
        IntPolynomial polynomial;
        ExponentVector exponents;
        /// sum over members W of (-1)^|V \ W|
        std::int64_t signed_count = 0;
        std::size_t members = 0;
    };

    SubgraphExponentTable(int vertex_count, int degree, std::vector<Class> classes, std::vector<std::uint32_t> class_of);

    auto degree() const -> int { return _degree; }
    auto vertex_count() const -> int { return _vertex_count; }
    auto classes() const -> const std::vector<Class> & { return _classes; }
    auto at(VertexSubset subset) const -> const ExponentVector &;
    auto polynomial(VertexSubset subset) const -> const IntPolynomial &;

private:
    int _vertex_count;
    int _degree;
    std::vector<Class> _classes;
    std::vector<std::uint32_t> _class_of;
};

/// Largest graph the 2^|V| subset tables accept.
inline constexpr int max_table_vertices = 30;

auto subgraph_exponent_table(const WeightedGraph & graph, int degree, const ExpansionOptions & options = {})
    -> SubgraphExponentTable;

/**
 * p̄-expansion of the Kromatic symmetric function to degree `degree`,
 * coefficient by coefficient:
 *
 *     [p̄_λ] = sum_W (-1)^|V \ W| prod_k binom(a_W(k), i_k)
 */
auto kromatic_pbar_expansion(const WeightedGraph & graph, int degree, const ExpansionOptions & options = {})
    -> SymExpansion;

/// Same expansion assembled as sum_W (-1)^|V \ W| Y_{G|W} with truncated p̄ products.
auto kromatic_pbar_expansion_by_products(const WeightedGraph & graph, int degree,
        const ExpansionOptions & options = {}) -> SymExpansion;

/// One p̄ coefficient without building the whole expansion.
auto pbar_coefficient(const WeightedGraph & graph, const Partition & partition) -> BigInt;

/// Closed-form p̄ coefficients of the weight-(2,1) edge.
auto k21_coefficient_rule(const Partition & partition) -> BigInt;

/// p̄-expansion of Y = prod_k (1+p̄_k)^a_V(k), including its constant term.
auto y_function_expansion(const WeightedGraph & graph, int degree,
        ExponentSolver solver = ExponentSolver::integer_recurrence) -> SymExpansion;

/// Ordinary chromatic symmetric function in power sums, summed over edge subsets.
auto classical_p_expansion(const WeightedGraph & graph) -> SymExpansion;

struct LeadingTermsReport
{
    bool leading_slice_matches = true;
    bool lower_slices_vanish = true;
    std::vector<std::string> mismatches;

    auto ok() const -> bool { return leading_slice_matches && lower_slices_vanish; }
};

/// Compares the |λ| = ω(G) slice with classical_p_expansion and checks that smaller slices vanish.
auto leading_terms_check(const WeightedGraph & graph) -> LeadingTermsReport;

struct SignReport
{
    std::vector<std::string> coefficient_violations;
    std::vector<std::string> exponent_violations;
    std::size_t coefficients_checked = 0;
    std::size_t exponents_checked = 0;
    /// partitions with |λ| >= |V| whose coefficient is zero
    std::vector<Partition> zeros_at_or_above_vertex_count;
    bool any_zero = false;

    auto ok() const -> bool { return coefficient_violations.empty() && exponent_violations.empty(); }
};

/**
 * Checks coefficient * (-1)^(|λ|-ℓ(λ)) >= 0 for |λ| <= degree and
 * a_W(k) * (-1)^(k+1) >= 0 for every W. Throws std::invalid_argument for
 * weighted graphs.
 */
auto sign_report(const WeightedGraph & graph, int degree) -> SignReport;

}

#endif
