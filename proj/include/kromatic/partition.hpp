#ifndef KROMATIC_PARTITION_HPP
#define KROMATIC_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kromatic
{

/**
 * Integer partition: a weakly decreasing list of positive parts. Ordering
 * (operator<=>) is partition_compare, so ordered containers keyed by
 * Partition list smaller sizes first and, within a size, finer partitions
 * before coarser ones.
 */
class Partition
{
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);

    /// Parts in any order; sorted on construction. Throws std::invalid_argument on a part < 1.
    explicit Partition(std::vector<int> parts);

    static auto from_multiplicities(const std::map<int, int> & multiplicities) -> Partition;

    /// Inverse of to_string: "3321", "12,3,1", or "()".
    static auto parse(std::string_view text) -> Partition;

    auto parts() const -> const std::vector<int> & { return _parts; }

    /// |λ|, the sum of the parts.
    auto size() const -> int { return _size; }

    /// ℓ(λ), the number of parts.
    auto length() const -> int { return static_cast<int>(_parts.size()); }

    auto empty() const -> bool { return _parts.empty(); }
    auto largest() const -> int { return _parts.empty() ? 0 : _parts.front(); }
    auto multiplicity(int part) const -> int;

    auto to_string() const -> std::string;

    friend auto operator==(const Partition & a, const Partition & b) -> bool { return a._parts == b._parts; }
    friend auto operator<=>(const Partition & a, const Partition & b) -> std::strong_ordering;

private:
    std::vector<int> _parts;
    int _size = 0;
};

/// Size ascending, then lexicographic ascending on the decreasing parts.
auto partition_compare(const Partition & a, const Partition & b) -> std::strong_ordering;

/// All partitions of n in partition_compare order.
auto partitions_of(int n) -> std::vector<Partition>;

/// All partitions of size 0..n in partition_compare order (starts with the empty partition).
auto partitions_up_to(int n) -> std::vector<Partition>;

/// True iff the parts of `finer` group into blocks whose sums are the parts of `coarser`.
auto is_refinement(const Partition & finer, const Partition & coarser) -> bool;

/// part size -> number of parts of that size
auto multiplicity_view(const Partition & partition) -> std::map<int, int>;

}

template <>
struct std::hash<kromatic::Partition>
{
    auto operator()(const kromatic::Partition & p) const noexcept -> std::size_t
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int part : p.parts())
            h ^= std::hash<int>{}(part) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

#endif
