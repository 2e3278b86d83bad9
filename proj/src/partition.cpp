#include <kromatic/partition.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace kromatic
{

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts))
{
}

Partition::Partition(std::vector<int> parts) : _parts(std::move(parts))
{
    for (int part : _parts) {
        if (part < 1)
            throw std::invalid_argument("partition parts must be positive");
        _size += part;
    }
    std::sort(_parts.begin(), _parts.end(), std::greater<>());
}

auto Partition::from_multiplicities(const std::map<int, int> & multiplicities) -> Partition
{
    std::vector<int> parts;
    for (auto [part, count] : multiplicities) {
        if (count < 0)
            throw std::invalid_argument("negative multiplicity");
        parts.insert(parts.end(), count, part);
    }
    return Partition(std::move(parts));
}

auto Partition::parse(std::string_view text) -> Partition
{
    if (text == "()")
        return Partition();
    if (text.empty())
        throw std::invalid_argument("empty partition text; use \"()\"");

    // "(10)" and "(12,3,1)" are the explicit list form
    bool listed = text.size() > 2 && text.front() == '(' && text.back() == ')';
    if (listed)
        text = text.substr(1, text.size() - 2);

    std::vector<int> parts;
    if (! listed && text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad partition '" + std::string(text) + "'");
            parts.push_back(c - '0');
        }
    }
    else {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = std::min(text.find(',', start), text.size());
            auto token = text.substr(start, end - start);
            if (token.empty() || token.size() > 9 || ! std::all_of(token.begin(), token.end(), [] (char c) { return c >= '0' && c <= '9'; }))
                throw std::invalid_argument("bad partition '" + std::string(text) + "'");
            parts.push_back(std::stoi(std::string(token)));
            start = end + 1;
        }
    }

    Partition result(parts);
    if (result.parts() != parts)
        throw std::invalid_argument("partition '" + std::string(text) + "' is not weakly decreasing");
    return result;
}

auto Partition::multiplicity(int part) const -> int
{
    return static_cast<int>(std::count(_parts.begin(), _parts.end(), part));
}

auto Partition::to_string() const -> std::string
{
    if (_parts.empty())
        return "()";
    bool compact = _parts.front() <= 9;
    if (! compact && _parts.size() == 1)
        return "(" + std::to_string(_parts.front()) + ")";
    std::string out;
    for (std::size_t i = 0; i < _parts.size(); ++i) {
        if (! compact && i > 0)
            out += ",";
        out += std::to_string(_parts[i]);
    }
    return out;
}

auto partition_compare(const Partition & a, const Partition & b) -> std::strong_ordering
{
    if (auto by_size = a.size() <=> b.size(); by_size != 0)
        return by_size;
    return std::lexicographical_compare_three_way(a.parts().begin(), a.parts().end(),
            b.parts().begin(), b.parts().end());
}

auto operator<=>(const Partition & a, const Partition & b) -> std::strong_ordering
{
    return partition_compare(a, b);
}

namespace
{
    void generate(int remaining, int max_part, std::vector<int> & prefix, std::vector<Partition> & out)
    {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            prefix.push_back(part);
            generate(remaining - part, part, prefix, out);
            prefix.pop_back();
        }
    }
}

auto partitions_of(int n) -> std::vector<Partition>
{
    std::vector<Partition> result;
    if (n < 0)
        return result;
    std::vector<int> prefix;
    generate(n, n, prefix, result);
    std::sort(result.begin(), result.end());
    return result;
}

auto partitions_up_to(int n) -> std::vector<Partition>
{
    std::vector<Partition> result;
    for (int size = 0; size <= n; ++size) {
        auto block = partitions_of(size);
        result.insert(result.end(), block.begin(), block.end());
    }
    return result;
}

namespace
{
    // Places finer[index..] into the remaining block capacities. Failed
    // states are remembered by (index, sorted capacities).
    auto fill(const std::vector<int> & finer, std::size_t index, std::vector<int> capacities,
            std::set<std::pair<std::size_t, std::vector<int>>> & dead) -> bool
    {
        if (index == finer.size())
            return std::all_of(capacities.begin(), capacities.end(), [] (int c) { return c == 0; });

        std::sort(capacities.begin(), capacities.end(), std::greater<>());
        if (dead.contains({index, capacities}))
            return false;

        for (std::size_t block = 0; block < capacities.size(); ++block) {
            if (capacities[block] < finer[index])
                continue;
            if (block > 0 && capacities[block] == capacities[block - 1])
                continue;
            auto next = capacities;
            next[block] -= finer[index];
            if (fill(finer, index + 1, std::move(next), dead))
                return true;
        }

        dead.emplace(index, std::move(capacities));
        return false;
    }
}

auto is_refinement(const Partition & finer, const Partition & coarser) -> bool
{
    if (finer.size() != coarser.size() || finer.length() < coarser.length())
        return false;
    std::set<std::pair<std::size_t, std::vector<int>>> dead;
    return fill(finer.parts(), 0, coarser.parts(), dead);
}

auto multiplicity_view(const Partition & partition) -> std::map<int, int>
{
    std::map<int, int> result;
    for (int part : partition.parts())
        ++result[part];
    return result;
}

}
