#ifndef KROMATIC_CLI_HPP
#define KROMATIC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace kromatic::cli
{

enum class Command
{
    expand,
    ipoly,
    exponents,
    classic,
    verify,
};

enum class Format
{
    text,
    json,
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_config_error = 3;

inline constexpr std::uint64_t default_max_subsets = std::uint64_t{1} << 22;

struct Config
{
    Command command = Command::expand;
    std::string input = "-";
    std::optional<int> degree;
    std::optional<int> colors;
    Format format = Format::text;
    bool cross_check = false;
    bool all_subsets = false;
    bool parallel = false;
    std::uint64_t max_subsets = default_max_subsets;
};

/// Reads KROMATIC_MAX_SUBSETS; nullopt when unset. Throws std::invalid_argument on garbage.
auto max_subsets_from_environment() -> std::optional<std::uint64_t>;

/// Executes `config` on graph-file text; returns the process exit code.
auto run(const Config & config, std::string_view graph_text, std::ostream & out, std::ostream & err) -> int;

/// Example graphs in graph-file format: "k21", "edge", or "all" (both, read together as their disjoint union).
auto demo_graphs(std::string_view which) -> std::string;

}

#endif
