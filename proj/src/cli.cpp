#include <kromatic/cli.hpp>

#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <kromatic/expansion.hpp>
#include <kromatic/graph.hpp>
#include <kromatic/io.hpp>
#include <kromatic/oracle.hpp>

namespace kromatic::cli
{

auto max_subsets_from_environment() -> std::optional<std::uint64_t>
{
    const char * value = std::getenv("KROMATIC_MAX_SUBSETS");
    if (value == nullptr || *value == '\0')
        return std::nullopt;
    std::string text(value);
    if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19)
        throw std::invalid_argument("KROMATIC_MAX_SUBSETS must be a positive integer, got '" + text + "'");
    auto parsed = std::stoull(text);
    if (parsed == 0)
        throw std::invalid_argument("KROMATIC_MAX_SUBSETS must be positive");
    return parsed;
}

auto demo_graphs(std::string_view which) -> std::string
{
    const std::string k21 = "# edge joining a weight-2 vertex and a weight-1 vertex\nv w 2\nv v 1\ne w v\n";
    const std::string edge = "# unweighted single edge\nv x\nv y\ne x y\n";
    if (which == "k21")
        return k21;
    if (which == "edge")
        return edge;
    if (which == "all")
        return k21 + "\n" + edge;
    throw std::invalid_argument("unknown demo graph '" + std::string(which) + "' (k21, edge, all)");
}

namespace
{
    auto subset_labels(const WeightedGraph & graph, VertexSubset subset) -> std::vector<std::string>
    {
        std::vector<std::string> labels;
        for (int v : subset.vertices())
            labels.push_back(graph.label(v));
        return labels;
    }

    auto braces(const std::vector<std::string> & labels) -> std::string
    {
        std::string out = "{";
        for (std::size_t i = 0; i < labels.size(); ++i)
            out += (i ? "," : "") + labels[i];
        return out + "}";
    }

    auto run_ipoly(const Config & config, const WeightedGraph & graph, std::ostream & out) -> int
    {
        auto polynomial = independence_polynomial(graph);
        if (config.format == Format::json) {
            Json json = {{"polynomial", to_json(polynomial)}};
            if (config.all_subsets) {
                Json subsets = Json::array();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << graph.vertex_count()); ++mask)
                    subsets.push_back({{"vertices", subset_labels(graph, VertexSubset(mask))},
                            {"polynomial", to_json(independence_polynomial(graph, VertexSubset(mask)))}});
                json["subsets"] = std::move(subsets);
            }
            out << json.dump() << "\n";
            return exit_ok;
        }

        out << "I(t) = " << polynomial.to_string() << "\n";
        if (config.all_subsets)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << graph.vertex_count()); ++mask)
                out << braces(subset_labels(graph, VertexSubset(mask))) << ": "
                    << independence_polynomial(graph, VertexSubset(mask)).to_string() << "\n";
        return exit_ok;
    }

    auto run_exponents(const Config & config, const WeightedGraph & graph, std::ostream & out) -> int
    {
        auto polynomial = independence_polynomial(graph);
        auto primary = exponents_by_integer_recurrence(polynomial, *config.degree);
        std::optional<ExponentVector> by_log;
        if (config.cross_check)
            by_log = exponents_by_log(polynomial, *config.degree);
        bool agree = ! by_log || *by_log == primary;

        if (config.format == Format::json) {
            Json json = to_json(primary);
            if (by_log) {
                json["log_recurrence"] = to_json(*by_log)["a"];
                json["cross_check"] = agree ? "agree" : "disagree";
            }
            out << json.dump() << "\n";
        }
        else {
            out << render_text(primary) << "\n";
            if (by_log) {
                if (agree)
                    out << "cross-check: log recurrence agrees\n";
                else
                    out << "cross-check: log recurrence gives " << render_text(*by_log) << "\n";
            }
        }
        return agree ? exit_ok : exit_verification_failed;
    }

    auto run_verify(const Config & config, const WeightedGraph & graph, std::ostream & out) -> int
    {
        ExpansionOptions options;
        options.parallel = config.parallel;
        auto report = verify_graph(graph, *config.degree, config.colors, options);

        if (config.format == Format::json)
            out << to_json(report).dump() << "\n";
        else {
            for (const auto & check : report.checks) {
                out << check.check << ": " << status_name(check.status) << "\n";
                for (const auto & detail : check.details)
                    out << "    " << detail << "\n";
            }
            out << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
        }
        return report.passed() ? exit_ok : exit_verification_failed;
    }
}

auto run(const Config & config, std::string_view graph_text, std::ostream & out, std::ostream & err) -> int
{
    bool needs_degree = config.command == Command::expand || config.command == Command::exponents
        || config.command == Command::verify;
    if (needs_degree && ! config.degree) {
        err << "error: --degree is required for this command\n";
        return exit_config_error;
    }
    if (config.degree && *config.degree < 0) {
        err << "error: --degree must be nonnegative\n";
        return exit_config_error;
    }
    if (config.colors && *config.colors < 1) {
        err << "error: --colors must be at least 1\n";
        return exit_config_error;
    }
    if (config.colors && config.command != Command::verify) {
        err << "error: --colors only applies to verify\n";
        return exit_config_error;
    }

    WeightedGraph graph;
    try {
        graph = parse_graph(graph_text);
    }
    catch (const ParseError & e) {
        err << "parse error: " << e.what() << "\n";
        return exit_input_error;
    }

    if (graph.vertex_count() >= 64 || (std::uint64_t{1} << graph.vertex_count()) > config.max_subsets
            || graph.vertex_count() > max_table_vertices) {
        err << "error: " << graph.vertex_count() << " vertices need 2^" << graph.vertex_count()
            << " subsets, above the limit of " << config.max_subsets << " (KROMATIC_MAX_SUBSETS)\n";
        return exit_input_error;
    }

    try {
        switch (config.command) {
            case Command::expand: {
                ExpansionOptions options;
                options.parallel = config.parallel;
                auto expansion = kromatic_pbar_expansion(graph, *config.degree, options);
                out << (config.format == Format::json ? to_json(expansion).dump() : render_text(expansion)) << "\n";
                return exit_ok;
            }
            case Command::classic: {
                auto expansion = classical_p_expansion(graph);
                out << (config.format == Format::json ? to_json(expansion).dump() : render_text(expansion)) << "\n";
                return exit_ok;
            }
            case Command::ipoly:
                return run_ipoly(config, graph, out);
            case Command::exponents:
                return run_exponents(config, graph, out);
            case Command::verify:
                return run_verify(config, graph, out);
        }
    }
    catch (const std::length_error & e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }
    return exit_config_error;
}

}
