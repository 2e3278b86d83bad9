// kromatic: p̄-expansions of Kromatic symmetric functions of weighted graphs.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include <kromatic/cli.hpp>

using namespace kromatic;

namespace
{
    auto read_input(const std::string & path, std::string & text) -> bool
    {
        if (path == "-") {
            text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
            return true;
        }
        std::ifstream file(path, std::ios::binary);
        if (! file)
            return false;
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        return true;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Truncated p̄-expansions of Kromatic symmetric functions"};
    app.require_subcommand(0, 1);

    std::string demo;
    app.add_option("--demo", demo, "Print an example graph (k21, edge, all) and exit")
        ->expected(0, 1)
        ->default_str("all");

    cli::Config config;
    std::string format = "text";
    const std::map<std::string, cli::Format> formats{{"text", cli::Format::text}, {"json", cli::Format::json}};

    struct Subcommand
    {
        cli::Command command;
        const char * name;
        const char * help;
    };
    const Subcommand subcommand_table[] = {
        {cli::Command::expand, "expand", "p̄-expansion to degree D"},
        {cli::Command::ipoly, "ipoly", "Independence polynomial"},
        {cli::Command::exponents, "exponents", "Exponents a(1..D) of the whole graph"},
        {cli::Command::classic, "classic", "Ordinary chromatic symmetric function in power sums"},
        {cli::Command::verify, "verify", "Cross-check the expansion against brute-force oracles"},
    };

    std::vector<std::pair<CLI::App *, cli::Command>> subcommands;
    for (const auto & entry : subcommand_table) {
        auto * sub = app.add_subcommand(entry.name, entry.help);
        sub->add_option("input", config.input, "Graph file, or - for stdin")->capture_default_str();
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        if (entry.command != cli::Command::ipoly && entry.command != cli::Command::classic)
            sub->add_option("-d,--degree", config.degree, "Truncation degree D");
        if (entry.command == cli::Command::verify)
            sub->add_option("-n,--colors", config.colors, "Number of variables for the coloring oracle (default D)");
        if (entry.command == cli::Command::exponents)
            sub->add_flag("--cross-check", config.cross_check, "Also run the logarithm recurrence");
        if (entry.command == cli::Command::ipoly)
            sub->add_flag("--all-subsets", config.all_subsets, "Also list every induced subgraph");
        if (entry.command == cli::Command::expand || entry.command == cli::Command::verify)
            sub->add_flag("--parallel", config.parallel, "Use worker threads");
        subcommands.emplace_back(sub, entry.command);
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return cli::exit_config_error;
    }

    if (app.count("--demo") > 0) {
        try {
            std::cout << cli::demo_graphs(demo.empty() ? "all" : demo);
            return cli::exit_ok;
        }
        catch (const std::invalid_argument & e) {
            std::cerr << "error: " << e.what() << "\n";
            return cli::exit_config_error;
        }
    }

    bool chosen = false;
    for (auto [sub, command] : subcommands)
        if (sub->parsed()) {
            config.command = command;
            chosen = true;
        }
    if (! chosen) {
        std::cerr << app.help();
        return cli::exit_config_error;
    }
    config.format = formats.at(format);

    try {
        if (auto limit = cli::max_subsets_from_environment())
            config.max_subsets = *limit;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_config_error;
    }

    std::string text;
    if (! read_input(config.input, text)) {
        std::cerr << "error: cannot read '" << config.input << "'\n";
        return cli::exit_input_error;
    }
    return cli::run(config, text, std::cout, std::cerr);
}
