#include <kromatic/io.hpp>

#include <map>
#include <stdexcept>
#include <utility>

namespace kromatic
{

auto term_prefix(Basis basis) -> std::string_view
{
    return basis == Basis::mtilde ? "m~" : "p";
}

auto render_text(const SymExpansion & expansion) -> std::string
{
    if (expansion.empty())
        return "0";

    // groups by ascending size; coarsest partition first inside a group
    std::map<int, std::vector<std::pair<Partition, BigInt>>> groups;
    for (const auto & [lambda, c] : expansion.terms())
        groups[lambda.size()].emplace_back(lambda, c);

    std::string out;
    for (const auto & [size, group] : groups) {
        if (! out.empty())
            out += " + ";
        out += "(";
        for (auto term = group.rbegin(); term != group.rend(); ++term) {
            const auto & [lambda, c] = *term;
            if (term == group.rbegin())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            BigInt magnitude = abs(c);
            if (lambda.empty())
                out += magnitude.str();
            else {
                if (magnitude != 1)
                    out += magnitude.str();
                out += std::string(term_prefix(expansion.basis())) + "[" + lambda.to_string() + "]";
            }
        }
        out += ")";
    }
    return out;
}

auto render_text(const ExponentVector & exponents) -> std::string
{
    std::string out;
    for (int k = 1; k <= exponents.degree(); ++k)
        out += (k > 1 ? " " : "") + ("a(" + std::to_string(k) + ")=") + to_string(exponents.at(k));
    return out;
}

auto to_json(const SymExpansion & expansion) -> Json
{
    Json terms = Json::array();
    for (const auto & [lambda, c] : expansion.terms())
        terms.push_back({{"partition", lambda.parts()}, {"coeff", to_string(c)}});
    return {{"basis", basis_name(expansion.basis())}, {"degree", expansion.degree()}, {"terms", std::move(terms)}};
}

auto expansion_from_json(const Json & json) -> SymExpansion
{
    try {
        SymExpansion result(basis_from_name(json.at("basis").get<std::string>()), json.at("degree").get<int>());
        for (const auto & term : json.at("terms")) {
            Partition lambda(term.at("partition").get<std::vector<int>>());
            if (lambda.parts() != term.at("partition").get<std::vector<int>>())
                throw std::invalid_argument("partition parts must be weakly decreasing");
            if (result.terms().contains(lambda))
                throw std::invalid_argument("duplicate partition " + lambda.to_string());
            if (! result.empty() && lambda < result.terms().rbegin()->first)
                throw std::invalid_argument("term " + lambda.to_string() + " out of order");
            auto coefficient = parse_bigint(term.at("coeff").get<std::string>());
            if (coefficient == 0)
                throw std::invalid_argument("zero coefficient stored for " + lambda.to_string());
            result.set(lambda, coefficient);
        }
        return result;
    }
    catch (const nlohmann::json::exception & e) {
        throw std::invalid_argument(std::string("malformed expansion JSON: ") + e.what());
    }
}

auto to_json(const ExponentVector & exponents) -> Json
{
    Json values = Json::array();
    for (const auto & a : exponents.values())
        values.push_back(to_string(a));
    return {{"degree", exponents.degree()}, {"a", std::move(values)}};
}

auto to_json(const IntPolynomial & polynomial) -> Json
{
    Json values = Json::array();
    for (const auto & c : polynomial.coefficients())
        values.push_back(to_string(c));
    return values;
}

auto to_json(const VerificationReport & report) -> Json
{
    Json checks = Json::array();
    for (const auto & check : report.checks)
        checks.push_back({{"check", check.check}, {"status", status_name(check.status)}, {"details", check.details}});
    return checks;
}

}
