#ifndef KROMATIC_IO_HPP
#define KROMATIC_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include <kromatic/expansion.hpp>
#include <kromatic/oracle.hpp>
#include <kromatic/series.hpp>

namespace kromatic
{

using Json = nlohmann::ordered_json;

/// "p[3321]" style token prefix: "p" for both power-sum bases, "m~" for m̃.
auto term_prefix(Basis basis) -> std::string_view;

/**
 * Terms grouped by |λ| (ascending), coarsest partition first within a
 * group, explicit signs, coefficient 1 elided:
 *
 *     (-p[3] + p[21]) + (p[4] - p[31])
 *
 * An expansion with no terms renders as "0".
 */
auto render_text(const SymExpansion & expansion) -> std::string;

/// "a(1)=2 a(2)=-1 ..."
auto render_text(const ExponentVector & exponents) -> std::string;

/**
 * {"basis":"pbar","degree":D,"terms":[{"partition":[3,2,1],"coeff":"-1"}]}
 * Coefficients are decimal strings; terms follow partition_compare.
 */
auto to_json(const SymExpansion & expansion) -> Json;
auto expansion_from_json(const Json & json) -> SymExpansion;

auto to_json(const ExponentVector & exponents) -> Json;
auto to_json(const IntPolynomial & polynomial) -> Json;

/// [{"check": ..., "status": "pass|fail|skipped", "details": [...]}, ...]
auto to_json(const VerificationReport & report) -> Json;

}

#endif
