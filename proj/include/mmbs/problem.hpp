#pragma once

#include "mmbs/monomial.hpp"
#include "mmbs/newton.hpp"
#include "mmbs/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mmbs {

struct ProblemOptions {
    std::optional<Rational> box_max;
    std::optional<Rational> max_param;
    std::optional<std::size_t> samples;

    friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

/// A problem document: either a tuple of monomial ideals or raw resolution
/// data (rays, e-matrix, k-vector).
struct ProblemFile {
    std::size_t ambient_dim = 0;
    std::vector<MonomialIdeal> ideals;
    std::optional<ResolutionData> resolution;
    ProblemOptions options;

    bool resolution_mode() const noexcept { return resolution.has_value(); }
    std::size_t num_ideals() const noexcept { return resolution ? resolution->num_ideals : ideals.size(); }

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Parses and validates a problem document. Errors are ParseError (syntax,
/// with line and column), DimensionMismatch or InvalidArgument, each naming
/// the offending field.
ProblemFile parse_problem(const std::string& text);

nlohmann::json problem_to_json(const ProblemFile& problem);
/// Canonical compact rendering; parse_problem(print_problem(p)) == p.
std::string print_problem(const ProblemFile& problem);

/// "p/q" string or JSON integer.
Rational rational_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json rational_to_json(const Rational& r);

}  // namespace mmbs
