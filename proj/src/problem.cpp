#include "mmbs/problem.hpp"

#include "mmbs/errors.hpp"

namespace mmbs {

using nlohmann::json;

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::int64_t integer_from_json(const json& j, const std::string& field) {
    if (!j.is_number_integer()) throw InvalidArgument(field + ": expected an integer");
    return j.get<std::int64_t>();
}

std::size_t count_from_json(const json& j, const std::string& field) {
    auto v = integer_from_json(j, field);
    if (v < 0) throw InvalidArgument(field + ": expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InvalidArgument(where + ": missing field '" + key + "'");
    return *it;
}

std::vector<std::int64_t> int_vector(const json& j, const std::string& field) {
    if (!j.is_array()) throw InvalidArgument(field + ": expected an array");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

ExponentVector exponent_from_json(const json& j, std::size_t n, const std::string& field) {
    ExponentVector v;
    if (j.is_string()) {
        try {
            v = parse_monomial(j.get<std::string>(), n);
        } catch (const Error& e) {
            throw ParseError(field + ": " + e.what());
        }
    } else {
        v = int_vector(j, field);
    }
    if (v.size() != n)
        throw DimensionMismatch(field + ": length " + std::to_string(v.size()) + " differs from n = " + std::to_string(n));
    for (auto x : v) {
        if (x < 0) throw InvalidArgument(field + ": negative exponent");
    }
    return v;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    if (!j.is_string()) throw InvalidArgument(field + ": expected a rational string \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(field + ": " + e.what());
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(field + ": " + e.what());
    }
}

json rational_to_json(const Rational& r) { return to_string(r); }

ProblemFile parse_problem(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann messages read "[json.exception...] parse error at line L, column C: <reason>".
        std::string reason = e.what();
        if (auto colon = reason.find(": "); colon != std::string::npos) reason = reason.substr(colon + 2);
        throw ParseError("syntax error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + reason);
    }
    if (!doc.is_object()) throw ParseError("problem document must be a JSON object");

    ProblemFile p;
    const bool has_ideals = doc.contains("ideals"), has_rd = doc.contains("resolution_data");
    if (has_ideals == has_rd) throw InvalidArgument("problem needs exactly one of 'ideals' or 'resolution_data'");

    if (has_ideals) {
        p.ambient_dim = count_from_json(require(doc, "n", "problem"), "n");
        if (p.ambient_dim == 0) throw InvalidArgument("n: ambient dimension must be positive");
        const auto& ideals = doc["ideals"];
        if (!ideals.is_array() || ideals.empty()) throw InvalidArgument("ideals: expected a nonempty array");
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            const std::string where = "ideals[" + std::to_string(i) + "]";
            if (!ideals[i].is_object()) throw InvalidArgument(where + ": expected an object");
            const auto& monos = require(ideals[i], "monomials", where);
            if (!monos.is_array() || monos.empty()) throw InvalidArgument(where + ".monomials: expected a nonempty array");
            std::vector<ExponentVector> gens;
            for (std::size_t g = 0; g < monos.size(); ++g)
                gens.push_back(exponent_from_json(monos[g], p.ambient_dim, where + ".monomials[" + std::to_string(g) + "]"));
            p.ideals.emplace_back(p.ambient_dim, std::move(gens));
        }
    } else {
        const auto& rdj = doc["resolution_data"];
        if (!rdj.is_object()) throw InvalidArgument("resolution_data: expected an object");
        ResolutionData rd;
        const auto& rays = require(rdj, "rays", "resolution_data");
        if (!rays.is_array() || rays.empty()) throw InvalidArgument("resolution_data.rays: expected a nonempty array");
        for (std::size_t j = 0; j < rays.size(); ++j)
            rd.rays.push_back(int_vector(rays[j], "resolution_data.rays[" + std::to_string(j) + "]"));
        rd.ambient_dim = rd.rays.front().size();
        if (doc.contains("n")) {
            p.ambient_dim = count_from_json(doc["n"], "n");
            if (p.ambient_dim != rd.ambient_dim) throw DimensionMismatch("n: differs from the ray length");
        }
        p.ambient_dim = rd.ambient_dim;
        const auto& e = require(rdj, "e", "resolution_data");
        if (!e.is_array() || e.empty()) throw InvalidArgument("resolution_data.e: expected a nonempty array");
        for (std::size_t i = 0; i < e.size(); ++i) rd.e.push_back(int_vector(e[i], "resolution_data.e[" + std::to_string(i) + "]"));
        rd.num_ideals = rd.e.size();
        rd.k = int_vector(require(rdj, "k", "resolution_data"), "resolution_data.k");
        if (rdj.contains("affine_flags")) {
            const auto& f = rdj["affine_flags"];
            if (!f.is_array()) throw InvalidArgument("resolution_data.affine_flags: expected an array");
            for (std::size_t j = 0; j < f.size(); ++j) {
                if (!f[j].is_boolean()) throw InvalidArgument("resolution_data.affine_flags[" + std::to_string(j) + "]: expected a boolean");
                rd.affine_flags.push_back(f[j].get<bool>());
            }
        } else {
            rd.affine_flags.assign(rd.rays.size(), false);
        }
        try {
            rd.validate();
        } catch (const Error& err) {
            throw InvalidArgument(std::string("resolution_data: ") + err.what());
        }
        p.resolution = std::move(rd);
    }

    if (doc.contains("options")) {
        const auto& o = doc["options"];
        if (!o.is_object()) throw InvalidArgument("options: expected an object");
        for (const auto& [key, value] : o.items()) {
            const std::string field = "options." + key;
            if (key == "box_max") {
                p.options.box_max = rational_from_json(value, field);
                if (*p.options.box_max <= 0) throw InvalidArgument(field + ": must be positive");
            } else if (key == "max_param") {
                p.options.max_param = rational_from_json(value, field);
                if (*p.options.max_param <= 0) throw InvalidArgument(field + ": must be positive");
            } else if (key == "samples") {
                p.options.samples = count_from_json(value, field);
            } else {
                throw InvalidArgument(field + ": unknown option");
            }
        }
    }
    return p;
}

json problem_to_json(const ProblemFile& p) {
    json doc = json::object();
    if (p.resolution) {
        const auto& rd = *p.resolution;
        doc["n"] = rd.ambient_dim;
        doc["resolution_data"] = {{"rays", rd.rays}, {"e", rd.e}, {"k", rd.k}, {"affine_flags", rd.affine_flags}};
    } else {
        doc["n"] = p.ambient_dim;
        json ideals = json::array();
        for (const auto& I : p.ideals) ideals.push_back({{"monomials", I.generators()}});
        doc["ideals"] = std::move(ideals);
    }
    json options = json::object();
    if (p.options.box_max) options["box_max"] = rational_to_json(*p.options.box_max);
    if (p.options.max_param) options["max_param"] = rational_to_json(*p.options.max_param);
    if (p.options.samples) options["samples"] = *p.options.samples;
    if (!options.empty()) doc["options"] = std::move(options);
    return doc;
}

std::string print_problem(const ProblemFile& p) { return problem_to_json(p).dump(); }

}  // namespace mmbs
