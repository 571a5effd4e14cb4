#include "mmbs/cli.hpp"

#include "mmbs/bernstein.hpp"
#include "mmbs/errors.hpp"
#include "mmbs/mmi.hpp"
#include "mmbs/newton.hpp"
#include "mmbs/plot.hpp"
#include "mmbs/problem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace mmbs {

using nlohmann::json;

namespace {

struct Flags {
    std::string problem_path;
    std::string lambda;
    std::string box;
    std::string alpha;
    std::string max;
    std::string plot;
    std::string extra;
    std::string certificate;
    std::size_t samples = 0;
    bool samples_set = false;
    std::size_t ideal = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    return parts;
}

json rationals_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_string(r));
    return a;
}

json walls_json(const std::vector<Wall>& walls) {
    json a = json::array();
    for (const auto& w : walls) a.push_back({{"coeffs", w.coeffs}, {"rhs", w.rhs}});
    return a;
}

json factors_json(const ProductOfLinearForms& b) {
    json factors = json::array();
    for (const auto& f : b.factors()) factors.push_back({{"coeffs", f.coeffs}, {"constant", f.constant}});
    return {{"factors", factors}, {"text", b.to_string()}};
}

json probes_json(const std::vector<RegionProbe>& probes) {
    json a = json::array();
    for (const auto& p : probes) {
        a.push_back({{"point", rationals_json(p.point.coords())},
                     {"generators", p.ideal.generators()},
                     {"open_cell", p.open_cell},
                     {"axis_degenerate", p.axis_degenerate}});
    }
    return a;
}

class Session {
public:
    Session(const Flags& flags, std::istream& in) : flags_(flags) {
        std::string text;
        if (flags.problem_path.empty() || flags.problem_path == "-") {
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        } else {
            std::ifstream file(flags.problem_path, std::ios::binary);
            if (!file) throw InvalidArgument("cannot read problem file '" + flags.problem_path + "'");
            std::ostringstream ss;
            ss << file.rdbuf();
            text = ss.str();
        }
        problem_ = parse_problem(text);
        if (!problem_.resolution_mode()) rd_ = resolution_data(problem_.ideals);
        else rd_ = *problem_.resolution;
    }

    int newton(json& doc) {
        require_ideals("newton");
        json ideals = json::array();
        for (const auto& I : problem_.ideals) {
            auto poly = newton_polyhedron(I);
            auto hs = [](const std::vector<HalfSpace>& v) {
                json a = json::array();
                for (const auto& h : v) a.push_back({{"normal", h.normal}, {"rhs", to_string(h.rhs)}});
                return a;
            };
            ideals.push_back({{"vertices", poly.vertices},
                              {"coordinate_halfspaces", hs(poly.coordinate_halfspaces)},
                              {"facets", hs(poly.facets)}});
        }
        doc["ideals"] = ideals;
        doc["resolution_data"] = {{"rays", rd_.rays}, {"e", rd_.e}, {"k", rd_.k}, {"affine_flags", rd_.affine_flags}};
        return kExitOk;
    }

    int mmi(json& doc) {
        auto lambda = lambda_flag();
        if (problem_.resolution_mode()) {
            json values = json::array();
            for (std::size_t j = 0; j < rd_.rays.size(); ++j) {
                values.push_back({{"ray", rd_.rays[j]}, {"value", to_string(Rational(ceil(-weighted_rhs(rd_, lambda, j))))}});
            }
            doc["mode"] = "valuation";
            doc["note"] = "per-ray coefficients of ceil(K - sum lambda_i F_i); the ideal is not determined by divisor data alone";
            doc["values"] = values;
            return kExitOk;
        }
        doc["generators"] = mixed_multiplier_ideal(rd_, lambda).generators();
        return kExitOk;
    }

    int walls(json& doc) {
        const Rational box = box_flag();
        auto walls = candidate_walls(rd_, box);
        if (!flags_.plot.empty()) {
            WallPlot plot{box, walls, {}, std::nullopt, {}};
            if (rd_.num_ideals != 2) throw UnsupportedInput("wall plots need exactly two ideals");
            if (!problem_.resolution_mode()) plot.jumping_points = wall_jumping_samples(rd_, walls, box);
            if (!flags_.alpha.empty()) {
                require_ideals("walls --alpha");
                plot.alpha = alpha_flag();
                plot.ray_jumps = ray_jumping_numbers(rd_, problem_.ideals, *plot.alpha, box / max_entry(*plot.alpha));
            }
            emit_wall_plot(plot, flags_.plot);
        }
        doc["walls"] = walls_json(walls);
        return kExitOk;
    }

    int jump(json& doc) {
        require_ideals("jump");
        auto lambda = lambda_flag();
        doc["lambda"] = rationals_json(lambda.coords());
        doc["jumping_point"] = is_jumping_point(rd_, lambda);
        return kExitOk;
    }

    int region(json& doc) {
        require_ideals("region");
        auto report = region_report(rd_, lambda_flag(), box_flag());
        doc["base"] = rationals_json(report.base.coords());
        doc["ideal_at_base"] = report.ideal_at_base.generators();
        doc["walls_active"] = walls_json(report.walls_active);
        doc["constancy_sample"] = probes_json(report.constancy_sample);
        doc["region_sample"] = probes_json(report.region_sample);
        doc["outside_sample"] = probes_json(report.outside_sample);
        return kExitOk;
    }

    int ray(json& doc) {
        require_ideals("ray");
        auto alpha = alpha_flag();
        const Rational max = flags_.max.empty() ? problem_.options.max_param.value_or(1) : parse_rational(flags_.max);
        if (max <= 0) throw InvalidArgument("--max must be positive");
        auto jumps = ray_jumping_numbers(rd_, problem_.ideals, alpha, max);
        if (!flags_.plot.empty()) {
            const Rational box = box_flag();
            auto walls = candidate_walls(rd_, box);
            WallPlot plot{box, walls, {}, alpha, {}};
            if (rd_.num_ideals != 2) throw UnsupportedInput("wall plots need exactly two ideals");
            for (const auto& mu : jumps) {
                if (mu * max_entry(alpha) <= box) plot.ray_jumps.push_back(mu);
            }
            emit_wall_plot(plot, flags_.plot);
        }
        doc["alpha"] = alpha;
        doc["jumping_numbers"] = rationals_json(jumps);
        doc["product_ideal"] = product_power(problem_.ideals, alpha).generators();
        return kExitOk;
    }

    int bsideal(json& doc) {
        require_ideals("bsideal");
        if (!all_principal()) return unsupported_family(doc);
        auto gens = bs_ideal_principal_monomial(problem_.ideals);
        doc["bg_generator"] = factors_json(gens.full);
        doc["reduced_generator"] = factors_json(gens.reduced);
        doc["delta_orders"] = gens.delta_orders;
        doc["certified"] = true;
        doc["unit_factor_inclusion"] = inclusion_check_unit_factors(gens.full);
        doc["membership"] = "witnessed: b lies in B_G via the functional equation; principality of B_G is not asserted";
        return kExitOk;
    }

    int verify_main(json& doc) {
        require_ideals("verify-main");
        if (!all_principal()) return unsupported_family(doc);
        const std::size_t samples = flags_.samples_set ? flags_.samples : problem_.options.samples.value_or(5);
        auto report = verify_theorem_main(problem_.ideals, samples);
        if (!flags_.plot.empty()) {
            if (rd_.num_ideals != 2) throw UnsupportedInput("wall plots need exactly two ideals");
            WallPlot plot{1, candidate_walls(rd_, 1), report.jumping_points, std::nullopt, {}};
            emit_wall_plot(plot, flags_.plot);
        }
        json walls = json::array();
        for (const auto& wc : report.walls) {
            json w = {{"coeffs", wc.wall.coeffs}, {"rhs", wc.wall.rhs}, {"jumping_points", wc.jumping_points}};
            if (wc.jumping_points > 0) {
                w["factor"] = wc.factor_found ? json(wc.factor.to_string()) : json(nullptr);
                w["restriction_vanishes"] = wc.restriction_vanishes;
            }
            walls.push_back(std::move(w));
        }
        json violations = json::array();
        for (const auto& v : report.violations)
            violations.push_back({{"lambda", rationals_json(v.lambda.coords())}, {"reason", v.reason}});
        doc["status"] = report.pass ? "pass" : "fail";
        doc["checked_points"] = report.checked_points;
        doc["candidate_points"] = report.candidate_points;
        doc["walls"] = walls;
        doc["violations"] = violations;
        doc["reduced_generator"] = report.generators.reduced.to_string();
        doc["scope"] = "checks use the witnessed generator b in B_G; vanishing of b at -lambda is what is certified";
        return report.pass ? kExitOk : kExitVerificationFailed;
    }

    int independence(json& doc) {
        require_ideals("independence");
        if (flags_.extra.empty() || flags_.certificate.empty())
            throw InvalidArgument("independence needs --extra and --certificate");
        if (flags_.ideal < 1 || flags_.ideal > problem_.ideals.size()) throw InvalidArgument("--ideal out of range");
        const auto& gens = problem_.ideals[flags_.ideal - 1].generators();
        const std::size_t n = problem_.ambient_dim;
        const VariableList xs = x_variables(n);
        std::map<std::string, std::string> aliases;
        const std::string short_names = "xyz";
        if (n <= 3) {
            for (std::size_t t = 0; t < n; ++t) aliases[std::string(1, short_names[t])] = xs[t];
        }
        Polynomial h = parse_polynomial(flags_.extra, xs, aliases);
        std::vector<Polynomial> z;
        for (const auto& part : split(flags_.certificate, ',')) z.push_back(parse_polynomial(part, xs, aliases));
        bool valid = generator_independence_certificate(gens, n, h, z);
        json subs = json::array();
        for (std::size_t j = 0; j < z.size(); ++j) {
            subs.push_back("y" + std::to_string(j + 1) + " -> y" + std::to_string(j + 1) + " - (" + z[j].to_string() + ")*y" +
                           std::to_string(z.size() + 1));
        }
        doc["valid"] = valid;
        doc["extra"] = h.to_string();
        doc["substitution"] = subs;
        return kExitOk;
    }

private:
    void require_ideals(const std::string& command) const {
        if (problem_.resolution_mode())
            throw InvalidArgument("command '" + command + "' needs monomial ideals, not resolution data");
    }

    bool all_principal() const {
        return std::all_of(problem_.ideals.begin(), problem_.ideals.end(), [](const MonomialIdeal& I) { return I.is_principal(); });
    }

    int unsupported_family(json& doc) const {
        const Rational box = box_flag();
        doc["status"] = "unsupported-family";
        doc["candidate"] = true;
        doc["candidate_walls"] = walls_json(candidate_walls(rd_, box));
        doc["note"] = "exact Bernstein-Sato ideals are computed for principal monomial ideals only; the listed hyperplanes are candidates, not certified";
        return kExitUnsupported;
    }

    LambdaPoint lambda_flag() const {
        if (flags_.lambda.empty()) throw InvalidArgument("--lambda is required");
        RationalVector coords;
        for (const auto& part : split(flags_.lambda, ',')) coords.push_back(parse_rational(part));
        if (coords.size() != problem_.num_ideals())
            throw DimensionMismatch("--lambda has " + std::to_string(coords.size()) + " entries for " +
                                    std::to_string(problem_.num_ideals()) + " ideals");
        return LambdaPoint(std::move(coords));
    }

    Rational box_flag() const {
        Rational box = flags_.box.empty() ? problem_.options.box_max.value_or(1) : parse_rational(flags_.box);
        if (box <= 0) throw InvalidArgument("--box must be positive");
        return box;
    }

    std::vector<std::int64_t> alpha_flag() const {
        if (flags_.alpha.empty()) throw InvalidArgument("--alpha is required");
        std::vector<std::int64_t> alpha;
        for (const auto& part : split(flags_.alpha, ',')) {
            Rational r = parse_rational(part);
            if (!is_integer(r) || r <= 0) throw InvalidArgument("--alpha entries must be positive integers");
            alpha.push_back(to_int64(r.get_num()));
        }
        if (alpha.size() != problem_.num_ideals()) throw DimensionMismatch("--alpha length differs from the number of ideals");
        return alpha;
    }

    static Rational max_entry(const std::vector<std::int64_t>& alpha) {
        return Rational(*std::max_element(alpha.begin(), alpha.end()));
    }

    const Flags& flags_;
    ProblemFile problem_;
    ResolutionData rd_;
};

int exit_code_for(const Error& e) { return e.kind() == "unsupported-input" ? kExitUnsupported : kExitInputError; }

json error_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
    CLI::App app{"Mixed multiplier ideals, jumping walls and Bernstein-Sato ideals of monomial ideals", "mmbs"};
    app.require_subcommand(1);
    Flags flags;

    struct Command {
        const char* name;
        const char* help;
        int (Session::*run)(json&);
    };
    const std::vector<Command> commands = {
        {"newton", "Newton polyhedra and resolution data", &Session::newton},
        {"mmi", "mixed multiplier ideal at --lambda", &Session::mmi},
        {"walls", "candidate jumping walls in [0, --box]^l", &Session::walls},
        {"jump", "is --lambda a jumping point", &Session::jump},
        {"region", "region and constancy region of --lambda", &Session::region},
        {"ray", "jumping points on the ray mu * --alpha", &Session::ray},
        {"bsideal", "Bernstein-Sato ideal generator (principal monomial ideals)", &Session::bsideal},
        {"verify-main", "check jumping points of norm < 1 against the Bernstein-Sato zero locus", &Session::verify_main},
        {"independence", "verify a generator-independence certificate", &Session::independence},
    };
    std::vector<CLI::App*> subs;
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("problem", flags.problem_path, "problem file (default: standard input)");
        sub->add_option("--lambda", flags.lambda, "comma-separated rationals");
        sub->add_option("--box", flags.box, "box bound p/q");
        sub->add_option("--alpha", flags.alpha, "comma-separated positive integers");
        sub->add_option("--max", flags.max, "largest ray parameter p/q");
        sub->add_option("--samples", flags.samples, "rational samples per wall segment");
        sub->add_option("--plot", flags.plot, "write an SVG wall diagram (two ideals)");
        sub->add_option("--extra", flags.extra, "extra generator h of the ideal");
        sub->add_option("--certificate", flags.certificate, "comma-separated z_j with h = sum z_j f_j");
        sub->add_option("--ideal", flags.ideal, "1-based ideal index for independence");
        subs.push_back(sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        out << error_json("usage-error", e.what()).dump() << "\n";
        return kExitInputError;
    }
    for (auto* sub : subs) {
        if (sub->count("--samples") > 0) flags.samples_set = true;
    }

    json doc = json::object();
    int code = kExitOk;
    try {
        Session session(flags, in);
        for (std::size_t i = 0; i < commands.size(); ++i) {
            if (subs[i]->parsed()) code = (session.*commands[i].run)(doc);
        }
    } catch (const Error& e) {
        out << error_json(e.kind(), e.what()).dump() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        out << error_json("internal-error", e.what()).dump() << "\n";
        return kExitInputError;
    }
    out << doc.dump() << "\n";
    return code;
}

}  // namespace mmbs
