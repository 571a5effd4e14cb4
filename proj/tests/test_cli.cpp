#include "mmbs/cli.hpp"
#include "mmbs/errors.hpp"
#include "mmbs/plot.hpp"
#include "mmbs/problem.hpp"
#include "support/gen.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mmbs;
namespace fs = std::filesystem;

namespace {

const fs::path kGolden = fs::path(MMBS_SOURCE_DIR) / "tests" / "golden";

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Run {
    int code;
    std::string out;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    int code = run_cli(args, in, out);
    return {code, out.str()};
}

}  // namespace

TEST_CASE("parse_problem examples") {
    auto p = parse_problem(R"({"n":1,"ideals":[{"monomials":[[2]]}]})");
    CHECK(p.ambient_dim == 1);
    REQUIRE(p.ideals.size() == 1);
    CHECK(p.ideals[0] == MonomialIdeal(1, {{2}}));

    p = parse_problem(R"({"n":2,"ideals":[{"monomials":[[1,0]]},{"monomials":[[1,1]]}]})");
    CHECK(p.ideals == std::vector<MonomialIdeal>{MonomialIdeal(2, {{1, 0}}), MonomialIdeal(2, {{1, 1}})});

    p = parse_problem(R"({"resolution_data":{"rays":[[1,1]],"e":[[1]],"k":[1]}})");
    CHECK(p.resolution_mode());
    CHECK(p.resolution->rays == std::vector<ExponentVector>{{1, 1}});
    CHECK(p.resolution->affine_flags == std::vector<bool>{false});

    p = parse_problem(R"({"n":2,"ideals":[{"monomials":["x^2*y","y^3"]}],"options":{"box_max":"3/2","max_param":2,"samples":7}})");
    CHECK(p.ideals[0] == MonomialIdeal(2, {{2, 1}, {0, 3}}));
    CHECK(p.options.box_max == make_rational(3, 2));
    CHECK(p.options.max_param == Rational(2));
    CHECK(p.options.samples == 7u);
}

TEST_CASE("parse_problem errors") {
    CHECK_THROWS_AS(parse_problem("{\"n\":1,\n \"ideals\": [}"), ParseError);
    try {
        parse_problem("{\"n\":1,\n \"ideals\": [}");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_problem(R"({"n":2,"ideals":[{"monomials":[[1]]}]})"), DimensionMismatch);
    CHECK_THROWS_AS(parse_problem(R"({"n":1,"ideals":[{"monomials":[[-1]]}]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_problem(R"({"n":1,"ideals":[{"monomials":[[1]]}],"options":{"box_max":"1/0"}})"),
                    InvalidArgument);
    CHECK_THROWS(parse_problem(R"({"n":1,"ideals":[{"monomials":[[1]]}],"resolution_data":{"rays":[[1]],"e":[[1]],"k":[0]}})"));
    CHECK_THROWS(parse_problem(R"({"n":1})"));
    try {
        parse_problem(R"({"n":2,"ideals":[{"monomials":[[1,0]]},{"monomials":[[1,0,4]]}]})");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("ideals[1]") != std::string::npos);
    }
}

TEST_CASE("property: print/parse round trip") {
    mmbs::testing::Rng rng(51);
    for (int round = 0; round < 100; ++round) {
        ProblemFile p;
        p.ambient_dim = static_cast<std::size_t>(rng.between(1, 3));
        for (int i = 0; i < rng.between(1, 3); ++i) p.ideals.push_back(mmbs::testing::random_ideal(rng, p.ambient_dim, 3, 4));
        if (rng.coin()) p.options.box_max = rng.rational(5, 3) + 1;
        if (rng.coin()) p.options.samples = static_cast<std::size_t>(rng.between(1, 9));
        if (rng.coin()) {
            p.resolution = resolution_data(p.ideals);
            p.ideals.clear();
        }
        CHECK(parse_problem(print_problem(p)) == p);
    }
}

TEST_CASE("plots") {
    std::vector<Wall> none;
    WallPlot empty{1, none, {}, std::nullopt, {}};
    auto svg = render_wall_plot(empty);
    CHECK(svg.find("<rect x=\"40\"") != std::string::npos);
    CHECK(svg.find("<line") == std::string::npos);
    CHECK(render_wall_plot(empty) == svg);

    std::vector<MonomialIdeal> x_xy = {MonomialIdeal(2, {{1, 0}}), MonomialIdeal(2, {{1, 1}})};
    auto rd = resolution_data(x_xy);
    auto walls = candidate_walls(rd, 1);
    WallPlot plot{1, walls, wall_jumping_samples(rd, walls, 1), std::vector<std::int64_t>{1, 1},
                  std::vector<Rational>{make_rational(1, 2), 1}};
    auto first = render_wall_plot(plot);
    CHECK(first == render_wall_plot(plot));
    CHECK(first.find("stroke-dasharray") != std::string::npos);

    std::vector<MonomialIdeal> x2 = {MonomialIdeal(1, {{2}})};
    auto rd1 = resolution_data(x2);
    WallPlot bad{1, candidate_walls(rd1, 1), {}, std::nullopt, {}};
    CHECK_THROWS_AS(render_wall_plot(bad), UnsupportedInput);
}

TEST_CASE("command line: spec outputs, help and usage") {
    const std::string x2 = R"({"n":1,"ideals":[{"monomials":[[2]]}]})";
    auto r = run({"mmi", "--lambda", "1/2"}, x2);
    CHECK(r.code == 0);
    CHECK(r.out == "{\"generators\":[[1]]}\n");
    r = run({"walls", "--box", "1"}, x2);
    CHECK(r.out == "{\"walls\":[{\"coeffs\":[2],\"rhs\":1},{\"coeffs\":[2],\"rhs\":2}]}\n");
    r = run({"verify-main"}, R"({"n":2,"ideals":[{"monomials":[[1,0]]},{"monomials":[[1,1]]}]})");
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["status"] == "pass");
    CHECK(doc["checked_points"].get<int>() > 0);
    CHECK(doc["walls"].is_array());

    r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify-main") != std::string::npos);
    r = run({});
    CHECK(r.code == 1);
    CHECK(nlohmann::json::parse(r.out).contains("error"));
}

TEST_CASE("command line: golden files") {
    const bool regen = std::getenv("MMBS_REGEN_GOLDEN") != nullptr;
    const fs::path scratch = fs::temp_directory_path() / "mmbs_golden";
    fs::create_directories(scratch);
    auto cases = nlohmann::json::parse(slurp(kGolden / "cases.json"));
    CHECK(cases.size() >= 27);
    for (const auto& c : cases) {
        const std::string name = c["name"];
        CAPTURE(name);
        std::vector<std::string> args;
        for (std::string a : c["args"]) {
            auto pos = a.find("{out}");
            if (pos != std::string::npos) a.replace(pos, 5, scratch.string());
            args.push_back(a);
        }
        // Alternate between stdin and a positional path.
        const fs::path fixture = kGolden / "fixtures" / c["fixture"].get<std::string>();
        std::string input;
        if (args.size() % 2 == 0) input = slurp(fixture);
        else args.push_back(fixture.string());

        auto r = run(args, input);
        CHECK(r.code == c["exit"].get<int>());
        auto again = run(args, input);
        CHECK(again.out == r.out);
        CHECK(nlohmann::json::parse(r.out).is_object());

        const fs::path expected = kGolden / "expected" / (name + ".json");
        if (regen) {
            std::ofstream(expected, std::ios::binary) << r.out;
        } else {
            CHECK(r.out == slurp(expected));
        }
        if (c.contains("plot")) {
            const std::string plot = c["plot"];
            const std::string produced = slurp(scratch / plot);
            CHECK(!produced.empty());
            if (regen) std::ofstream(kGolden / "expected" / plot, std::ios::binary) << produced;
            else CHECK(produced == slurp(kGolden / "expected" / plot));
        }
    }
}
