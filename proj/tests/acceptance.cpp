// Acceptance gate: one PASS/FAIL line per criterion. Exact arithmetic
// throughout, so every comparison has zero tolerance; only the wall-clock
// limits are numeric.

#include "mmbs/bernstein.hpp"
#include "mmbs/cli.hpp"
#include "mmbs/errors.hpp"
#include "mmbs/mmi.hpp"
#include "mmbs/oracle.hpp"
#include "support/gen.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace mmbs;
using mmbs::testing::Rng;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string failure;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) failure = what;
        pass = pass && ok;
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> body;
};

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::string str(const LambdaPoint& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + to_string(l[i]);
    return s + ")";
}

std::vector<MonomialIdeal> principal(std::size_t n, std::initializer_list<ExponentVector> gens) {
    std::vector<MonomialIdeal> out;
    for (const auto& g : gens) out.emplace_back(n, std::vector<ExponentVector>{g});
    return out;
}

std::vector<std::vector<MonomialIdeal>> theorem_family() {
    return {
        principal(2, {{1, 0}, {1, 1}}), principal(2, {{2, 0}, {1, 1}}), principal(2, {{1, 1}, {0, 2}}),
        principal(2, {{1, 0}, {0, 1}}), principal(2, {{2, 1}, {1, 2}}), principal(2, {{3, 0}, {0, 2}}),
        principal(2, {{2, 2}, {1, 0}}), principal(2, {{1, 3}, {2, 1}}), principal(3, {{1, 1, 0}, {0, 1, 1}}),
        principal(3, {{2, 0, 1}, {0, 2, 1}}), principal(3, {{1, 1, 1}, {1, 0, 0}}), principal(3, {{3, 1, 0}, {0, 1, 2}}),
    };
}

Outcome single_ideal_regression() {
    Outcome o;
    std::vector<MonomialIdeal> x2 = {MonomialIdeal(1, {{2}})};
    auto rd = resolution_data(x2);
    const std::vector<Rational> expected = {q(1, 2), q(1)};
    o.require(jumping_numbers(rd, 1) == expected, "jumping numbers of (x^2) in (0,1]");
    o.require(oracle::jumping_numbers_scan(x2[0], 1) == expected, "oracle scan of (x^2)");
    auto gens = bs_ideal_principal_monomial(x2);
    for (const auto& root : expected) o.require(gens.reduced.evaluate(RationalVector{-root}) == 0, "reduced generator at -" + to_string(root));
    std::vector<ExponentVector> g = {{2, 1}};
    o.require(functional_equation_check(g, gens.delta_orders, gens.full), "functional equation for x^2 y");
    o.detail = "jumping numbers {1/2, 1}; b = " + gens.full.to_string();
    return o;
}

Outcome theorem_suite() {
    Outcome o;
    std::size_t checked = 0, walls_certified = 0;
    const auto family = theorem_family();
    for (const auto& tuple : family) {
        auto report = verify_theorem_main(tuple, 5);
        const std::string name = "tuple " + monomial_string(tuple[0].generators()[0]) + ", " + monomial_string(tuple[1].generators()[0]);
        o.require(report.pass, name + " reported a violation");
        checked += report.checked_points;
        for (const auto& lambda : report.jumping_points) {
            Rational norm2 = 0;
            for (const auto& c : lambda.coords()) norm2 += c * c;
            o.require(norm2 < 1, name + ": point outside the unit ball " + str(lambda));
            o.require(mmbs::testing::principal_is_jump(tuple, lambda), name + ": not a jump by the closed form " + str(lambda));
            RationalVector minus;
            for (const auto& c : lambda.coords()) minus.push_back(-c);
            o.require(report.generators.reduced.evaluate(minus) == 0, name + ": reduced generator nonzero at -" + str(lambda));
        }
        for (const auto& wc : report.walls) {
            if (wc.jumping_points == 0) continue;
            o.require(wc.factor_found && wc.restriction_vanishes, name + ": wall without vanishing factor");
            ++walls_certified;
        }
    }
    o.require(checked > 0, "no points checked");
    o.detail = std::to_string(family.size()) + " tuples, " + std::to_string(checked) + " jumping points, " +
               std::to_string(walls_certified) + " walls with a vanishing factor";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    Rng rng(1001);
    std::size_t pairs = 0;
    while (pairs < 600) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 3));
        const std::size_t l = static_cast<std::size_t>(rng.between(1, 2));
        std::vector<MonomialIdeal> ideals;
        for (std::size_t i = 0; i < l; ++i) ideals.push_back(mmbs::testing::random_ideal(rng, n, 4, 3));
        auto rd = resolution_data(ideals);
        for (int k = 0; k < 3; ++k, ++pairs) {
            auto lambda = mmbs::testing::random_lambda(rng, l, 4, 2);
            auto box = oracle::sufficient_box(ideals, lambda.coords());
            auto fast = mixed_multiplier_ideal(rd, lambda);
            auto brute = oracle::mmi_bruteforce(ideals, lambda.coords(), box);
            o.require(fast == brute, "mismatch at lambda " + str(lambda));
        }
    }
    o.detail = std::to_string(pairs) + " (tuple, lambda) pairs";
    return o;
}

Outcome ray_consistency() {
    Outcome o;
    Rng rng(1002);
    std::size_t pairs = 0, non_diagonal = 0;
    while (pairs < 40) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 3));
        std::vector<MonomialIdeal> ideals = {mmbs::testing::random_ideal(rng, n, 3, 2),
                                             mmbs::testing::random_ideal(rng, n, 3, 2)};
        std::vector<std::int64_t> alpha = {rng.between(1, 3), rng.between(1, 2)};
        if (alpha[0] != alpha[1]) ++non_diagonal;
        const Rational max = make_rational(rng.between(2, 3), 2);
        // The elimination-based scan grows quickly with the number of generators.
        auto product = product_power(ideals, alpha);
        if (product.generators().size() > 6) continue;
        auto rd = resolution_data(ideals);
        auto along = ray_jumping_numbers(rd, ideals, alpha, max);
        auto scan = oracle::jumping_numbers_scan(product, max);
        o.require(along == scan, "ray alpha=(" + std::to_string(alpha[0]) + "," + std::to_string(alpha[1]) + ")");
        ++pairs;
    }
    o.require(non_diagonal > 0, "no alpha other than multiples of (1,1)");
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(non_diagonal) + " with unequal alpha entries";
    return o;
}

Outcome monotonicity_and_walls() {
    Outcome o;
    Rng rng(1003);
    std::size_t pairs = 0, jumps = 0;
    for (int round = 0; round < 110; ++round) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 3));
        const std::size_t l = static_cast<std::size_t>(rng.between(1, 2));
        std::vector<MonomialIdeal> ideals;
        for (std::size_t i = 0; i < l; ++i) ideals.push_back(mmbs::testing::random_ideal(rng, n, 4, 3));
        auto rd = resolution_data(ideals);
        auto walls = candidate_walls(rd, 2);
        for (int k = 0; k < 5; ++k, ++pairs) {
            auto lambda = mmbs::testing::random_lambda(rng, l, 4, 2);
            auto below = mmbs::testing::random_below(rng, lambda, 5);
            o.require(mixed_multiplier_ideal(rd, below).contains(mixed_multiplier_ideal(rd, lambda)),
                      "J" + str(below) + " does not contain J" + str(lambda));
            if (is_jumping_point(rd, lambda)) {
                ++jumps;
                o.require(std::any_of(walls.begin(), walls.end(), [&](const Wall& w) { return w.contains(lambda); }),
                          "jumping point off every wall " + str(lambda));
            }
        }
        // Arrangement samples hit every wall, intersection and cell of the unit box.
        auto unit_walls = candidate_walls(rd, 1);
        if (l == 2 && unit_walls.size() <= 25) {
            std::vector<Hyperplane> planes;
            for (const auto& w : unit_walls) planes.push_back(w.hyperplane());
            for (const auto& z : face_samples(planes, 2, 1)) {
                LambdaPoint lambda(z);
                if (!is_jumping_point(rd, lambda)) continue;
                ++jumps;
                o.require(std::any_of(walls.begin(), walls.end(), [&](const Wall& w) { return w.contains(lambda); }),
                          "jumping point off every wall " + str(lambda));
            }
        }
    }
    o.detail = std::to_string(pairs) + " monotonicity pairs, " + std::to_string(jumps) + " jumping points on walls";
    return o;
}

Outcome generator_independence() {
    Outcome o;
    Rng rng(1004);
    std::size_t redundant = 0, valid = 0, invalid = 0;
    for (int round = 0; round < 60; ++round, ++redundant) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 2));
        const std::size_t l = static_cast<std::size_t>(rng.between(1, 2));
        std::vector<MonomialIdeal> minimal;
        std::vector<std::vector<ExponentVector>> raw;
        for (std::size_t i = 0; i < l; ++i) {
            auto I = mmbs::testing::random_ideal(rng, n, 3, 3);
            auto gens = I.generators();
            for (const auto& g : I.generators()) {
                auto extra = g;
                extra[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(n) - 1))] += rng.between(1, 2);
                gens.push_back(extra);
            }
            minimal.push_back(I);
            raw.push_back(gens);
        }
        auto lambda = mmbs::testing::random_lambda(rng, l, 3, 2);
        std::vector<MonomialIdeal> from_raw;
        for (const auto& g : raw) from_raw.emplace_back(n, g);
        auto J = mixed_multiplier_ideal(resolution_data(minimal), lambda);
        o.require(J == mixed_multiplier_ideal(resolution_data(from_raw), lambda), "ideal changed with redundant generators");
        // Interior of the weighted Minkowski sum of the raw lists, point by point.
        std::vector<RationalVector> points{RationalVector(n, 0)};
        for (std::size_t i = 0; i < l; ++i) {
            std::vector<RationalVector> next;
            for (const auto& p : points)
                for (const auto& g : raw[i]) {
                    auto s = p;
                    for (std::size_t t = 0; t < n; ++t) s[t] += lambda[i] * g[t];
                    next.push_back(s);
                }
            points = next;
        }
        auto box = oracle::sufficient_box(minimal, lambda.coords());
        ExponentVector v(n, 0);
        for (;;) {
            RationalVector shifted;
            for (auto x : v) shifted.emplace_back(x + 1);
            o.require(J.contains(v) == oracle::vrep_membership(std::span<const RationalVector>(points), shifted, true),
                      "membership of " + monomial_string(v) + " differs from the raw-generator interior");
            std::size_t t = 0;
            while (t < n && v[t] == box[t]) v[t++] = 0;
            if (t == n) break;
            ++v[t];
        }
    }
    for (int round = 0; round < 60; ++round) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 3));
        auto I = mmbs::testing::random_ideal(rng, n, 3, 3);
        const auto& f = I.generators();
        VariableList xs = x_variables(n);
        std::vector<Polynomial> z;
        Polynomial h(xs);
        for (const auto& fj : f) {
            Polynomial zj(xs);
            for (int t = 0; t < 2; ++t)
                zj += Polynomial::monomial(xs, mmbs::testing::random_exponent(rng, n, 2), rng.rational(3, 3));
            h += zj * Polynomial::monomial(xs, fj);
            z.push_back(zj);
        }
        o.require(generator_independence_certificate(f, n, h, z), "valid certificate rejected");
        ++valid;
        if (round % 4 == 0) {
            auto bad = h + Polynomial::monomial(xs, mmbs::testing::random_exponent(rng, n, 2), rng.rational(3, 2) + 1);
            bool accepted = true;
            try {
                accepted = generator_independence_certificate(f, n, bad, z);
            } catch (const CertificateError&) {
                accepted = false;
            }
            o.require(!accepted, "invalid certificate accepted");
            ++invalid;
        }
    }
    o.detail = std::to_string(redundant) + " redundant generating sets, " + std::to_string(valid) + " valid and " +
               std::to_string(invalid) + " invalid certificates";
    return o;
}

Outcome unit_factor_inclusion() {
    Outcome o;
    const auto family = theorem_family();
    for (const auto& tuple : family) {
        auto gens = bs_ideal_principal_monomial(tuple);
        o.require(inclusion_check_unit_factors(gens.full), "missing unit factor in " + gens.full.to_string());
    }
    o.detail = std::to_string(family.size()) + " generators";
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_contract() {
    Outcome o;
    const fs::path golden = fs::path(MMBS_SOURCE_DIR) / "tests" / "golden";
    const fs::path scratch = fs::temp_directory_path() / "mmbs_acceptance";
    fs::create_directories(scratch);
    auto cases = nlohmann::json::parse(slurp(golden / "cases.json"));
    std::map<std::string, std::set<std::string>> coverage;
    std::size_t plots = 0;
    for (const auto& c : cases) {
        const std::string name = c["name"];
        std::vector<std::string> args;
        for (std::string a : c["args"]) {
            auto pos = a.find("{out}");
            if (pos != std::string::npos) a.replace(pos, 5, scratch.string());
            args.push_back(a);
        }
        args.push_back((golden / "fixtures" / c["fixture"].get<std::string>()).string());
        std::istringstream in;
        std::ostringstream out;
        const int code = run_cli(args, in, out);
        o.require(code == c["exit"].get<int>(), name + ": exit code " + std::to_string(code));
        o.require(out.str() == slurp(golden / "expected" / (name + ".json")), name + ": output differs from golden file");
        if (code == 0 || code == 2) coverage[c["fixture"]].insert(c["args"][0].get<std::string>());
        if (c.contains("plot")) {
            const std::string plot = c["plot"];
            const std::string first = slurp(scratch / plot);
            std::ostringstream again;
            std::istringstream in2;
            run_cli(args, in2, again);
            o.require(!first.empty() && first == slurp(scratch / plot), name + ": plot not stable across runs");
            o.require(first == slurp(golden / "expected" / plot), name + ": plot differs from golden file");
            ++plots;
        }
    }
    const std::set<std::string> commands = {"newton", "mmi", "walls", "jump", "region",
                                            "ray", "bsideal", "verify-main", "independence"};
    for (const std::string fixture : {"x_squared.json", "x_xy.json", "mixed.json"})
        o.require(coverage[fixture] == commands, fixture + " does not exercise every command");
    o.detail = std::to_string(cases.size()) + " golden cases on 3 fixtures plus error inputs, " + std::to_string(plots) + " plots";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "single-ideal regression", 1.0, single_ideal_regression},
        {2, "theorem on principal tuples", 10.0, theorem_suite},
        {3, "oracle equivalence", 60.0, oracle_equivalence},
        {4, "ray consistency", 30.0, ray_consistency},
        {5, "monotonicity and wall confinement", 30.0, monotonicity_and_walls},
        {6, "generator independence", 10.0, generator_independence},
        {7, "unit-factor inclusion", 1.0, unit_factor_inclusion},
        {8, "CLI contract", 5.0, cli_contract},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failure = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds >= c.limit_seconds) o.require(false, "over the time limit");
        all = all && o.pass;
        std::cout << "criterion " << c.id << " [" << c.title << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
                  << std::fixed << std::setprecision(3) << seconds << " s, limit " << std::setprecision(0)
                  << c.limit_seconds << " s) " << (o.pass ? o.detail : o.failure) << "\n";
    }
    return all ? 0 : 1;
}
