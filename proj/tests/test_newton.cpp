#include "mmbs/errors.hpp"
#include "mmbs/newton.hpp"
#include "mmbs/oracle.hpp"
#include "support/gen.hpp"

#include <doctest.h>

#include <numeric>

using namespace mmbs;
using mmbs::testing::Rng;

namespace {

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::vector<std::pair<ExponentVector, Rational>> listing(const std::vector<HalfSpace>& hs) {
    std::vector<std::pair<ExponentVector, Rational>> out;
    for (const auto& h : hs) out.emplace_back(h.normal, h.rhs);
    return out;
}

}  // namespace

TEST_CASE("newton_polyhedron examples") {
    auto p1 = newton_polyhedron(MonomialIdeal(1, {{2}}));
    CHECK(p1.facets.empty());
    CHECK(listing(p1.halfspaces()) == std::vector<std::pair<ExponentVector, Rational>>{{{1}, 2}});

    auto p2 = newton_polyhedron(MonomialIdeal(2, {{1, 0}, {0, 1}}));
    CHECK(listing(p2.facets) == std::vector<std::pair<ExponentVector, Rational>>{{{1, 1}, 1}});
    CHECK(listing(p2.coordinate_halfspaces) == std::vector<std::pair<ExponentVector, Rational>>{{{1, 0}, 0}, {{0, 1}, 0}});

    auto p3 = newton_polyhedron(MonomialIdeal(2, {{3, 0}, {1, 1}, {0, 2}}));
    CHECK(listing(p3.facets) == std::vector<std::pair<ExponentVector, Rational>>{{{1, 1}, 2}, {{1, 2}, 3}});
    CHECK(p3.vertices == std::vector<ExponentVector>{{0, 2}, {1, 1}, {3, 0}});

    // (2,2) is a generator but not a vertex of the hull of (4,0),(2,2),(0,4).
    auto p4 = newton_polyhedron(MonomialIdeal(2, {{4, 0}, {2, 2}, {0, 4}}));
    CHECK(p4.vertices == std::vector<ExponentVector>{{0, 4}, {4, 0}});

    CHECK_THROWS_AS(newton_polyhedron(MonomialIdeal::zero(2)), UnsupportedInput);
}

TEST_CASE("resolution_data examples") {
    std::vector<MonomialIdeal> x2 = {MonomialIdeal(1, {{2}})};
    auto rd = resolution_data(x2);
    CHECK(rd.rays == std::vector<ExponentVector>{{1}});
    CHECK(rd.e == std::vector<std::vector<std::int64_t>>{{2}});
    CHECK(rd.k == std::vector<std::int64_t>{0});

    std::vector<MonomialIdeal> xy = {MonomialIdeal(2, {{1, 0}}), MonomialIdeal(2, {{0, 1}})};
    rd = resolution_data(xy);
    CHECK(rd.rays == std::vector<ExponentVector>{{0, 1}, {1, 0}});
    CHECK(rd.e == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
    CHECK(rd.k == std::vector<std::int64_t>{0, 0});

    std::vector<MonomialIdeal> m = {MonomialIdeal(2, {{1, 0}, {0, 1}})};
    rd = resolution_data(m);
    auto it = std::find(rd.rays.begin(), rd.rays.end(), ExponentVector{1, 1});
    REQUIRE(it != rd.rays.end());
    const auto j = static_cast<std::size_t>(it - rd.rays.begin());
    CHECK(rd.e[0][j] == 1);
    CHECK(rd.k[j] == 1);
    CHECK(std::none_of(rd.affine_flags.begin(), rd.affine_flags.end(), [](bool b) { return b; }));
}

TEST_CASE("weighted_rhs examples") {
    std::vector<MonomialIdeal> x2 = {MonomialIdeal(1, {{2}})};
    auto rd = resolution_data(x2);
    CHECK(weighted_rhs(rd, LambdaPoint({make_rational(1, 2)}), 0) == 1);

    std::vector<MonomialIdeal> pair = {MonomialIdeal(2, {{1, 0}}), MonomialIdeal(2, {{1, 1}})};
    rd = resolution_data(pair);
    const auto third = make_rational(1, 3);
    for (std::size_t j = 0; j < rd.rays.size(); ++j) {
        CHECK(weighted_rhs(rd, LambdaPoint({Rational(0), Rational(0)}), j) == -rd.k[j]);
        if (rd.rays[j] == ExponentVector{1, 0}) CHECK(weighted_rhs(rd, LambdaPoint({third, third}), j) == make_rational(2, 3));
    }
}

TEST_CASE("membership examples") {
    auto px2 = newton_polyhedron(MonomialIdeal(1, {{2}}));
    CHECK(membership(px2, rv({2}), false));
    CHECK_FALSE(membership(px2, rv({2}), true));
    auto pm = newton_polyhedron(MonomialIdeal(2, {{1, 0}, {0, 1}}));
    CHECK(membership(pm, rv({1, 1}), true));
    CHECK_FALSE(membership(pm, rv({make_rational(1, 2), make_rational(1, 4)}), false));
}

TEST_CASE("property: halfspaces are primitive and tight, vertices satisfy them") {
    Rng rng(21);
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 3));
        auto I = mmbs::testing::random_ideal(rng, n, 4, 4);
        auto P = newton_polyhedron(I);
        CHECK(P.coordinate_halfspaces.size() == n);
        for (const auto& h : P.halfspaces()) {
            std::int64_t g = 0;
            for (auto w : h.normal) {
                CHECK(w >= 0);
                g = std::gcd(g, w);
            }
            CHECK(g == 1);
            std::int64_t best = INT64_MAX;
            for (const auto& v : I.generators()) best = std::min(best, mmbs::testing::dot(h.normal, v));
            CHECK(h.rhs == Rational(best));
        }
        for (const auto& v : P.vertices) {
            RationalVector q(v.begin(), v.end());
            CHECK(membership(P, q, false));
            CHECK(I.contains(v));
        }
    }
}

TEST_CASE("property: H-representation agrees with the V-representation oracle") {
    Rng rng(22);
    for (int round = 0; round < 80; ++round) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 3));
        auto I = mmbs::testing::random_ideal(rng, n, 4, 4);
        auto P = newton_polyhedron(I);
        for (int probe = 0; probe < 25; ++probe) {
            RationalVector v(n);
            for (auto& x : v) x = rng.rational(2, 5);
            for (bool strict : {false, true}) {
                CHECK(membership(P, v, strict) == oracle::vrep_membership(I.generators(), v, strict));
            }
        }
    }
}

TEST_CASE("property: resolution data is order_along of the Minkowski-sum facets") {
    Rng rng(23);
    for (int round = 0; round < 80; ++round) {
        const std::size_t n = static_cast<std::size_t>(rng.between(1, 3));
        const std::size_t l = static_cast<std::size_t>(rng.between(1, 2));
        std::vector<MonomialIdeal> ideals;
        for (std::size_t i = 0; i < l; ++i) ideals.push_back(mmbs::testing::random_ideal(rng, n, 3, 3));
        auto rd = resolution_data(ideals);
        rd.validate();
        CHECK(std::is_sorted(rd.rays.begin(), rd.rays.end()));
        for (std::size_t j = 0; j < rd.rays.size(); ++j) {
            std::int64_t norm = 0;
            for (auto w : rd.rays[j]) norm += w;
            CHECK(rd.k[j] == norm - 1);
            for (std::size_t i = 0; i < l; ++i) {
                std::int64_t best = INT64_MAX;
                for (const auto& v : ideals[i].generators()) best = std::min(best, mmbs::testing::dot(rd.rays[j], v));
                CHECK(rd.e[i][j] == best);
            }
        }
        // Every unit vector is a ray.
        for (std::size_t t = 0; t < n; ++t) {
            ExponentVector u(n, 0);
            u[t] = 1;
            CHECK(std::find(rd.rays.begin(), rd.rays.end(), u) != rd.rays.end());
        }
        // m-primary tuples in n >= 2 have no flagged rays.
        bool primary = std::all_of(ideals.begin(), ideals.end(), [](const auto& I) { return I.is_m_primary(); });
        if (primary && n >= 2)
            CHECK(std::none_of(rd.affine_flags.begin(), rd.affine_flags.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("LambdaPoint rejects negative coordinates") {
    CHECK_THROWS_AS(LambdaPoint({Rational(-1)}), InvalidArgument);
    CHECK(LambdaPoint({Rational(0), Rational(0)}).is_zero());
    CHECK(LambdaPoint({Rational(1)}) < LambdaPoint({Rational(2)}));
}
