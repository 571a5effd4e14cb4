#pragma once

#include "mmbs/monomial.hpp"
#include "mmbs/rational.hpp"

#include <span>
#include <vector>

// Brute-force reference implementations used to certify the main pipeline.
// Nothing here calls into newton/mmi/bernstein.
namespace mmbs::oracle {

enum class Relation { GreaterEqual, Greater };

struct Constraint {
    RationalVector row;
    Relation relation = Relation::GreaterEqual;
    Rational rhs;
};

/// Conjunction of  <row, x> (>= | >) rhs  over `variables` unknowns.
struct FeasibilitySystem {
    std::size_t variables = 0;
    std::vector<Constraint> constraints;

    void add(RationalVector row, Relation rel, Rational rhs);
    /// Exact Fourier-Motzkin decision.
    bool feasible() const;
};

/// Is there a convex combination p of `gens` with p <= v (p < v when
/// strict)? Throws InvalidArgument on an empty generator set.
bool vrep_membership(std::span<const RationalVector> gens, std::span<const Rational> v, bool strict);
bool vrep_membership(std::span<const ExponentVector> gens, std::span<const Rational> v, bool strict);

/// Mixed multiplier ideal from the interior of the weighted Minkowski sum,
/// scanning lattice points 0 <= v_t <= box[t].
MonomialIdeal mmi_bruteforce(std::span<const MonomialIdeal> ideals, std::span<const Rational> lambda,
                             std::span<const std::int64_t> box);

/// Box that provably contains every minimal generator of the result of
/// mmi_bruteforce for this lambda.
std::vector<std::int64_t> sufficient_box(std::span<const MonomialIdeal> ideals, std::span<const Rational> lambda);

/// max { c : u in c * (conv(gens) + R^n_{>=0}) }, computed by elimination.
/// Returns false when unbounded.
bool scaling_threshold(std::span<const ExponentVector> gens, std::span<const Rational> u, Rational& out);

/// Jumping numbers in (0, max] of a single ideal: the thresholds of lattice
/// points x^v, each confirmed by comparing brute-force ideals at the value
/// and just below it.
std::vector<Rational> jumping_numbers_scan(const MonomialIdeal& ideal, const Rational& max);

}  // namespace mmbs::oracle
