#pragma once

#include "mmbs/arrangement.hpp"
#include "mmbs/monomial.hpp"
#include "mmbs/newton.hpp"

#include <span>
#include <vector>

namespace mmbs {

/// Candidate jumping wall  sum_i coeffs[i] * z_i = rhs  with
/// rhs = k_j + nu, nu >= 1, coming from ray `ray_index`.
struct Wall {
    std::vector<std::int64_t> coeffs;
    std::int64_t rhs = 0;
    std::size_t ray_index = 0;

    Rational value(const LambdaPoint& lambda) const;  ///< sum_i coeffs[i] lambda_i
    bool contains(const LambdaPoint& lambda) const { return value(lambda) == Rational(rhs); }
    Hyperplane hyperplane() const;

    friend bool operator==(const Wall&, const Wall&) = default;
};

/// Mixed multiplier ideal J(a_1^l_1 ... a_l^l_l): the monomials x^v with
/// <w_j, v> + k_j + 1 > sum_i l_i e_{i,j} for every ray j.
MonomialIdeal mixed_multiplier_ideal(const ResolutionData& rd, const LambdaPoint& lambda);

/// True iff J(lambda') strictly contains J(lambda) for every lambda' near
/// lambda with lambda' < lambda in each coordinate where lambda is positive
/// (and lambda'_t = 0 where lambda_t = 0). J is constant on that cone near
/// lambda, so a single probe at an exact step below the nearest wall value
/// decides it.
bool is_jumping_point(const ResolutionData& rd, const LambdaPoint& lambda);

/// All walls meeting [0, box_max]^l, ordered by ray and then by rhs.
std::vector<Wall> candidate_walls(const ResolutionData& rd, const Rational& box_max);

struct RegionProbe {
    LambdaPoint point;
    MonomialIdeal ideal;
    bool open_cell = false;        ///< on no wall and off the box boundary
    bool axis_degenerate = false;  ///< some coordinate is zero

    friend bool operator==(const RegionProbe&, const RegionProbe&) = default;
};

struct RegionReport {
    LambdaPoint base;
    MonomialIdeal ideal_at_base;
    std::vector<Wall> walls_active;
    /// Probes whose ideal equals ideal_at_base.
    std::vector<RegionProbe> constancy_sample;
    /// Probes whose ideal contains ideal_at_base (constancy probes included).
    std::vector<RegionProbe> region_sample;
    /// Remaining probes.
    std::vector<RegionProbe> outside_sample;
};

/// One probe per face of the candidate-wall arrangement in [0, box_max]^l,
/// classified against lambda. Throws UnsupportedInput for l > 3.
RegionReport region_report(const ResolutionData& rd, const LambdaPoint& lambda, const Rational& box_max);

/// Jumping numbers in (0, max_param] of a single ideal given by its
/// resolution data (num_ideals must be 1).
std::vector<Rational> jumping_numbers(const ResolutionData& rd, const Rational& max_param);

/// All mu in (0, max_param] such that mu * alpha is a jumping point. The
/// result is cross-checked against the jumping numbers of
/// a_1^alpha_1 ... a_l^alpha_l and a ConsistencyError is raised on mismatch.
std::vector<Rational> ray_jumping_numbers(const ResolutionData& rd, std::span<const MonomialIdeal> ideals,
                                          std::span<const std::int64_t> alpha, const Rational& max_param);

}  // namespace mmbs
