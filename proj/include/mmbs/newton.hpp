#pragma once

#include "mmbs/monomial.hpp"
#include "mmbs/rational.hpp"

#include <compare>
#include <span>
#include <vector>

namespace mmbs {

/// The constraint <normal, v> >= rhs with a nonzero, nonnegative, primitive
/// integer normal.
struct HalfSpace {
    ExponentVector normal;
    Rational rhs;

    bool satisfied_by(std::span<const Rational> v, bool strict) const;
    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// conv(generators) + R^n_{>=0} in both representations. Coordinate
/// halfspaces (unit normals) are kept apart from the remaining facets; both
/// lists are irredundant and sorted by normal.
struct NewtonPolyhedron {
    std::size_t ambient_dim = 0;
    std::vector<ExponentVector> vertices;
    std::vector<HalfSpace> coordinate_halfspaces;
    std::vector<HalfSpace> facets;

    /// Coordinate halfspaces followed by facets.
    std::vector<HalfSpace> halfspaces() const;
};

/// A point of the nonnegative orthant of exponents (lambda_1, ..., lambda_l).
class LambdaPoint {
public:
    LambdaPoint() = default;
    /// Throws InvalidArgument on a negative coordinate.
    explicit LambdaPoint(RationalVector coords);

    std::size_t size() const noexcept { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    const RationalVector& coords() const noexcept { return coords_; }
    bool is_zero() const;

    friend bool operator==(const LambdaPoint&, const LambdaPoint&) = default;
    friend auto operator<=>(const LambdaPoint& a, const LambdaPoint& b) {
        return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                                      b.coords_.end(), [](const Rational& x, const Rational& y) {
                                                          int c = cmp(x, y);
                                                          return c < 0 ? std::strong_ordering::less
                                                                 : c > 0 ? std::strong_ordering::greater
                                                                         : std::strong_ordering::equal;
                                                      });
    }

private:
    RationalVector coords_;
};

/// Divisorial data of a toric common log-resolution of a tuple of ideals:
/// one ray w_j per divisor E_j, e[i][j] = ord_{E_j}(a_i), k[j] the
/// coefficient of E_j in the relative canonical divisor.
struct ResolutionData {
    std::size_t ambient_dim = 0;
    std::size_t num_ideals = 0;
    std::vector<ExponentVector> rays;
    std::vector<std::vector<std::int64_t>> e;
    std::vector<std::int64_t> k;
    /// Rays whose divisor is a coordinate hyperplane in the support of some
    /// F_i (non-exceptional support).
    std::vector<bool> affine_flags;

    /// Checks shapes and sign conditions; throws on violation.
    void validate() const;
    friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

/// Throws UnsupportedInput for the zero ideal or ambient_dim == 0.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Shared ray set: facet normals of the Minkowski sum of the Newton
/// polyhedra plus all coordinate rays, sorted lexicographically.
ResolutionData resolution_data(std::span<const MonomialIdeal> ideals);

/// sum_i lambda_i e[i][j] - k[j], the value rounded up in K_pi - sum lambda_i F_i
/// (with the sign flipped).
Rational weighted_rhs(const ResolutionData& rd, const LambdaPoint& lambda, std::size_t j);

bool membership(const NewtonPolyhedron& poly, std::span<const Rational> v, bool strict);

/// min over generators of <w, g>.
std::int64_t order_along(const MonomialIdeal& ideal, const ExponentVector& w);

}  // namespace mmbs
