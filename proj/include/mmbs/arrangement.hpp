#pragma once

#include "mmbs/rational.hpp"

#include <span>
#include <vector>

namespace mmbs {

/// The affine hyperplane <coeffs, z> = rhs.
struct Hyperplane {
    RationalVector coeffs;
    Rational rhs;

    Rational evaluate(std::span<const Rational> z) const;  ///< <coeffs, z> - rhs
};

/// Rational sample points of the arrangement cut out by `planes` inside the
/// closed box [0, box_max]^dim. Every relatively open face (of any
/// dimension, including faces on the box boundary) contains at least one
/// returned point; open intervals between consecutive breakpoints receive
/// `interval_samples` equally spaced points. The result is sorted and free
/// of duplicates.
///
/// Works by slicing: the first coordinate is fixed at every vertex
/// coordinate and at points between consecutive ones, and the restricted
/// arrangement is sampled recursively.
std::vector<RationalVector> face_samples(std::span<const Hyperplane> planes, std::size_t dim, const Rational& box_max,
                                         std::size_t interval_samples = 1);

/// Sign of every plane at z, followed by the signs of the box facets
/// z_t = 0 and z_t = box_max. Two points lie in the same face iff their
/// keys agree.
std::vector<int> face_key(std::span<const Hyperplane> planes, std::span<const Rational> z, const Rational& box_max);

/// Unique solution of the square system, if the rows are independent.
bool solve_square(std::vector<RationalVector> a, RationalVector b, RationalVector& x);

}  // namespace mmbs
