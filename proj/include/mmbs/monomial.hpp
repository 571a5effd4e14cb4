#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mmbs {

/// Exponent vector of a monomial x^v; entries are nonnegative.
using ExponentVector = std::vector<std::int64_t>;

/// Componentwise a <= b. Both vectors must have equal length.
bool divides(const ExponentVector& a, const ExponentVector& b);

/// A monomial ideal held by its minimal generating set, sorted
/// lexicographically. The zero ideal has no generators; the unit ideal is
/// generated by the zero vector.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Minimalizes `gens`. Throws DimensionMismatch if a vector's length
    /// differs from `ambient_dim` and InvalidArgument on negative entries.
    MonomialIdeal(std::size_t ambient_dim, std::vector<ExponentVector> gens);

    static MonomialIdeal unit(std::size_t ambient_dim);
    static MonomialIdeal zero(std::size_t ambient_dim) { return MonomialIdeal(ambient_dim, {}); }

    std::size_t ambient_dim() const noexcept { return dim_; }
    const std::vector<ExponentVector>& generators() const noexcept { return gens_; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const;
    bool is_principal() const noexcept { return gens_.size() == 1; }
    /// True iff some power of every variable lies in the ideal.
    bool is_m_primary() const;

    bool contains(const ExponentVector& v) const;
    /// Ideal containment this ⊇ other.
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<ExponentVector> gens_;
};

/// The antichain of componentwise-minimal elements of `gens`, sorted.
/// All vectors must share one length.
MonomialIdeal minimalize(std::span<const ExponentVector> gens);

bool contains(const MonomialIdeal& ideal, const ExponentVector& v);

/// Product a_1^alpha_1 ... a_l^alpha_l. Throws InvalidArgument when alpha is
/// all zero or its length differs from the tuple's.
MonomialIdeal product_power(std::span<const MonomialIdeal> ideals, std::span<const std::int64_t> alpha);

/// Product of two monomial ideals.
MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);

/// "x1^2*x3" style rendering; "1" for the zero vector.
std::string monomial_string(const ExponentVector& v);

/// Parses "x1^2*x2" (or "x^2*y" for n <= 3, or "1") into an exponent vector.
ExponentVector parse_monomial(const std::string& text, std::size_t ambient_dim);

}  // namespace mmbs
