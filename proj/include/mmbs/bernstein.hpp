#pragma once

#include "mmbs/mmi.hpp"
#include "mmbs/monomial.hpp"
#include "mmbs/newton.hpp"
#include "mmbs/polynomial.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace mmbs {

/// G = (g_1, ..., g_l) with g_i = sum_j f_{i,j} y_{i,j} in the ring A with
/// variables x1..xn followed by the y-blocks (named "y<i>_<j>").
struct HypersurfaceTuple {
    std::size_t ambient_dim = 0;
    VariableList ring_vars;
    std::vector<std::size_t> block_sizes;
    std::vector<Polynomial> polys;

    std::size_t num_vars() const noexcept { return ring_vars.size(); }
};

HypersurfaceTuple build_g(std::span<const std::vector<ExponentVector>> generators, std::size_t ambient_dim);
HypersurfaceTuple build_g(std::span<const MonomialIdeal> ideals);

/// sum_k coeffs[k] s_k + constant.
struct LinearForm {
    std::vector<std::int64_t> coeffs;
    std::int64_t constant = 0;

    Rational evaluate(std::span<const Rational> s) const;
    Polynomial polynomial(const VariableList& s_ring) const;
    /// True for the factor s_k + 1.
    bool is_unit_factor() const;
    std::string to_string() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

/// Element of Q[s_1..s_l] kept as a sorted multiset of linear factors.
class ProductOfLinearForms {
public:
    ProductOfLinearForms() = default;
    ProductOfLinearForms(std::size_t num_vars, std::vector<LinearForm> factors);

    std::size_t num_vars() const noexcept { return num_vars_; }
    const std::vector<LinearForm>& factors() const noexcept { return factors_; }

    Rational evaluate(std::span<const Rational> s) const;
    Polynomial polynomial(const VariableList& s_ring) const;
    /// "(2*s1 + 1)(s1 + 1)"; "1" for the empty product.
    std::string to_string() const;

    friend bool operator==(const ProductOfLinearForms&, const ProductOfLinearForms&) = default;

private:
    std::size_t num_vars_ = 0;
    std::vector<LinearForm> factors_;
};

/// s1..sl
VariableList s_variables(std::size_t count);

/// exponent = constant + sum_k s_coeffs[k] s_k
struct AffineExponent {
    std::int64_t constant = 0;
    std::vector<std::int64_t> s_coeffs;

    bool is_zero() const;
    friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

/// coefficient(s) * prod_t x_t^{exponent_t(s)}: the shape of
/// g_1^{s_1+c_1} ... g_l^{s_l+c_l} for monomial g_i, closed under
/// differentiation.
class TwistedMonomial {
public:
    TwistedMonomial(Polynomial coefficient, std::vector<AffineExponent> exponents);

    /// prod_i g_i^{s_i + shift} for monomials g_i (rows of `g`).
    static TwistedMonomial power_product(std::span<const ExponentVector> g, std::int64_t shift);

    const Polynomial& coefficient() const noexcept { return coefficient_; }
    const std::vector<AffineExponent>& exponents() const noexcept { return exponents_; }

    /// Applies d/dx_var `order` times.
    void differentiate(std::size_t var, std::int64_t order = 1);
    void scale(const Polynomial& factor);

    /// Equal as formal expressions; all zero expressions compare equal.
    friend bool operator==(const TwistedMonomial& a, const TwistedMonomial& b);

private:
    Polynomial coefficient_;
    std::vector<AffineExponent> exponents_;
};

/// delta * g^{s+1} == b(s) * g^s with delta = prod_t d_t^{orders[t]}.
bool functional_equation_check(std::span<const ExponentVector> g, std::span<const std::int64_t> orders,
                               const ProductOfLinearForms& b);
/// Same, taking the polynomials of a tuple; throws UnsupportedInput unless
/// every g_i is a monomial.
bool functional_equation_check(const HypersurfaceTuple& g, std::span<const std::int64_t> orders,
                               const ProductOfLinearForms& b);

struct BernsteinSatoGenerators {
    /// b in B_G, witnessed by `delta_orders`.
    ProductOfLinearForms full;
    /// b / prod_k (s_k + 1), a generator of B_a in the principal family.
    ProductOfLinearForms reduced;
    std::vector<std::int64_t> delta_orders;
};

/// For principal ideals (x^{a_1}), ..., (x^{a_l}); the result is certified
/// by functional_equation_check before it is returned.
BernsteinSatoGenerators bs_ideal_principal_monomial(std::span<const ExponentVector> monomials);
/// Throws UnsupportedInput unless every ideal is principal.
BernsteinSatoGenerators bs_ideal_principal_monomial(std::span<const MonomialIdeal> ideals);

/// Every unit factor s_k + 1 occurs in b.
bool inclusion_check_unit_factors(const ProductOfLinearForms& b);

/// Rewrites g' = sum f_j y_j + h y_{r+1} by y_j -> y_j - z_j y_{r+1} and
/// checks that the result is g = sum f_j y_j (and that the forward change of
/// variables maps g to g'). Throws CertificateError unless h = sum z_j f_j.
bool generator_independence_certificate(std::span<const ExponentVector> generators, std::size_t ambient_dim,
                                        const Polynomial& h, std::span<const Polynomial> z);

/// x1..xn
VariableList x_variables(std::size_t n);

struct WallCheck {
    Wall wall;
    std::size_t jumping_points = 0;
    LambdaPoint witness;  ///< first jumping point found on the wall
    bool factor_found = false;
    LinearForm factor;
    bool restriction_vanishes = false;
};

struct TheoremViolation {
    LambdaPoint lambda;
    std::string reason;
};

struct TheoremReport {
    bool pass = false;
    std::size_t candidate_points = 0;
    std::size_t checked_points = 0;
    std::vector<LambdaPoint> jumping_points;
    std::vector<WallCheck> walls;
    std::vector<TheoremViolation> violations;
    BernsteinSatoGenerators generators;
};

/// Exact verification that -lambda lies in the zero locus of the reduced
/// generator for every jumping point with |lambda|^2 < 1, over wall
/// intersection points and `samples_per_segment` points on each wall
/// segment. Throws UnsupportedInput outside principal monomial tuples or for
/// more than 3 ideals.
TheoremReport verify_theorem_main(std::span<const MonomialIdeal> ideals, std::size_t samples_per_segment = 5);

}  // namespace mmbs
