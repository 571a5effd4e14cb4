#pragma once

#include "mmbs/monomial.hpp"
#include "mmbs/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace mmbs {

using VariableList = std::vector<std::string>;

/// Sparse multivariate polynomial over Q in an ordered list of named
/// variables. Arithmetic requires both operands to live in the same ring;
/// use `embed` to move a polynomial into a larger ring first.
class Polynomial {
public:
    using Terms = std::map<ExponentVector, Rational>;

    Polynomial() = default;
    explicit Polynomial(VariableList vars);

    static Polynomial constant(VariableList vars, const Rational& c);
    static Polynomial variable(VariableList vars, const std::string& name);
    static Polynomial monomial(VariableList vars, ExponentVector exponents, const Rational& c = 1);

    const VariableList& variables() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Index of `name` in the ring, or throws InvalidArgument.
    std::size_t index_of(const std::string& name) const;
    bool has_variable(const std::string& name) const;

    /// True iff the variable occurs with positive degree in some term.
    bool uses(const std::string& name) const;

    /// Re-expresses the polynomial in `ring`. Every variable that actually
    /// occurs must be present in `ring`.
    Polynomial embed(const VariableList& ring) const;

    Rational evaluate(std::span<const Rational> point) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned exponent) const;

    std::string to_string() const;

private:
    void add_term(const ExponentVector& e, const Rational& c);
    void require_same_ring(const Polynomial& other) const;

    VariableList vars_;
    Terms terms_;
};

/// Replaces `var` by `replacement` and expands. `replacement` is embedded
/// into p's ring first; throws InvalidArgument if `var` is not a ring variable
/// or the replacement uses variables outside the ring.
Polynomial substitute(const Polynomial& p, const std::string& var, const Polynomial& replacement);

/// Simultaneous substitution of several variables.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& replacements);

/// Parses sums of terms such as "3/2*x1^2*x2 - x3 + 1". Variable names must be
/// in `vars`; names in `aliases` are translated first.
Polynomial parse_polynomial(const std::string& text, const VariableList& vars,
                            const std::map<std::string, std::string>& aliases = {});

}  // namespace mmbs
