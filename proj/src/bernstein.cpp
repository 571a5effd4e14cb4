#include "mmbs/bernstein.hpp"

#include "mmbs/arrangement.hpp"
#include "mmbs/errors.hpp"

#include <algorithm>
#include <numeric>

namespace mmbs {

VariableList x_variables(std::size_t n) {
    VariableList v;
    for (std::size_t t = 1; t <= n; ++t) v.push_back("x" + std::to_string(t));
    return v;
}

VariableList s_variables(std::size_t count) {
    VariableList v;
    for (std::size_t k = 1; k <= count; ++k) v.push_back("s" + std::to_string(k));
    return v;
}

HypersurfaceTuple build_g(std::span<const std::vector<ExponentVector>> generators, std::size_t ambient_dim) {
    HypersurfaceTuple g;
    g.ambient_dim = ambient_dim;
    g.ring_vars = x_variables(ambient_dim);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].empty()) throw InvalidArgument("ideal " + std::to_string(i + 1) + " has no generators");
        g.block_sizes.push_back(generators[i].size());
        for (std::size_t j = 1; j <= generators[i].size(); ++j)
            g.ring_vars.push_back("y" + std::to_string(i + 1) + "_" + std::to_string(j));
    }
    const std::size_t d = g.ring_vars.size();
    std::size_t offset = ambient_dim;
    for (const auto& gens : generators) {
        Polynomial p(g.ring_vars);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (gens[j].size() != ambient_dim) throw DimensionMismatch("generator length differs from ambient dimension");
            ExponentVector e(d, 0);
            std::copy(gens[j].begin(), gens[j].end(), e.begin());
            e[offset + j] = 1;
            p += Polynomial::monomial(g.ring_vars, e);
        }
        offset += gens.size();
        g.polys.push_back(std::move(p));
    }
    return g;
}

HypersurfaceTuple build_g(std::span<const MonomialIdeal> ideals) {
    std::vector<std::vector<ExponentVector>> gens;
    std::size_t n = ideals.empty() ? 0 : ideals.front().ambient_dim();
    for (const auto& I : ideals) gens.push_back(I.generators());
    return build_g(gens, n);
}

// ---------------------------------------------------------------------------

Rational LinearForm::evaluate(std::span<const Rational> s) const {
    if (s.size() != coeffs.size()) throw DimensionMismatch("evaluation point has wrong length");
    Rational v = constant;
    for (std::size_t k = 0; k < coeffs.size(); ++k) v += Rational(coeffs[k]) * s[k];
    return v;
}

Polynomial LinearForm::polynomial(const VariableList& s_ring) const {
    Polynomial p = Polynomial::constant(s_ring, constant);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] != 0) p += Polynomial::variable(s_ring, s_ring[k]) * Rational(coeffs[k]);
    }
    return p;
}

bool LinearForm::is_unit_factor() const {
    return constant == 1 && std::count(coeffs.begin(), coeffs.end(), 1) == 1 &&
           std::count(coeffs.begin(), coeffs.end(), 0) + 1 == static_cast<std::ptrdiff_t>(coeffs.size());
}

std::string LinearForm::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (!out.empty()) out += " + ";
        if (coeffs[k] != 1) out += std::to_string(coeffs[k]) + "*";
        out += "s" + std::to_string(k + 1);
    }
    if (constant != 0 || out.empty()) out += (out.empty() ? "" : " + ") + std::to_string(constant);
    return out;
}

ProductOfLinearForms::ProductOfLinearForms(std::size_t num_vars, std::vector<LinearForm> factors)
    : num_vars_(num_vars), factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.coeffs.size() != num_vars_) throw DimensionMismatch("linear factor has wrong number of coefficients");
    }
    std::sort(factors_.begin(), factors_.end());
}

Rational ProductOfLinearForms::evaluate(std::span<const Rational> s) const {
    Rational v = 1;
    for (const auto& f : factors_) v *= f.evaluate(s);
    return v;
}

Polynomial ProductOfLinearForms::polynomial(const VariableList& s_ring) const {
    Polynomial p = Polynomial::constant(s_ring, 1);
    for (const auto& f : factors_) p = p * f.polynomial(s_ring);
    return p;
}

std::string ProductOfLinearForms::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) out += "(" + f.to_string() + ")";
    return out;
}

// ---------------------------------------------------------------------------

bool AffineExponent::is_zero() const {
    return constant == 0 && std::all_of(s_coeffs.begin(), s_coeffs.end(), [](auto a) { return a == 0; });
}

TwistedMonomial::TwistedMonomial(Polynomial coefficient, std::vector<AffineExponent> exponents)
    : coefficient_(std::move(coefficient)), exponents_(std::move(exponents)) {}

TwistedMonomial TwistedMonomial::power_product(std::span<const ExponentVector> g, std::int64_t shift) {
    if (g.empty()) throw InvalidArgument("empty tuple");
    const std::size_t l = g.size(), d = g.front().size();
    std::vector<AffineExponent> ex(d, AffineExponent{0, std::vector<std::int64_t>(l, 0)});
    for (std::size_t k = 0; k < l; ++k) {
        if (g[k].size() != d) throw DimensionMismatch("monomials of the tuple live in different rings");
        for (std::size_t t = 0; t < d; ++t) {
            ex[t].s_coeffs[k] += g[k][t];
            ex[t].constant += g[k][t] * shift;
        }
    }
    return TwistedMonomial(Polynomial::constant(s_variables(l), 1), std::move(ex));
}

void TwistedMonomial::differentiate(std::size_t var, std::int64_t order) {
    auto& ex = exponents_.at(var);
    const auto& ring = coefficient_.variables();
    for (std::int64_t r = 0; r < order; ++r) {
        LinearForm factor{ex.s_coeffs, ex.constant};
        coefficient_ = coefficient_ * factor.polynomial(ring);
        ex.constant -= 1;
    }
}

void TwistedMonomial::scale(const Polynomial& factor) { coefficient_ = coefficient_ * factor; }

bool operator==(const TwistedMonomial& a, const TwistedMonomial& b) {
    if (a.coefficient_.is_zero() || b.coefficient_.is_zero())
        return a.coefficient_.is_zero() && b.coefficient_.is_zero();
    return a.coefficient_ == b.coefficient_ && a.exponents_ == b.exponents_;
}

bool functional_equation_check(std::span<const ExponentVector> g, std::span<const std::int64_t> orders,
                               const ProductOfLinearForms& b) {
    if (g.empty()) throw InvalidArgument("empty tuple");
    if (orders.size() != g.front().size()) throw DimensionMismatch("one differentiation order per ring variable expected");
    if (b.num_vars() != g.size()) throw DimensionMismatch("b must have one variable per hypersurface");
    if (std::any_of(orders.begin(), orders.end(), [](auto o) { return o < 0; }))
        throw InvalidArgument("negative differentiation order");

    auto lhs = TwistedMonomial::power_product(g, 1);
    for (std::size_t t = 0; t < orders.size(); ++t) lhs.differentiate(t, orders[t]);
    auto rhs = TwistedMonomial::power_product(g, 0);
    rhs.scale(b.polynomial(s_variables(g.size())));
    return lhs == rhs;
}

bool functional_equation_check(const HypersurfaceTuple& g, std::span<const std::int64_t> orders,
                               const ProductOfLinearForms& b) {
    std::vector<ExponentVector> monomials;
    for (const auto& p : g.polys) {
        if (p.terms().size() != 1 || p.terms().begin()->second != 1)
            throw UnsupportedInput("functional equation check needs monomial hypersurfaces");
        monomials.push_back(p.terms().begin()->first);
    }
    return functional_equation_check(monomials, orders, b);
}

BernsteinSatoGenerators bs_ideal_principal_monomial(std::span<const ExponentVector> monomials) {
    if (monomials.empty()) throw InvalidArgument("empty tuple");
    const std::size_t l = monomials.size(), n = monomials.front().size();
    std::vector<LinearForm> reduced;
    BernsteinSatoGenerators out;
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<std::int64_t> coeffs;
        std::int64_t total = 0;
        for (const auto& a : monomials) {
            if (a.size() != n) throw DimensionMismatch("monomials have different ambient dimensions");
            if (a[t] < 0) throw InvalidArgument("negative exponent");
            coeffs.push_back(a[t]);
            total += a[t];
        }
        for (std::int64_t m = 1; m <= total; ++m) reduced.push_back({coeffs, m});
        out.delta_orders.push_back(total);
    }
    std::vector<LinearForm> full = reduced;
    for (std::size_t k = 0; k < l; ++k) {
        std::vector<std::int64_t> unit(l, 0);
        unit[k] = 1;
        full.push_back({unit, 1});
        out.delta_orders.push_back(1);
    }
    out.full = ProductOfLinearForms(l, std::move(full));
    out.reduced = ProductOfLinearForms(l, std::move(reduced));

    // g_k = x^{a_k} y_k as a monomial in A.
    std::vector<ExponentVector> g;
    for (std::size_t k = 0; k < l; ++k) {
        ExponentVector e(n + l, 0);
        std::copy(monomials[k].begin(), monomials[k].end(), e.begin());
        e[n + k] = 1;
        g.push_back(std::move(e));
    }
    if (!functional_equation_check(g, out.delta_orders, out.full))
        throw ConsistencyError("closed-form Bernstein-Sato generator failed its functional equation");
    return out;
}

BernsteinSatoGenerators bs_ideal_principal_monomial(std::span<const MonomialIdeal> ideals) {
    std::vector<ExponentVector> monomials;
    for (const auto& I : ideals) {
        if (!I.is_principal()) throw UnsupportedInput("exact Bernstein-Sato ideals need principal monomial ideals");
        monomials.push_back(I.generators().front());
    }
    return bs_ideal_principal_monomial(monomials);
}

bool inclusion_check_unit_factors(const ProductOfLinearForms& b) {
    for (std::size_t k = 0; k < b.num_vars(); ++k) {
        std::vector<std::int64_t> unit(b.num_vars(), 0);
        unit[k] = 1;
        LinearForm want{unit, 1};
        if (std::find(b.factors().begin(), b.factors().end(), want) == b.factors().end()) return false;
    }
    return b.num_vars() > 0;
}

// ---------------------------------------------------------------------------

bool generator_independence_certificate(std::span<const ExponentVector> generators, std::size_t ambient_dim,
                                        const Polynomial& h, std::span<const Polynomial> z) {
    const std::size_t r = generators.size();
    if (r == 0) throw InvalidArgument("empty generator list");
    if (z.size() != r) throw CertificateError("certificate needs one coefficient per generator");
    const VariableList xs = x_variables(ambient_dim);

    Polynomial h_x = h.embed(xs);
    Polynomial combination(xs);
    std::vector<Polynomial> z_x;
    for (std::size_t j = 0; j < r; ++j) {
        z_x.push_back(z[j].embed(xs));
        combination += z_x.back() * Polynomial::monomial(xs, generators[j]);
    }
    if (combination != h_x) throw CertificateError("h differs from sum z_j f_j: " + h_x.to_string() + " != " + combination.to_string());

    VariableList ring = xs;
    for (std::size_t j = 1; j <= r + 1; ++j) ring.push_back("y" + std::to_string(j));
    auto y = [&](std::size_t j) { return Polynomial::variable(ring, "y" + std::to_string(j)); };

    Polynomial g(ring);
    for (std::size_t j = 0; j < r; ++j) g += Polynomial::monomial(xs, generators[j]).embed(ring) * y(j + 1);
    Polynomial g_prime = g + h_x.embed(ring) * y(r + 1);

    std::map<std::string, Polynomial> inverse, forward;
    for (std::size_t j = 0; j < r; ++j) {
        Polynomial shift = z_x[j].embed(ring) * y(r + 1);
        inverse.emplace("y" + std::to_string(j + 1), y(j + 1) - shift);
        forward.emplace("y" + std::to_string(j + 1), y(j + 1) + shift);
    }
    return substitute(g_prime, inverse) == g && substitute(g, forward) == g_prime;
}

// ---------------------------------------------------------------------------

namespace {

// Points of the wall inside [0,1]^l: the wall is parametrised by the
// coordinates other than its first nonzero one and the induced arrangement
// is sampled.
std::vector<RationalVector> wall_points(const Wall& wall, const std::vector<Wall>& walls, std::size_t samples) {
    const std::size_t l = wall.coeffs.size();
    std::size_t p = 0;
    while (wall.coeffs[p] == 0) ++p;
    const Rational cp = wall.coeffs[p], r = wall.rhs;

    auto lift = [&](const RationalVector& free) {
        RationalVector z(l);
        Rational acc = r;
        for (std::size_t i = 0, f = 0; i < l; ++i) {
            if (i == p) continue;
            z[i] = free[f++];
            acc -= Rational(wall.coeffs[i]) * z[i];
        }
        z[p] = acc / cp;
        return z;
    };

    std::vector<RationalVector> out;
    if (l == 1) {
        out.push_back(lift({}));
    } else {
        auto restrict_plane = [&](const RationalVector& a, const Rational& b) {
            Hyperplane h;
            for (std::size_t i = 0; i < l; ++i) {
                if (i != p) h.coeffs.push_back(a[i] - a[p] * Rational(wall.coeffs[i]) / cp);
            }
            h.rhs = b - a[p] * r / cp;
            return h;
        };
        std::vector<Hyperplane> planes;
        for (const auto& o : walls) {
            if (&o == &wall) continue;
            auto h = restrict_plane(o.hyperplane().coeffs, o.rhs);
            if (std::any_of(h.coeffs.begin(), h.coeffs.end(), [](const Rational& c) { return c != 0; }))
                planes.push_back(std::move(h));
        }
        // Where the pivot coordinate leaves [0, 1].
        RationalVector unit(l, 0);
        unit[p] = 1;
        for (const Rational& bound : {Rational(0), Rational(1)}) {
            auto h = restrict_plane(unit, bound);
            if (std::any_of(h.coeffs.begin(), h.coeffs.end(), [](const Rational& c) { return c != 0; }))
                planes.push_back(std::move(h));
        }
        for (const auto& free : face_samples(planes, l - 1, 1, samples)) out.push_back(lift(free));
    }
    std::erase_if(out, [](const RationalVector& z) {
        return std::any_of(z.begin(), z.end(), [](const Rational& c) { return c < 0 || c > 1; });
    });
    return out;
}

Rational squared_norm(const RationalVector& z) {
    Rational s = 0;
    for (const auto& c : z) s += c * c;
    return s;
}

}  // namespace

TheoremReport verify_theorem_main(std::span<const MonomialIdeal> ideals, std::size_t samples_per_segment) {
    if (ideals.empty()) throw InvalidArgument("empty ideal tuple");
    if (ideals.size() > 3) throw UnsupportedInput("wall enumeration is limited to at most 3 ideals");
    TheoremReport report;
    report.generators = bs_ideal_principal_monomial(ideals);
    const auto rd = resolution_data(ideals);
    const std::size_t l = ideals.size();
    const auto walls = candidate_walls(rd, 1);
    const auto& reduced = report.generators.reduced;

    std::vector<RationalVector> candidates;
    for (const auto& w : walls) {
        for (auto& z : wall_points(w, walls, samples_per_segment)) candidates.push_back(std::move(z));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::erase_if(candidates, [](const RationalVector& z) { return squared_norm(z) >= 1; });
    report.candidate_points = candidates.size();

    for (const auto& w : walls) {
        WallCheck wc;
        wc.wall = w;
        report.walls.push_back(std::move(wc));
    }

    for (auto& z : candidates) {
        LambdaPoint lambda(z);
        if (!is_jumping_point(rd, lambda)) continue;
        report.jumping_points.push_back(lambda);
        ++report.checked_points;
        RationalVector minus(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) minus[i] = -z[i];
        if (reduced.evaluate(minus) != 0)
            report.violations.push_back({lambda, "reduced generator does not vanish at -lambda"});
        for (auto& wc : report.walls) {
            if (!wc.wall.contains(lambda)) continue;
            if (wc.jumping_points++ == 0) wc.witness = lambda;
        }
    }

    // Symbolic certificate: the matching factor, restricted to the wall
    // hyperplane, is the zero polynomial.
    const VariableList lam = [&] {
        VariableList v;
        for (std::size_t i = 1; i <= l; ++i) v.push_back("l" + std::to_string(i));
        return v;
    }();
    for (auto& wc : report.walls) {
        if (wc.jumping_points == 0) continue;
        const auto& w = wc.wall;
        for (const auto& f : reduced.factors()) {
            // f(-lambda) = 0 on the wall iff (f.coeffs, f.constant) is a
            // positive multiple of (w.coeffs, w.rhs).
            bool proportional = true;
            for (std::size_t i = 0; i < l && proportional; ++i)
                proportional = f.coeffs[i] * w.rhs == w.coeffs[i] * f.constant;
            if (!proportional) continue;
            wc.factor_found = true;
            wc.factor = f;
            break;
        }
        if (!wc.factor_found) {
            report.violations.push_back({wc.witness, "no factor of the reduced generator matches wall"});
            continue;
        }
        Polynomial at_minus_lambda = Polynomial::constant(lam, wc.factor.constant);
        for (std::size_t i = 0; i < l; ++i)
            at_minus_lambda -= Polynomial::variable(lam, lam[i]) * Rational(wc.factor.coeffs[i]);
        std::size_t p = 0;
        while (w.coeffs[p] == 0) ++p;
        Polynomial solved = Polynomial::constant(lam, w.rhs);
        for (std::size_t i = 0; i < l; ++i) {
            if (i != p) solved -= Polynomial::variable(lam, lam[i]) * Rational(w.coeffs[i]);
        }
        solved *= Rational(1) / Rational(w.coeffs[p]);
        wc.restriction_vanishes = substitute(at_minus_lambda, lam[p], solved).is_zero();
        if (!wc.restriction_vanishes)
            report.violations.push_back({wc.witness, "matching factor does not vanish on the wall"});
    }
    report.pass = report.violations.empty();
    return report;
}

}  // namespace mmbs
