#include "mmbs/newton.hpp"

#include "mmbs/errors.hpp"

#include <algorithm>
#include <numeric>

namespace mmbs {

bool HalfSpace::satisfied_by(std::span<const Rational> v, bool strict) const {
    Rational lhs = 0;
    for (std::size_t t = 0; t < normal.size(); ++t) lhs += Rational(normal[t]) * v[t];
    return strict ? lhs > rhs : lhs >= rhs;
}

std::vector<HalfSpace> NewtonPolyhedron::halfspaces() const {
    std::vector<HalfSpace> all = coordinate_halfspaces;
    all.insert(all.end(), facets.begin(), facets.end());
    return all;
}

LambdaPoint::LambdaPoint(RationalVector coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_) {
        if (c < 0) throw InvalidArgument("negative lambda coordinate " + to_string(c));
    }
}

bool LambdaPoint::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

namespace {

// One inequality  sum coeffs[i] * var_i + constant >= 0  with the set of
// original rows it was combined from (for Chernikov's redundancy rule).
struct FmRow {
    RationalVector coeffs;
    Rational constant;
    std::vector<bool> history;
};

void normalize(FmRow& row) {
    Rational scale = 0;
    for (const auto& c : row.coeffs) {
        if (c != 0) {
            scale = abs(c);
            break;
        }
    }
    if (scale == 0) return;
    for (auto& c : row.coeffs) c /= scale;
    row.constant /= scale;
}

std::size_t history_size(const FmRow& row) { return static_cast<std::size_t>(std::count(row.history.begin(), row.history.end(), true)); }

// Eliminates variables [0, count) from the system. Rows over the remaining
// variables describe the projection.
std::vector<FmRow> fourier_motzkin(std::vector<FmRow> rows, std::size_t count) {
    for (std::size_t var = 0; var < count; ++var) {
        std::vector<FmRow> pos, neg, next;
        for (auto& r : rows) {
            if (r.coeffs[var] > 0) pos.push_back(std::move(r));
            else if (r.coeffs[var] < 0) neg.push_back(std::move(r));
            else next.push_back(std::move(r));
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                FmRow c;
                c.history.resize(p.history.size());
                for (std::size_t h = 0; h < c.history.size(); ++h) c.history[h] = p.history[h] || q.history[h];
                if (history_size(c) > var + 2) continue;
                Rational a = p.coeffs[var], b = -q.coeffs[var];
                c.coeffs.resize(p.coeffs.size());
                for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = b * p.coeffs[i] + a * q.coeffs[i];
                c.constant = b * p.constant + a * q.constant;
                c.coeffs[var] = 0;
                normalize(c);
                next.push_back(std::move(c));
            }
        }
        std::sort(next.begin(), next.end(), [](const FmRow& x, const FmRow& y) {
            if (x.coeffs != y.coeffs) return x.coeffs < y.coeffs;
            if (x.constant != y.constant) return x.constant < y.constant;
            return history_size(x) < history_size(y);
        });
        // Equal left-hand sides: keep only the tightest (smallest constant).
        std::vector<FmRow> dedup;
        for (auto& r : next) {
            if (!dedup.empty() && dedup.back().coeffs == r.coeffs) continue;
            dedup.push_back(std::move(r));
        }
        rows = std::move(dedup);
    }
    return rows;
}

// Rank of a set of rational row vectors by exact Gaussian elimination.
std::size_t rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

ExponentVector primitive_integer(const RationalVector& v) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    std::vector<Integer> ints;
    Integer g = 0;
    for (const auto& x : v) {
        Integer z = x.get_num() * (l / x.get_den());
        ints.push_back(z);
        g = gcd(g, z);
    }
    ExponentVector out;
    for (const auto& z : ints) out.push_back(to_int64(z / g));
    return out;
}

std::int64_t dot(const ExponentVector& a, const ExponentVector& b) {
    std::int64_t s = 0;
    for (std::size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
}

bool is_unit_vector(const ExponentVector& w) {
    return std::count(w.begin(), w.end(), 0) + 1 == static_cast<std::ptrdiff_t>(w.size()) &&
           std::count(w.begin(), w.end(), 1) == 1;
}

bool is_facet(const ExponentVector& w, std::int64_t rhs, const std::vector<ExponentVector>& gens) {
    const std::size_t n = w.size();
    std::vector<RationalVector> span;
    const ExponentVector* base = nullptr;
    for (const auto& g : gens) {
        if (dot(w, g) != rhs) continue;
        if (!base) {
            base = &g;
            continue;
        }
        RationalVector d(n);
        for (std::size_t t = 0; t < n; ++t) d[t] = g[t] - (*base)[t];
        span.push_back(std::move(d));
    }
    if (!base) return false;
    for (std::size_t t = 0; t < n; ++t) {
        if (w[t] != 0) continue;
        RationalVector u(n, 0);
        u[t] = 1;
        span.push_back(std::move(u));
    }
    return rank(std::move(span)) + 1 == n;
}

}  // namespace

std::int64_t order_along(const MonomialIdeal& ideal, const ExponentVector& w) {
    if (ideal.is_zero()) throw UnsupportedInput("order of the zero ideal is undefined");
    std::int64_t best = dot(w, ideal.generators().front());
    for (const auto& g : ideal.generators()) best = std::min(best, dot(w, g));
    return best;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw UnsupportedInput("the zero ideal has no Newton polyhedron");
    const std::size_t n = ideal.ambient_dim();
    if (n == 0) throw UnsupportedInput("ambient dimension 0");
    const auto& gens = ideal.generators();
    const std::size_t m = gens.size();
    const std::size_t vars = (m - 1) + n;

    // Columns: t_0..t_{m-2} (convex weights, t_{m-1} eliminated through
    // sum t = 1), then v_0..v_{n-1}.
    std::vector<FmRow> rows;
    const std::size_t originals = m + n;
    auto fresh = [&](std::size_t id) {
        FmRow r;
        r.coeffs.assign(vars, 0);
        r.constant = 0;
        r.history.assign(originals, false);
        r.history[id] = true;
        return r;
    };
    for (std::size_t g = 0; g + 1 < m; ++g) {
        auto r = fresh(g);
        r.coeffs[g] = 1;
        rows.push_back(std::move(r));
    }
    {
        auto r = fresh(m - 1);
        for (std::size_t g = 0; g + 1 < m; ++g) r.coeffs[g] = -1;
        r.constant = 1;
        rows.push_back(std::move(r));
    }
    const auto& last = gens.back();
    for (std::size_t i = 0; i < n; ++i) {
        auto r = fresh(m + i);
        for (std::size_t g = 0; g + 1 < m; ++g) r.coeffs[g] = -(gens[g][i] - last[i]);
        r.coeffs[m - 1 + i] = 1;
        r.constant = -last[i];
        rows.push_back(std::move(r));
    }
    auto projected = fourier_motzkin(std::move(rows), m - 1);

    NewtonPolyhedron poly;
    poly.ambient_dim = n;
    std::vector<ExponentVector> normals;
    for (const auto& r : projected) {
        RationalVector w(r.coeffs.begin() + static_cast<std::ptrdiff_t>(m - 1), r.coeffs.end());
        if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; })) continue;
        if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return x < 0; }))
            throw ConsistencyError("projected inequality with a negative normal entry");
        normals.push_back(primitive_integer(w));
    }
    for (std::size_t t = 0; t < n; ++t) {
        ExponentVector u(n, 0);
        u[t] = 1;
        normals.push_back(u);
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

    for (const auto& w : normals) {
        std::int64_t rhs = order_along(ideal, w);
        if (is_unit_vector(w)) {
            poly.coordinate_halfspaces.push_back({w, Rational(rhs)});
        } else if (is_facet(w, rhs, gens)) {
            poly.facets.push_back({w, Rational(rhs)});
        }
    }
    std::sort(poly.coordinate_halfspaces.begin(), poly.coordinate_halfspaces.end(),
              [](const HalfSpace& a, const HalfSpace& b) { return a.normal > b.normal; });

    const auto all = poly.halfspaces();
    for (const auto& g : gens) {
        std::vector<RationalVector> tight;
        for (const auto& h : all) {
            if (dot(h.normal, g) == h.rhs) tight.emplace_back(h.normal.begin(), h.normal.end());
        }
        if (rank(std::move(tight)) == n) poly.vertices.push_back(g);
    }
    return poly;
}

bool membership(const NewtonPolyhedron& poly, std::span<const Rational> v, bool strict) {
    if (v.size() != poly.ambient_dim) throw DimensionMismatch("point dimension differs from the polyhedron's");
    for (const auto& h : poly.coordinate_halfspaces) {
        if (!h.satisfied_by(v, strict)) return false;
    }
    for (const auto& h : poly.facets) {
        if (!h.satisfied_by(v, strict)) return false;
    }
    return true;
}

void ResolutionData::validate() const {
    if (rays.empty()) throw InvalidArgument("resolution data has no rays");
    if (e.size() != num_ideals) throw DimensionMismatch("e-matrix must have one row per ideal");
    if (k.size() != rays.size()) throw DimensionMismatch("k-vector length differs from the number of rays");
    if (affine_flags.size() != rays.size()) throw DimensionMismatch("affine_flags length differs from the number of rays");
    for (const auto& w : rays) {
        if (w.size() != ambient_dim) throw DimensionMismatch("ray length differs from the ambient dimension");
        if (std::any_of(w.begin(), w.end(), [](auto x) { return x < 0; }))
            throw InvalidArgument("ray with a negative entry");
        if (std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; })) throw InvalidArgument("zero ray");
    }
    for (const auto& row : e) {
        if (row.size() != rays.size()) throw DimensionMismatch("e-matrix row length differs from the number of rays");
        if (std::any_of(row.begin(), row.end(), [](auto x) { return x < 0; }))
            throw InvalidArgument("negative e-value");
    }
}

ResolutionData resolution_data(std::span<const MonomialIdeal> ideals) {
    if (ideals.empty()) throw InvalidArgument("empty ideal tuple");
    const std::size_t n = ideals.front().ambient_dim();
    for (const auto& I : ideals) {
        if (I.ambient_dim() != n) throw DimensionMismatch("ideals have different ambient dimensions");
        if (I.is_zero()) throw UnsupportedInput("zero ideal in tuple");
    }
    // The Newton polyhedron of the product is the Minkowski sum.
    MonomialIdeal product = MonomialIdeal::unit(n);
    for (const auto& I : ideals) product = product * I;
    NewtonPolyhedron sum = newton_polyhedron(product);

    ResolutionData rd;
    rd.ambient_dim = n;
    rd.num_ideals = ideals.size();
    for (const auto& h : sum.halfspaces()) rd.rays.push_back(h.normal);
    std::sort(rd.rays.begin(), rd.rays.end());
    rd.rays.erase(std::unique(rd.rays.begin(), rd.rays.end()), rd.rays.end());

    rd.e.assign(ideals.size(), std::vector<std::int64_t>(rd.rays.size()));
    for (std::size_t j = 0; j < rd.rays.size(); ++j) {
        const auto& w = rd.rays[j];
        rd.k.push_back(std::accumulate(w.begin(), w.end(), std::int64_t{0}) - 1);
        bool any_positive = false;
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            rd.e[i][j] = order_along(ideals[i], w);
            any_positive = any_positive || rd.e[i][j] > 0;
        }
        rd.affine_flags.push_back(is_unit_vector(w) && any_positive);
    }
    return rd;
}

Rational weighted_rhs(const ResolutionData& rd, const LambdaPoint& lambda, std::size_t j) {
    if (j >= rd.rays.size()) throw InvalidArgument("ray index out of range");
    if (lambda.size() != rd.num_ideals) throw DimensionMismatch("lambda length differs from the number of ideals");
    Rational s = -Rational(rd.k[j]);
    for (std::size_t i = 0; i < rd.num_ideals; ++i) s += lambda[i] * Rational(rd.e[i][j]);
    return s;
}

}  // namespace mmbs
