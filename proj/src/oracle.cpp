#include "mmbs/oracle.hpp"

#include "mmbs/errors.hpp"

#include <algorithm>
#include <set>

namespace mmbs::oracle {

namespace {

struct Row {
    RationalVector a;  // a.x >= b
    Rational b;
    std::vector<bool> origin;
};

std::size_t origin_size(const Row& r) { return static_cast<std::size_t>(std::count(r.origin.begin(), r.origin.end(), true)); }

void scale_row(Row& r) {
    for (const auto& c : r.a) {
        if (c != 0) {
            Rational s = abs(c);
            for (auto& x : r.a) x /= s;
            r.b /= s;
            return;
        }
    }
}

// Eliminates variables [first, last) and returns the remaining rows.
std::vector<Row> eliminate(std::vector<Row> rows, std::size_t first, std::size_t last) {
    for (std::size_t var = first; var < last; ++var) {
        std::vector<Row> up, down, kept;
        for (auto& r : rows) {
            int s = sgn(r.a[var]);
            (s > 0 ? up : s < 0 ? down : kept).push_back(std::move(r));
        }
        const std::size_t step = var - first + 1;
        for (const auto& p : up) {
            for (const auto& q : down) {
                Row c;
                c.origin.resize(p.origin.size());
                for (std::size_t i = 0; i < c.origin.size(); ++i) c.origin[i] = p.origin[i] || q.origin[i];
                if (origin_size(c) > step + 1) continue;  // Chernikov
                const Rational wp = -q.a[var], wq = p.a[var];
                c.a.resize(p.a.size());
                for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] = wp * p.a[i] + wq * q.a[i];
                c.a[var] = 0;
                c.b = wp * p.b + wq * q.b;
                scale_row(c);
                kept.push_back(std::move(c));
            }
        }
        // Among rows with one left-hand side keep the tightest.
        std::sort(kept.begin(), kept.end(), [](const Row& x, const Row& y) {
            if (x.a != y.a) return x.a < y.a;
            if (x.b != y.b) return x.b > y.b;
            return origin_size(x) < origin_size(y);
        });
        std::vector<Row> next;
        for (auto& r : kept) {
            if (!next.empty() && next.back().a == r.a) continue;
            next.push_back(std::move(r));
        }
        rows = std::move(next);
    }
    return rows;
}

std::vector<RationalVector> drop_dominated(std::span<const RationalVector> gens) {
    std::vector<RationalVector> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sorted.size() && !dominated; ++j) {
            if (i == j) continue;
            bool le = true;
            for (std::size_t t = 0; t < sorted[i].size() && le; ++t) le = sorted[j][t] <= sorted[i][t];
            dominated = le;
        }
        if (!dominated) out.push_back(sorted[i]);
    }
    return out;
}

std::vector<RationalVector> to_rational(std::span<const ExponentVector> gens) {
    std::vector<RationalVector> out;
    for (const auto& g : gens) {
        RationalVector r;
        for (auto x : g) r.emplace_back(x);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

void FeasibilitySystem::add(RationalVector row, Relation rel, Rational rhs) {
    if (row.size() != variables) throw DimensionMismatch("constraint row length differs from variable count");
    constraints.push_back({std::move(row), rel, std::move(rhs)});
}

bool FeasibilitySystem::feasible() const {
    // Strict rows a.x > b become a.x - t >= b with 0 < t <= 1; the system is
    // feasible iff the projection onto t reaches above zero.
    const bool any_strict = std::any_of(constraints.begin(), constraints.end(),
                                        [](const Constraint& c) { return c.relation == Relation::Greater; });
    const std::size_t width = variables + (any_strict ? 1 : 0);
    const std::size_t origins = constraints.size() + 1;
    std::vector<Row> rows;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto& c = constraints[i];
        Row r{c.row, c.rhs, std::vector<bool>(origins, false)};
        r.a.resize(width, 0);
        if (c.relation == Relation::Greater) r.a[variables] = -1;
        r.origin[i] = true;
        rows.push_back(std::move(r));
    }
    if (any_strict) {
        Row cap{RationalVector(width, 0), -1, std::vector<bool>(origins, false)};
        cap.a[variables] = -1;
        cap.origin.back() = true;
        rows.push_back(std::move(cap));
    }
    bool have_upper = false;
    Rational lower = 0, upper = 0;
    for (const auto& r : eliminate(std::move(rows), 0, variables)) {
        const Rational c = any_strict ? r.a[variables] : Rational(0);
        if (c == 0) {
            if (r.b > 0) return false;
        } else if (c > 0) {
            const Rational l = r.b / c;
            if (l > lower) lower = l;
        } else {
            const Rational u = r.b / c;
            if (!have_upper || u < upper) upper = u;
            have_upper = true;
        }
    }
    if (!any_strict) return true;
    // t is capped at 1, so an upper bound always survives.
    return upper > 0 && lower <= upper;
}

bool vrep_membership(std::span<const RationalVector> gens_in, std::span<const Rational> v, bool strict) {
    if (gens_in.empty()) throw InvalidArgument("empty generator set");
    const auto gens = drop_dominated(gens_in);
    const std::size_t m = gens.size(), n = v.size();
    for (const auto& g : gens) {
        if (g.size() != n) throw DimensionMismatch("generator and point dimensions differ");
    }
    // Unknowns t_0..t_{m-2}; t_{m-1} = 1 - sum of the others.
    FeasibilitySystem sys;
    sys.variables = m - 1;
    for (std::size_t g = 0; g + 1 < m; ++g) {
        RationalVector row(m - 1, 0);
        row[g] = 1;
        sys.add(std::move(row), Relation::GreaterEqual, 0);
    }
    sys.add(RationalVector(m - 1, -1), Relation::GreaterEqual, -1);
    const auto& last = gens.back();
    for (std::size_t i = 0; i < n; ++i) {
        // sum_g t_g (last_i - g_i) > last_i - v_i
        RationalVector row(m - 1);
        for (std::size_t g = 0; g + 1 < m; ++g) row[g] = last[i] - gens[g][i];
        sys.add(std::move(row), strict ? Relation::Greater : Relation::GreaterEqual, last[i] - v[i]);
    }
    return sys.feasible();
}

bool vrep_membership(std::span<const ExponentVector> gens, std::span<const Rational> v, bool strict) {
    auto r = to_rational(gens);
    return vrep_membership(std::span<const RationalVector>(r), v, strict);
}

std::vector<std::int64_t> sufficient_box(std::span<const MonomialIdeal> ideals, std::span<const Rational> lambda) {
    const std::size_t n = ideals.front().ambient_dim();
    std::vector<std::int64_t> box(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        Rational reach = 0;
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            std::int64_t top = 0;
            for (const auto& g : ideals[i].generators()) top = std::max(top, g[t]);
            reach += lambda[i] * Rational(top);
        }
        box[t] = to_int64(mmbs::ceil(reach)) + 1;
    }
    return box;
}

MonomialIdeal mmi_bruteforce(std::span<const MonomialIdeal> ideals, std::span<const Rational> lambda,
                             std::span<const std::int64_t> box) {
    if (ideals.empty() || ideals.size() != lambda.size()) throw DimensionMismatch("lambda length differs from tuple length");
    const std::size_t n = ideals.front().ambient_dim();
    if (box.size() != n) throw DimensionMismatch("box length differs from ambient dimension");

    // Vertices of sum_i lambda_i P_i are among the weighted generator sums.
    std::vector<RationalVector> points{RationalVector(n, 0)};
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (ideals[i].ambient_dim() != n) throw DimensionMismatch("ideals have different ambient dimensions");
        if (lambda[i] == 0) continue;
        std::vector<RationalVector> next;
        for (const auto& p : points) {
            for (const auto& g : ideals[i].generators()) {
                RationalVector q = p;
                for (std::size_t t = 0; t < n; ++t) q[t] += lambda[i] * Rational(g[t]);
                next.push_back(std::move(q));
            }
        }
        points = drop_dominated(next);
    }

    std::vector<ExponentVector> members;
    ExponentVector v(n, 0);
    while (true) {
        bool member = std::any_of(members.begin(), members.end(), [&](const ExponentVector& m) {
            for (std::size_t t = 0; t < n; ++t) {
                if (m[t] > v[t]) return false;
            }
            return true;
        });
        if (!member) {
            RationalVector shifted;
            for (auto x : v) shifted.emplace_back(x + 1);
            member = vrep_membership(std::span<const RationalVector>(points), shifted, true);
        }
        if (member) members.push_back(v);
        std::size_t t = 0;
        while (t < n && v[t] == box[t]) v[t++] = 0;
        if (t == n) break;
        ++v[t];
    }

    std::vector<ExponentVector> minimal;
    for (const auto& a : members) {
        bool is_min = std::none_of(members.begin(), members.end(), [&](const ExponentVector& b) {
            if (a == b) return false;
            for (std::size_t t = 0; t < n; ++t) {
                if (b[t] > a[t]) return false;
            }
            return true;
        });
        if (is_min) minimal.push_back(a);
    }
    return MonomialIdeal(n, std::move(minimal));
}

bool scaling_threshold(std::span<const ExponentVector> gens_in, std::span<const Rational> u, Rational& out) {
    auto gens = drop_dominated(to_rational(gens_in));
    const std::size_t m = gens.size(), n = u.size();
    // Unknowns s_0..s_{m-2}, then c; s_{m-1} = c - sum of the others.
    std::vector<Row> rows;
    const std::size_t width = m;  // (m-1) s-variables + c
    std::size_t id = 0;
    const std::size_t origins = m + n;
    auto make = [&](RationalVector a, Rational b) {
        Row r{std::move(a), std::move(b), std::vector<bool>(origins, false)};
        r.origin[id++] = true;
        rows.push_back(std::move(r));
    };
    for (std::size_t g = 0; g + 1 < m; ++g) {
        RationalVector a(width, 0);
        a[g] = 1;
        make(std::move(a), 0);
    }
    {
        RationalVector a(width, -1);
        a[width - 1] = 1;
        make(std::move(a), 0);
    }
    const auto& last = gens.back();
    for (std::size_t i = 0; i < n; ++i) {
        // sum_g s_g (last_i - g_i) - c last_i >= -u_i
        RationalVector a(width);
        for (std::size_t g = 0; g + 1 < m; ++g) a[g] = last[i] - gens[g][i];
        a[width - 1] = -last[i];
        make(std::move(a), -u[i]);
    }
    bool bounded = false;
    for (const auto& r : eliminate(std::move(rows), 0, m - 1)) {
        const Rational& a = r.a[width - 1];
        if (a < 0) {
            // -|a| c >= b  =>  c <= -b/|a|
            Rational bound = -r.b / -a;
            if (!bounded || bound < out) out = bound;
            bounded = true;
        }
    }
    return bounded;
}

std::vector<Rational> jumping_numbers_scan(const MonomialIdeal& ideal, const Rational& max) {
    if (max <= 0) throw InvalidArgument("scan bound must be positive");
    const std::size_t n = ideal.ambient_dim();
    const auto& gens = ideal.generators();
    if (gens.empty()) throw InvalidArgument("zero ideal");

    std::vector<std::int64_t> box(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        std::int64_t top = 0;
        for (const auto& g : gens) top = std::max(top, g[t]);
        box[t] = to_int64(mmbs::ceil(max * Rational(top)));
    }

    std::set<Rational> candidates;
    ExponentVector v(n, 0);
    while (true) {
        RationalVector u;
        for (auto x : v) u.emplace_back(x + 1);
        Rational tau;
        if (scaling_threshold(gens, u, tau) && tau > 0 && tau <= max) candidates.insert(tau);
        std::size_t t = 0;
        while (t < n && v[t] == box[t]) v[t++] = 0;
        if (t == n) break;
        ++v[t];
    }

    std::vector<Rational> out;
    const std::span<const MonomialIdeal> single(&ideal, 1);
    Rational previous = 0;
    for (const auto& c : candidates) {
        Rational below = c - (c - previous) / 2;
        RationalVector at{c}, under{below};
        auto box_c = sufficient_box(single, at);
        if (mmi_bruteforce(single, under, box_c) != mmi_bruteforce(single, at, box_c)) out.push_back(c);
        previous = c;
    }
    return out;
}

}  // namespace mmbs::oracle
