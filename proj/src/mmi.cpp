#include "mmbs/mmi.hpp"

#include "mmbs/errors.hpp"

#include <algorithm>
#include <map>

namespace mmbs {

Rational Wall::value(const LambdaPoint& lambda) const {
    Rational s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += Rational(coeffs[i]) * lambda[i];
    return s;
}

Hyperplane Wall::hyperplane() const {
    Hyperplane h;
    for (auto c : coeffs) h.coeffs.emplace_back(c);
    h.rhs = rhs;
    return h;
}

namespace {

void check_lambda(const ResolutionData& rd, const LambdaPoint& lambda) {
    if (lambda.size() != rd.num_ideals) throw DimensionMismatch("lambda length differs from the number of ideals");
}

// sum_i lambda_i e_{i,j}
Rational ray_load(const ResolutionData& rd, const LambdaPoint& lambda, std::size_t j) {
    Rational s = 0;
    for (std::size_t i = 0; i < rd.num_ideals; ++i) s += lambda[i] * Rational(rd.e[i][j]);
    return s;
}

}  // namespace

MonomialIdeal mixed_multiplier_ideal(const ResolutionData& rd, const LambdaPoint& lambda) {
    check_lambda(rd, lambda);
    const std::size_t n = rd.ambient_dim;
    const std::size_t rays = rd.rays.size();

    // Constraint j:  <w_j, v> > c_j  with c_j = weighted_rhs - 1.
    RationalVector bound(rays);
    for (std::size_t j = 0; j < rays; ++j) bound[j] = weighted_rhs(rd, lambda, j) - 1;

    std::vector<std::int64_t> box(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t j = 0; j < rays; ++j) {
            const auto w = rd.rays[j][t];
            if (w <= 0) continue;
            auto b = to_int64(ceil(bound[j] / Rational(w))) + 1;
            box[t] = std::max(box[t], b);
        }
    }

    auto satisfies = [&](const ExponentVector& v) {
        for (std::size_t j = 0; j < rays; ++j) {
            std::int64_t s = 0;
            for (std::size_t t = 0; t < n; ++t) s += rd.rays[j][t] * v[t];
            if (!(Rational(s) > bound[j])) return false;
        }
        return true;
    };

    std::vector<ExponentVector> minimal;
    ExponentVector v(n, 0);
    while (true) {
        if (satisfies(v)) {
            bool is_min = true;
            for (std::size_t t = 0; t < n && is_min; ++t) {
                if (v[t] == 0) continue;
                --v[t];
                if (satisfies(v)) is_min = false;
                ++v[t];
            }
            if (is_min) minimal.push_back(v);
        }
        std::size_t t = 0;
        while (t < n && v[t] == box[t]) v[t++] = 0;
        if (t == n) break;
        ++v[t];
    }
    return MonomialIdeal(n, std::move(minimal));
}

bool is_jumping_point(const ResolutionData& rd, const LambdaPoint& lambda) {
    check_lambda(rd, lambda);
    if (lambda.is_zero()) return false;

    std::vector<bool> support(lambda.size());
    Rational step = -1;
    auto take_min = [&](const Rational& x) {
        if (step < 0 || x < step) step = x;
    };
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        support[i] = lambda[i] > 0;
        if (support[i]) take_min(lambda[i]);
    }
    // Largest step before some ray load drops past the next integer below it.
    for (std::size_t j = 0; j < rd.rays.size(); ++j) {
        std::int64_t rate = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (support[i]) rate += rd.e[i][j];
        }
        if (rate == 0) continue;
        Rational load = ray_load(rd, lambda, j);
        Rational below = Rational(ceil(load) - 1);
        take_min((load - below) / Rational(rate));
    }
    step /= 2;

    RationalVector probe = lambda.coords();
    for (std::size_t i = 0; i < probe.size(); ++i) {
        if (support[i]) probe[i] -= step;
    }
    return mixed_multiplier_ideal(rd, LambdaPoint(std::move(probe))) != mixed_multiplier_ideal(rd, lambda);
}

std::vector<Wall> candidate_walls(const ResolutionData& rd, const Rational& box_max) {
    if (box_max <= 0) throw InvalidArgument("box bound must be positive");
    std::vector<Wall> walls;
    for (std::size_t j = 0; j < rd.rays.size(); ++j) {
        Wall w;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < rd.num_ideals; ++i) {
            w.coeffs.push_back(rd.e[i][j]);
            total += rd.e[i][j];
        }
        if (total == 0) continue;
        w.ray_index = j;
        const Rational reach = box_max * Rational(total);
        for (std::int64_t nu = std::max<std::int64_t>(1, -rd.k[j]); Rational(rd.k[j] + nu) <= reach; ++nu) {
            w.rhs = rd.k[j] + nu;
            bool seen = std::any_of(walls.begin(), walls.end(),
                                    [&](const Wall& o) { return o.coeffs == w.coeffs && o.rhs == w.rhs; });
            if (!seen) walls.push_back(w);
        }
    }
    return walls;
}

RegionReport region_report(const ResolutionData& rd, const LambdaPoint& lambda, const Rational& box_max) {
    check_lambda(rd, lambda);
    const std::size_t l = rd.num_ideals;
    if (l > 3) throw UnsupportedInput("region enumeration is limited to at most 3 ideals");
    if (box_max <= 0) throw InvalidArgument("box bound must be positive");
    for (const auto& c : lambda.coords()) {
        if (c > box_max) throw InvalidArgument("lambda lies outside the box");
    }

    RegionReport report;
    report.base = lambda;
    report.ideal_at_base = mixed_multiplier_ideal(rd, lambda);
    const auto walls = candidate_walls(rd, box_max);
    std::vector<Hyperplane> planes;
    for (const auto& w : walls) {
        planes.push_back(w.hyperplane());
        if (w.contains(lambda)) report.walls_active.push_back(w);
    }

    std::map<std::vector<int>, bool> seen;
    for (auto& z : face_samples(planes, l, box_max)) {
        auto key = face_key(planes, z, box_max);
        if (!seen.emplace(key, true).second) continue;
        RegionProbe probe;
        probe.open_cell = std::find(key.begin(), key.end(), 0) == key.end();
        probe.axis_degenerate = std::any_of(z.begin(), z.end(), [](const Rational& c) { return c == 0; });
        probe.point = LambdaPoint(std::move(z));
        probe.ideal = mixed_multiplier_ideal(rd, probe.point);
        if (probe.ideal == report.ideal_at_base) {
            report.constancy_sample.push_back(probe);
            report.region_sample.push_back(std::move(probe));
        } else if (probe.ideal.contains(report.ideal_at_base)) {
            report.region_sample.push_back(std::move(probe));
        } else {
            report.outside_sample.push_back(std::move(probe));
        }
    }
    return report;
}

namespace {

std::vector<Rational> confirmed_ray_values(const ResolutionData& rd, std::span<const std::int64_t> alpha,
                                           const Rational& max_param) {
    std::vector<Rational> candidates;
    for (std::size_t j = 0; j < rd.rays.size(); ++j) {
        std::int64_t rate = 0;
        for (std::size_t i = 0; i < rd.num_ideals; ++i) rate += alpha[i] * rd.e[i][j];
        if (rate == 0) continue;
        for (std::int64_t nu = std::max<std::int64_t>(1, 1 - rd.k[j]);; ++nu) {
            Rational mu = Rational(rd.k[j] + nu) / Rational(rate);
            if (mu > max_param) break;
            candidates.push_back(mu);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Rational> out;
    for (const auto& mu : candidates) {
        RationalVector point;
        for (auto a : alpha) point.push_back(mu * Rational(a));
        if (is_jumping_point(rd, LambdaPoint(std::move(point)))) out.push_back(mu);
    }
    return out;
}

}  // namespace

std::vector<Rational> jumping_numbers(const ResolutionData& rd, const Rational& max_param) {
    if (rd.num_ideals != 1) throw InvalidArgument("jumping numbers need a single ideal");
    const std::int64_t one = 1;
    return confirmed_ray_values(rd, std::span<const std::int64_t>(&one, 1), max_param);
}

std::vector<Rational> ray_jumping_numbers(const ResolutionData& rd, std::span<const MonomialIdeal> ideals,
                                          std::span<const std::int64_t> alpha, const Rational& max_param) {
    if (alpha.size() != rd.num_ideals || ideals.size() != rd.num_ideals)
        throw DimensionMismatch("alpha and ideal tuple must match the resolution data");
    if (std::any_of(alpha.begin(), alpha.end(), [](auto a) { return a <= 0; }))
        throw InvalidArgument("ray direction entries must be positive");

    auto along_ray = confirmed_ray_values(rd, alpha, max_param);

    MonomialIdeal product = product_power(ideals, alpha);
    auto single = jumping_numbers(resolution_data(std::span<const MonomialIdeal>(&product, 1)), max_param);
    if (single != along_ray)
        throw ConsistencyError("jumping points along the ray differ from the jumping numbers of the product ideal");
    return along_ray;
}

}  // namespace mmbs
