#include "mmbs/arrangement.hpp"

#include "mmbs/errors.hpp"

#include <algorithm>

namespace mmbs {

Rational Hyperplane::evaluate(std::span<const Rational> z) const {
    Rational s = -rhs;
    for (std::size_t t = 0; t < coeffs.size(); ++t) s += coeffs[t] * z[t];
    return s;
}

bool solve_square(std::vector<RationalVector> a, RationalVector b, RationalVector& x) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    x.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

namespace {

void for_each_subset(std::size_t total, std::size_t size, const auto& visit) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    if (size > total) return;
    while (true) {
        visit(idx);
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == total - size + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool in_box(std::span<const Rational> z, const Rational& box_max) {
    return std::all_of(z.begin(), z.end(), [&](const Rational& c) { return c >= 0 && c <= box_max; });
}

// Breakpoints plus interior samples of [0, box_max] for the given cut values.
RationalVector line_samples(RationalVector cuts, const Rational& box_max, std::size_t interval_samples) {
    cuts.push_back(0);
    cuts.push_back(box_max);
    std::erase_if(cuts, [&](const Rational& c) { return c < 0 || c > box_max; });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    RationalVector out = cuts;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        for (std::size_t s = 1; s <= interval_samples; ++s) {
            out.push_back(cuts[i] + (cuts[i + 1] - cuts[i]) * Rational(s) / Rational(interval_samples + 1));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void sample_rec(const std::vector<Hyperplane>& planes, std::size_t dim, const Rational& box_max, std::size_t interval_samples,
                std::vector<RationalVector>& out) {
    if (dim == 1) {
        RationalVector cuts;
        for (const auto& h : planes) {
            if (h.coeffs[0] != 0) cuts.push_back(h.rhs / h.coeffs[0]);
        }
        for (const auto& c : line_samples(std::move(cuts), box_max, interval_samples)) out.push_back({c});
        return;
    }

    // All vertices of the arrangement inside the box contribute their first
    // coordinate as a slicing position.
    std::vector<Hyperplane> all = planes;
    for (std::size_t t = 0; t < dim; ++t) {
        RationalVector u(dim, 0);
        u[t] = 1;
        all.push_back({u, 0});
        all.push_back({u, box_max});
    }
    RationalVector cuts;
    for_each_subset(all.size(), dim, [&](const std::vector<std::size_t>& idx) {
        std::vector<RationalVector> a;
        RationalVector b;
        for (auto i : idx) {
            a.push_back(all[i].coeffs);
            b.push_back(all[i].rhs);
        }
        RationalVector x;
        if (solve_square(std::move(a), std::move(b), x) && in_box(x, box_max)) cuts.push_back(x[0]);
    });

    for (const auto& c : line_samples(std::move(cuts), box_max, interval_samples)) {
        std::vector<Hyperplane> restricted;
        for (const auto& h : planes) {
            Hyperplane r{RationalVector(h.coeffs.begin() + 1, h.coeffs.end()), h.rhs - h.coeffs[0] * c};
            if (std::all_of(r.coeffs.begin(), r.coeffs.end(), [](const Rational& x) { return x == 0; })) continue;
            restricted.push_back(std::move(r));
        }
        std::vector<RationalVector> sub;
        sample_rec(restricted, dim - 1, box_max, interval_samples, sub);
        for (auto& s : sub) {
            s.insert(s.begin(), c);
            out.push_back(std::move(s));
        }
    }
}

}  // namespace

std::vector<RationalVector> face_samples(std::span<const Hyperplane> planes, std::size_t dim, const Rational& box_max,
                                         std::size_t interval_samples) {
    if (dim == 0) throw InvalidArgument("arrangement dimension must be positive");
    if (box_max <= 0) throw InvalidArgument("box bound must be positive");
    for (const auto& h : planes) {
        if (h.coeffs.size() != dim) throw DimensionMismatch("hyperplane dimension differs from arrangement dimension");
    }
    std::vector<RationalVector> out;
    sample_rec({planes.begin(), planes.end()}, dim, box_max, std::max<std::size_t>(interval_samples, 1), out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> face_key(std::span<const Hyperplane> planes, std::span<const Rational> z, const Rational& box_max) {
    std::vector<int> key;
    key.reserve(planes.size() + 2 * z.size());
    for (const auto& h : planes) key.push_back(sgn(h.evaluate(z)));
    for (const auto& c : z) {
        key.push_back(sgn(c));
        key.push_back(sgn(c - box_max));
    }
    return key;
}

}  // namespace mmbs
