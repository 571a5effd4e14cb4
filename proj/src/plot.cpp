#include "mmbs/plot.hpp"

#include "mmbs/arrangement.hpp"
#include "mmbs/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mmbs {

namespace {

constexpr int kSize = 400;
constexpr int kMargin = 40;

// Pixel coordinate rendered with exactly two decimals, rounded half up.
std::string pixel(const Rational& value) {
    Integer hundredths = floor(value * 100 + Rational(1, 2));
    std::string sign = hundredths < 0 ? "-" : "";
    Integer mag = abs(hundredths);
    Integer whole = mag / 100, frac = mag % 100;
    std::string f = frac.get_str();
    if (f.size() < 2) f = "0" + f;
    return sign + whole.get_str() + "." + f;
}

struct Canvas {
    Rational box_max;
    Rational x(const Rational& z) const { return Rational(kMargin) + z / box_max * (kSize - 2 * kMargin); }
    Rational y(const Rational& z) const { return Rational(kSize - kMargin) - z / box_max * (kSize - 2 * kMargin); }
};

// Endpoints of {a z1 + b z2 = r} inside the box, if the line meets it in a segment.
bool clip(const Wall& w, const Rational& box_max, RationalVector& p, RationalVector& q) {
    const Rational a = w.coeffs[0], b = w.coeffs[1], r = w.rhs;
    std::vector<RationalVector> hits;
    auto add = [&](Rational z1, Rational z2) {
        if (z1 < 0 || z1 > box_max || z2 < 0 || z2 > box_max) return;
        RationalVector pt{z1, z2};
        if (std::find(hits.begin(), hits.end(), pt) == hits.end()) hits.push_back(pt);
    };
    if (b != 0) {
        add(0, r / b);
        add(box_max, (r - a * box_max) / b);
    }
    if (a != 0) {
        add(r / a, 0);
        add((r - b * box_max) / a, box_max);
    }
    if (hits.size() < 2) return false;
    std::sort(hits.begin(), hits.end());
    p = hits.front();
    q = hits.back();
    return true;
}

}  // namespace

std::vector<LambdaPoint> wall_jumping_samples(const ResolutionData& rd, const std::vector<Wall>& walls,
                                              const Rational& box_max) {
    std::vector<Hyperplane> planes;
    for (const auto& w : walls) planes.push_back(w.hyperplane());
    std::vector<LambdaPoint> out;
    for (auto& z : face_samples(planes, rd.num_ideals, box_max)) {
        LambdaPoint lambda(std::move(z));
        bool on_wall = std::any_of(walls.begin(), walls.end(), [&](const Wall& w) { return w.contains(lambda); });
        if (on_wall && is_jumping_point(rd, lambda)) out.push_back(std::move(lambda));
    }
    return out;
}

std::string render_wall_plot(const WallPlot& plot) {
    for (const auto& w : plot.walls) {
        if (w.coeffs.size() != 2) throw UnsupportedInput("wall plots need exactly two ideals");
    }
    if (plot.alpha && plot.alpha->size() != 2) throw UnsupportedInput("wall plots need exactly two ideals");
    for (const auto& p : plot.jumping_points) {
        if (p.size() != 2) throw UnsupportedInput("wall plots need exactly two ideals");
    }
    const Canvas c{plot.box_max};
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
        << kSize << " " << kSize << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize - 2 * kMargin << "\" height=\""
        << kSize - 2 * kMargin << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << kMargin << "\" y=\"" << kSize - kMargin + 16 << "\" font-size=\"12\">0</text>\n";
    svg << "<text x=\"" << kSize - kMargin << "\" y=\"" << kSize - kMargin + 16 << "\" font-size=\"12\">"
        << to_string(plot.box_max) << "</text>\n";
    svg << "<text x=\"" << kMargin - 24 << "\" y=\"" << kMargin + 4 << "\" font-size=\"12\">" << to_string(plot.box_max)
        << "</text>\n";

    for (const auto& w : plot.walls) {
        RationalVector p, q;
        if (!clip(w, plot.box_max, p, q)) continue;
        svg << "<line x1=\"" << pixel(c.x(p[0])) << "\" y1=\"" << pixel(c.y(p[1])) << "\" x2=\"" << pixel(c.x(q[0]))
            << "\" y2=\"" << pixel(c.y(q[1])) << "\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& j : plot.jumping_points) {
        svg << "<circle cx=\"" << pixel(c.x(j[0])) << "\" cy=\"" << pixel(c.y(j[1]))
            << "\" r=\"2.5\" fill=\"crimson\"/>\n";
    }
    if (plot.alpha) {
        const Rational a0 = (*plot.alpha)[0], a1 = (*plot.alpha)[1];
        const Rational reach = plot.box_max / std::max(a0, a1);
        svg << "<line x1=\"" << pixel(c.x(0)) << "\" y1=\"" << pixel(c.y(0)) << "\" x2=\"" << pixel(c.x(reach * a0))
            << "\" y2=\"" << pixel(c.y(reach * a1)) << "\" stroke=\"darkgreen\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
        for (const auto& mu : plot.ray_jumps) {
            svg << "<rect x=\"" << pixel(c.x(mu * a0) - 3) << "\" y=\"" << pixel(c.y(mu * a1) - 3)
                << "\" width=\"6\" height=\"6\" fill=\"darkgreen\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_wall_plot(const WallPlot& plot, const std::string& path) {
    const std::string text = render_wall_plot(plot);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open plot file '" + path + "'");
    out << text;
    if (!out) throw InvalidArgument("failed writing plot file '" + path + "'");
}

}  // namespace mmbs
