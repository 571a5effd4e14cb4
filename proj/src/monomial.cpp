#include "mmbs/monomial.hpp"

#include "mmbs/errors.hpp"

#include <algorithm>
#include <cctype>

namespace mmbs {

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] > b[t]) return false;
    }
    return true;
}

MonomialIdeal::MonomialIdeal(std::size_t ambient_dim, std::vector<ExponentVector> gens) : dim_(ambient_dim) {
    for (const auto& g : gens) {
        if (g.size() != ambient_dim)
            throw DimensionMismatch("exponent vector of length " + std::to_string(g.size()) +
                                    " in ambient dimension " + std::to_string(ambient_dim));
        for (auto e : g) {
            if (e < 0) throw InvalidArgument("negative exponent in monomial generator");
        }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
            if (i != j && divides(gens[j], gens[i])) minimal = false;
        }
        if (minimal) gens_.push_back(gens[i]);
    }
}

MonomialIdeal MonomialIdeal::unit(std::size_t ambient_dim) {
    return MonomialIdeal(ambient_dim, {ExponentVector(ambient_dim, 0)});
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](auto e) { return e == 0; });
}

bool MonomialIdeal::is_m_primary() const {
    for (std::size_t t = 0; t < dim_; ++t) {
        bool pure_power = std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) {
            for (std::size_t u = 0; u < dim_; ++u) {
                if (u != t && g[u] != 0) return false;
            }
            return true;
        });
        if (!pure_power) return false;
    }
    return !gens_.empty();
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
    if (v.size() != dim_) throw DimensionMismatch("monomial and ideal have different ambient dimensions");
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return divides(g, v); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    if (other.dim_ != dim_) throw DimensionMismatch("ideals have different ambient dimensions");
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExponentVector& g) { return contains(g); });
}

MonomialIdeal minimalize(std::span<const ExponentVector> gens) {
    if (gens.empty()) return MonomialIdeal();
    return MonomialIdeal(gens.front().size(), {gens.begin(), gens.end()});
}

bool contains(const MonomialIdeal& ideal, const ExponentVector& v) { return ideal.contains(v); }

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ideals have different ambient dimensions");
    std::vector<ExponentVector> out;
    out.reserve(a.generators().size() * b.generators().size());
    for (const auto& g : a.generators()) {
        for (const auto& h : b.generators()) {
            ExponentVector s(g.size());
            for (std::size_t t = 0; t < g.size(); ++t) s[t] = g[t] + h[t];
            out.push_back(std::move(s));
        }
    }
    return MonomialIdeal(a.ambient_dim(), std::move(out));
}

MonomialIdeal product_power(std::span<const MonomialIdeal> ideals, std::span<const std::int64_t> alpha) {
    if (ideals.size() != alpha.size()) throw InvalidArgument("exponent tuple length differs from ideal tuple length");
    if (ideals.empty()) throw InvalidArgument("empty ideal tuple");
    if (std::all_of(alpha.begin(), alpha.end(), [](auto a) { return a == 0; }))
        throw InvalidArgument("all-zero exponent tuple");
    const std::size_t n = ideals.front().ambient_dim();
    MonomialIdeal result = MonomialIdeal::unit(n);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (alpha[i] < 0) throw InvalidArgument("negative exponent in product_power");
        if (ideals[i].ambient_dim() != n) throw DimensionMismatch("ideals have different ambient dimensions");
        for (std::int64_t p = 0; p < alpha[i]; ++p) result = result * ideals[i];
    }
    return result;
}

std::string monomial_string(const ExponentVector& v) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        if (!out.empty()) out += '*';
        out += "x" + std::to_string(t + 1);
        if (v[t] != 1) out += "^" + std::to_string(v[t]);
    }
    return out.empty() ? "1" : out;
}

namespace {

std::size_t variable_index(const std::string& name, std::size_t n, const std::string& text) {
    if (n <= 3 && name.size() == 1) {
        static const std::string short_names = "xyz";
        auto pos = short_names.find(name[0]);
        if (pos != std::string::npos && pos < n) return pos;
    }
    if (name.size() >= 2 && name[0] == 'x') {
        std::size_t idx = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i])))
                throw ParseError("unknown variable '" + name + "' in monomial '" + text + "'");
            idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
        }
        if (idx >= 1 && idx <= n) return idx - 1;
    }
    throw ParseError("unknown variable '" + name + "' in monomial '" + text + "'");
}

}  // namespace

ExponentVector parse_monomial(const std::string& text, std::size_t ambient_dim) {
    ExponentVector v(ambient_dim, 0);
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    if (compact.empty()) throw ParseError("empty monomial");
    if (compact == "1") return v;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        auto end = compact.find('*', pos);
        if (end == std::string::npos) end = compact.size();
        std::string factor = compact.substr(pos, end - pos);
        if (factor.empty()) throw ParseError("malformed monomial '" + text + "'");
        std::string name = factor;
        std::int64_t power = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            std::string exp = factor.substr(caret + 1);
            if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("malformed exponent in monomial '" + text + "'");
            power = std::stoll(exp);
        }
        v[variable_index(name, ambient_dim, text)] += power;
        pos = end + 1;
    }
    return v;
}

}  // namespace mmbs
