#include "mmbs/polynomial.hpp"

#include "mmbs/errors.hpp"

#include <algorithm>
#include <cctype>

namespace mmbs {

Polynomial::Polynomial(VariableList vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(VariableList vars, const Rational& c) {
    Polynomial p(std::move(vars));
    p.add_term(ExponentVector(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(VariableList vars, const std::string& name) {
    Polynomial p(std::move(vars));
    ExponentVector e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(VariableList vars, ExponentVector exponents, const Rational& c) {
    Polynomial p(std::move(vars));
    if (exponents.size() != p.vars_.size()) throw DimensionMismatch("monomial exponent length differs from ring size");
    p.add_term(exponents, c);
    return p;
}

std::size_t Polynomial::index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw InvalidArgument("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool Polynomial::has_variable(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool Polynomial::uses(const std::string& name) const {
    if (!has_variable(name)) return false;
    auto idx = index_of(name);
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[idx] > 0; });
}

Polynomial Polynomial::embed(const VariableList& ring) const {
    std::vector<std::size_t> target(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(ring.begin(), ring.end(), vars_[i]);
        if (it == ring.end()) {
            if (uses(vars_[i])) throw InvalidArgument("variable '" + vars_[i] + "' is not declared in the target ring");
            target[i] = ring.size();
        } else {
            target[i] = static_cast<std::size_t>(it - ring.begin());
        }
    }
    Polynomial out(ring);
    for (const auto& [e, c] : terms_) {
        ExponentVector f(ring.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) f[target[i]] += e[i];
        }
        out.add_term(f, c);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw DimensionMismatch("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::int64_t k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& other) const {
    if (vars_ != other.vars_) throw DimensionMismatch("polynomials live in different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_ring(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_ring(b);
    Polynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExponentVector e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(vars_, 1);
    for (unsigned k = 0; k < exponent; ++k) result = result * *this;
    return result;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest-degree terms first in reverse lexicographic key order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        bool constant_term = std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (constant_term) {
            out += mmbs::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mmbs::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& replacements) {
    const auto& ring = p.variables();
    std::vector<std::pair<std::size_t, Polynomial>> subs;
    for (const auto& [name, rep] : replacements) {
        subs.emplace_back(p.index_of(name), rep.embed(ring));
    }
    Polynomial out(ring);
    for (const auto& [e, c] : p.terms()) {
        ExponentVector kept = e;
        Polynomial factor = Polynomial::constant(ring, c);
        for (const auto& [idx, rep] : subs) {
            kept[idx] = 0;
            factor = factor * rep.pow(static_cast<unsigned>(e[idx]));
        }
        out += factor * Polynomial::monomial(ring, kept);
    }
    return out;
}

Polynomial substitute(const Polynomial& p, const std::string& var, const Polynomial& replacement) {
    return substitute(p, std::map<std::string, Polynomial>{{var, replacement}});
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, const VariableList& vars, const std::map<std::string, std::string>& aliases)
        : text_(text), vars_(vars), aliases_(aliases) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
        }
    }

    Polynomial parse() {
        if (s_.empty()) fail("empty polynomial");
        Polynomial out(vars_);
        bool first = true;
        while (pos_ < s_.size() || first) {
            int sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            out += term() * Rational(sign);
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " in polynomial '" + text_ + "' at offset " + std::to_string(pos_));
    }

    Polynomial term() {
        Polynomial t = Polynomial::constant(vars_, 1);
        bool any = false;
        while (true) {
            t = t * factor();
            any = true;
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        return t;
    }

    Polynomial factor() {
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
            return Polynomial::constant(vars_, parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (auto it = aliases_.find(name); it != aliases_.end()) name = it->second;
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) fail("unknown variable '" + name + "'");
            unsigned power = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                std::size_t ds = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (ds == pos_) fail("missing exponent");
                power = static_cast<unsigned>(std::stoul(s_.substr(ds, pos_ - ds)));
            }
            return Polynomial::variable(vars_, name).pow(power);
        }
        if (c == '(') {
            ++pos_;
            std::size_t depth = 1, start = pos_;
            while (pos_ < s_.size() && depth > 0) {
                if (s_[pos_] == '(') ++depth;
                if (s_[pos_] == ')') --depth;
                ++pos_;
            }
            if (depth != 0) fail("unbalanced parenthesis");
            return PolyParser(s_.substr(start, pos_ - start - 1), vars_, aliases_).parse();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string text_;
    std::string s_;
    const VariableList& vars_;
    const std::map<std::string, std::string>& aliases_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VariableList& vars,
                            const std::map<std::string, std::string>& aliases) {
    return PolyParser(text, vars, aliases).parse();
}

}  // namespace mmbs
