#include "mmbs/rational.hpp"

#include "mmbs/errors.hpp"

#include <cctype>
#include <limits>

namespace mmbs {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer den = parse_integer(den_text, text);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw InvalidArgument("integer out of 64-bit range: " + z.get_str());
    return z.get_si();
}

}  // namespace mmbs
