#include "hookid/rational.hpp"

#include <stdexcept>

namespace hookid {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational out(num, den);
    out.canonicalize();
    return out;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const Rational& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    std::string normalized(text);
    if (normalized.front() == '+') {
        normalized.erase(0, 1);
    }
    return Integer(normalized, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    Rational out;
    if (slash == std::string_view::npos) {
        out = Rational(parse_integer(text));
    } else {
        const Integer num = parse_integer(text.substr(0, slash));
        const Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        out = make_rational(num, den);
    }
    return out;
}

}  // namespace hookid
