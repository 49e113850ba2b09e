#include "liecomp/rational.hpp"

#include "liecomp/error.hpp"

#include <cctype>

namespace liecomp {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("malformed rational '" + std::string(text) + "'");
    const Integer d = parse_integer(den);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(parse_integer(num), d);
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace liecomp
