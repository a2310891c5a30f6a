#include "slicelab/rational.hpp"

#include "slicelab/errors.hpp"

namespace slicelab {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto bad = [&] { return ParseError("bad rational literal: '" + std::string(text) + "'"); };

    auto parse_int = [&](std::string_view s) -> Int {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw bad();
        return Int(std::string(s));
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));

    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const Int& n) { return n.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace slicelab
