#include "tropcone/scalar.hpp"

#include <cctype>

namespace tropcone {

std::string scalar_to_string(const TropScalar& x) {
    if (x.is_bottom()) return "-inf";
    return x.value().get_str();
}

namespace {

bool valid_rational_literal(const std::string& s) {
    size_t i = 0;
    auto digits = [&](size_t& pos) {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos > start;
    };
    if (i < s.size() && s[i] == '-') ++i;
    if (!digits(i)) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    size_t den_start = i;
    if (!digits(i) || i != s.size()) return false;
    for (size_t k = den_start; k < s.size(); ++k)
        if (s[k] != '0') return true; // nonzero denominator
    return false;
}

} // namespace

TropScalar scalar_from_string(const std::string& text) {
    if (text == "-inf") return TropScalar::bottom();
    if (!valid_rational_literal(text))
        throw ParseError("invalid scalar literal: \"" + text + "\"");
    Rational q(text);
    q.canonicalize();
    return TropScalar(q);
}

} // namespace tropcone
