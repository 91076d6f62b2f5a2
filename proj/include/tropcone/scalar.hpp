#ifndef TROPCONE_SCALAR_HPP
#define TROPCONE_SCALAR_HPP

#include <compare>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "tropcone/errors.hpp"

namespace tropcone {

// Exact rational number. GMP keeps values canonical (reduced, positive
// denominator), so equality is structural.
using Rational = mpq_class;

// Element of the max-plus semiring: an exact rational or bottom (-inf).
// Addition is max, multiplication is rational sum, the zero is bottom and
// the unit is the rational 0.
class TropScalar {
public:
    TropScalar() : finite_(false), value_(0) {}

    TropScalar(const Rational& q) : finite_(true), value_(q) {
        value_.canonicalize();
    }
    TropScalar(long n) : finite_(true), value_(n) {}
    TropScalar(long num, long den) : finite_(true), value_(num, den) {
        value_.canonicalize();
    }

    static TropScalar bottom() { return TropScalar(); }
    static TropScalar one() { return TropScalar(0L); }

    bool is_bottom() const { return !finite_; }
    bool is_finite() const { return finite_; }

    // Finite value; call only when is_finite().
    const Rational& value() const { return value_; }

    friend bool operator==(const TropScalar& x, const TropScalar& y) {
        if (x.finite_ != y.finite_) return false;
        return !x.finite_ || x.value_ == y.value_;
    }

    // Total order: bottom below every rational.
    friend bool operator<(const TropScalar& x, const TropScalar& y) {
        if (!x.finite_) return y.finite_;
        if (!y.finite_) return false;
        return x.value_ < y.value_;
    }
    friend bool operator>(const TropScalar& x, const TropScalar& y) { return y < x; }
    friend bool operator<=(const TropScalar& x, const TropScalar& y) { return !(y < x); }
    friend bool operator>=(const TropScalar& x, const TropScalar& y) { return !(x < y); }
    friend bool operator!=(const TropScalar& x, const TropScalar& y) { return !(x == y); }

private:
    bool finite_;
    Rational value_;
};

// Tropical addition: max(x, y).
inline TropScalar t_add(const TropScalar& x, const TropScalar& y) {
    return x < y ? y : x;
}

// Tropical multiplication: rational sum, with bottom absorbing.
inline TropScalar t_mul(const TropScalar& x, const TropScalar& y) {
    if (x.is_bottom() || y.is_bottom()) return TropScalar::bottom();
    return TropScalar(Rational(x.value() + y.value()));
}

// Tropical inverse of a non-zero scalar: rational negation.
inline TropScalar t_neg(const TropScalar& x) {
    if (x.is_bottom()) throw DomainError("t_neg: undefined on bottom (-inf)");
    return TropScalar(Rational(-x.value()));
}

std::string scalar_to_string(const TropScalar& x);
TropScalar scalar_from_string(const std::string& text);

} // namespace tropcone

#endif
