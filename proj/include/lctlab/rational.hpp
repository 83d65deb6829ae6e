#ifndef LCTLAB_RATIONAL_HPP
#define LCTLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "lctlab/errors.hpp"

namespace lctlab {

using Rational = mpq_class;

Rational rational_of(long num, long den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// A rational number extended with +infinity. Finite values are kept in
// canonical form (positive denominator, coprime with the numerator) by GMP.
// +infinity compares greater than every finite value and absorbs addition.
class ExtRational {
  public:
    ExtRational() : finite_(true), q_(0) {}
    ExtRational(long num, long den = 1) : finite_(true), q_(rational_of(num, den)) {}
    explicit ExtRational(Rational q) : finite_(true), q_(std::move(q)) { q_.canonicalize(); }

    static ExtRational infinity() {
        ExtRational r;
        r.finite_ = false;
        return r;
    }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }

    const Rational& value() const {
        if (!finite_) throw value_error("value() on +infinity");
        return q_;
    }
    mpz_class num() const { return value().get_num(); }
    mpz_class den() const { return value().get_den(); }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.q_ == b.q_;
    }
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.q_ < b.q_;
    }
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator<=(const ExtRational& a, const ExtRational& b) { return !(b < a); }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return !(a < b); }

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtRational(Rational(a.q_ + b.q_));
    }
    friend ExtRational operator-(const ExtRational& a, const Rational& b) {
        if (!a.finite_) return infinity();
        return ExtRational(Rational(a.q_ - b));
    }
    friend ExtRational operator*(const ExtRational& a, const Rational& b);
    friend ExtRational operator/(const ExtRational& a, long d) {
        if (d <= 0) throw value_error("division of ExtRational by nonpositive integer");
        if (!a.finite_) return infinity();
        return ExtRational(Rational(a.q_ / d));
    }

    std::string str() const { return finite_ ? to_string(q_) : "inf"; }

  private:
    bool finite_;
    Rational q_;
};

ExtRational min(const ExtRational& a, const ExtRational& b);
ExtRational max(const ExtRational& a, const ExtRational& b);

}  // namespace lctlab

#endif
