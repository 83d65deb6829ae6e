#include "lctlab/rational.hpp"

namespace lctlab {

Rational rational_of(long num, long den) {
    if (den == 0) throw value_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class{text});
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den <= 0) throw value_error("denominator must be positive: " + text);
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw value_error("malformed rational: " + text);
    }
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExtRational operator*(const ExtRational& a, const Rational& b) {
    if (!a.finite_) {
        if (b <= 0) throw value_error("scaling +infinity by a nonpositive factor");
        return ExtRational::infinity();
    }
    return ExtRational(Rational(a.q_ * b));
}

ExtRational min(const ExtRational& a, const ExtRational& b) { return a < b ? a : b; }
ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

}  // namespace lctlab
