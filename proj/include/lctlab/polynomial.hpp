#ifndef LCTLAB_POLYNOMIAL_HPP
#define LCTLAB_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lctlab/monomial.hpp"
#include "lctlab/rational.hpp"

namespace lctlab {

// Sparse multivariate polynomial over the rationals. Terms are stored in
// grevlex-descending order, so begin() is the leading term; coefficients are
// never zero. Two polynomials are equal iff their term maps are equal.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    explicit Polynomial(int ambient = 0) : ambient_(ambient) {}

    static Polynomial zero(int ambient) { return Polynomial(ambient); }
    static Polynomial constant(int ambient, const Rational& c);
    static Polynomial variable(int ambient, int index, int power = 1);
    static Polynomial term(int ambient, const Rational& c, const Monomial& m);

    int ambient() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_monomial() const { return terms_.size() == 1; }
    bool constant_term_is_zero() const;

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    // Minimal total degree of a term; nullopt for the zero polynomial.
    std::optional<int> order_at_origin() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.ambient_ == q.ambient_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial monic() const;
    // Terms of total degree < d only.
    Polynomial truncated_below(int d) const;
    // Terms of minimal w-weight, where weight(m) = sum_i w[i]*m[i].
    Polynomial initial_form(const std::vector<int>& w) const;
    // Drop every term that uses one of the given variables (substitute 0),
    // then forget those variables via the index map new_index[v] (-1 = drop).
    Polynomial substitute_zero_and_project(const std::vector<int>& new_index, int new_ambient) const;
    // Reinterpret in a larger ring; old variable v becomes new_index[v].
    Polynomial embedded(const std::vector<int>& new_index, int new_ambient) const;

  private:
    void check_same(const Polynomial& o) const {
        if (ambient_ != o.ambient_) throw value_error("polynomial ambient mismatch");
    }
    int ambient_;
    TermMap terms_;
};

}  // namespace lctlab

#endif
