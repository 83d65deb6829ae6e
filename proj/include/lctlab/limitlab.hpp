#ifndef LCTLAB_LIMITLAB_HPP
#define LCTLAB_LIMITLAB_HPP

#include <map>

#include "lctlab/estimator.hpp"

namespace lctlab {

// a + m^d: the generators of a with every term of degree >= d deleted, plus
// all monomials of degree exactly d. Equal to a + m^d as an ideal.
Ideal truncate_ideal(const Ideal& a, int degree);

// Finitely many truncations standing in for a power series; truncating a
// stored truncation to a smaller degree reproduces the stored one.
class TruncationSeries {
  public:
    TruncationSeries(Ideal source, const std::vector<int>& degrees);
    const Ideal& source() const { return source_; }
    const std::map<int, Ideal>& truncations() const { return truncations_; }
    const Ideal& at(int degree) const;

  private:
    Ideal source_;
    std::map<int, Ideal> truncations_;
};

// [c_d - n/d, c_d] intersected with [0, n], where c_d brackets the lct of
// the degree-d truncation; the true lct of a is inside.
LctBracket truncation_bracket(const Ideal& a, int degree, int max_order,
                              const std::vector<std::vector<int>>& weights,
                              const GroebnerBudget& budget = {}, int jobs = 1);

// Exact lcts of the truncations at the given ascending degrees; refuses
// degrees whose truncation it cannot evaluate exactly. The sequence is
// checked to be non-increasing and >= the certified lower bound for a.
std::vector<ExtRational> truncation_monotone_check(const Ideal& a, const std::vector<int>& degrees,
                                                   int max_order,
                                                   const std::vector<std::vector<int>>& weights,
                                                   const GroebnerBudget& budget = {});

// g = f + sum_{i=1}^{b-a} y_i^b for c = a/b in lowest terms; the predicted
// threshold min{1, c + (b-a)/b}.
struct ThomSebastianiShift {
    Polynomial g;
    ExtRational predicted;
};
ThomSebastianiShift thom_sebastiani_shift(const Polynomial& f, const Rational& c);

// a + (t^m) with t a fresh last variable; predicted threshold c + 1/m.
struct TPowerShift {
    Ideal ideal;
    ExtRational predicted;
};
TPowerShift t_power_shift(const Ideal& a, int m, const ExtRational& c);

// Same generators, one more ambient variable; the lct is unchanged.
Ideal cylinder_extend(const Ideal& a);

// Ideal generated by all m-fold products of generators; lct scales by 1/m.
Ideal power_scale(const Ideal& a, int m);
ExtRational power_scale_prediction(const ExtRational& c, int m);

// Orders and discrepancies along the recursive blow-up of F against F_0.
struct LadderState {
    long kappa_f = 0;
    long ord_f = 1;
    long kappa_f0 = 0;
    long ord_f0 = 1;
    long step = 0;
};

// q_m = (m(1+kappa_F) + (1+kappa_F0)) / (m ord_F + ord_F0), converging to
// the candidate contribution (1+kappa_F)/ord_F.
Rational blowup_ladder(const LadderState& state);
Rational blowup_ladder_limit(const LadderState& state);

}  // namespace lctlab

#endif
