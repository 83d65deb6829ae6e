#ifndef LCTLAB_IDEAL_HPP
#define LCTLAB_IDEAL_HPP

#include <vector>

#include "lctlab/polynomial.hpp"

namespace lctlab {

// Finitely generated ideal in Q[x0..x{n-1}]. All thresholds in this library
// are taken at the origin, so the "vanishes at the origin" predicate (every
// generator has zero constant term) is computed once and cached.
class Ideal {
  public:
    explicit Ideal(int ambient) : ambient_(ambient), vanishes_(true) {}
    Ideal(int ambient, std::vector<Polynomial> generators);

    int ambient() const { return ambient_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool vanishes_at_origin() const { return vanishes_; }
    bool is_zero() const;
    // Some generator has a nonzero constant term (the localized ideal at the
    // origin is the unit ideal).
    bool contains_unit_at_origin() const { return !vanishes_; }
    // Every generator is a single term.
    bool is_monomial() const;

    void push_generator(Polynomial p);

    // min over generators of the minimal term degree; +infinity for the zero
    // ideal, 0 iff the ideal does not vanish at the origin.
    ExtRational order_at_origin() const;

  private:
    int ambient_;
    std::vector<Polynomial> gens_;
    bool vanishes_;
};

}  // namespace lctlab

#endif
