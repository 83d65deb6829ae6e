#ifndef LCTLAB_GROEBNER_HPP
#define LCTLAB_GROEBNER_HPP

#include <vector>

#include "lctlab/ideal.hpp"

namespace lctlab {

// Resource limits for Buchberger and the dimension search. Exceeding one
// raises budget_error; partial work is reported in the exception, never as a
// wrong answer.
struct GroebnerBudget {
    long max_spairs = 200000;
    long max_terms = 2000000;
    long max_dimension_nodes = 1L << 22;
};

struct GroebnerDiagnostics {
    long spairs_processed = 0;
    long reductions = 0;
};

// Unique reduced Groebner basis under grevlex: elements monic, no term of
// any element divisible by the leading monomial of another, sorted by
// leading monomial ascending.
struct GroebnerBasis {
    int ambient = 0;
    std::vector<Polynomial> elements;
    GroebnerDiagnostics diagnostics;

    bool is_unit() const;
};

GroebnerBasis buchberger(const Ideal& a, const GroebnerBudget& budget = {});

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Full normal form (every term reduced) against a list of nonzero
// polynomials, first divisor wins.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const GroebnerBudget& budget = {}, GroebnerDiagnostics* diag = nullptr);

// Krull dimension of the quotient ring: the largest variable subset S such
// that no leading monomial of the reduced basis is supported inside S.
// Returns -1 for the unit ideal and the ambient count for the zero ideal.
int dimension(const GroebnerBasis& basis, const GroebnerBudget& budget = {});
int dimension(const Ideal& a, const GroebnerBudget& budget = {});

// ambient - dimension; rejects the unit ideal.
int codimension(const Ideal& a, const GroebnerBudget& budget = {});

}  // namespace lctlab

#endif
