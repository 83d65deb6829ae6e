#ifndef LCTLAB_NEWTON_HPP
#define LCTLAB_NEWTON_HPP

#include <optional>
#include <vector>

#include "lctlab/ideal.hpp"
#include "lctlab/simplex.hpp"

namespace lctlab {

// Remove every exponent vector that componentwise dominates another; the
// survivors are the unique minimal monomial generating set.
std::vector<Monomial> minimalize_generators(std::vector<Monomial> gens);

// Convex hull of the minimal generators plus the nonnegative orthant.
struct NewtonPolyhedron {
    int ambient = 0;
    std::vector<Monomial> generators;
};

// Witness that mu*(1,..,1) lies on the polyhedron boundary:
//   sum_v lambda_v * v + slack = mu * (1,..,1),  sum lambda = 1,
// everything nonnegative, verified exactly before being returned.
struct LpCertificate {
    Rational mu;
    std::vector<Rational> lambda;
    std::vector<Rational> slack;
};

struct MonomialLctResult {
    ExtRational lct;
    std::optional<LpCertificate> certificate;
    NewtonPolyhedron polyhedron;
    bool coefficients_ignored = false;
};

// lct at the origin of a monomial ideal: 1/mu where mu = min{t : t*(1,..,1)
// in the Newton polyhedron}, solved by exact simplex. Conventions: the zero
// ideal gives 0, an ideal containing a nonzero constant gives +infinity.
// Rejects non-monomial generators.
MonomialLctResult monomial_lct(const Ideal& a);

ExtRational monomial_lct_value(const Ideal& a);

}  // namespace lctlab

#endif
