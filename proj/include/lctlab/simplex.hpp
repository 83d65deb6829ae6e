#ifndef LCTLAB_SIMPLEX_HPP
#define LCTLAB_SIMPLEX_HPP

#include <vector>

#include "lctlab/rational.hpp"

namespace lctlab {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::optimal;
    Rational objective;
    std::vector<Rational> x;
};

// minimize cost.x subject to A x = b, x >= 0, in exact rational arithmetic.
// Two-phase primal simplex with Bland's rule, so it cannot cycle.
LpResult simplex_minimize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                          const std::vector<Rational>& cost);

}  // namespace lctlab

#endif
