#ifndef LCTLAB_ESTIMATOR_HPP
#define LCTLAB_ESTIMATOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "lctlab/groebner.hpp"
#include "lctlab/newton.hpp"

namespace lctlab {

// Where a bound came from.
struct BoundTag {
    enum class Kind {
        jet_order,
        newton_oracle,
        degeneration_weight,
        multiplicity,
        truncation_degree,
        trivial,
        convention,
    };
    Kind kind = Kind::trivial;
    std::string detail;

    static BoundTag jet(int order);
    static BoundTag oracle();
    static BoundTag degeneration(const std::vector<int>& w);
    static BoundTag multiplicity();
    static BoundTag truncation(int degree);
    static BoundTag trivial(const std::string& what);
    static BoundTag convention(const std::string& what);
    const std::string& str() const { return detail; }
};

// Certified interval around an lct. exact implies lower == upper. The
// conjectured value, when present, is a profile-stability heuristic and is
// never certified.
struct LctBracket {
    ExtRational lower;
    ExtRational upper;
    bool exact = false;
    BoundTag lower_provenance;
    BoundTag upper_provenance;
    std::optional<Rational> conjectured;

    LctBracket() = default;
    LctBracket(ExtRational lo, ExtRational hi, bool exact, BoundTag lo_tag, BoundTag hi_tag);
};

struct JetProfileRow {
    int order = 0;
    int fiber_dim = 0;
    ExtRational bound;
    std::string error;  // nonempty when this order hit a budget

    bool ok() const { return error.empty(); }
};

// Jet fiber dimensions and the bounds n - dim/(m+1) for all orders up to a
// cap. The running minimum over ok rows is the best certified upper bound.
struct JetProfile {
    int ambient = 0;
    std::vector<JetProfileRow> rows;

    ExtRational best_bound() const;
    int best_order() const;
    std::optional<Rational> stable_candidate() const;
};

// n - dim(fiber of the order-m jets)/(m+1): one term of the sup in the jet
// formula, hence a certified upper bound for the lct at the origin.
ExtRational jet_upper_bound(const Ideal& a, int order, const GroebnerBudget& budget = {});

// Orders are independent Groebner runs; jobs > 1 evaluates them in an OpenMP
// pool with a deterministic merge by order.
JetProfile jet_profile(const Ideal& a, int max_order, const GroebnerBudget& budget = {}, int jobs = 1);

std::vector<std::vector<int>> default_degeneration_weights(int n);

// Largest oracle value over the weights whose initial forms of the
// generators are all monomials; 0 when no weight degenerates to a monomial
// ideal. Semicontinuity makes every candidate a valid lower bound.
ExtRational degeneration_lower_bound(const Ideal& a, const std::vector<std::vector<int>>& weights);
ExtRational degeneration_lower_bound(const Ideal& a, const std::vector<std::vector<int>>& weights,
                                     std::optional<std::vector<int>>* winning_weight);

// Combined bracket: degeneration lower bound against the minimum of the jet
// profile, the blow-up multiplicity bound n/ord, and the trivial bound n.
// Monomial ideals short-circuit to the exact oracle value.
LctBracket estimate_lct(const Ideal& a, int max_order, const std::vector<std::vector<int>>& weights,
                        const GroebnerBudget& budget = {}, int jobs = 1);

}  // namespace lctlab

#endif
