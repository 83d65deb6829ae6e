#include "lctlab/estimator.hpp"

#include <omp.h>

#include "lctlab/jets.hpp"

namespace lctlab {

namespace {

std::string weight_string(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

}  // namespace

BoundTag BoundTag::jet(int order) {
    return {Kind::jet_order, "jet-order-" + std::to_string(order)};
}
BoundTag BoundTag::oracle() { return {Kind::newton_oracle, "newton-oracle"}; }
BoundTag BoundTag::degeneration(const std::vector<int>& w) {
    return {Kind::degeneration_weight, "degeneration-weight-" + weight_string(w)};
}
BoundTag BoundTag::multiplicity() { return {Kind::multiplicity, "multiplicity"}; }
BoundTag BoundTag::truncation(int degree) {
    return {Kind::truncation_degree, "truncation-degree-" + std::to_string(degree)};
}
BoundTag BoundTag::trivial(const std::string& what) { return {Kind::trivial, what}; }
BoundTag BoundTag::convention(const std::string& what) { return {Kind::convention, what}; }

LctBracket::LctBracket(ExtRational lo, ExtRational hi, bool exact, BoundTag lo_tag, BoundTag hi_tag)
    : lower(std::move(lo)),
      upper(std::move(hi)),
      exact(exact),
      lower_provenance(std::move(lo_tag)),
      upper_provenance(std::move(hi_tag)) {
    if (upper < lower) throw value_error("bracket with lower > upper");
    if (exact && lower != upper) throw value_error("exact bracket must be collapsed");
}

ExtRational JetProfile::best_bound() const {
    ExtRational best(ambient, 1);
    for (const auto& row : rows)
        if (row.ok() && row.bound < best) best = row.bound;
    return best;
}

int JetProfile::best_order() const {
    ExtRational best(ambient, 1);
    int order = 0;
    for (const auto& row : rows)
        if (row.ok() && row.bound < best) {
            best = row.bound;
            order = row.order;
        }
    return order;
}

std::optional<Rational> JetProfile::stable_candidate() const {
    // same bound at orders m1 < m2, with (m2+1) a multiple of (m1+1) and the
    // bound's denominator dividing m1+1: a plausible but uncertified limit
    std::optional<Rational> best;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].ok() || rows[i].bound.is_infinite()) continue;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (!rows[j].ok()) continue;
            if (rows[i].bound != rows[j].bound) continue;
            long m1 = rows[i].order, m2 = rows[j].order;
            if ((m2 + 1) % (m1 + 1) != 0) continue;
            const Rational& q = rows[i].bound.value();
            if (mpz_class(m1 + 1) % q.get_den() != 0) continue;
            if (!best || q < *best) best = q;
        }
    }
    return best;
}

ExtRational jet_upper_bound(const Ideal& a, int order, const GroebnerBudget& budget) {
    if (a.is_zero()) throw value_error("jet bound of the zero ideal");
    FiberIdeal fiber = fiber_over_origin(jet_ideal(a, order));
    int dim = dimension(fiber.ideal, budget);
    Rational bound(a.ambient());
    bound -= Rational(dim, order + 1);
    bound.canonicalize();
    return ExtRational(bound);
}

namespace {

JetProfileRow profile_row(const Ideal& a, int order, const GroebnerBudget& budget) {
    JetProfileRow row;
    row.order = order;
    try {
        FiberIdeal fiber = fiber_over_origin(jet_ideal(a, order));
        row.fiber_dim = dimension(fiber.ideal, budget);
        Rational bound(a.ambient());
        bound -= Rational(row.fiber_dim, order + 1);
        bound.canonicalize();
        row.bound = ExtRational(bound);
    } catch (const budget_error& e) {
        row.fiber_dim = -1;
        row.bound = ExtRational(a.ambient());
        row.error = e.what();
    }
    return row;
}

}  // namespace

JetProfile jet_profile(const Ideal& a, int max_order, const GroebnerBudget& budget, int jobs) {
    if (a.is_zero()) throw value_error("jet profile of the zero ideal");
    if (max_order < 0) throw value_error("negative jet order");
    JetProfile profile;
    profile.ambient = a.ambient();
    profile.rows.resize(max_order + 1);
    if (jobs > 1) {
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (int m = 0; m <= max_order; ++m) profile.rows[m] = profile_row(a, m, budget);
    } else {
        for (int m = 0; m <= max_order; ++m) profile.rows[m] = profile_row(a, m, budget);
    }
    return profile;
}

std::vector<std::vector<int>> default_degeneration_weights(int n) {
    std::vector<std::vector<int>> weights;
    weights.emplace_back(n, 1);
    if (n <= 3) {
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> w(n, 0);
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) w[i] = 1;
            if (w != weights.front()) weights.push_back(std::move(w));
        }
    }
    return weights;
}

ExtRational degeneration_lower_bound(const Ideal& a, const std::vector<std::vector<int>>& weights) {
    return degeneration_lower_bound(a, weights, nullptr);
}

ExtRational degeneration_lower_bound(const Ideal& a, const std::vector<std::vector<int>>& weights,
                                     std::optional<std::vector<int>>* winning_weight) {
    if (a.is_zero() || !a.vanishes_at_origin())
        throw value_error("degeneration bound needs a nonzero ideal vanishing at the origin");
    ExtRational best(0);
    if (winning_weight) winning_weight->reset();
    for (const auto& w : weights) {
        if (static_cast<int>(w.size()) != a.ambient()) throw value_error("weight vector length mismatch");
        bool zero = true;
        for (int x : w) {
            if (x < 0) throw value_error("weights must be nonnegative");
            if (x > 0) zero = false;
        }
        if (zero) throw value_error("weight vector must be nonzero");

        Ideal initial(a.ambient());
        bool monomial = true;
        for (const auto& g : a.generators()) {
            if (g.is_zero()) continue;
            Polynomial in = g.initial_form(w);
            if (!in.is_monomial()) {
                monomial = false;
                break;
            }
            initial.push_generator(Polynomial::term(a.ambient(), Rational(1), in.leading_monomial()));
        }
        if (!monomial || initial.generators().empty()) continue;
        ExtRational value = monomial_lct_value(initial);
        if (value > best) {
            best = value;
            if (winning_weight) *winning_weight = w;
        }
    }
    return best;
}

LctBracket estimate_lct(const Ideal& a, int max_order, const std::vector<std::vector<int>>& weights,
                        const GroebnerBudget& budget, int jobs) {
    if (a.is_zero())
        return {ExtRational(0), ExtRational(0), true, BoundTag::convention("lct(0)=0"),
                BoundTag::convention("lct(0)=0")};
    if (!a.vanishes_at_origin())
        return {ExtRational::infinity(), ExtRational::infinity(), true,
                BoundTag::convention("unit at origin"), BoundTag::convention("unit at origin")};
    if (a.is_monomial()) {
        ExtRational v = monomial_lct_value(a);
        return {v, v, true, BoundTag::oracle(), BoundTag::oracle()};
    }

    std::optional<std::vector<int>> winner;
    ExtRational lower = degeneration_lower_bound(a, weights, &winner);
    BoundTag lower_tag = winner ? BoundTag::degeneration(*winner) : BoundTag::trivial("zero");

    JetProfile profile = jet_profile(a, max_order, budget, jobs);
    ExtRational upper = profile.best_bound();
    BoundTag upper_tag = BoundTag::jet(profile.best_order());

    ExtRational ord = a.order_at_origin();
    ExtRational mult_bound{Rational(Rational(a.ambient()) / ord.value())};
    if (mult_bound < upper) {
        upper = mult_bound;
        upper_tag = BoundTag::multiplicity();
    }
    ExtRational trivial(a.ambient(), 1);
    if (trivial < upper) {
        upper = trivial;
        upper_tag = BoundTag::trivial("ambient dimension");
    }

    LctBracket bracket(lower, upper, lower == upper, lower_tag, upper_tag);
    bracket.conjectured = profile.stable_candidate();
    return bracket;
}

}  // namespace lctlab
