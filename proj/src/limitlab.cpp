#include "lctlab/limitlab.hpp"

#include <numeric>

namespace lctlab {

Ideal truncate_ideal(const Ideal& a, int degree) {
    if (degree < 1) throw value_error("truncation degree must be at least 1");
    Ideal out(a.ambient());
    for (const auto& g : a.generators()) {
        Polynomial t = g.truncated_below(degree);
        if (!t.is_zero()) out.push_generator(std::move(t));
    }
    for (const auto& m : monomials_of_degree(a.ambient(), degree))
        out.push_generator(Polynomial::term(a.ambient(), Rational(1), m));
    return out;
}

TruncationSeries::TruncationSeries(Ideal source, const std::vector<int>& degrees)
    : source_(std::move(source)) {
    for (int d : degrees) truncations_.emplace(d, truncate_ideal(source_, d));
}

const Ideal& TruncationSeries::at(int degree) const {
    auto it = truncations_.find(degree);
    if (it == truncations_.end())
        throw value_error("no truncation stored at degree " + std::to_string(degree));
    return it->second;
}

namespace {

// Exact lct of a truncation when available: oracle for monomial ideals,
// collapsed estimator bracket otherwise.
LctBracket truncation_value(const Ideal& t, int max_order, const std::vector<std::vector<int>>& weights,
                            const GroebnerBudget& budget, int jobs) {
    return estimate_lct(t, max_order, weights, budget, jobs);
}

}  // namespace

LctBracket truncation_bracket(const Ideal& a, int degree, int max_order,
                              const std::vector<std::vector<int>>& weights,
                              const GroebnerBudget& budget, int jobs) {
    if (!a.vanishes_at_origin()) throw value_error("truncation bracket needs an ideal vanishing at the origin");
    Ideal t = truncate_ideal(a, degree);
    LctBracket inner = truncation_value(t, max_order, weights, budget, jobs);
    Rational width(a.ambient(), degree);
    width.canonicalize();
    ExtRational lower = inner.lower - width;
    if (lower < ExtRational(0)) lower = ExtRational(0);
    ExtRational upper = min(inner.upper, ExtRational(a.ambient()));
    LctBracket out(lower, upper, lower == upper, BoundTag::truncation(degree),
                   BoundTag::truncation(degree));
    return out;
}

std::vector<ExtRational> truncation_monotone_check(const Ideal& a, const std::vector<int>& degrees,
                                                   int max_order,
                                                   const std::vector<std::vector<int>>& weights,
                                                   const GroebnerBudget& budget) {
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] <= degrees[i - 1]) throw value_error("degrees must be strictly increasing");

    ExtRational floor_bound(0);
    if (!a.is_zero() && a.vanishes_at_origin())
        floor_bound = a.is_monomial() ? monomial_lct_value(a) : degeneration_lower_bound(a, weights);

    std::vector<ExtRational> values;
    for (int d : degrees) {
        Ideal t = truncate_ideal(a, d);
        LctBracket c = truncation_value(t, max_order, weights, budget, 1);
        if (!c.exact)
            throw value_error("truncation at degree " + std::to_string(d) +
                              " is not exactly evaluable");
        values.push_back(c.lower);
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0 && values[i] > values[i - 1])
            throw error("truncation sequence increased between degrees " +
                        std::to_string(degrees[i - 1]) + " and " + std::to_string(degrees[i]));
        if (values[i] < floor_bound) throw error("truncation value fell below a certified lower bound");
    }
    return values;
}

ThomSebastianiShift thom_sebastiani_shift(const Polynomial& f, const Rational& c) {
    if (c <= 0 || c > 1) throw value_error("not a hypersurface threshold: need 0 < c <= 1");
    long a = c.get_num().get_si();
    long b = c.get_den().get_si();
    int extra = static_cast<int>(b - a);
    int n = f.ambient();
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    Polynomial g = f.embedded(identity, n + extra);
    for (int i = 0; i < extra; ++i)
        g = g + Polynomial::variable(n + extra, n + i, static_cast<int>(b));
    Rational predicted = c + Rational(extra, b);
    predicted.canonicalize();
    if (predicted > 1) predicted = 1;
    return {std::move(g), ExtRational(predicted)};
}

TPowerShift t_power_shift(const Ideal& a, int m, const ExtRational& c) {
    if (m < 1) throw value_error("t-power exponent must be positive");
    int n = a.ambient();
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    Ideal out(n + 1);
    for (const auto& g : a.generators()) out.push_generator(g.embedded(identity, n + 1));
    out.push_generator(Polynomial::variable(n + 1, n, m));
    return {std::move(out), c + ExtRational(1, m)};
}

Ideal cylinder_extend(const Ideal& a) {
    int n = a.ambient();
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    Ideal out(n + 1);
    for (const auto& g : a.generators()) out.push_generator(g.embedded(identity, n + 1));
    return out;
}

Ideal power_scale(const Ideal& a, int m) {
    if (m < 1) throw value_error("power must be positive");
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators())
        if (!g.is_zero()) gens.push_back(g);
    Ideal out(a.ambient());
    if (gens.empty()) return out;
    // all m-fold products, combinations with repetition
    std::vector<int> pick(m, 0);
    while (true) {
        Polynomial prod = gens[pick[0]];
        for (int i = 1; i < m; ++i) prod = prod * gens[pick[i]];
        out.push_generator(std::move(prod));
        int pos = m - 1;
        while (pos >= 0 && pick[pos] == static_cast<int>(gens.size()) - 1) --pos;
        if (pos < 0) break;
        int next = pick[pos] + 1;
        for (int i = pos; i < m; ++i) pick[i] = next;
    }
    return out;
}

ExtRational power_scale_prediction(const ExtRational& c, int m) {
    if (m < 1) throw value_error("power must be positive");
    return c / m;
}

Rational blowup_ladder(const LadderState& s) {
    if (s.ord_f < 1) throw value_error("ord_F must be at least 1");
    if (s.kappa_f < 0 || s.kappa_f0 < 0 || s.ord_f0 < 0 || s.step < 0)
        throw value_error("ladder state entries must be nonnegative");
    long den = s.step * s.ord_f + s.ord_f0;
    if (den <= 0) throw value_error("ladder denominator vanishes at step 0");
    Rational q(s.step * (1 + s.kappa_f) + (1 + s.kappa_f0), den);
    q.canonicalize();
    return q;
}

Rational blowup_ladder_limit(const LadderState& s) {
    if (s.ord_f < 1) throw value_error("ord_F must be at least 1");
    Rational q(1 + s.kappa_f, s.ord_f);
    q.canonicalize();
    return q;
}

}  // namespace lctlab
