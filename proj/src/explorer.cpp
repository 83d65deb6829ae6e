#include "lctlab/explorer.hpp"

#include <omp.h>

#include <algorithm>

#include "lctlab/parse.hpp"

namespace lctlab {

namespace {

std::vector<Monomial> monomial_universe(int n, int d) {
    std::vector<Monomial> all;
    for (int k = 1; k <= d; ++k)
        for (auto& m : monomials_of_degree(n, k)) all.push_back(std::move(m));
    // already degree-major, grevlex-descending within each degree
    return all;
}

}  // namespace

std::vector<Ideal> enumerate_monomial_ideals(int n, int d, const ExploreGuards& guards) {
    if (n < 1 || d < 1) throw value_error("enumeration needs n >= 1 and d >= 1");
    if (n > guards.max_n || d > guards.max_degree)
        throw budget_error("enumeration guard exceeded: n <= " + std::to_string(guards.max_n) +
                               ", d <= " + std::to_string(guards.max_degree),
                           0, 0);
    std::vector<Monomial> universe = monomial_universe(n, d);
    std::vector<Ideal> out;
    std::vector<int> chosen;

    auto emit = [&]() {
        if (static_cast<long>(out.size()) >= guards.max_ideals)
            throw budget_error("enumeration budget exceeded", 0, static_cast<long>(out.size()));
        Ideal a(n);
        for (int i : chosen) a.push_generator(Polynomial::term(n, Rational(1), universe[i]));
        out.push_back(std::move(a));
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < universe.size(); ++i) {
            bool comparable = false;
            for (int j : chosen) {
                if (universe[j].divides(universe[i]) || universe[i].divides(universe[j])) {
                    comparable = true;
                    break;
                }
            }
            if (comparable) continue;
            chosen.push_back(static_cast<int>(i));
            emit();
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Spectrum lct_spectrum(int n, int d, const ExploreGuards& guards, int jobs) {
    std::vector<Ideal> ideals = enumerate_monomial_ideals(n, d, guards);
    std::vector<ExtRational> values(ideals.size());
    const long count = static_cast<long>(ideals.size());
    if (jobs > 1) {
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
        for (long i = 0; i < count; ++i) values[i] = monomial_lct_value(ideals[i]);
    } else {
        for (long i = 0; i < count; ++i) values[i] = monomial_lct_value(ideals[i]);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Spectrum s;
    s.n = n;
    s.d = d;
    s.count = count;
    s.values = std::move(values);
    return s;
}

std::vector<ValueSequence> t_power_families(int n, int d, int m_max, const ExploreGuards& guards) {
    std::vector<ValueSequence> out;
    for (const auto& a : enumerate_monomial_ideals(n, d, guards)) {
        ExtRational c = monomial_lct_value(a);
        ValueSequence seq;
        seq.construction = "t-power(" + print_ideal(a) + ")";
        seq.limit = c;
        seq.witness = a;
        for (int m = 1; m <= m_max; ++m) {
            TPowerShift shifted = t_power_shift(a, m, c);
            ExtRational certified = monomial_lct_value(shifted.ideal);
            if (certified != shifted.predicted)
                throw error("t-power prediction failed for " + seq.construction);
            SequencePoint point{"m=" + std::to_string(m), certified, true};
            point.predicted = shifted.predicted;
            seq.points.push_back(std::move(point));
        }
        out.push_back(std::move(seq));
    }
    return out;
}

std::vector<AccumulationReport> accumulation_scan(const std::vector<ValueSequence>& sequences,
                                                  const std::vector<Spectrum>& spectra) {
    std::vector<AccumulationReport> reports;
    for (const auto& seq : sequences) {
        for (const auto& p : seq.points)
            if (!p.certified)
                throw value_error("uncertified value '" + p.tag + "' in sequence " + seq.construction);
        if (seq.points.empty()) throw value_error("empty sequence " + seq.construction);

        AccumulationReport rep;
        rep.target = seq.limit;
        rep.witnesses = seq.points;

        bool decreasing = true, increasing = true;
        for (std::size_t i = 0; i + 1 < seq.points.size(); ++i) {
            if (!(seq.points[i + 1].value < seq.points[i].value)) decreasing = false;
            if (!(seq.points[i].value < seq.points[i + 1].value)) increasing = false;
        }
        bool above = decreasing && seq.points.back().value > seq.limit;
        bool below = increasing && seq.points.back().value < seq.limit;
        if (!above && !below)
            throw value_error("sequence " + seq.construction + " is not strictly monotone toward " +
                              seq.limit.str());
        rep.direction = above ? Direction::from_above : Direction::from_below;

        std::string where;
        for (const auto& s : spectra) {
            if (std::binary_search(s.values.begin(), s.values.end(), seq.limit)) {
                where = "spectrum(n=" + std::to_string(s.n) + ", d<=" + std::to_string(s.d) + ")";
                break;
            }
        }
        if (!where.empty()) {
            rep.verified = true;
            rep.verdict = "limit " + seq.limit.str() + " realized in " + where;
        } else if (seq.witness && seq.witness->is_monomial() &&
                   monomial_lct_value(*seq.witness) == seq.limit) {
            rep.verified = true;
            rep.verdict = "limit " + seq.limit.str() + " certified by oracle on (" +
                          print_ideal(*seq.witness) + ")";
        } else if (seq.limit == ExtRational(0)) {
            rep.verified = true;
            rep.verdict = "limit 0 = lct(0), the sole element of T_0";
        } else {
            rep.verified = false;
            rep.verdict = "limit " + seq.limit.str() + " not located in the supplied spectra";
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

AccumulationReport spectrum_tail_report(const Spectrum& s) {
    AccumulationReport rep;
    rep.target = ExtRational(0);
    rep.direction = Direction::from_above;
    for (auto it = s.values.rbegin(); it != s.values.rend(); ++it)
        rep.witnesses.push_back({"value", *it, true});

    bool ok = !s.values.empty();
    for (std::size_t i = 0; i + 1 < s.values.size() && ok; ++i)
        if (!(s.values[i] < s.values[i + 1])) ok = false;
    if (ok && s.values.front() <= ExtRational(0)) ok = false;
    // gap windows between consecutive values are empty by sortedness; record
    // the window below the top hypersurface value 1 when present
    std::string gap;
    ExtRational one(1);
    ExtRational best_below(0);
    bool has_below = false;
    for (const auto& v : s.values)
        if (v < one && best_below < v) {
            best_below = v;
            has_below = true;
        }
    if (has_below) gap = "; window (" + best_below.str() + ", 1) contains no spectrum value";
    rep.verified = ok;
    rep.verdict = ok ? "values descend strictly toward 0 = lct(0), the sole element of T_0" + gap
                     : "spectrum values not strictly ordered";
    return rep;
}

}  // namespace lctlab
