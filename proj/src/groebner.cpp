#include "lctlab/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>

namespace lctlab {

bool GroebnerBasis::is_unit() const {
    for (const auto& g : elements)
        if (g.leading_monomial().is_constant()) return true;
    return false;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial lcm = f.leading_monomial().lcm_with(g.leading_monomial());
    auto lift = [&](const Polynomial& p) {
        Rational inv(p.leading_coefficient().get_den(), p.leading_coefficient().get_num());
        inv.canonicalize();
        return p * Polynomial::term(p.ambient(), inv, lcm.quotient_by(p.leading_monomial()));
    };
    return lift(f) - lift(g);
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const GroebnerBudget& budget, GroebnerDiagnostics* diag) {
    Polynomial rem(p.ambient());
    Polynomial work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        const Polynomial* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(lm)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Rational c = work.leading_coefficient() / reducer->leading_coefficient();
            work = work -
                   reducer->scaled(c).times_monomial(lm.quotient_by(reducer->leading_monomial()));
            if (diag) diag->reductions += 1;
        } else {
            rem.add_term(lm, work.leading_coefficient());
            Polynomial head = Polynomial::term(work.ambient(), work.leading_coefficient(), lm);
            work = work - head;
        }
        if (static_cast<long>(work.term_count()) > budget.max_terms)
            throw budget_error("term budget exceeded during reduction",
                               diag ? diag->spairs_processed : 0, diag ? diag->reductions : 0);
    }
    return rem;
}

namespace {

struct Pair {
    int deg;   // degree of lcm of the leading monomials
    long id;   // creation index, the deterministic tie-break
    int i, j;
    friend bool operator<(const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.id < b.id;
    }
};

}  // namespace

GroebnerBasis buchberger(const Ideal& a, const GroebnerBudget& budget) {
    GroebnerBasis out;
    out.ambient = a.ambient();
    std::vector<Polynomial>& basis = out.elements;
    GroebnerDiagnostics& diag = out.diagnostics;

    for (const auto& g : a.generators())
        if (!g.is_zero()) basis.push_back(g.monic());

    std::set<Pair> pairs;
    std::set<std::pair<int, int>> treated;
    long next_id = 0;
    auto push_pairs = [&](int upto) {
        for (int i = 0; i < upto; ++i) {
            int deg = basis[i].leading_monomial().lcm_with(basis[upto].leading_monomial()).degree();
            pairs.insert({deg, next_id++, i, upto});
        }
    };
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) push_pairs(t);

    while (!pairs.empty()) {
        Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const Monomial& mi = basis[pr.i].leading_monomial();
        const Monomial& mj = basis[pr.j].leading_monomial();

        // product criterion
        if (mi.coprime_with(mj)) {
            treated.insert({pr.i, pr.j});
            continue;
        }
        // chain criterion
        Monomial lcm = mi.lcm_with(mj);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_monomial().divides(lcm)) continue;
            auto key = [&](int x, int y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
            if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k))) skip = true;
        }
        treated.insert({pr.i, pr.j});
        if (skip) continue;

        if (++diag.spairs_processed > budget.max_spairs)
            throw budget_error("S-pair budget exceeded", diag.spairs_processed, diag.reductions);

        Polynomial h = normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis, budget, &diag);
        if (h.is_zero()) continue;
        basis.push_back(h.monic());
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by
    // another's
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mj = basis[j].leading_monomial();
            const Monomial& mi = basis[i].leading_monomial();
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others, budget, &diag);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& f, const Polynomial& g) {
        return grevlex_less(f.leading_monomial(), g.leading_monomial());
    });
    out.elements = std::move(reduced);
    return out;
}

namespace {

// Minimum hitting set over the leading-monomial supports, branch and bound.
struct HittingSearch {
    const std::vector<std::uint64_t>& supports;
    long nodes = 0;
    long max_nodes;
    int best;

    explicit HittingSearch(const std::vector<std::uint64_t>& s, int nvars, long max_nodes)
        : supports(s), max_nodes(max_nodes), best(nvars) {}

    void run(std::uint64_t chosen, int count) {
        if (++nodes > max_nodes)
            throw budget_error("dimension search budget exceeded", 0, nodes);
        if (count >= best) return;
        const std::uint64_t* uncovered = nullptr;
        for (const auto& s : supports) {
            if ((s & chosen) == 0) {
                uncovered = &s;
                break;
            }
        }
        if (!uncovered) {
            best = count;
            return;
        }
        std::uint64_t s = *uncovered;
        while (s) {
            std::uint64_t bit = s & (~s + 1);
            s ^= bit;
            run(chosen | bit, count + 1);
        }
    }
};

}  // namespace

int dimension(const GroebnerBasis& basis, const GroebnerBudget& budget) {
    if (basis.is_unit()) return -1;
    if (basis.elements.empty()) return basis.ambient;
    if (basis.ambient > 64) throw value_error("dimension search limited to 64 variables");

    std::vector<std::uint64_t> supports;
    for (const auto& g : basis.elements) supports.push_back(g.leading_monomial().support_mask());
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    // keep only minimal supports; supersets are hit for free
    std::vector<std::uint64_t> minimal;
    for (const auto& s : supports) {
        bool keep = true;
        for (const auto& t : supports)
            if (t != s && (t & s) == t) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(s);
    }
    HittingSearch search(minimal, basis.ambient, budget.max_dimension_nodes);
    search.run(0, 0);
    return basis.ambient - search.best;
}

int dimension(const Ideal& a, const GroebnerBudget& budget) {
    return dimension(buchberger(a, budget), budget);
}

int codimension(const Ideal& a, const GroebnerBudget& budget) {
    GroebnerBasis gb = buchberger(a, budget);
    if (gb.is_unit()) throw value_error("codimension of the unit ideal is undefined");
    return a.ambient() - dimension(gb, budget);
}

}  // namespace lctlab
