#ifndef LCTLAB_TESTS_HELPERS_HPP
#define LCTLAB_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "lctlab/ideal.hpp"
#include "lctlab/newton.hpp"

namespace lctlab::testing {

inline Monomial random_monomial(std::mt19937_64& rng, int n, int max_exp) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    Monomial m(n);
    for (int i = 0; i < n; ++i) m[i] = exp(rng);
    return m;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_terms, int max_exp,
                                    bool vanish_at_origin = false) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    Polynomial p(n);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m = random_monomial(rng, n, max_exp);
        if (vanish_at_origin && m.is_constant()) continue;
        int c = num(rng);
        if (c == 0) continue;
        p.add_term(m, rational_of(c, den(rng)));
    }
    return p;
}

// Independent check for the Newton oracle in two variables: the minimal t
// with t*(1,1) in conv(V) + R^2_{>=0} is attained on a vertex or an edge of
// the hull, so scanning all pairs of generators is exhaustive.
inline ExtRational brute_force_monomial_lct_2d(const std::vector<Monomial>& gens) {
    bool found = false;
    Rational mu;
    auto consider = [&](const Rational& t) {
        if (!found || t < mu) {
            mu = t;
            found = true;
        }
    };
    auto point_t = [](const Rational& x, const Rational& y) { return x > y ? x : y; };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            Rational vx(gens[i][0]), vy(gens[i][1]);
            Rational wx(gens[j][0]), wy(gens[j][1]);
            consider(point_t(vx, vy));
            consider(point_t(wx, wy));
            // lambda where the two coordinates of the segment point agree
            Rational denom = vx - wx - vy + wy;
            if (denom != 0) {
                Rational lambda = (wy - wx) / denom;
                if (lambda >= 0 && lambda <= 1) {
                    Rational x = lambda * vx + (1 - lambda) * wx;
                    Rational y = lambda * vy + (1 - lambda) * wy;
                    consider(point_t(x, y));
                }
            }
        }
    }
    if (!found) return ExtRational(0);
    if (mu == 0) return ExtRational::infinity();
    Rational lct(mu.get_den(), mu.get_num());
    lct.canonicalize();
    return ExtRational(lct);
}

inline Ideal monomial_ideal(int n, const std::vector<std::vector<int>>& exps) {
    Ideal a(n);
    for (const auto& e : exps) a.push_generator(Polynomial::term(n, Rational(1), Monomial(e)));
    return a;
}

}  // namespace lctlab::testing

#endif
