#include <doctest.h>

#include "helpers.hpp"
#include "lctlab/explorer.hpp"
#include "lctlab/parse.hpp"

using namespace lctlab;
using testing::monomial_ideal;

TEST_CASE("minimal generating sets") {
    auto mins = minimalize_generators({Monomial({2, 0}), Monomial({3, 0}), Monomial({0, 1})});
    REQUIRE(mins.size() == 2);
    CHECK((mins[0] == Monomial({0, 1}) || mins[1] == Monomial({0, 1})));
    CHECK((mins[0] == Monomial({2, 0}) || mins[1] == Monomial({2, 0})));

    CHECK(minimalize_generators({}).empty());

    auto incomparable = minimalize_generators({Monomial({1, 2}), Monomial({2, 1})});
    CHECK(incomparable.size() == 2);

    auto dupes = minimalize_generators({Monomial({1, 1}), Monomial({1, 1})});
    CHECK(dupes.size() == 1);
}

TEST_CASE("powers of the maximal ideal") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 1; d <= 6; ++d) {
            Ideal a(n);
            for (const auto& m : monomials_of_degree(n, d))
                a.push_generator(Polynomial::term(n, Rational(1), m));
            CHECK(monomial_lct_value(a) == ExtRational(n, d));
        }
    }
}

TEST_CASE("coordinate ideals") {
    CHECK(monomial_lct_value(parse_ideal("x0", 2)) == ExtRational(1));
    CHECK(monomial_lct_value(parse_ideal("x0, x1", 2)) == ExtRational(2));
    CHECK(monomial_lct_value(parse_ideal("x0^3, x1^2", 2)) == ExtRational(5, 6));
}

TEST_CASE("conventions and errors") {
    CHECK(monomial_lct_value(Ideal(2)) == ExtRational(0));
    CHECK(monomial_lct_value(parse_ideal("0", 2)) == ExtRational(0));
    CHECK(monomial_lct_value(parse_ideal("1, x0", 2)).is_infinite());
    CHECK_THROWS_AS(monomial_lct_value(parse_ideal("x0 + x1", 2)), value_error);
    MonomialLctResult scaled = monomial_lct(parse_ideal("2*x0^2", 2));
    CHECK(scaled.coefficients_ignored);
    CHECK(scaled.lct == ExtRational(1, 2));
}

TEST_CASE("certificates satisfy the polyhedron constraints") {
    MonomialLctResult r = monomial_lct(parse_ideal("x0^3, x1^2", 2));
    REQUIRE(r.certificate.has_value());
    const LpCertificate& cert = *r.certificate;
    CHECK(cert.mu == rational_of(6, 5));
    Rational sum(0);
    for (const auto& l : cert.lambda) {
        CHECK(l >= 0);
        sum += l;
    }
    CHECK(sum == 1);
    for (int j = 0; j < 2; ++j) {
        Rational lhs(0);
        for (std::size_t v = 0; v < r.polyhedron.generators.size(); ++v)
            lhs += cert.lambda[v] * r.polyhedron.generators[v][j];
        CHECK(lhs + cert.slack[j] == cert.mu);
    }
}

TEST_CASE("agreement with the 2d brute-force oracle") {
    ExploreGuards guards;
    for (const auto& a : enumerate_monomial_ideals(2, 4, guards)) {
        std::vector<Monomial> gens;
        for (const auto& g : a.generators()) gens.push_back(g.leading_monomial());
        CAPTURE(print_ideal(a));
        CHECK(monomial_lct_value(a) == testing::brute_force_monomial_lct_2d(gens));
    }
}

TEST_CASE("monotone under ideal containment") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 3);
        Ideal small(n);
        int gens = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < gens; ++g) {
            Monomial m = testing::random_monomial(rng, n, 4);
            if (!m.is_constant()) small.push_generator(Polynomial::term(n, Rational(1), m));
        }
        if (small.generators().empty()) continue;
        Ideal big = small;
        Monomial extra = testing::random_monomial(rng, n, 4);
        if (extra.is_constant()) continue;
        big.push_generator(Polynomial::term(n, Rational(1), extra));
        // small is contained in big
        CHECK(monomial_lct_value(small) <= monomial_lct_value(big));
    }
}

TEST_CASE("scaling all exponents by m divides the threshold by m") {
    std::mt19937_64 rng(246);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 2);
        Ideal a(n);
        for (int g = 0; g < 2; ++g) {
            Monomial m = testing::random_monomial(rng, n, 3);
            if (!m.is_constant()) a.push_generator(Polynomial::term(n, Rational(1), m));
        }
        if (a.generators().empty()) continue;
        int m = 2 + static_cast<int>(rng() % 4);
        Ideal scaled(n);
        for (const auto& g : a.generators()) {
            Monomial e = g.leading_monomial();
            for (int i = 0; i < n; ++i) e[i] *= m;
            scaled.push_generator(Polynomial::term(n, Rational(1), e));
        }
        CHECK(monomial_lct_value(scaled) * Rational(m) == monomial_lct_value(a));
    }
}

TEST_CASE("invariance under variable relabeling") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + static_cast<int>(rng() % 2);
        Ideal a(n);
        for (int g = 0; g < 3; ++g) {
            Monomial m = testing::random_monomial(rng, n, 3);
            if (!m.is_constant()) a.push_generator(Polynomial::term(n, Rational(1), m));
        }
        if (a.generators().empty()) continue;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
        Ideal relabeled(n);
        for (const auto& g : a.generators()) relabeled.push_generator(g.embedded(perm, n));
        CHECK(monomial_lct_value(a) == monomial_lct_value(relabeled));
    }
}
