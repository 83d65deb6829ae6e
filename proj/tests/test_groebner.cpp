#include <doctest.h>

#include "helpers.hpp"
#include "lctlab/groebner.hpp"
#include "lctlab/jets.hpp"
#include "lctlab/parse.hpp"

using namespace lctlab;

namespace {

// Complete correctness certificate for a reduced basis: every input
// generator and every S-polynomial reduces to zero.
void check_certificate(const Ideal& input, const GroebnerBasis& gb) {
    for (const auto& g : input.generators()) {
        CAPTURE(print_polynomial(g));
        CHECK(normal_form(g, gb.elements).is_zero());
    }
    for (std::size_t i = 0; i < gb.elements.size(); ++i)
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j)
            CHECK(normal_form(s_polynomial(gb.elements[i], gb.elements[j]), gb.elements).is_zero());
}

void check_reduced(const GroebnerBasis& gb) {
    for (const auto& g : gb.elements) {
        CHECK(g.leading_coefficient() == 1);
        for (const auto& h : gb.elements) {
            if (&g == &h) continue;
            for (const auto& [m, c] : g.terms()) CHECK(!h.leading_monomial().divides(m));
        }
    }
}

}  // namespace

TEST_CASE("containment collapses the basis") {
    GroebnerBasis gb = buchberger(parse_ideal("x0^2, x0", 1));
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == parse_polynomial("x0", 1));
}

TEST_CASE("linear algebra splits the variables") {
    GroebnerBasis gb = buchberger(parse_ideal("x0 + x1, x0 - x1", 2));
    REQUIRE(gb.elements.size() == 2);
    CHECK(gb.elements[0] == parse_polynomial("x1", 2));
    CHECK(gb.elements[1] == parse_polynomial("x0", 2));
}

TEST_CASE("certified basis for a nontrivial ideal") {
    Ideal a = parse_ideal("x0^2 - x1, x1^2 - x0", 2);
    GroebnerBasis gb = buchberger(a);
    check_certificate(a, gb);
    check_reduced(gb);
    CHECK(gb.diagnostics.spairs_processed > 0);
}

TEST_CASE("idempotence on a computed basis") {
    GroebnerBasis gb = buchberger(parse_ideal("x0^2 - x1, x1^2 - x0", 2));
    Ideal as_ideal(2, gb.elements);
    GroebnerBasis again = buchberger(as_ideal);
    CHECK(again.elements == gb.elements);
}

TEST_CASE("degenerate ideals") {
    CHECK(buchberger(Ideal(3)).elements.empty());
    CHECK(dimension(Ideal(3)) == 3);
    GroebnerBasis unit = buchberger(parse_ideal("x0 + 1, x0", 1));
    CHECK(unit.is_unit());
    CHECK(dimension(unit) == -1);
}

TEST_CASE("dimension of basic ideals") {
    CHECK(dimension(parse_ideal("x0, x1", 2)) == 0);
    CHECK(dimension(parse_ideal("x0*x1", 2)) == 1);
    CHECK(dimension(parse_ideal("x0^2 + x1^3", 2)) == 1);
    CHECK(dimension(parse_ideal("x0^2", 2)) == 1);
    CHECK(dimension(parse_ideal("x0*x1, x0*x2, x1*x2", 3)) == 1);
}

TEST_CASE("dimension of jet fibers of a hyperplane") {
    // fiber ideal (x0_1..x0_m) in 2m variables has dimension m
    Ideal a = parse_ideal("x0", 2);
    for (int m = 1; m <= 4; ++m) {
        FiberIdeal fiber = fiber_over_origin(jet_ideal(a, m));
        CHECK(dimension(fiber.ideal) == m);
    }
}

TEST_CASE("dimension is invariant under variable permutation and padding") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + static_cast<int>(rng() % 2);
        Ideal a(n);
        int gens = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < gens; ++g) {
            Polynomial p = testing::random_polynomial(rng, n, 3, 2, true);
            if (!p.is_zero()) a.push_generator(p);
        }
        GroebnerBasis gb = buchberger(a);
        if (gb.is_unit()) continue;
        int dim = dimension(gb);

        // reverse the variables
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
        Ideal reversed(n);
        for (const auto& g : a.generators()) reversed.push_generator(g.embedded(perm, n));
        CHECK(dimension(reversed) == dim);

        // append unused variables
        std::vector<int> identity(n);
        for (int i = 0; i < n; ++i) identity[i] = i;
        Ideal padded(n + 2);
        for (const auto& g : a.generators()) padded.push_generator(g.embedded(identity, n + 2));
        CHECK(dimension(padded) == dim + 2);
    }
}

TEST_CASE("codimension") {
    CHECK(codimension(parse_ideal("x0, x1", 2)) == 2);
    CHECK(codimension(Ideal(3)) == 0);
    CHECK(codimension(parse_ideal("x0^2 + x1^3", 2)) == 1);
    CHECK_THROWS_AS(codimension(parse_ideal("x0 + 1, x0", 1)), value_error);

    // ideals generated by distinct variables
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 2 + static_cast<int>(rng() % 3);
        Ideal a(n);
        int count = 0;
        for (int i = 0; i < n; ++i)
            if (rng() % 2) {
                a.push_generator(Polynomial::variable(n, i));
                ++count;
            }
        if (count == 0) continue;
        CHECK(codimension(a) == count);
    }
}

TEST_CASE("budgets produce typed errors") {
    GroebnerBudget tiny;
    tiny.max_spairs = 1;
    CHECK_THROWS_AS(buchberger(parse_ideal("x0^2 - x1, x1^2 - x0", 2), tiny), budget_error);
    GroebnerBudget tiny_terms;
    tiny_terms.max_terms = 1;
    CHECK_THROWS_AS(buchberger(parse_ideal("x0^2 - x1, x1^3 - x0, x0*x1 - 1", 2), tiny_terms),
                    budget_error);
}

TEST_CASE("random bases carry a full certificate") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 3);
        Ideal a(n);
        int gens = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < gens; ++g) {
            Polynomial p = testing::random_polynomial(rng, n, 3, 2);
            if (!p.is_zero()) a.push_generator(p);
        }
        GroebnerBasis gb = buchberger(a);
        check_certificate(a, gb);
        check_reduced(gb);
    }
}
