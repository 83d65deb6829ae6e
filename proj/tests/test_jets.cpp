#include <doctest.h>

#include "helpers.hpp"
#include "lctlab/jets.hpp"
#include "lctlab/parse.hpp"

using namespace lctlab;

namespace {

JetPolynomial jet_poly(const std::string& text, int base, int order) {
    JetRing ring{base, order};
    return {ring, parse_jet_polynomial(text, ring)};
}

}  // namespace

TEST_CASE("jet ring layout") {
    JetRing ring{2, 3};
    CHECK(ring.variable_count() == 8);
    CHECK(ring.index(0, 0) == 0);
    CHECK(ring.index(1, 0) == 1);
    CHECK(ring.index(0, 1) == 2);
    CHECK(ring.index(1, 2) == 5);
    CHECK(ring.variable_names()[5] == "x1_2");
    CHECK(ring.variable_names()[0] == "x0_0");
}

TEST_CASE("derivation of a single variable") {
    JetPolynomial x = jet_poly("x0_0", 1, 1);
    JetPolynomial dx = derive(x);
    CHECK(dx.ring.order == 1);
    CHECK(dx.value == parse_jet_polynomial("x0_1", dx.ring));
}

TEST_CASE("derivation enlarges the ring at the top level") {
    JetPolynomial x = jet_poly("x0_0", 1, 0);
    JetPolynomial dx = derive(x);
    CHECK(dx.ring.order == 1);
    CHECK(dx.value == parse_jet_polynomial("x0_1", dx.ring));
}

TEST_CASE("Leibniz rule on a square") {
    JetPolynomial p = jet_poly("x0_0^2", 1, 1);
    CHECK(derive(p).value == parse_jet_polynomial("2*x0_0*x0_1", p.ring));
}

TEST_CASE("second derivative of the cusp polynomial") {
    JetPolynomial p = jet_poly("x0_0^2 + x1_0^3", 2, 2);
    JetPolynomial d2 = derive(derive(p));
    CHECK(d2.ring.order == 2);
    CHECK(d2.value == parse_jet_polynomial(
                          "2*x0_1^2 + 2*x0_0*x0_2 + 6*x1_0*x1_1^2 + 3*x1_0^2*x1_2", d2.ring));
}

TEST_CASE("derive is linear and Leibniz on random inputs") {
    std::mt19937_64 rng(99);
    JetRing ring{2, 3};
    for (int iter = 0; iter < 60; ++iter) {
        Polynomial p = testing::random_polynomial(rng, ring.variable_count() - 2, 4, 2);
        Polynomial q = testing::random_polynomial(rng, ring.variable_count() - 2, 4, 2);
        // keep the top level free so no enlargement happens
        std::vector<int> identity(ring.variable_count() - 2);
        for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
        JetPolynomial jp{ring, p.embedded(identity, ring.variable_count())};
        JetPolynomial jq{ring, q.embedded(identity, ring.variable_count())};
        JetPolynomial sum{ring, jp.value + jq.value};
        JetPolynomial prod{ring, jp.value * jq.value};
        CHECK(derive(sum).value == derive(jp).value + derive(jq).value);
        CHECK(derive(prod).value == derive(jp).value * jq.value + jp.value * derive(jq).value);
    }
}

TEST_CASE("derive commutes with base-variable permutations") {
    std::mt19937_64 rng(123);
    JetRing ring{3, 2};
    // swap x0 and x2 at every level
    std::vector<int> perm(ring.variable_count());
    for (int v = 0; v < ring.variable_count(); ++v) {
        int j = ring.var_of(v), l = ring.level_of(v);
        int pj = j == 0 ? 2 : (j == 2 ? 0 : j);
        perm[v] = ring.index(pj, l);
    }
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial p = testing::random_polynomial(rng, ring.variable_count() - 3, 4, 2);
        std::vector<int> identity(ring.variable_count() - 3);
        for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
        JetPolynomial jp{ring, p.embedded(identity, ring.variable_count())};
        Polynomial relabeled = jp.value.embedded(perm, ring.variable_count());
        CHECK(derive({ring, relabeled}).value ==
              derive(jp).value.embedded(perm, ring.variable_count()));
    }
}

TEST_CASE("jet ideal of a single variable") {
    JetIdeal jets = jet_ideal(parse_ideal("x0", 1), 2);
    REQUIRE(jets.generators.size() == 3);
    CHECK(jets.generators[0] == parse_jet_polynomial("x0_0", jets.ring));
    CHECK(jets.generators[1] == parse_jet_polynomial("x0_1", jets.ring));
    CHECK(jets.generators[2] == parse_jet_polynomial("x0_2", jets.ring));
}

TEST_CASE("jet ideal of the coordinate axes") {
    JetIdeal jets = jet_ideal(parse_ideal("x0, x1", 2), 1);
    REQUIRE(jets.generators.size() == 4);
    CHECK(jets.generators[0] == parse_jet_polynomial("x0_0", jets.ring));
    CHECK(jets.generators[1] == parse_jet_polynomial("x0_1", jets.ring));
    CHECK(jets.generators[2] == parse_jet_polynomial("x1_0", jets.ring));
    CHECK(jets.generators[3] == parse_jet_polynomial("x1_1", jets.ring));
}

TEST_CASE("jet ideal of the cusp") {
    JetIdeal jets = jet_ideal(parse_ideal("x0^2 + x1^3", 2), 2);
    REQUIRE(jets.generators.size() == 3);
    CHECK(jets.generators[0] == parse_jet_polynomial("x0_0^2 + x1_0^3", jets.ring));
    CHECK(jets.generators[1] ==
          parse_jet_polynomial("2*x0_0*x0_1 + 3*x1_0^2*x1_1", jets.ring));
    CHECK(jets.generators[2] ==
          parse_jet_polynomial("2*x0_1^2 + 2*x0_0*x0_2 + 6*x1_0*x1_1^2 + 3*x1_0^2*x1_2",
                               jets.ring));
}

TEST_CASE("jet ideal rejects ideals that do not vanish at the origin") {
    CHECK_THROWS_AS(jet_ideal(parse_ideal("x0 + 1", 1), 2), value_error);
}

TEST_CASE("order prefixes agree") {
    Ideal a = parse_ideal("x0^2 + x1^3, x0*x1", 2);
    for (int i = 1; i <= 3; ++i) {
        JetIdeal big = jet_ideal(a, i);
        JetIdeal small = jet_ideal(a, i - 1);
        std::vector<int> identity(small.ring.variable_count());
        for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = static_cast<int>(v);
        std::size_t gens_per = small.ring.order + 1;
        for (std::size_t g = 0; g < a.generators().size(); ++g)
            for (std::size_t q = 0; q < gens_per; ++q)
                CHECK(big.generators[g * (i + 1) + q] ==
                      small.generators[g * gens_per + q].embedded(identity,
                                                                  big.ring.variable_count()));
    }
}

TEST_CASE("fiber over the origin") {
    SUBCASE("jets of a coordinate") {
        FiberIdeal fiber = fiber_over_origin(jet_ideal(parse_ideal("x0", 1), 2));
        CHECK(fiber.ideal.ambient() == 2);
        CHECK(fiber.dropped_zero_generators == 1);
        REQUIRE(fiber.ideal.generators().size() == 2);
        CHECK(fiber.ideal.generators()[0] == parse_polynomial("x0", 2));  // x0_1
        CHECK(fiber.ideal.generators()[1] == parse_polynomial("x1", 2));  // x0_2
    }
    SUBCASE("jets of the axes") {
        FiberIdeal fiber = fiber_over_origin(jet_ideal(parse_ideal("x0, x1", 2), 1));
        CHECK(fiber.ideal.ambient() == 2);
        CHECK(fiber.dropped_zero_generators == 2);
        CHECK(fiber.ideal.generators().size() == 2);
    }
    SUBCASE("jets of the cusp drop to a single generator") {
        FiberIdeal fiber = fiber_over_origin(jet_ideal(parse_ideal("x0^2 + x1^3", 2), 2));
        CHECK(fiber.ideal.ambient() == 4);
        CHECK(fiber.dropped_zero_generators == 2);
        REQUIRE(fiber.ideal.generators().size() == 1);
        // 2*x0_1^2, a unit multiple of x0_1^2
        CHECK(fiber.ideal.generators()[0].monic() == Polynomial::variable(4, 0, 2));
    }
    SUBCASE("order zero gives the empty ring") {
        FiberIdeal fiber = fiber_over_origin(jet_ideal(parse_ideal("x0", 1), 0));
        CHECK(fiber.ideal.ambient() == 0);
        CHECK(fiber.ideal.generators().empty());
        CHECK(fiber.dropped_zero_generators == 1);
    }
}

TEST_CASE("fiber of a linear ideal repeats the forms at every level") {
    Ideal a = parse_ideal("x0 + 2*x1, x1", 2);
    for (int i = 1; i <= 3; ++i) {
        FiberIdeal fiber = fiber_over_origin(jet_ideal(a, i));
        REQUIRE(static_cast<int>(fiber.ideal.generators().size()) == 2 * i);
        int idx = 0;
        for (const auto& g : a.generators()) {
            for (int level = 1; level <= i; ++level) {
                Polynomial expected(2 * i);
                for (const auto& [m, c] : g.terms()) {
                    for (int j = 0; j < 2; ++j)
                        if (m[j] == 1) {
                            Monomial shifted(2 * i);
                            shifted[(level - 1) * 2 + j] = 1;
                            expected.add_term(shifted, c);
                        }
                }
                CHECK(fiber.ideal.generators()[idx++] == expected);
            }
        }
    }
}
