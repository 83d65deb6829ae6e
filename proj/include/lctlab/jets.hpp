#ifndef LCTLAB_JETS_HPP
#define LCTLAB_JETS_HPP

#include <string>
#include <vector>

#include "lctlab/ideal.hpp"

namespace lctlab {

// Ring of jet variables x_j^(l) for 0 <= j < base, 0 <= l <= order, flattened
// as (j, l) -> l*base + j. Level 0 is identified with the base variables.
struct JetRing {
    int base = 0;
    int order = 0;

    int variable_count() const { return base * (order + 1); }
    int index(int j, int level) const { return level * base + j; }
    int var_of(int flat) const { return flat % base; }
    int level_of(int flat) const { return flat / base; }
    std::vector<std::string> variable_names() const;

    friend bool operator==(const JetRing&, const JetRing&) = default;
};

struct JetPolynomial {
    JetRing ring;
    Polynomial value;
};

// x_j -> x_j^(0); the polynomial keeps its exponents, the ring gains levels.
JetPolynomial include_in_jet_ring(const Polynomial& p, int order);

// The derivation D with D(x_j^(l)) = x_j^(l+1), extended by the Leibniz
// rule. If p touches the top level of its ring the result lives in the ring
// of the next order.
JetPolynomial derive(const JetPolynomial& p);

// Jet equations of an ideal: generators D^q(f_alpha) for 0 <= q <= order,
// ordered generator-major.
struct JetIdeal {
    JetRing ring;
    std::vector<Polynomial> generators;
    Ideal source;
};

JetIdeal jet_ideal(const Ideal& a, int order);

struct FiberIdeal {
    Ideal ideal;
    int dropped_zero_generators = 0;
};

// Substitute x_j^(0) = 0 and forget those variables; the result lives in the
// base*order variables of levels 1..order. Zero generators are dropped but
// counted.
FiberIdeal fiber_over_origin(const JetIdeal& jets);

Polynomial parse_jet_polynomial(const std::string& text, const JetRing& ring);

}  // namespace lctlab

#endif
