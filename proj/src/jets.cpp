#include "lctlab/jets.hpp"

#include <numeric>

#include "lctlab/parse.hpp"

namespace lctlab {

std::vector<std::string> JetRing::variable_names() const {
    std::vector<std::string> names(variable_count());
    for (int v = 0; v < variable_count(); ++v)
        names[v] = "x" + std::to_string(var_of(v)) + "_" + std::to_string(level_of(v));
    return names;
}

JetPolynomial include_in_jet_ring(const Polynomial& p, int order) {
    if (order < 0) throw value_error("jet order must be nonnegative");
    JetRing ring{p.ambient(), order};
    std::vector<int> identity(p.ambient());
    std::iota(identity.begin(), identity.end(), 0);
    return {ring, p.embedded(identity, ring.variable_count())};
}

namespace {

// Leibniz rule: each occurrence of a variable donates one power to its
// level-raised successor.
Polynomial derive_in_ring(const Polynomial& p, const JetRing& ring) {
    Polynomial out(ring.variable_count());
    for (const auto& [m, c] : p.terms()) {
        for (int v = 0; v < m.nvars(); ++v) {
            if (m[v] == 0) continue;
            int up = ring.index(ring.var_of(v), ring.level_of(v) + 1);
            Monomial dm = m;
            dm[v] -= 1;
            dm[up] += 1;
            out.add_term(dm, c * m[v]);
        }
    }
    return out;
}

}  // namespace

JetPolynomial derive(const JetPolynomial& p) {
    if (p.value.ambient() != p.ring.variable_count())
        throw value_error("jet polynomial does not match its ring");
    int top = 0;
    for (const auto& [m, c] : p.value.terms())
        for (int v = 0; v < m.nvars(); ++v)
            if (m[v] > 0 && p.ring.level_of(v) > top) top = p.ring.level_of(v);
    JetRing ring = p.ring;
    Polynomial value = p.value;
    if (top + 1 > ring.order) {
        ring.order += 1;
        std::vector<int> identity(p.value.ambient());
        std::iota(identity.begin(), identity.end(), 0);
        value = value.embedded(identity, ring.variable_count());
    }
    return {ring, derive_in_ring(value, ring)};
}

JetIdeal jet_ideal(const Ideal& a, int order) {
    if (order < 0) throw value_error("jet order must be nonnegative");
    if (!a.vanishes_at_origin())
        throw value_error("ideal does not vanish at the origin (its lct there is +infinity)");
    JetRing ring{a.ambient(), order};
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() * (order + 1));
    for (const auto& f : a.generators()) {
        Polynomial cur = include_in_jet_ring(f, order).value;
        gens.push_back(cur);
        for (int q = 1; q <= order; ++q) {
            cur = derive_in_ring(cur, ring);
            gens.push_back(cur);
        }
    }
    return {ring, std::move(gens), a};
}

FiberIdeal fiber_over_origin(const JetIdeal& jets) {
    const JetRing& ring = jets.ring;
    int fiber_vars = ring.base * ring.order;
    std::vector<int> map(ring.variable_count());
    for (int v = 0; v < ring.variable_count(); ++v) {
        int level = ring.level_of(v);
        map[v] = level == 0 ? -1 : (level - 1) * ring.base + ring.var_of(v);
    }
    FiberIdeal out{Ideal(fiber_vars), 0};
    for (const auto& g : jets.generators) {
        Polynomial h = g.substitute_zero_and_project(map, fiber_vars);
        if (h.is_zero())
            out.dropped_zero_generators += 1;
        else
            out.ideal.push_generator(std::move(h));
    }
    return out;
}

Polynomial parse_jet_polynomial(const std::string& text, const JetRing& ring) {
    VariableResolver resolve = [&ring](long j, std::optional<long> level, std::size_t offset) -> int {
        long l = level.value_or(0);
        if (j < 0 || j >= ring.base || l < 0 || l > ring.order)
            throw parse_error("unknown jet variable x" + std::to_string(j) + "_" + std::to_string(l),
                              offset);
        return ring.index(static_cast<int>(j), static_cast<int>(l));
    };
    return parse_polynomial(text, ring.variable_count(), resolve);
}

}  // namespace lctlab
