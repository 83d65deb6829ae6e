#include "lctlab/ideal.hpp"

namespace lctlab {

Ideal::Ideal(int ambient, std::vector<Polynomial> generators)
    : ambient_(ambient), gens_(std::move(generators)), vanishes_(true) {
    for (const auto& g : gens_) {
        if (g.ambient() != ambient_) throw value_error("generator ambient mismatch");
        if (!g.constant_term_is_zero()) vanishes_ = false;
    }
}

bool Ideal::is_zero() const {
    for (const auto& g : gens_)
        if (!g.is_zero()) return false;
    return true;
}

bool Ideal::is_monomial() const {
    for (const auto& g : gens_)
        if (!g.is_zero() && !g.is_monomial()) return false;
    return true;
}

void Ideal::push_generator(Polynomial p) {
    if (p.ambient() != ambient_) throw value_error("generator ambient mismatch");
    if (!p.constant_term_is_zero()) vanishes_ = false;
    gens_.push_back(std::move(p));
}

ExtRational Ideal::order_at_origin() const {
    ExtRational best = ExtRational::infinity();
    for (const auto& g : gens_) {
        auto ord = g.order_at_origin();
        if (!ord) continue;
        ExtRational v(*ord, 1);
        if (v < best) best = v;
    }
    return best;
}

}  // namespace lctlab
