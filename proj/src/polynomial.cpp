#include "lctlab/polynomial.hpp"

#include <algorithm>

namespace lctlab {

std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    std::vector<int> e(n, 0);
    // enumerate all compositions of d into n parts
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            e[pos] = rem;
            out.emplace_back(e);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, rem - k);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

Polynomial Polynomial::constant(int ambient, const Rational& c) {
    Polynomial p(ambient);
    p.add_term(Monomial(ambient), c);
    return p;
}

Polynomial Polynomial::variable(int ambient, int index, int power) {
    if (index < 0 || index >= ambient) throw value_error("variable index out of range");
    if (power <= 0) throw value_error("variable power must be positive");
    Monomial m(ambient);
    m[index] = power;
    return term(ambient, Rational(1), m);
}

Polynomial Polynomial::term(int ambient, const Rational& c, const Monomial& m) {
    if (m.nvars() != ambient) throw value_error("monomial ambient mismatch");
    Polynomial p(ambient);
    p.add_term(m, c);
    return p;
}

bool Polynomial::constant_term_is_zero() const {
    if (terms_.empty()) return true;
    // the constant monomial is grevlex-minimal, hence last
    return !std::prev(terms_.end())->first.is_constant();
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

std::optional<int> Polynomial::order_at_origin() const {
    if (terms_.empty()) return std::nullopt;
    // grevlex is graded, so the last term has minimal total degree
    return std::prev(terms_.end())->first.degree();
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw value_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw value_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != ambient_) throw value_error("term ambient mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ambient_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    p.check_same(q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    p.check_same(q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    p.check_same(q);
    Polynomial r(p.ambient_);
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(ambient_);
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, Rational(coef * c));
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r(ambient_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    Rational inv(leading_coefficient().get_den(), leading_coefficient().get_num());
    inv.canonicalize();
    return scaled(inv);
}

Polynomial Polynomial::truncated_below(int d) const {
    Polynomial r(ambient_);
    for (const auto& [m, c] : terms_)
        if (m.degree() < d) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::initial_form(const std::vector<int>& w) const {
    if (static_cast<int>(w.size()) != ambient_) throw value_error("weight vector length mismatch");
    if (terms_.empty()) return *this;
    long best = 0;
    bool first = true;
    auto weight = [&](const Monomial& m) {
        long s = 0;
        for (int i = 0; i < ambient_; ++i) s += static_cast<long>(w[i]) * m[i];
        return s;
    };
    for (const auto& [m, c] : terms_) {
        long s = weight(m);
        if (first || s < best) best = s, first = false;
    }
    Polynomial r(ambient_);
    for (const auto& [m, c] : terms_)
        if (weight(m) == best) r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::substitute_zero_and_project(const std::vector<int>& new_index,
                                                   int new_ambient) const {
    if (static_cast<int>(new_index.size()) != ambient_) throw value_error("index map length mismatch");
    Polynomial r(new_ambient);
    for (const auto& [m, c] : terms_) {
        bool killed = false;
        Monomial nm(new_ambient);
        for (int i = 0; i < ambient_ && !killed; ++i) {
            if (m[i] == 0) continue;
            if (new_index[i] < 0)
                killed = true;
            else
                nm[new_index[i]] = m[i];
        }
        if (!killed) r.add_term(nm, c);
    }
    return r;
}

Polynomial Polynomial::embedded(const std::vector<int>& new_index, int new_ambient) const {
    if (static_cast<int>(new_index.size()) != ambient_) throw value_error("index map length mismatch");
    Polynomial r(new_ambient);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_ambient);
        for (int i = 0; i < ambient_; ++i) {
            if (m[i] == 0) continue;
            if (new_index[i] < 0 || new_index[i] >= new_ambient)
                throw value_error("embedding index out of range");
            nm[new_index[i]] = m[i];
        }
        r.terms_.emplace(nm, c);
    }
    return r;
}

}  // namespace lctlab
