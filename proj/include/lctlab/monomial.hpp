#ifndef LCTLAB_MONOMIAL_HPP
#define LCTLAB_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "lctlab/errors.hpp"

namespace lctlab {

// Exponent vector of a monomial. The length is the ambient variable count of
// whatever ring the monomial lives in; all entries are nonnegative.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_)
            if (x < 0) throw value_error("negative exponent");
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    int& operator[](int i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_constant() const {
        for (int x : e_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    Monomial operator*(const Monomial& o) const {
        check_same(o);
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        check_same(o);
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // Componentwise domination: *this >= o in every coordinate.
    bool dominates(const Monomial& o) const { return o.divides(*this); }

    Monomial quotient_by(const Monomial& o) const {
        check_same(o);
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw value_error("monomial quotient is not a monomial");
        }
        return r;
    }

    Monomial lcm_with(const Monomial& o) const {
        check_same(o);
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i)
            if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        check_same(o);
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    std::uint64_t support_mask() const {
        if (nvars() > 64) throw value_error("support mask limited to 64 variables");
        std::uint64_t m = 0;
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > 0) m |= std::uint64_t{1} << i;
        return m;
    }

  private:
    void check_same(const Monomial& o) const {
        if (e_.size() != o.e_.size()) throw value_error("monomial ambient mismatch");
    }
    std::vector<int> e_;
};

// Graded reverse lexicographic order with x0 > x1 > ... : compare total
// degree first; on ties the rightmost differing exponent decides, smaller
// exponent winning.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) { return grevlex_greater(b, a); }

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

// All monomials of total degree exactly d in n variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(int n, int d);

}  // namespace lctlab

#endif
