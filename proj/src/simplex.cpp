#include "lctlab/simplex.hpp"

namespace lctlab {

namespace {

// Dense tableau: rows 0..m-1 are constraints with the rhs in the last
// column, row m is the reduced-cost row with the negated objective value in
// its last entry.
class Tableau {
  public:
    Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b, int extra)
        : m_(static_cast<int>(A.size())), k_(A.empty() ? 0 : static_cast<int>(A[0].size()) + extra) {
        t_.assign(m_ + 1, std::vector<Rational>(k_ + 1, Rational(0)));
        for (int i = 0; i < m_; ++i) {
            bool flip = b[i] < 0;
            for (int j = 0; j < static_cast<int>(A[i].size()); ++j)
                t_[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
            t_[i][k_] = flip ? Rational(-b[i]) : b[i];
        }
        basis_.assign(m_, -1);
    }

    int rows() const { return m_; }
    int cols() const { return k_; }
    std::vector<int>& basis() { return basis_; }
    Rational& at(int i, int j) { return t_[i][j]; }

    void pivot(int row, int col) {
        Rational p = t_[row][col];
        for (int j = 0; j <= k_; ++j) t_[row][j] /= p;
        for (int i = 0; i <= m_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            Rational f = t_[i][col];
            for (int j = 0; j <= k_; ++j) t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    // Bland: entering = smallest column with negative reduced cost; leaving =
    // min ratio, ties by smallest basis variable. Returns false when optimal.
    bool step(int usable_cols, bool* unbounded) {
        int enter = -1;
        for (int j = 0; j < usable_cols; ++j) {
            if (t_[m_][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m_; ++i) {
            if (t_[i][enter] <= 0) continue;
            Rational ratio = t_[i][k_] / t_[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) {
            *unbounded = true;
            return false;
        }
        pivot(leave, enter);
        return true;
    }

    void set_cost_row(const std::vector<Rational>& cost) {
        for (int j = 0; j <= k_; ++j) t_[m_][j] = 0;
        for (int j = 0; j < static_cast<int>(cost.size()); ++j) t_[m_][j] = cost[j];
        // price out the basic columns
        for (int i = 0; i < m_; ++i) {
            int bj = basis_[i];
            if (bj < static_cast<int>(cost.size()) && cost[bj] != 0) {
                Rational f = cost[bj];
                for (int j = 0; j <= k_; ++j) t_[m_][j] -= f * t_[i][j];
            }
        }
    }

    Rational objective() const { return -t_[m_][k_]; }

  private:
    int m_, k_;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> basis_;
};

}  // namespace

LpResult simplex_minimize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                          const std::vector<Rational>& cost) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(cost.size());
    Tableau t(A, b, m);

    // phase 1: artificial basis
    for (int i = 0; i < m; ++i) {
        t.at(i, n + i) = 1;
        t.basis()[i] = n + i;
    }
    std::vector<Rational> phase1(n + m, Rational(0));
    for (int i = 0; i < m; ++i) phase1[n + i] = 1;
    t.set_cost_row(phase1);
    bool unbounded = false;
    while (t.step(n + m, &unbounded)) {
    }
    LpResult res;
    if (t.objective() != 0) {
        res.status = LpStatus::infeasible;
        return res;
    }
    // drive leftover artificials out of the basis
    for (int i = 0; i < m; ++i) {
        if (t.basis()[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (t.at(i, j) != 0) {
                col = j;
                break;
            }
        if (col >= 0) t.pivot(i, col);
        // an all-zero row is a redundant constraint; its artificial stays
        // basic at value zero and never re-enters phase 2 (columns beyond n
        // are not priced)
    }

    // phase 2
    t.set_cost_row(cost);
    unbounded = false;
    while (t.step(n, &unbounded)) {
    }
    if (unbounded) {
        res.status = LpStatus::unbounded;
        return res;
    }
    res.status = LpStatus::optimal;
    res.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (t.basis()[i] < n) res.x[t.basis()[i]] = t.at(i, t.cols());
    res.objective = t.objective();
    return res;
}

}  // namespace lctlab
