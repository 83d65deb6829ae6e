#include "lctlab/newton.hpp"

#include <algorithm>

namespace lctlab {

std::vector<Monomial> minimalize_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), grevlex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& v : gens) {
        bool dominated = false;
        for (const auto& w : gens)
            if (w != v && w.divides(v)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(v);
    }
    return out;
}

MonomialLctResult monomial_lct(const Ideal& a) {
    MonomialLctResult res;
    res.polyhedron.ambient = a.ambient();

    std::vector<Monomial> exps;
    for (const auto& g : a.generators()) {
        if (g.is_zero()) continue;
        if (!g.is_monomial()) throw value_error("not a monomial ideal: " + std::to_string(g.term_count()) + " terms in a generator");
        if (g.leading_coefficient() != 1) res.coefficients_ignored = true;
        exps.push_back(g.leading_monomial());
    }
    if (exps.empty()) {
        res.lct = ExtRational(0);
        return res;
    }
    for (const auto& m : exps) {
        if (m.is_constant()) {
            res.lct = ExtRational::infinity();
            return res;
        }
    }
    res.polyhedron.generators = minimalize_generators(std::move(exps));

    const int n = a.ambient();
    const int g = static_cast<int>(res.polyhedron.generators.size());
    // columns: lambda_1..lambda_g, s_1..s_n, mu
    const int cols = g + n + 1;
    std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(n + 1, Rational(0));
    for (int j = 0; j < n; ++j) {
        for (int v = 0; v < g; ++v) A[j][v] = res.polyhedron.generators[v][j];
        A[j][g + j] = 1;
        A[j][cols - 1] = -1;
    }
    for (int v = 0; v < g; ++v) A[n][v] = 1;
    b[n] = 1;
    std::vector<Rational> cost(cols, Rational(0));
    cost[cols - 1] = 1;

    LpResult lp = simplex_minimize(A, b, cost);
    if (lp.status != LpStatus::optimal)
        throw error("Newton polyhedron LP unexpectedly " +
                    std::string(lp.status == LpStatus::infeasible ? "infeasible" : "unbounded"));

    LpCertificate cert;
    cert.mu = lp.x[cols - 1];
    cert.lambda.assign(lp.x.begin(), lp.x.begin() + g);
    cert.slack.assign(lp.x.begin() + g, lp.x.begin() + g + n);

    // exact re-verification of the certificate
    Rational total(0);
    for (const auto& l : cert.lambda) {
        if (l < 0) throw error("certificate check failed: negative lambda");
        total += l;
    }
    if (total != 1) throw error("certificate check failed: lambdas do not sum to 1");
    for (int j = 0; j < n; ++j) {
        Rational lhs(0);
        for (int v = 0; v < g; ++v) lhs += cert.lambda[v] * res.polyhedron.generators[v][j];
        if (cert.slack[j] < 0) throw error("certificate check failed: negative slack");
        lhs += cert.slack[j];
        if (lhs != cert.mu) throw error("certificate check failed: constraint mismatch");
    }
    if (cert.mu <= 0) throw error("certificate check failed: nonpositive mu");

    Rational lct(cert.mu.get_den(), cert.mu.get_num());
    lct.canonicalize();
    res.lct = ExtRational(lct);
    res.certificate = std::move(cert);
    return res;
}

ExtRational monomial_lct_value(const Ideal& a) { return monomial_lct(a).lct; }

}  // namespace lctlab
