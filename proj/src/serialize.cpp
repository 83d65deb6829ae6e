#include "lctlab/serialize.hpp"

#include "lctlab/parse.hpp"

namespace lctlab {

Json json_rational(const Rational& q) {
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Json json_rational(const ExtRational& v) {
    if (v.is_infinite()) return Json{{"num", "1"}, {"den", "0"}};
    return json_rational(v.value());
}

Json json_ideal(const Ideal& a) {
    Json gens = Json::array();
    for (const auto& g : a.generators()) gens.push_back(print_polynomial(g));
    return Json{{"n", a.ambient()}, {"generators", gens}};
}

Json json_bracket(const LctBracket& b) {
    Json j{{"lower", json_rational(b.lower)},
           {"upper", json_rational(b.upper)},
           {"exact", b.exact},
           {"lower_provenance", b.lower_provenance.str()},
           {"upper_provenance", b.upper_provenance.str()}};
    if (b.conjectured)
        j["conjectured"] = Json{{"value", json_rational(*b.conjectured)}, {"certified", false}};
    return j;
}

Json json_profile(const JetProfile& p) {
    Json rows = Json::array();
    for (const auto& r : p.rows) {
        Json row{{"order", r.order}, {"fiber_dim", r.fiber_dim}, {"bound", json_rational(r.bound)}};
        if (!r.ok()) row["error"] = r.error;
        rows.push_back(std::move(row));
    }
    Json j{{"rows", rows}, {"best_bound", json_rational(p.best_bound())},
           {"best_order", p.best_order()}};
    if (auto cand = p.stable_candidate())
        j["stable_candidate"] = Json{{"value", json_rational(*cand)}, {"certified", false}};
    return j;
}

Json json_certificate(const NewtonPolyhedron& poly, const LpCertificate& cert) {
    Json gens = Json::array();
    for (const auto& m : poly.generators) gens.push_back(m.exponents());
    Json lambda = Json::array();
    for (const auto& l : cert.lambda) lambda.push_back(json_rational(l));
    Json slack = Json::array();
    for (const auto& s : cert.slack) slack.push_back(json_rational(s));
    return Json{{"mu", json_rational(cert.mu)},
                {"generators", gens},
                {"lambda", lambda},
                {"slack", slack}};
}

Json json_spectrum(const Spectrum& s) {
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(json_rational(v));
    return Json{{"n", s.n}, {"d", s.d}, {"count", s.count}, {"values", values}};
}

Json json_report(const AccumulationReport& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back(Json{{"tag", w.tag}, {"value", json_rational(w.value)},
                                 {"certified", w.certified}});
    return Json{{"target", json_rational(r.target)},
                {"direction", r.direction == Direction::from_above ? "from-above" : "from-below"},
                {"verified", r.verified},
                {"verdict", r.verdict},
                {"witnesses", witnesses}};
}

Json json_sequence(const ValueSequence& s) {
    Json points = Json::array();
    for (const auto& p : s.points) {
        Json pt{{"tag", p.tag}, {"value", json_rational(p.value)}, {"certified", p.certified}};
        if (p.predicted) pt["predicted"] = json_rational(*p.predicted);
        if (p.bracket) pt["bracket"] = json_bracket(*p.bracket);
        points.push_back(std::move(pt));
    }
    Json j{{"construction", s.construction}, {"limit", json_rational(s.limit)}, {"points", points}};
    if (s.witness) j["witness"] = json_ideal(*s.witness);
    return j;
}

Json result_envelope(const std::string& method, Json input) {
    Json j;
    j["schema"] = "lct-lab/1";
    j["input"] = std::move(input);
    j["method"] = method;
    return j;
}

std::string csv_value(const ExtRational& v) { return v.str(); }

std::string csv_spectrum(const Spectrum& s) {
    std::string out = "value\n";
    for (const auto& v : s.values) out += csv_value(v) + "\n";
    return out;
}

std::string csv_profile(const JetProfile& p) {
    std::string out = "order,fiber_dim,bound,error\n";
    for (const auto& r : p.rows)
        out += std::to_string(r.order) + "," + std::to_string(r.fiber_dim) + "," +
               csv_value(r.bound) + "," + r.error + "\n";
    return out;
}

std::string csv_reports(const std::vector<AccumulationReport>& reports) {
    std::string out = "target,direction,verified,verdict\n";
    for (const auto& r : reports)
        out += csv_value(r.target) + "," +
               (r.direction == Direction::from_above ? "from-above" : "from-below") + "," +
               (r.verified ? "true" : "false") + ",\"" + r.verdict + "\"\n";
    return out;
}

std::string csv_sequences(const std::vector<ValueSequence>& sequences) {
    std::string out = "construction,parameter,predicted,certified,bracket-lower,bracket-upper\n";
    for (const auto& s : sequences) {
        for (const auto& p : s.points) {
            out += "\"" + s.construction + "\"," + p.tag + ",";
            out += p.predicted ? csv_value(*p.predicted) : "";
            out += ",";
            out += p.certified ? csv_value(p.value) : "";
            out += ",";
            if (p.bracket) out += csv_value(p.bracket->lower);
            out += ",";
            if (p.bracket) out += csv_value(p.bracket->upper);
            out += "\n";
        }
    }
    return out;
}

}  // namespace lctlab
