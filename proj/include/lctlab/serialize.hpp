#ifndef LCTLAB_SERIALIZE_HPP
#define LCTLAB_SERIALIZE_HPP

#include <json.hpp>

#include "lctlab/explorer.hpp"

namespace lctlab {

using Json = nlohmann::ordered_json;

// Rationals are {"num","den"} pairs end to end; +infinity is {"num":1,"den":0}.
Json json_rational(const Rational& q);
Json json_rational(const ExtRational& v);

Json json_ideal(const Ideal& a);
Json json_bracket(const LctBracket& b);
Json json_profile(const JetProfile& p);
Json json_certificate(const NewtonPolyhedron& poly, const LpCertificate& cert);
Json json_spectrum(const Spectrum& s);
Json json_report(const AccumulationReport& r);
Json json_sequence(const ValueSequence& s);

// Top-level result envelope: {"schema":"lct-lab/1", "input", "method", ...}.
Json result_envelope(const std::string& method, Json input);

// CSV counterparts. Sequence rows follow the shared layout
// construction,parameter,predicted,certified,bracket-lower,bracket-upper.
std::string csv_value(const ExtRational& v);
std::string csv_spectrum(const Spectrum& s);
std::string csv_profile(const JetProfile& p);
std::string csv_reports(const std::vector<AccumulationReport>& reports);
std::string csv_sequences(const std::vector<ValueSequence>& sequences);

}  // namespace lctlab

#endif
