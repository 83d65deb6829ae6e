#include "lctlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lctlab/parse.hpp"
#include "lctlab/serialize.hpp"

namespace lctlab {

namespace {

struct Options {
    int n = 1;
    std::string out;
    std::string format = "json";
    int max_order = 6;
    int degree = 4;
    long max_spairs = 200000;
    long max_terms = 2000000;
    int jobs = 1;
    std::string lct_hint;  // for seq constructions that need lct(a)

    // desk-scale guards, overridable through the config file only
    ExploreGuards guards;
    int guard_order = 8;

    GroebnerBudget budget() const {
        GroebnerBudget b;
        b.max_spairs = max_spairs;
        b.max_terms = max_terms;
        return b;
    }
};

// "key = value" lines; keys match the long flag names.
void load_config(const std::string& path, Options& opt) {
    std::ifstream in(path);
    if (!in) throw value_error("cannot open config file " + path);
    std::string line;
    auto trim = [](std::string s) {
        auto a = s.find_first_not_of(" \t\r");
        auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw value_error("config line without '=': " + line);
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        try {
            if (key == "n")
                opt.n = std::stoi(value);
            else if (key == "out")
                opt.out = value;
            else if (key == "format")
                opt.format = value;
            else if (key == "max-order")
                opt.max_order = std::stoi(value);
            else if (key == "degree")
                opt.degree = std::stoi(value);
            else if (key == "max-spairs")
                opt.max_spairs = std::stol(value);
            else if (key == "max-terms")
                opt.max_terms = std::stol(value);
            else if (key == "jobs")
                opt.jobs = std::stoi(value);
            else if (key == "guard-n")
                opt.guards.max_n = std::stoi(value);
            else if (key == "guard-degree")
                opt.guards.max_degree = std::stoi(value);
            else if (key == "guard-ideals")
                opt.guards.max_ideals = std::stol(value);
            else if (key == "guard-order")
                opt.guard_order = std::stoi(value);
            else
                throw value_error("unknown config key: " + key);
        } catch (const std::invalid_argument&) {
            throw value_error("bad config value for " + key + ": " + value);
        }
    }
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw value_error("cannot open output file " + opt.out);
    f << text;
}

void emit_json(const Options& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

void require_format(const Options& opt) {
    if (opt.format != "json" && opt.format != "csv")
        throw value_error("format must be json or csv");
}

Ideal input_ideal(const Options& opt, const std::string& gens) {
    if (opt.n < 1) throw value_error("--n must be at least 1");
    return parse_ideal(gens, opt.n);
}

ExtRational parse_lct_hint(const std::string& text) {
    if (text == "inf") return ExtRational::infinity();
    return ExtRational(parse_rational(text));
}

// ---- command handlers ------------------------------------------------

void run_lct_monomial(const Options& opt, const std::string& gens) {
    Ideal a = input_ideal(opt, gens);
    MonomialLctResult r = monomial_lct(a);
    if (r.coefficients_ignored)
        std::cerr << "warning: coefficients of monomial generators are ignored\n";
    Json j = result_envelope("newton", json_ideal(a));
    j["lct"] = json_rational(r.lct);
    j["exact"] = true;
    if (r.certificate) j["certificate"] = json_certificate(r.polyhedron, *r.certificate);
    if (r.coefficients_ignored) j["warnings"] = Json::array({"coefficients ignored"});
    if (opt.format == "csv")
        emit(opt, "lct\n" + csv_value(r.lct) + "\n");
    else
        emit_json(opt, j);
}

void run_lct_jets(const Options& opt, const std::string& gens) {
    Ideal a = input_ideal(opt, gens);
    if (opt.max_order > opt.guard_order)
        throw budget_error("max-order exceeds the jets guard (" + std::to_string(opt.guard_order) +
                               "); raise guard-order in the config to override",
                           0, 0);
    if (a.is_zero() || !a.vanishes_at_origin()) {
        ExtRational v = a.is_zero() ? ExtRational(0) : ExtRational::infinity();
        Json j = result_envelope("convention", json_ideal(a));
        j["lct"] = json_rational(v);
        j["exact"] = true;
        if (opt.format == "csv")
            emit(opt, "lct\n" + csv_value(v) + "\n");
        else
            emit_json(opt, j);
        return;
    }
    JetProfile p = jet_profile(a, opt.max_order, opt.budget(), opt.jobs);
    Json j = result_envelope("jets", json_ideal(a));
    j["profile"] = json_profile(p);
    j["diagnostics"] = Json{{"jobs", opt.jobs}};
    if (opt.format == "csv")
        emit(opt, csv_profile(p));
    else
        emit_json(opt, j);
}

void run_lct_bracket(const Options& opt, const std::string& gens) {
    Ideal a = input_ideal(opt, gens);
    if (opt.degree < 1) throw value_error("--degree must be at least 1");
    LctBracket b = truncation_bracket(a, opt.degree, opt.max_order,
                                      default_degeneration_weights(opt.n), opt.budget(), opt.jobs);
    Json j = result_envelope("truncation", json_ideal(a));
    j["degree"] = opt.degree;
    j["bracket"] = json_bracket(b);
    if (opt.format == "csv")
        emit(opt, "lower,upper,exact\n" + csv_value(b.lower) + "," + csv_value(b.upper) + "," +
                      (b.exact ? "true" : "false") + "\n");
    else
        emit_json(opt, j);
}

void run_lct_estimate(const Options& opt, const std::string& gens) {
    Ideal a = input_ideal(opt, gens);
    if (opt.max_order > opt.guard_order)
        throw budget_error("max-order exceeds the jets guard", 0, 0);
    LctBracket b = estimate_lct(a, opt.max_order, default_degeneration_weights(opt.n), opt.budget(),
                                opt.jobs);
    Json j = result_envelope("estimate", json_ideal(a));
    j["bracket"] = json_bracket(b);
    if (b.exact) j["lct"] = json_rational(b.lower);
    if (opt.format == "csv")
        emit(opt, "lower,upper,exact\n" + csv_value(b.lower) + "," + csv_value(b.upper) + "," +
                      (b.exact ? "true" : "false") + "\n");
    else
        emit_json(opt, j);
}

void emit_sequences(const Options& opt, const std::string& method, Json input,
                    const std::vector<ValueSequence>& seqs) {
    if (opt.format == "csv") {
        emit(opt, csv_sequences(seqs));
        return;
    }
    Json j = result_envelope(method, std::move(input));
    Json arr = Json::array();
    for (const auto& s : seqs) arr.push_back(json_sequence(s));
    j["sequences"] = arr;
    emit_json(opt, j);
}

void run_seq_ts_shift(const Options& opt, const std::string& poly) {
    Polynomial f = parse_polynomial(poly, opt.n);
    if (opt.lct_hint.empty()) throw value_error("seq ts-shift requires --lct a/b (the threshold of f)");
    ExtRational c = parse_lct_hint(opt.lct_hint);
    if (c.is_infinite()) throw value_error("ts-shift requires a finite threshold");
    ThomSebastianiShift shift = thom_sebastiani_shift(f, c.value());

    ValueSequence seq;
    seq.construction = "ts-shift(" + print_polynomial(f) + ", c=" + c.str() + ")";
    seq.limit = shift.predicted;
    SequencePoint point{"g=" + print_polynomial(shift.g), shift.predicted, false};
    point.predicted = shift.predicted;
    Ideal g_ideal(shift.g.ambient());
    g_ideal.push_generator(shift.g);
    if (g_ideal.is_monomial()) {
        point.value = monomial_lct_value(g_ideal);
        point.certified = true;
    }
    seq.points.push_back(std::move(point));

    Json input{{"f", print_polynomial(f)}, {"c", json_rational(c)}, {"g", print_polynomial(shift.g)},
               {"n", shift.g.ambient()}};
    emit_sequences(opt, "ts-shift", std::move(input), {seq});
}

// lct(a) for sequence constructions: the oracle value for monomial input,
// otherwise the --lct hint.
ExtRational sequence_base_value(const Options& opt, const Ideal& a) {
    if (!opt.lct_hint.empty()) return parse_lct_hint(opt.lct_hint);
    if (a.is_monomial()) return monomial_lct_value(a);
    throw value_error("non-monomial input needs --lct (a certified or asserted threshold)");
}

void run_seq_t_power(const Options& opt, const std::string& gens) {
    Ideal a = input_ideal(opt, gens);
    ExtRational c = sequence_base_value(opt, a);
    ValueSequence seq;
    seq.construction = "t-power(" + print_ideal(a) + ")";
    seq.limit = c;
    seq.witness = a;
    for (int m = 1; m <= opt.max_order; ++m) {
        TPowerShift shifted = t_power_shift(a, m, c);
        SequencePoint point{"m=" + std::to_string(m), shifted.predicted, false};
        point.predicted = shifted.predicted;
        if (shifted.ideal.is_monomial()) {
            point.value = monomial_lct_value(shifted.ideal);
            point.certified = true;
        }
        seq.points.push_back(std::move(point));
    }
    emit_sequences(opt, "t-power", json_ideal(a), {seq});
}

void run_seq_power_scale(const Options& opt, const std::string& gens) {
    Ideal a = input_ideal(opt, gens);
    ExtRational c = sequence_base_value(opt, a);
    ValueSequence seq;
    seq.construction = "power-scale(" + print_ideal(a) + ")";
    seq.limit = ExtRational(0);
    for (int m = 1; m <= opt.max_order; ++m) {
        Ideal powered = power_scale(a, m);
        SequencePoint point{"m=" + std::to_string(m), power_scale_prediction(c, m), false};
        point.predicted = power_scale_prediction(c, m);
        if (powered.is_monomial()) {
            point.value = monomial_lct_value(powered);
            point.certified = true;
        }
        seq.points.push_back(std::move(point));
    }
    emit_sequences(opt, "power-scale", json_ideal(a), {seq});
}

void run_seq_cylinder(const Options& opt, const std::string& gens) {
    Ideal a = input_ideal(opt, gens);
    Ideal b = cylinder_extend(a);
    ValueSequence seq;
    seq.construction = "cylinder(" + print_ideal(a) + ")";
    for (const Ideal* side : {&a, &b}) {
        SequencePoint point{"n=" + std::to_string(side->ambient()), ExtRational(0), false};
        if (side->is_monomial() && !side->is_zero()) {
            point.value = monomial_lct_value(*side);
            point.certified = true;
        } else {
            LctBracket est = estimate_lct(*side, opt.max_order, default_degeneration_weights(side->ambient()),
                                          opt.budget(), opt.jobs);
            point.value = est.upper;
            point.certified = est.exact;
            point.bracket = est;
        }
        seq.points.push_back(std::move(point));
    }
    seq.limit = seq.points.front().value;
    seq.witness = a;
    emit_sequences(opt, "cylinder", json_ideal(a), {seq});
}

void run_seq_ladder(const Options& opt, long kappa_f, long ord_f, long kappa_f0, long ord_f0) {
    ValueSequence seq;
    LadderState base{kappa_f, ord_f, kappa_f0, ord_f0, 0};
    seq.construction = "ladder(kappa_F=" + std::to_string(kappa_f) + ", ord_F=" + std::to_string(ord_f) +
                       ", kappa_F0=" + std::to_string(kappa_f0) +
                       ", ord_F0=" + std::to_string(ord_f0) + ")";
    seq.limit = ExtRational(blowup_ladder_limit(base));
    for (long m = 0; m <= opt.max_order; ++m) {
        LadderState s = base;
        s.step = m;
        if (m == 0 && ord_f0 == 0) continue;  // the F_0 term alone is undefined
        SequencePoint point{"m=" + std::to_string(m), ExtRational(blowup_ladder(s)), true};
        point.predicted = point.value;
        seq.points.push_back(std::move(point));
    }
    Json input{{"kappa_f", kappa_f}, {"ord_f", ord_f}, {"kappa_f0", kappa_f0}, {"ord_f0", ord_f0}};
    emit_sequences(opt, "ladder", std::move(input), {seq});
}

void run_explore_spectrum(const Options& opt) {
    Spectrum s = lct_spectrum(opt.n, opt.degree, opt.guards, opt.jobs);
    if (opt.format == "csv") {
        emit(opt, csv_spectrum(s));
        return;
    }
    Json j = result_envelope("spectrum", Json{{"n", opt.n}, {"d", opt.degree}});
    j["spectrum"] = json_spectrum(s);
    emit_json(opt, j);
}

void run_explore_accumulation(const Options& opt) {
    Spectrum here = lct_spectrum(opt.n, opt.degree, opt.guards, opt.jobs);
    std::vector<ValueSequence> families = t_power_families(opt.n, opt.degree, opt.max_order, opt.guards);
    std::vector<AccumulationReport> reports = accumulation_scan(families, {here});
    reports.push_back(spectrum_tail_report(here));
    if (opt.format == "csv") {
        emit(opt, csv_reports(reports));
        return;
    }
    Json j = result_envelope("accumulation", Json{{"n", opt.n}, {"d", opt.degree},
                                                  {"m_max", opt.max_order}});
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(json_report(r));
    j["reports"] = arr;
    emit_json(opt, j);
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    Options opt;

    // resolve --config before regular parsing so flags override file values
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") {
            try {
                load_config(argv[i + 1], opt);
            } catch (const error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }

    CLI::App app{"exact log canonical thresholds at desk scale"};
    app.set_help_all_flag("--help-all");
    std::string config_path;

    std::string gens, poly;
    long kappa_f = 0, ord_f = 1, kappa_f0 = 0, ord_f0 = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "ambient variable count");
        cmd->add_option("--out", opt.out, "output path (default stdout)");
        cmd->add_option("--format", opt.format, "json or csv");
        cmd->add_option("--max-order", opt.max_order, "jet order / sequence length cap");
        cmd->add_option("--degree", opt.degree, "truncation or enumeration degree");
        cmd->add_option("--max-spairs", opt.max_spairs, "Groebner S-pair budget");
        cmd->add_option("--max-terms", opt.max_terms, "Groebner term budget");
        cmd->add_option("--jobs", opt.jobs, "parallel worker count");
        cmd->add_option("--config", config_path, "key = value config file");
    };

    CLI::App* lct = app.add_subcommand("lct", "thresholds of a given ideal");
    CLI::App* monomial = lct->add_subcommand("monomial", "exact lct of a monomial ideal");
    monomial->add_option("generators", gens, "comma-separated generators")->required();
    add_common(monomial);
    CLI::App* jets = lct->add_subcommand("jets", "jet-scheme upper bounds");
    jets->add_option("generators", gens)->required();
    add_common(jets);
    CLI::App* bracket = lct->add_subcommand("bracket", "truncation bracket of width n/degree");
    bracket->add_option("generators", gens)->required();
    add_common(bracket);
    CLI::App* estimate = lct->add_subcommand("estimate", "certified bracket from jets and degenerations");
    estimate->add_option("generators", gens)->required();
    add_common(estimate);

    CLI::App* seq = app.add_subcommand("seq", "threshold sequence constructions");
    CLI::App* ts = seq->add_subcommand("ts-shift", "f + sum y_i^b with predicted threshold");
    ts->add_option("polynomial", poly)->required();
    ts->add_option("--lct", opt.lct_hint, "threshold of f as a/b");
    add_common(ts);
    CLI::App* tpow = seq->add_subcommand("t-power", "a + (t^m) family, lct(a) + 1/m");
    tpow->add_option("generators", gens)->required();
    tpow->add_option("--lct", opt.lct_hint, "threshold of a (oracle used when monomial)");
    add_common(tpow);
    CLI::App* pscale = seq->add_subcommand("power-scale", "a^m family, lct(a)/m");
    pscale->add_option("generators", gens)->required();
    pscale->add_option("--lct", opt.lct_hint);
    add_common(pscale);
    CLI::App* cyl = seq->add_subcommand("cylinder", "same ideal, one more ambient variable");
    cyl->add_option("generators", gens)->required();
    add_common(cyl);
    CLI::App* ladder = seq->add_subcommand("ladder", "recursive blow-up quotient sequence");
    ladder->add_option("--kappa-f", kappa_f, "discrepancy of F")->required();
    ladder->add_option("--ord-f", ord_f, "order of the ideal along F")->required();
    ladder->add_option("--kappa-f0", kappa_f0, "discrepancy of F_0");
    ladder->add_option("--ord-f0", ord_f0, "order of the ideal along F_0");
    add_common(ladder);

    CLI::App* explore = app.add_subcommand("explore", "bounded slices of the threshold sets");
    CLI::App* spectrum = explore->add_subcommand("spectrum", "all monomial-ideal lcts for (n, degree)");
    add_common(spectrum);
    CLI::App* accumulation = explore->add_subcommand("accumulation", "limits of t-power families");
    add_common(accumulation);

    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        require_format(opt);
        if (monomial->parsed()) run_lct_monomial(opt, gens);
        else if (jets->parsed()) run_lct_jets(opt, gens);
        else if (bracket->parsed()) run_lct_bracket(opt, gens);
        else if (estimate->parsed()) run_lct_estimate(opt, gens);
        else if (ts->parsed()) run_seq_ts_shift(opt, poly);
        else if (tpow->parsed()) run_seq_t_power(opt, gens);
        else if (pscale->parsed()) run_seq_power_scale(opt, gens);
        else if (cyl->parsed()) run_seq_cylinder(opt, gens);
        else if (ladder->parsed()) run_seq_ladder(opt, kappa_f, ord_f, kappa_f0, ord_f0);
        else if (spectrum->parsed()) run_explore_spectrum(opt);
        else if (accumulation->parsed()) run_explore_accumulation(opt);
        else {
            std::cerr << app.help();
            return 2;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const value_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace lctlab
