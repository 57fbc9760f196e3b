// Command-line workbench for exact rendezvous-search computations on K4.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rv/block_analysis.hpp"
#include "rv/full_game.hpp"
#include "rv/montecarlo.hpp"
#include "rv/optimizer.hpp"
#include "rv/patterns.hpp"
#include "rv/reproduce.hpp"
#include "rv/tours.hpp"

using nlohmann::json;

namespace {

rv::Labeling parse_labeling(const std::string& spec, int home) {
    rv::Labeling lab{home, {}};
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) lab.letter_to_location.push_back(std::stoi(item));
    lab.validate(4);
    return lab;
}

rv::PatternDistribution parse_dist(const std::string& spec) {
    if (spec == "paper-y") return rv::paper_y_distribution();
    if (spec == "uniform") return rv::uniform_pattern_distribution(4);
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open distribution file: " + spec);
    std::stringstream buf;
    buf << in.rdbuf();
    return rv::pattern_distribution_from_json(buf.str());
}

json quad_json(const rv::Quad& x) {
    return json{{"a", rv::rat_to_string(x.a)}, {"b", rv::rat_to_string(x.b)}, {"d", 681}};
}

json poly_json(const rv::Poly& f) {
    json a = json::array();
    for (int i = 0; i <= f.degree(); ++i) a.push_back(rv::rat_to_string(f.coeff(i)));
    if (f.is_zero()) a.push_back("0");
    return a;
}

json ratfun_json(const rv::RationalFunction& f) {
    return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

std::string quad_pretty(const rv::Quad& x) {
    return rv::rat_to_string(x.a) + " + " + rv::rat_to_string(x.b) + "*sqrt(681)";
}

int run_b_matrix(const std::string& lab_i, const std::string& lab_ii, const std::string& format) {
    auto table = rv::block_meeting_table(parse_labeling(lab_i, rv::kHomeI),
                                         parse_labeling(lab_ii, rv::kHomeII));
    const auto tours = rv::enumerate_tours(4);
    if (format == "json") {
        json rows = json::array();
        for (int i = 0; i < 6; ++i) {
            json row = json::array();
            for (int j = 0; j < 6; ++j)
                row.push_back(table.entries[i][j] == rv::kNoMeet ? json(nullptr)
                                                                 : json(table.entries[i][j]));
            rows.push_back(row);
        }
        json names = json::array();
        for (const auto& t : tours) names.push_back(t.name());
        std::cout << json{{"tours", names}, {"entries", rows}}.dump(2) << "\n";
        return 0;
    }
    const char* sep = (format == "csv") ? "," : "  ";
    if (format != "csv") {
        std::cout << "   ";
        for (const auto& t : tours) std::cout << sep << t.name();
        std::cout << "\n";
    }
    for (int i = 0; i < 6; ++i) {
        if (format != "csv") std::cout << tours[i].name();
        for (int j = 0; j < 6; ++j) {
            if (j || format != "csv") std::cout << sep;
            if (table.entries[i][j] == rv::kNoMeet)
                std::cout << "X";
            else
                std::cout << table.entries[i][j];
            if (format != "csv") std::cout << "  ";
        }
        std::cout << "\n";
    }
    return 0;
}

int run_pattern_matrix(int k, const std::string& format) {
    auto m = rv::not_meet_matrix(k);
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : m.entries) {
            json r = json::array();
            for (const auto& e : row) r.push_back(rv::rat_to_string(e));
            rows.push_back(r);
        }
        std::cout << json{{"k", k}, {"patterns", m.patterns}, {"entries", rows}}.dump(2) << "\n";
        return 0;
    }
    bool csv = (format == "csv");
    if (!csv) {
        for (const auto& w : m.patterns) std::cout << "\t" << w;
        std::cout << "\n";
    }
    for (int i = 0; i < m.size(); ++i) {
        if (!csv) std::cout << m.patterns[i];
        for (int j = 0; j < m.size(); ++j)
            std::cout << (csv && j == 0 ? "" : (csv ? "," : "\t")) << rv::rat_to_string(m.entries[i][j]);
        std::cout << "\n";
    }
    return 0;
}

int run_definiteness(int k, const std::string& format) {
    auto m = rv::not_meet_matrix(k);
    auto report = rv::definiteness(m);
    if (format == "json") {
        json j{{"k", k}, {"classification", rv::to_string(report.classification)}};
        if (report.classification == rv::Definiteness::Indefinite) {
            json w = json::array();
            for (const auto& v : report.witness) w.push_back(rv::rat_to_string(v));
            j["witness"] = w;
            j["witness_value"] = rv::rat_to_string(report.witness_value);
            json classes = json::array();
            for (const auto& cls : rv::negative_eigvec_structure(m)) classes.push_back(cls);
            j["negative_eigvec_classes"] = classes;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "P" << k << ": " << rv::to_string(report.classification) << "\n";
    if (report.classification == rv::Definiteness::Indefinite) {
        std::cout << "witness v with v'Mv = " << rv::rat_to_string(report.witness_value) << ":\n ";
        for (const auto& v : report.witness) std::cout << " " << rv::rat_to_string(v);
        std::cout << "\n";
    }
    return 0;
}

int run_tstep_et(const std::string& dist_spec, const std::string& mode, const std::string& format) {
    auto dist = parse_dist(dist_spec);
    rv::Rational et = (rv::tstep_mode_from_string(mode) == rv::TstepMode::Tail)
                          ? rv::tstep_et_tail(dist)
                          : rv::tstep_et_renewal(dist);
    if (format == "json") {
        std::cout << json{{"mode", mode}, {"et", rv::rat_to_string(et)},
                          {"et_decimal", et.get_d()}}.dump(2)
                  << "\n";
    } else {
        std::cout << "expected t-steps (" << mode << "): " << rv::rat_to_string(et) << " = "
                  << et.get_d() << "\n";
    }
    return 0;
}

int run_enumerate_paths(const std::string& dist_spec, const std::string& format) {
    auto dist = parse_dist(dist_spec);
    auto paths = rv::enumerate_paths(dist);
    std::array<long, 5> by_tours{};
    for (const auto& p : paths) ++by_tours[p.tour_count];
    if (format == "json") {
        const auto tours = rv::enumerate_tours(4);
        json list = json::array();
        for (const auto& p : paths) {
            json actions = json::array();
            for (int a : p.actions)
                actions.push_back(a < 0 ? json("home") : json(tours[a].name()));
            list.push_back(json{{"actions", actions},
                                {"tour_count", p.tour_count},
                                {"r", rv::rat_to_string(p.r)}});
        }
        std::cout << json{{"count", paths.size()}, {"by_tour_count", by_tours},
                          {"paths", list}}.dump(2)
                  << "\n";
    } else {
        std::cout << "paths with nonzero probability: " << paths.size() << "\n";
        for (int t = 0; t <= 4; ++t)
            std::cout << "  " << t << " touring blocks: " << by_tours[t] << "\n";
    }
    return 0;
}

int run_full_et(const std::string& dist_spec, const std::string& p_spec,
                const std::string& p_exact, bool emit_function, const std::string& format) {
    auto eval = rv::full_game_et(parse_dist(dist_spec));
    json j;
    std::ostringstream text;
    if (emit_function || (p_spec.empty() && p_exact.empty())) {
        j["et_function"] = ratfun_json(eval.et);
        j["survival_function"] = ratfun_json(eval.survival);
        text << "ET(p) = (" << eval.et.num().to_string() << ") / ("
             << eval.et.den().to_string() << ")\n";
    }
    if (!p_spec.empty()) {
        rv::Rational p = rv::rat_from_string(p_spec);
        rv::Rational v = eval.et.eval(p);
        j["p"] = rv::rat_to_string(p);
        j["et"] = rv::rat_to_string(v);
        j["et_decimal"] = v.get_d();
        text << "ET(" << p_spec << ") = " << rv::rat_to_string(v) << " = " << v.get_d() << "\n";
    } else if (!p_exact.empty()) {
        if (p_exact != "aw-opt") throw std::invalid_argument("--p-exact only supports aw-opt");
        rv::Quad p = rv::aw_optimal_p();
        rv::Quad v = eval.et.eval(p);
        j["p"] = quad_json(p);
        j["et"] = quad_json(v);
        j["et_decimal"] = rv::to_decimal(v, 9);
        text << "ET(p*) = " << quad_pretty(v) << " = " << rv::to_decimal(v, 9) << "\n";
    }
    std::cout << (format == "json" ? j.dump(2) + "\n" : text.str());
    return 0;
}

int run_aw_et(const std::string& p_spec, const std::string& p_exact, const std::string& format) {
    rv::RationalFunction et = rv::aw_expected_time();
    json j;
    std::ostringstream text;
    if (p_spec.empty() && p_exact.empty()) {
        j["et_function"] = ratfun_json(et);
        text << "ET(p) = (" << et.num().to_string() << ") / (" << et.den().to_string() << ")\n";
    } else if (!p_spec.empty()) {
        rv::Rational p = rv::rat_from_string(p_spec);
        rv::Rational v = et.eval(p);
        j["p"] = rv::rat_to_string(p);
        j["et"] = rv::rat_to_string(v);
        j["et_decimal"] = v.get_d();
        text << "ET(" << p_spec << ") = " << rv::rat_to_string(v) << " = " << v.get_d() << "\n";
    } else {
        if (p_exact != "aw-opt") throw std::invalid_argument("--p-exact only supports aw-opt");
        rv::Quad p = rv::aw_optimal_p();
        rv::Quad v = et.eval(p);
        j["p"] = quad_json(p);
        j["et"] = quad_json(v);
        j["et_decimal"] = rv::to_decimal(v, 6);
        text << "p* = " << quad_pretty(p) << " = " << rv::to_decimal(p, 6) << "\n"
             << "ET(p*) = " << quad_pretty(v) << " = " << rv::to_decimal(v, 6) << "\n";
    }
    std::cout << (format == "json" ? j.dump(2) + "\n" : text.str());
    return 0;
}

int run_improvement(const std::string& p_spec, int digits, const std::string& format) {
    rv::Quad p = p_spec.empty() || p_spec == "aw-opt"
                     ? rv::aw_optimal_p()
                     : rv::Quad(rv::rat_from_string(p_spec));
    rv::Quad gain = rv::improvement_at(p);
    if (format == "json") {
        std::cout << json{{"p", quad_json(p)},
                          {"improvement", quad_json(gain)},
                          {"improvement_decimal", rv::to_decimal(gain, digits)}}.dump(2)
                  << "\n";
    } else {
        std::cout << "AW ET - 12-step ET at p = " << quad_pretty(p) << ":\n  "
                  << quad_pretty(gain) << "\n  = " << rv::to_decimal(gain, digits) << "\n";
    }
    return 0;
}

int run_simulate(const std::string& dist_spec, double p, long trials, std::uint64_t seed,
                 bool compare_exact) {
    std::optional<double> exact;
    if (compare_exact) exact = rv::full_game_et(parse_dist(dist_spec)).et.eval(
        [&] { rv::Rational r; mpq_set_d(r.get_mpq_t(), p); return r; }()).get_d();
    auto report = rv::estimate_et(p, parse_dist(dist_spec), trials, seed, exact);
    json j{{"trials", report.trials}, {"mean", report.mean}, {"seed", report.seed}};
    if (report.stderr_of_mean) j["stderr"] = *report.stderr_of_mean;
    if (report.exact_reference) j["exact_reference"] = *report.exact_reference;
    if (report.z_score) j["z_score"] = *report.z_score;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_reproduce(bool skip_slow, long trials, std::uint64_t seed, const std::string& format) {
    rv::ReproduceOptions options;
    options.skip_slow = skip_slow;
    options.mc_trials = trials;
    options.seed = seed;
    auto ledger = rv::reproduce_all(options);
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : ledger.rows)
            rows.push_back(json{{"id", r.id},
                                {"description", r.description},
                                {"expected", r.expected},
                                {"computed", r.computed},
                                {"status", r.pass ? "pass" : "fail"}});
        std::cout << json{{"all_pass", ledger.all_pass()}, {"rows", rows}}.dump(2) << "\n";
    } else {
        for (const auto& r : ledger.rows)
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ": " << r.description
                      << (r.pass ? "" : "\n      expected " + r.expected + "\n      computed " +
                                            r.computed)
                      << "\n";
        std::cout << (ledger.all_pass() ? "all claims reproduced\n"
                                        : "some claims FAILED\n");
    }
    return ledger.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for symmetric rendezvous search on K4"};
    app.require_subcommand(1);

    std::string format = "table", lab_i = "2,3,4", lab_ii = "1,3,4";
    std::string dist_spec = "paper-y", mode = "tail", p_spec, p_exact;
    int k = 4, digits = 6, opt_starts = 16;
    long trials = 1000000;
    std::uint64_t seed = 1;
    double p_num = 0.0;
    bool emit_function = false, compare_exact = false, skip_slow = false;
    rv::Rational tol = rv::rat(1, 10000000000L);
    std::string tol_spec = "1/10000000000";

    auto* b = app.add_subcommand("b-matrix", "per-block tour-vs-tour meeting table");
    b->add_option("--lab-i", lab_i, "player I labeling, e.g. 2,3,4");
    b->add_option("--lab-ii", lab_ii, "player II labeling, e.g. 1,3,4");
    b->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));

    auto* pm = app.add_subcommand("pattern-matrix", "not-meet matrix P_k over patterns");
    pm->add_option("--k", k)->check(CLI::Range(1, 4))->required();
    pm->add_option("--format", format)->check(CLI::IsMember({"table", "csv", "json"}));

    auto* df = app.add_subcommand("definiteness", "exact sign classification of P_k");
    df->add_option("--k", k)->check(CLI::Range(2, 4))->required();
    df->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* te = app.add_subcommand("tstep-et", "expected t-steps for a pattern distribution");
    te->add_option("--dist", dist_spec, "paper-y | uniform | FILE");
    te->add_option("--mode", mode)->check(CLI::IsMember({"tail", "renewal"}));
    te->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* ep = app.add_subcommand("enumerate-paths", "12-step paths with nonzero probability");
    ep->add_option("--dist", dist_spec);
    ep->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* fe = app.add_subcommand("full-et", "symbolic 12-step expected meeting time");
    fe->add_option("--dist", dist_spec);
    fe->add_option("--p", p_spec, "evaluate at a rational p");
    fe->add_option("--p-exact", p_exact, "aw-opt: evaluate at the AW-optimal p");
    fe->add_flag("--emit-function", emit_function);
    fe->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* ae = app.add_subcommand("aw-et", "Anderson-Weber expected meeting time");
    ae->add_option("--p", p_spec);
    ae->add_option("--p-exact", p_exact);
    ae->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* im = app.add_subcommand("improvement", "exact AW-minus-12-step gap");
    im->add_option("--p", p_spec, "rational p, or aw-opt (default)");
    im->add_option("--decimal", digits, "significant digits")->check(CLI::Range(1, 50));
    im->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* opt = app.add_subcommand("optimize", "minimize expected meeting time");
    opt->require_subcommand(1);
    auto* opt_aw = opt->add_subcommand("aw", "closed-form AW optimum");
    opt_aw->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    auto* opt_p = opt->add_subcommand("full-p", "numeric p optimum of the 12-step strategy");
    opt_p->add_option("--dist", dist_spec);
    opt_p->add_option("--tol", tol_spec, "bracket width, rational");
    opt_p->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    auto* opt_d = opt->add_subcommand("dist", "local simplex search over pattern distributions");
    opt_d->add_option("--k", k)->check(CLI::Range(2, 4));
    opt_d->add_option("--mode", mode)->check(CLI::IsMember({"tail", "renewal"}));
    opt_d->add_option("--starts", opt_starts);
    opt_d->add_option("--seed", seed);
    opt_d->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* sim = app.add_subcommand("simulate", "Monte Carlo oracle for the 12-step strategy");
    sim->add_option("--dist", dist_spec);
    sim->add_option("--p", p_num)->required();
    sim->add_option("--trials", trials)->required();
    sim->add_option("--seed", seed)->required();
    sim->add_flag("--compare-exact", compare_exact);

    auto* rep = app.add_subcommand("reproduce", "recompute and verify every published claim");
    rep->add_flag("--skip-slow", skip_slow, "skip the Monte Carlo spot checks");
    rep->add_option("--trials", trials, "Monte Carlo trials per spot check");
    rep->add_option("--seed", seed);
    rep->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
        if (b->parsed()) return run_b_matrix(lab_i, lab_ii, format);
        if (pm->parsed()) return run_pattern_matrix(k, format);
        if (df->parsed()) return run_definiteness(k, format);
        if (te->parsed()) return run_tstep_et(dist_spec, mode, format);
        if (ep->parsed()) return run_enumerate_paths(dist_spec, format);
        if (fe->parsed()) return run_full_et(dist_spec, p_spec, p_exact, emit_function, format);
        if (ae->parsed()) return run_aw_et(p_spec, p_exact, format);
        if (im->parsed()) return run_improvement(p_spec, digits, format);
        if (opt->parsed()) {
            if (opt_aw->parsed()) {
                auto r = rv::minimize_aw();
                if (format == "json")
                    std::cout << json{{"p", quad_json(r.p)},
                                      {"et", quad_json(r.et)},
                                      {"p_decimal", rv::to_decimal(r.p, 6)},
                                      {"et_decimal", rv::to_decimal(r.et, 6)}}.dump(2)
                              << "\n";
                else
                    std::cout << "p* = " << quad_pretty(r.p) << " = " << rv::to_decimal(r.p, 6)
                              << "\nET* = " << quad_pretty(r.et) << " = "
                              << rv::to_decimal(r.et, 6) << "\n";
                return 0;
            }
            if (opt_p->parsed()) {
                auto r = rv::minimize_full_game_p(parse_dist(dist_spec),
                                                  rv::rat_from_string(tol_spec));
                if (format == "json")
                    std::cout << json{{"p_lo", rv::rat_to_string(r.p_lo)},
                                      {"p_hi", rv::rat_to_string(r.p_hi)},
                                      {"p", rv::rat_to_string(r.p)},
                                      {"value", rv::rat_to_string(r.value)},
                                      {"value_decimal", r.value.get_d()}}.dump(2)
                              << "\n";
                else
                    std::cout << "p in [" << rv::rat_to_string(r.p_lo) << ", "
                              << rv::rat_to_string(r.p_hi) << "]\nET = " << r.value.get_d()
                              << "\n";
                return 0;
            }
            auto r = rv::minimize_pattern_distribution(k, rv::tstep_mode_from_string(mode),
                                                       opt_starts, seed);
            if (format == "json")
                std::cout << json{{"dist", json::parse(rv::pattern_distribution_to_json(r.dist))},
                                  {"value", rv::rat_to_string(r.value)},
                                  {"value_decimal", r.value.get_d()},
                                  {"stationarity_residual",
                                   rv::rat_to_string(r.stationarity_residual)}}.dump(2)
                          << "\n";
            else
                std::cout << "value = " << rv::rat_to_string(r.value) << " = " << r.value.get_d()
                          << "\ndist = " << rv::pattern_distribution_to_json(r.dist) << "\n";
            return 0;
        }
        if (sim->parsed()) return run_simulate(dist_spec, p_num, trials, seed, compare_exact);
        if (rep->parsed()) return run_reproduce(skip_slow, trials, seed, format);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
