#include "rv/reproduce.hpp"

#include <sstream>

#include "rv/full_game.hpp"
#include "rv/montecarlo.hpp"
#include "rv/patterns.hpp"
#include "rv/reference_values.hpp"
#include "rv/tours.hpp"

namespace rv {

namespace {

std::string fmt_bool_outcome(int v) { return v == 0 ? "X" : std::to_string(v); }

std::string fmt_classes(const std::vector<std::vector<int>>& classes) {
    std::string s = "{";
    for (size_t i = 0; i < classes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(classes[i].size());
    }
    return s + "}";
}

std::string fmt_ratio(const RationalFunction& f) {
    return "(" + f.num().to_string() + ") / (" + f.den().to_string() + ")";
}

std::string fmt_quad(const Quad& x) {
    return rat_to_string(x.a) + " + " + rat_to_string(x.b) + "*sqrt(681)";
}

class LedgerBuilder {
public:
    explicit LedgerBuilder(ReproductionLedger& ledger) : ledger_(ledger) {}

    void row(const std::string& id, const std::string& description, const std::string& expected,
             const std::string& computed) {
        ledger_.rows.push_back({id, description, expected, computed, expected == computed});
    }
    void row(const std::string& id, const std::string& description, const std::string& expected,
             const std::string& computed, bool pass) {
        ledger_.rows.push_back({id, description, expected, computed, pass});
    }

private:
    ReproductionLedger& ledger_;
};

}  // namespace

ReproductionLedger reproduce_all(const ReproduceOptions& options) {
    ReproductionLedger ledger;
    LedgerBuilder out(ledger);

    // Per-block meeting table for the published labeling pair.
    {
        Labeling li{kHomeI, {2, 3, 4}};
        Labeling lj{kHomeII, {1, 3, 4}};
        auto table = block_meeting_table(li, lj);
        std::string expected, computed;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                expected += fmt_bool_outcome(reference::kBMatrix[i][j]);
                computed += fmt_bool_outcome(table.entries[i][j]);
            }
        out.row("b-matrix", "per-block meeting table, labelings (2,3,4)/(1,3,4)", expected,
                computed);
    }

    {
        auto [prob, mean] = average_meeting_stats();
        out.row("meet-prob", "both tour: meeting probability over 36 labeling pairs", "1/2",
                rat_to_string(prob));
        out.row("meet-mean", "both tour: conditional mean meeting step", "16/9",
                rat_to_string(mean));
        out.row("stayer-mean", "stayer vs tourer: mean meeting step", "2",
                rat_to_string(stayer_tourer_mean_step()));
    }

    // Not-meet matrices, with the optional fault-injection hook on P4.
    std::vector<NotMeetMatrix> pmats;
    for (int t = 1; t <= 4; ++t) pmats.push_back(not_meet_matrix(t));
    if (options.perturb_p4) {
        auto [i, j, delta] = *options.perturb_p4;
        pmats[3].entries[i][j] += delta;
        if (i != j) pmats[3].entries[j][i] += delta;
    }
    {
        auto check_matrix = [&](int k, const std::vector<std::vector<std::string>>& ref) {
            auto expected = reference::parse_matrix(ref);
            bool equal = pmats[k - 1].entries == expected;
            out.row("p" + std::to_string(k), "not-meet matrix P" + std::to_string(k),
                    "entrywise equal", equal ? "entrywise equal" : "mismatch", equal);
        };
        check_matrix(2, reference::kP2);
        check_matrix(3, reference::kP3);
        check_matrix(4, reference::kP4);
    }

    {
        auto d2 = definiteness(pmats[1]);
        out.row("p2-definite", "P2 sign class", "PositiveDefinite",
                to_string(d2.classification));
        auto d3 = definiteness(pmats[2]);
        bool d3_ok = d3.classification != Definiteness::Indefinite;
        out.row("p3-definite", "P3 has no negative eigenvalue", "no negative eigenvalue",
                to_string(d3.classification), d3_ok);
        auto d4 = definiteness(pmats[3]);
        bool d4_ok = d4.classification == Definiteness::Indefinite && !d4.witness.empty() &&
                     sgn(d4.witness_value) < 0;
        std::string computed = to_string(d4.classification);
        if (d4_ok) computed += ", witness value " + rat_to_string(d4.witness_value);
        out.row("p4-indefinite", "P4 indefinite with exact negative witness",
                "Indefinite, verified witness", computed, d4_ok);
        if (d4.classification == Definiteness::Indefinite) {
            auto classes = negative_eigvec_structure(pmats[3]);
            out.row("p4-eigvec", "negative eigenvector coordinate classes", "{1,4,3,6,1}",
                    fmt_classes(classes));
        }
    }

    {
        for (int k = 1; k <= 4; ++k) {
            std::vector<NotMeetMatrix> sub(pmats.begin(), pmats.begin() + k);
            Rational et = tail_et_from_survival(
                survival_sequence(uniform_pattern_distribution(k), sub));
            out.row("tstep-uniform-" + std::to_string(k),
                    "t-step ET, uniform tours, " + std::to_string(k) + " patterned blocks", "2",
                    rat_to_string(et));
        }
        auto qy = survival_sequence(paper_y_distribution(), pmats);
        out.row("tstep-y-tail", "t-step ET of y, uniform continuation",
                rat_to_string(reference::y_tail_et()),
                rat_to_string(tail_et_from_survival(qy)));
        out.row("tstep-y-renewal", "t-step ET of y, block restart",
                rat_to_string(reference::y_renewal_et()),
                rat_to_string(renewal_et_from_survival(qy)));
    }

    {
        auto paths = enumerate_paths(paper_y_distribution());
        out.row("path-count", "12-step action paths with nonzero probability", "1585",
                std::to_string(paths.size()));
        std::array<long, 5> by_tours{};
        for (const auto& path : paths) ++by_tours[path.tour_count];
        std::ostringstream breakdown;
        for (int t = 0; t <= 4; ++t) breakdown << (t ? "/" : "") << by_tours[t];
        out.row("path-breakdown", "path count by number of touring blocks", "1/24/216/864/480",
                breakdown.str());
    }

    {
        const auto& eval = full_game_paper_y();
        bool eq = eval.et == reference::twelve_step_et_ratio();
        out.row("full-et-y", "symbolic ET(p) of the 12-step strategy vs published ratio",
                fmt_ratio(reference::twelve_step_et_ratio()),
                eq ? "equal (cross-multiplied)" : fmt_ratio(eval.et), eq);
        out.row("full-et-mass", "step masses and survival sum to 1 identically", "identity",
                eval.masses_complete() ? "identity" : "violated", eval.masses_complete());

        auto uniform_eval = full_game_et(uniform_pattern_distribution(4));
        bool uniform_eq = uniform_eval.et == aw_expected_time();
        out.row("full-et-uniform", "12-step ET of uniform tours equals the AW formula",
                "equal (cross-multiplied)",
                uniform_eq ? "equal (cross-multiplied)" : fmt_ratio(uniform_eval.et),
                uniform_eq);
    }

    {
        RationalFunction aw = aw_expected_time();
        bool aw_eq = aw == reference::aw_et_ratio();
        out.row("aw-formula", "AW block recurrence yields the published ET(p)",
                fmt_ratio(reference::aw_et_ratio()),
                aw_eq ? "equal (cross-multiplied)" : fmt_ratio(aw), aw_eq);
        Quad p_star = aw_optimal_p();
        out.row("aw-p-star", "AW optimal home probability",
                fmt_quad(reference::aw_p_star()), fmt_quad(p_star));
        out.row("aw-p-star-dec", "AW optimal p, 6 significant digits", "0.321983",
                to_decimal(p_star, 6));
        Quad et_star = aw.eval(p_star);
        out.row("aw-et-star", "AW optimal expected time",
                fmt_quad(reference::aw_et_star()), fmt_quad(et_star));
        out.row("aw-et-star-dec", "AW optimal ET, 6 significant digits", "3.42466",
                to_decimal(et_star, 6));
    }

    {
        Quad gain = improvement_at(aw_optimal_p());
        out.row("improvement", "exact improvement over AW at p*",
                fmt_quad(reference::improvement_at_p_star()), fmt_quad(gain));
        out.row("improvement-dec", "improvement, 6 significant digits", "0.000146683",
                to_decimal(gain, 6));
    }

    if (!options.skip_slow) {
        double p_star = aw_optimal_p().to_double();
        auto spot = [&](const std::string& id, const PatternDistribution& dist,
                        double exact, const std::string& what) {
            auto report =
                estimate_et(p_star, dist, options.mc_trials, options.seed, exact);
            std::ostringstream computed;
            computed << "mean " << report.mean << ", z " << (report.z_score ? *report.z_score : 0);
            bool ok = report.z_score && std::abs(*report.z_score) <= 4.0;
            out.row(id, what, "|z| <= 4", computed.str(), ok);
        };
        spot("mc-y", paper_y_distribution(),
             full_game_paper_y().et.eval(aw_optimal_p()).to_double(),
             "Monte Carlo vs exact ET, y distribution at p*");
        spot("mc-uniform", uniform_pattern_distribution(4),
             aw_expected_time().eval(aw_optimal_p()).to_double(),
             "Monte Carlo vs exact ET, uniform tours at p*");
    }

    return ledger;
}

}  // namespace rv
