// Command-line front end: calibrate, gen, moments, solve, swap, pair,
// experiment.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsi/errors.hpp"
#include "hsi/harness.hpp"
#include "hsi/instance_io.hpp"
#include "hsi/model.hpp"
#include "hsi/moments.hpp"
#include "hsi/report_io.hpp"
#include "hsi/selfref.hpp"
#include "hsi/solvers.hpp"

namespace {

using namespace hsi;

constexpr int kExitNone = 2;
constexpr int kExitBudget = 4;
constexpr int kExitGateFailed = 5;

std::vector<Vertex> parse_list(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        try {
            out.push_back(static_cast<Vertex>(std::stoul(item)));
        } catch (const std::exception&) {
            throw UsageError("bad vertex id '" + item + "'");
        }
    }
    return out;
}

std::string fmt(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text << '\n';
}

struct CalibrateArgs {
    std::size_t n = 0, d = 3, k = 0;
    double delta = 0.5, tol = 1e-9;
};

int run_calibrate(const CalibrateArgs& a) {
    const std::size_t k = a.k ? a.k : choose_k(a.n);
    const Calibration cal = calibrate_p(a.n, a.d, k, a.delta, a.tol);
    std::cout << "p_star " << fmt(cal.p) << "\nresidual " << fmt(cal.residual) << "\nexpected_count "
              << fmt(cal.expected) << "\nk " << k << "\niterations " << cal.iterations << '\n';
    return 0;
}

struct GenArgs {
    std::size_t n = 0, d = 3, k = 0;
    double p = -1.0, delta = -1.0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    ModelParams params;
    params.n = a.n;
    params.d = a.d;
    params.k = a.k ? a.k : choose_k(a.n);
    params.seed = a.seed;
    if (a.delta > 0) {
        params.delta = a.delta;
        params.p = calibrate_p(a.n, a.d, params.k, a.delta).p;
    } else {
        params.p = a.p;
    }
    const Instance instance{sample_hypergraph(params), params.p, params.seed};
    write_instance_file(a.out, instance);
    std::cerr << "wrote " << instance.graph.edge_count() << " edges to " << a.out << '\n';
    return 0;
}

struct MomentsArgs {
    std::size_t n = 0, d = 3, k = 0;
    double p = 0.0;
    bool quasi = false;
    std::string csv;
};

int run_moments(const MomentsArgs& a) {
    const MomentReport report = second_moment(a.n, a.d, a.k, a.p);
    std::optional<QuasiMomentReport> quasi;
    if (a.quasi) quasi = quasi_second_moment(a.n, a.d, a.k, a.p);

    std::ostringstream csv;
    csv << "i,F,Phi,W,P1,P2,P3,P4,ds_ratio,vc_ratio\n";
    for (std::size_t i = 0; i <= a.k; ++i) {
        csv << i << ',' << fmt(report.f_terms[i]) << ',';
        if (quasi) {
            const QuasiTerm& t = quasi->terms[i];
            csv << fmt(t.phi) << ',' << fmt(t.w) << ',' << fmt(t.p1) << ',' << fmt(t.p2) << ',' << fmt(t.p3) << ','
                << fmt(t.p4) << ',';
        } else {
            csv << ",,,,,,";
        }
        csv << fmt(ds_correlation_ratio(a.n, a.d, a.k, i, a.p).value) << ','
            << fmt(vc_correlation_ratio(a.n, a.k, i, a.p, a.d).value) << '\n';
    }
    if (a.csv.empty()) std::cout << csv.str();
    else write_text(a.csv, csv.str());
    std::cerr << "E[X] " << fmt(report.expected_count) << "  E[X^2] " << fmt(report.second_moment) << "  ratio "
              << fmt(report.ratio_to_square) << '\n';
    if (quasi) {
        std::cerr << "E[N] " << fmt(quasi->expected_quasi) << "  E[N^2] " << fmt(quasi->second_moment) << '\n';
    }
    return 0;
}

struct SolveArgs {
    std::string in;
    std::size_t k = 1, witnesses = 16;
    std::uint64_t budget = 1'000'000'000;
    bool quasi = false;
};

int run_solve(const SolveArgs& a) {
    const Instance instance = read_instance_file(a.in);
    SolveOptions options;
    options.witness_cap = a.witnesses;
    options.budget = a.budget;
    SolveReport report;
    try {
        report = a.quasi ? enumerate_quasi_dominating_sets(instance.graph, a.k, options)
                         : enumerate_dominating_sets(instance.graph, a.k, options);
    } catch (const SizeError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    }
    std::cout << to_json(report, a.quasi) << '\n';
    return report.count > 0 ? 0 : kExitNone;
}

struct SwapArgs {
    std::string in, set, dir = "forward", vh, out, record;
    std::optional<std::uint64_t> seed;
};

int run_swap(const SwapArgs& a) {
    const Instance instance = read_instance_file(a.in);
    const VertexSet s(parse_list(a.set));
    const ProtectedRegion region{VertexSet(parse_list(a.vh)), std::nullopt};
    SwapResult result;
    if (a.dir == "forward") result = forward_swap(instance.graph, s, region, a.seed);
    else if (a.dir == "backward") result = backward_swap(instance.graph, s, region, a.seed);
    else throw UsageError("--dir must be forward or backward");
    write_instance_file(a.out, Instance{result.graph, instance.p, instance.seed});
    const std::string record = to_json(result.record);
    if (a.record.empty()) std::cout << record << '\n';
    else write_text(a.record, record);
    return 0;
}

struct PairArgs {
    std::size_t n = 0, d = 3, k = 0, vh_size = 0, retries = 100;
    double delta = 0.5;
    std::uint64_t seed = 0;
    std::string prefix;
};

int run_pair(const PairArgs& a) {
    ModelParams params;
    params.n = a.n;
    params.d = a.d;
    params.k = a.k ? a.k : choose_k(a.n);
    params.delta = a.delta;
    params.seed = a.seed;
    params.p = calibrate_p(a.n, a.d, params.k, a.delta).p;
    PairOptions options;
    options.retry_budget = a.retries;
    const SelfRefPair pair = build_selfref_pair(params, ProtectedRegion::prefix(a.vh_size), options);
    write_instance_file(a.prefix + "_yes.json", Instance{pair.yes, params.p, pair.instance_seed});
    write_instance_file(a.prefix + "_no.json", Instance{pair.no, params.p, pair.instance_seed});
    write_text(a.prefix + "_record.json", to_json(pair));
    std::cout << "attempts " << pair.attempts << "\nyes_count " << pair.yes_report.count << "\nno_count "
              << pair.no_report.count << "\nflipped " << (pair.flipped ? "true" : "false") << '\n';
    return 0;
}

struct ExperimentArgs {
    std::string kind, n_list, csv, regime = "vc";
    std::size_t d = 3, k = 0, i = 0;
    double p = -1.0, delta = -1.0;
    std::uint64_t trials = 1000, seed = 0;
};

int run_experiment(const ExperimentArgs& a) {
    std::vector<std::size_t> ns;
    for (Vertex v : parse_list(a.n_list)) ns.push_back(v);
    if (ns.empty()) throw UsageError("--n is required");

    auto params_for = [&](std::size_t n) {
        ModelParams params;
        params.n = n;
        params.d = a.d;
        params.k = a.k ? a.k : choose_k(n);
        params.seed = a.seed;
        if (a.delta > 0) {
            params.delta = a.delta;
            params.p = a.kind == "trend" ? 0.0 : calibrate_p(n, a.d, params.k, a.delta).p;
        } else if (a.p >= 0) {
            params.p = a.p;
        } else {
            throw UsageError("one of --p or --delta is required");
        }
        return params;
    };

    std::vector<EstimateRecord> records;
    bool gates_ok = true;
    if (a.kind == "ex") {
        const CountExperiment ex = mc_expected_count(params_for(ns.front()), a.trials);
        records.push_back(ex.record);
        gates_ok = ex.record.verdict != Verdict::outside;
    } else if (a.kind == "solvable") {
        const SolvableExperiment ex = mc_solvable_and_unique(params_for(ns.front()), a.trials);
        records = {ex.solvable, ex.unique, ex.markov};
        gates_ok = ex.markov_ok;
    } else if (a.kind == "pair-corr") {
        const Regime regime = a.regime == "ds" ? Regime::dominating_set : Regime::vertex_cover;
        const PairCorrelationExperiment ex = mc_pair_correlation(params_for(ns.front()), a.i, a.trials, regime);
        records.push_back(ex.record);
        gates_ok = ex.record.verdict != Verdict::outside;
    } else if (a.kind == "quasi") {
        const QuasiExperiment ex = mc_quasi_frequency(params_for(ns.front()), a.trials);
        records.push_back(ex.mean);
        if (ex.conditional) records.push_back(*ex.conditional);
        gates_ok = ex.mean.verdict != Verdict::outside;
    } else if (a.kind == "trend") {
        if (a.delta <= 0) throw UsageError("trend needs --delta");
        std::vector<ModelParams> ladder;
        for (std::size_t n : ns) ladder.push_back(params_for(n));
        const TrendExperiment ex = ratio_trend(ladder);
        records = ex.records;
        gates_ok = ex.non_increasing;
    } else {
        throw UsageError("--kind must be ex, solvable, pair-corr, quasi or trend");
    }

    if (a.csv.empty()) {
        write_csv(std::cout, records);
    } else {
        std::ofstream out(a.csv);
        if (!out) throw UsageError("cannot write " + a.csv);
        write_csv(out, records);
    }
    std::cerr << (gates_ok ? "hard gates passed" : "hard gate FAILED") << '\n';
    return gates_ok ? 0 : kExitGateFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dominating sets on random d-uniform hypergraphs: formulas, oracles, self-referential pairs"};
    app.require_subcommand(1);

    CalibrateArgs cal;
    auto* calibrate = app.add_subcommand("calibrate", "solve E[X] = delta for p");
    calibrate->add_option("--n", cal.n)->required();
    calibrate->add_option("--d", cal.d)->required();
    calibrate->add_option("--k", cal.k, "default round(ln n)");
    calibrate->add_option("--delta", cal.delta)->required();
    calibrate->add_option("--tol", cal.tol);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "sample G_d(n,p) to an instance file");
    gen_cmd->add_option("--n", gen.n)->required();
    gen_cmd->add_option("--d", gen.d)->required();
    gen_cmd->add_option("--k", gen.k, "used with --delta");
    auto* gen_p = gen_cmd->add_option("--p", gen.p);
    auto* gen_delta = gen_cmd->add_option("--delta", gen.delta);
    gen_p->excludes(gen_delta);
    gen_cmd->add_option("--seed", gen.seed)->required();
    gen_cmd->add_option("--out", gen.out)->required();

    MomentsArgs mom;
    auto* moments = app.add_subcommand("moments", "closed-form moment terms per overlap i");
    moments->add_option("--n", mom.n)->required();
    moments->add_option("--d", mom.d)->required();
    moments->add_option("--k", mom.k)->required();
    moments->add_option("--p", mom.p)->required();
    moments->add_flag("--quasi", mom.quasi);
    moments->add_option("--csv", mom.csv);

    SolveArgs sol;
    auto* solve = app.add_subcommand("solve", "exact enumeration of size-k (quasi-)dominating sets");
    solve->add_option("--in", sol.in)->required();
    solve->add_option("--k", sol.k)->required();
    solve->add_flag("--quasi", sol.quasi);
    solve->add_option("--witnesses", sol.witnesses);
    solve->add_option("--budget", sol.budget);

    SwapArgs sw;
    std::uint64_t swap_seed = 0;
    auto* swap = app.add_subcommand("swap", "apply one symmetry mapping");
    swap->add_option("--in", sw.in)->required();
    swap->add_option("--set", sw.set)->required();
    swap->add_option("--dir", sw.dir)->check(CLI::IsMember({"forward", "backward"}));
    swap->add_option("--vh", sw.vh);
    auto* swap_seed_opt = swap->add_option("--seed", swap_seed, "randomize candidate order");
    swap->add_option("--out", sw.out)->required();
    swap->add_option("--record", sw.record, "default: stdout");

    PairArgs pr;
    auto* pair = app.add_subcommand("pair", "build a self-referential instance pair");
    pair->add_option("--n", pr.n)->required();
    pair->add_option("--d", pr.d)->required();
    pair->add_option("--k", pr.k);
    pair->add_option("--delta", pr.delta)->required();
    pair->add_option("--seed", pr.seed)->required();
    pair->add_option("--vh-size", pr.vh_size)->required();
    pair->add_option("--retries", pr.retries);
    pair->add_option("--out-prefix", pr.prefix)->required();

    ExperimentArgs ex;
    auto* experiment = app.add_subcommand("experiment", "Monte-Carlo check against the formulas");
    experiment->add_option("--kind", ex.kind)
        ->required()
        ->check(CLI::IsMember({"ex", "solvable", "pair-corr", "quasi", "trend"}));
    experiment->add_option("--n", ex.n_list, "vertex count; comma list for trend")->required();
    experiment->add_option("--d", ex.d)->required();
    experiment->add_option("--k", ex.k);
    auto* ex_p = experiment->add_option("--p", ex.p);
    auto* ex_delta = experiment->add_option("--delta", ex.delta);
    ex_p->excludes(ex_delta);
    experiment->add_option("--trials", ex.trials);
    experiment->add_option("--seed", ex.seed);
    experiment->add_option("--csv", ex.csv);
    experiment->add_option("--i", ex.i, "overlap for pair-corr");
    experiment->add_option("--regime", ex.regime, "vc or ds, for pair-corr")->check(CLI::IsMember({"vc", "ds"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*calibrate) return run_calibrate(cal);
        if (*gen_cmd) {
            if (gen.p < 0 && gen.delta < 0) throw UsageError("gen needs --p or --delta");
            return run_gen(gen);
        }
        if (*moments) return run_moments(mom);
        if (*solve) return run_solve(sol);
        if (*swap) {
            if (*swap_seed_opt) sw.seed = swap_seed;
            return run_swap(sw);
        }
        if (*pair) return run_pair(pr);
        if (*experiment) return run_experiment(ex);
    } catch (const NotFoundError& e) {
        std::cerr << "not found: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
