#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "unirat/aaa_lawson.hpp"
#include "unirat/document.hpp"
#include "unirat/driver.hpp"
#include "unirat/equi_metrics.hpp"
#include "unirat/interpolation.hpp"
#include "unirat/numerics.hpp"
#include "unirat/omega_estimate.hpp"

namespace {

using namespace unirat;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitUsage = 64;

std::string fmt(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open " + path + " for writing");
    out << text;
}

void emit(const std::optional<std::string>& path, const std::string& text) {
    if (path)
        write_text(*path, text);
    else
        std::cout << text;
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

std::string trace_csv(const ConvergenceTrace& trace) {
    std::ostringstream out;
    out << "iter,uniform_error,delta,strategy,alternating\n";
    for (std::size_t j = 0; j < trace.iterations.size(); ++j) {
        const IterationRecord& rec = trace.iterations[j];
        out << j + 1 << ',' << fmt(rec.uniform_error) << ',' << fmt(rec.delta)
            << ',' << to_string(rec.strategy_used) << ','
            << (rec.alternating ? "true" : "false") << '\n';
    }
    return out.str();
}

NodeSet seed_from_file(const std::string& path) {
    const nlohmann::json j = load_json(path);
    if (j.is_array()) return NodeSet::of(j.get<std::vector<double>>());
    if (j.is_object() && j.contains("interp_nodes") &&
        !j.at("interp_nodes").is_null())
        return NodeSet::of(j.at("interp_nodes").get<std::vector<double>>());
    throw DomainError("seed file must hold a JSON node array or a document "
                      "with interp_nodes");
}

struct BestArgs {
    int n = 1;
    double omega = 0.0;
    double eps = 0.0;
    bool has_omega = false;
    bool has_eps = false;
    double tol_delta = 1e-6;
    int max_iter = 100;
    std::string strategy = "combined";
    std::optional<std::string> out;
    std::optional<std::string> trace;
    std::optional<std::string> seed;
};

int run_best(const BestArgs& args) {
    BestApproxConfig config;
    config.n = args.n;
    config.omega = args.has_omega ? args.omega : omega_auto(args.n, args.eps);
    config.tol_delta = args.tol_delta;
    config.max_iter = args.max_iter;
    if (args.strategy == "brasil")
        config.strategy = DriverStrategy::BrasilOnly;
    else if (args.strategy == "maehly")
        config.strategy = DriverStrategy::MaehlyOnly;
    else
        config.strategy = DriverStrategy::Combined;

    std::optional<NodeSet> seed;
    if (args.seed) seed = seed_from_file(*args.seed);

    const BestApproxResult result = compute_best(config, seed);

    ApproximantDocument doc;
    doc.n = config.n;
    doc.omega = config.omega;
    doc.interp_nodes = result.nodes.values();
    doc.eta = result.report.eta;
    doc.eps = result.report.eps;
    doc.delta = result.report.delta;
    doc.uniform_error = result.report.uniform_error;
    if (result.report.alternating) {
        const auto [lower, upper] = sandwich(result.report);
        doc.lower_bound = lower;
        doc.upper_bound = upper;
    }
    doc.iterations = result.iterations_used;
    doc.strategy = to_string(config.strategy);
    doc.converged = result.converged;
    fill_function_fields(doc, result.r);

    if (args.trace) write_text(*args.trace, trace_csv(result.trace));
    emit(args.out, to_json(doc).dump(2) + "\n");
    std::cerr << "n=" << config.n << " omega=" << fmt(config.omega)
              << " uniform_error=" << fmt(result.report.uniform_error)
              << " delta=" << fmt(result.report.delta)
              << " iterations=" << result.iterations_used
              << (result.converged ? " converged" : " not converged") << "\n";
    return result.converged ? kExitOk : kExitNotConverged;
}

struct EstimateArgs {
    int n = 1;
    double eps = 1e-6;
    std::string method = "auto";
};

int run_estimate(const EstimateArgs& args) {
    double omega;
    if (args.method == "experimental")
        omega = omega_experimental(args.n, args.eps);
    else if (args.method == "asymptotic")
        omega = omega_asymptotic(args.n, args.eps);
    else
        omega = omega_auto(args.n, args.eps);
    std::cout << fmt(omega) << "\n";
    return kExitOk;
}

struct AaaArgs {
    int n = 1;
    double omega = 1.0;
    std::string test_nodes = "adaptive";
    int lawson_iters = 0;
    int rounds = 3;
    std::optional<std::string> out;
    std::optional<std::string> trace;
};

int run_aaa(const AaaArgs& args) {
    TestNodeSet tests = [&args] {
        if (args.test_nodes == "adaptive")
            return adaptive_test_nodes(args.omega, args.n, args.rounds);
        std::size_t pos = 0;
        const int count = std::stoi(args.test_nodes, &pos);
        if (pos != args.test_nodes.size())
            throw DomainError("--test-nodes expects an integer or 'adaptive'");
        return TestNodeSet::equispaced(count);
    }();

    BarycentricRational r = aaa(args.omega, tests, args.n);
    LawsonState state;
    if (args.lawson_iters > 0) {
        auto refined = lawson(r, args.omega, tests, args.lawson_iters);
        r = std::move(refined.first);
        state = std::move(refined.second);
    }

    ApproximantDocument doc;
    doc.n = args.n;
    doc.omega = args.omega;
    doc.iterations = args.lawson_iters;
    doc.strategy = args.lawson_iters > 0 ? "aaa+lawson" : "aaa";
    fill_function_fields(doc, r);

    if (const auto nodes = detect_interpolation_nodes(r, args.omega)) {
        const EquioscillationReport report =
            local_error_maxima(r, args.omega, *nodes);
        doc.interp_nodes = nodes->values();
        doc.eta = report.eta;
        doc.eps = report.eps;
        doc.delta = report.delta;
        doc.uniform_error = report.uniform_error;
        if (report.alternating) {
            const auto [lower, upper] = sandwich(report);
            doc.lower_bound = lower;
            doc.upper_bound = upper;
            doc.converged = true;
        }
    } else {
        double worst = 0.0;
        for (const double x : tests.nodes)
            worst = std::max(worst, std::abs(eval_ix(r, x) -
                                             std::polar(1.0, args.omega * x)));
        doc.uniform_error = worst;
    }

    if (args.trace) {
        std::ostringstream csv;
        csv << "iter,error\n";
        for (std::size_t j = 0; j < state.error_history.size(); ++j)
            csv << j << ',' << fmt(state.error_history[j]) << '\n';
        write_text(*args.trace, csv.str());
    }
    emit(args.out, to_json(doc).dump(2) + "\n");
    return kExitOk;
}

struct SweepArgs {
    std::string preset;
    std::optional<std::string> out;
};

int run_sweep(const SweepArgs& args) {
    std::ostringstream csv;
    csv << "n,omega,method,error,delta,iterations,seconds\n";

    const auto timed_best = [&csv](int n, double omega) {
        const auto started = std::chrono::steady_clock::now();
        BestApproxConfig config;
        config.n = n;
        config.omega = omega;
        const BestApproxResult result = compute_best(config);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          started)
                .count();
        csv << n << ',' << fmt(omega) << ",combined,"
            << fmt(result.report.uniform_error) << ','
            << fmt(result.report.delta) << ',' << result.iterations_used << ','
            << fmt(seconds) << '\n';
    };

    const auto timed_aaa = [&csv](int n, double omega, bool adaptive) {
        const auto started = std::chrono::steady_clock::now();
        const TestNodeSet tests = adaptive ? adaptive_test_nodes(omega, n, 3)
                                           : TestNodeSet::equispaced(4900);
        const BarycentricRational r = aaa(omega, tests, n);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          started)
                .count();
        const TestNodeSet dense = TestNodeSet::equispaced(10000);
        double err = 0.0;
        for (const double x : dense.nodes)
            err = std::max(err,
                           std::abs(eval_ix(r, x) - std::polar(1.0, omega * x)));
        csv << n << ',' << fmt(omega) << ','
            << (adaptive ? "aaa-adaptive" : "aaa-4900") << ',' << fmt(err)
            << ",,0," << fmt(seconds) << '\n';
    };

    const std::vector<double> n32 = {95.48, 91.35, 84.16, 77.86,
                                     72.19, 67.03, 62.29};
    const std::vector<double> n256 = {797.18, 791.45, 780.93, 771.16,
                                      761.89, 753.01, 744.44};
    if (args.preset == "table2-n32") {
        for (const double omega : n32) timed_best(32, omega);
    } else if (args.preset == "table2-n256") {
        for (const double omega : n256) timed_best(256, omega);
    } else if (args.preset == "table3") {
        for (const double omega : n32) {
            timed_aaa(32, omega, false);
            timed_aaa(32, omega, true);
        }
    } else if (args.preset == "omega-grid") {
        for (int p = 1; p <= 12; ++p)
            timed_best(8, omega_auto(8, std::pow(10.0, -p)));
    } else {
        throw DomainError("unknown preset " + args.preset);
    }
    emit(args.out, csv.str());
    return kExitOk;
}

struct EvalArgs {
    std::string approx;
    std::optional<std::string> points;
    int grid = 0;
    std::optional<std::string> out;
};

int run_eval(const EvalArgs& args) {
    const ApproximantDocument doc = document_from_json(load_json(args.approx));
    const BarycentricRational r = rational_from_document(doc);

    std::vector<double> xs;
    if (args.points) {
        std::ifstream in(*args.points);
        if (!in) throw DomainError("cannot open " + *args.points);
        std::string line;
        while (std::getline(in, line)) {
            try {
                std::size_t pos = 0;
                const double x = std::stod(line, &pos);
                xs.push_back(x);
            } catch (const std::exception&) {
                // tolerate a header line
            }
        }
    } else {
        xs = TestNodeSet::equispaced(args.grid).nodes;
    }

    std::ostringstream csv;
    csv << "x,re,im,abs_err,phase_err\n";
    for (const double x : xs) {
        const cplx value = eval_ix(r, x);
        const double abs_err = std::abs(value - std::polar(1.0, doc.omega * x));
        csv << fmt(x) << ',' << fmt(value.real()) << ',' << fmt(value.imag())
            << ',' << fmt(abs_err) << ','
            << fmt(phase_error(r, doc.omega, x)) << '\n';
    }
    emit(args.out, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unitary rational best approximation of e^{i omega x} on "
                 "i[-1, 1]"};
    app.require_subcommand(1);

    BestArgs best_args;
    std::string out_path, trace_path, seed_path;
    CLI::App* best = app.add_subcommand(
        "best", "compute the unitary best approximant by corrected "
                "rational interpolation");
    best->add_option("--n", best_args.n, "degree")->required();
    CLI::Option* opt_omega =
        best->add_option("--omega", best_args.omega, "frequency");
    CLI::Option* opt_eps = best->add_option(
        "--eps", best_args.eps, "target accuracy; the frequency is estimated");
    opt_omega->excludes(opt_eps);
    opt_eps->excludes(opt_omega);
    best->add_option("--tol-delta", best_args.tol_delta,
                     "error in uniformity tolerance");
    best->add_option("--max-iter", best_args.max_iter, "iteration cap");
    best->add_option("--strategy", best_args.strategy, "node correction policy")
        ->check(CLI::IsMember({"combined", "brasil", "maehly"}));
    CLI::Option* best_out =
        best->add_option("--out", out_path, "write the approximant JSON here");
    CLI::Option* best_trace =
        best->add_option("--trace", trace_path, "write per-iteration CSV here");
    CLI::Option* best_seed =
        best->add_option("--seed-nodes", seed_path,
                         "JSON file with start nodes (array or document)");

    EstimateArgs estimate_args;
    CLI::App* estimate = app.add_subcommand(
        "estimate-omega", "frequency reaching a target accuracy");
    estimate->add_option("--n", estimate_args.n, "degree")->required();
    estimate->add_option("--eps", estimate_args.eps, "target accuracy")
        ->required();
    estimate->add_option("--method", estimate_args.method, "estimate flavor")
        ->check(CLI::IsMember({"auto", "experimental", "asymptotic"}));

    AaaArgs aaa_args;
    std::string aaa_out, aaa_trace;
    CLI::App* aaa_cmd = app.add_subcommand(
        "aaa", "AAA (optionally with Lawson refinement) cross-check");
    aaa_cmd->add_option("--n", aaa_args.n, "degree")->required();
    aaa_cmd->add_option("--omega", aaa_args.omega, "frequency")->required();
    aaa_cmd->add_option("--test-nodes", aaa_args.test_nodes,
                        "test node count or 'adaptive'")
        ->check([](const std::string& s) -> std::string {
            if (s == "adaptive") return {};
            char* end = nullptr;
            (void)std::strtol(s.c_str(), &end, 10);
            if (end != s.c_str() && end != nullptr && *end == '\0') return {};
            return "expects an integer or 'adaptive'";
        });
    aaa_cmd->add_option("--lawson", aaa_args.lawson_iters,
                        "Lawson iteration count");
    aaa_cmd->add_option("--rounds", aaa_args.rounds,
                        "adaptive refinement rounds");
    CLI::Option* aaa_out_opt =
        aaa_cmd->add_option("--out", aaa_out, "write the approximant JSON here");
    CLI::Option* aaa_trace_opt = aaa_cmd->add_option(
        "--trace", aaa_trace, "write the Lawson error history CSV here");

    SweepArgs sweep_args;
    std::string sweep_out;
    CLI::App* sweep = app.add_subcommand("sweep", "reproduce a result table");
    sweep->add_option("--preset", sweep_args.preset, "which table")
        ->required()
        ->check(CLI::IsMember(
            {"table2-n32", "table2-n256", "table3", "omega-grid"}));
    CLI::Option* sweep_out_opt =
        sweep->add_option("--out", sweep_out, "write the CSV here");

    EvalArgs eval_args;
    std::string eval_out;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "evaluate a stored approximant");
    eval_cmd->add_option("--approx", eval_args.approx, "approximant JSON file")
        ->required();
    CLI::Option* opt_points = eval_cmd->add_option(
        "--points", eval_args.points, "CSV/plain file with abscissae");
    CLI::Option* opt_grid = eval_cmd->add_option(
        "--grid", eval_args.grid, "evaluate on this many equispaced points");
    opt_points->excludes(opt_grid);
    opt_grid->excludes(opt_points);
    CLI::Option* eval_out_opt =
        eval_cmd->add_option("--out", eval_out, "write the CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(best)) {
            best_args.has_omega = opt_omega->count() > 0;
            best_args.has_eps = opt_eps->count() > 0;
            if (!best_args.has_omega && !best_args.has_eps) {
                std::cerr << "best: exactly one of --omega or --eps is "
                             "required\n";
                return kExitUsage;
            }
            if (best_out->count() > 0) best_args.out = out_path;
            if (best_trace->count() > 0) best_args.trace = trace_path;
            if (best_seed->count() > 0) best_args.seed = seed_path;
            return run_best(best_args);
        }
        if (app.got_subcommand(estimate)) return run_estimate(estimate_args);
        if (app.got_subcommand(aaa_cmd)) {
            if (aaa_out_opt->count() > 0) aaa_args.out = aaa_out;
            if (aaa_trace_opt->count() > 0) aaa_args.trace = aaa_trace;
            return run_aaa(aaa_args);
        }
        if (app.got_subcommand(sweep)) {
            if (sweep_out_opt->count() > 0) sweep_args.out = sweep_out;
            return run_sweep(sweep_args);
        }
        if (app.got_subcommand(eval_cmd)) {
            if (opt_points->count() == 0 && opt_grid->count() == 0) {
                std::cerr << "eval: exactly one of --points or --grid is "
                             "required\n";
                return kExitUsage;
            }
            if (eval_out_opt->count() > 0) eval_args.out = eval_out;
            return run_eval(eval_args);
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
