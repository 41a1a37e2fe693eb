// cubefun: analysis of real-valued functions on the Boolean hypercube.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubefun/bounds.hpp"
#include "cubefun/constructs.hpp"
#include "cubefun/cube_function.hpp"
#include "cubefun/errors.hpp"
#include "cubefun/influence.hpp"
#include "cubefun/io.hpp"
#include "cubefun/level_profile.hpp"
#include "cubefun/operators.hpp"
#include "cubefun/unipoly.hpp"

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string input;
    std::string which = "all";
    bool as_json = false;
    bool as_csv = false;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    int d = 0;
    int n = 0;
    int trials = 1000;
    double alpha = 0.5;
    double p = 1.0;
};

void print_report(const cubefun::BoundReport& rep, const Options& opt) {
    if (opt.as_json) {
        std::cout << cubefun::report_to_json(rep).dump() << "\n";
        return;
    }
    if (opt.as_csv) {
        std::printf("%s,%.12g,%.12g,%.12g,%s\n", rep.name.c_str(), rep.measured, rep.bound,
                    rep.slack, rep.pass ? "pass" : "FAIL");
        return;
    }
    if (!rep.applicable) {
        std::printf("%-34s skipped (%s)\n", rep.name.c_str(), rep.note.c_str());
        return;
    }
    std::printf("%-34s measured %.9g  bound %.9g  slack %.3g  %s\n", rep.name.c_str(),
                rep.measured, rep.bound, rep.slack, rep.pass ? "pass" : "FAIL");
}

bool wants(const Options& opt, const std::string& name) {
    return opt.which == "all" || opt.which.find(name) != std::string::npos;
}

int cmd_analyze(const Options& opt) {
    const cubefun::CubeFunction f = cubefun::load_function(opt.input);
    const cubefun::PropertyFlags flags = cubefun::classify(f);
    json j;
    j["n"] = f.n;
    j["degree"] = flags.degree;
    j["boolean"] = flags.boolean_valued;
    j["bounded_by_one"] = flags.bounded_by_one;
    j["homogeneous"] = flags.homogeneous;
    j["symmetric"] = flags.symmetric;
    j["monotone"] = flags.monotone;
    j["sup_norm"] = flags.sup_norm;
    j["influence_1"] = cubefun::total_influence_p(f, 1.0);
    j["influence_1.5"] = cubefun::total_influence_p(f, 1.5);
    j["influence_2"] = cubefun::total_influence_p(f, 2.0);
    j["max_sensitivity"] = cubefun::sensitivity_field(f).max();
    j["variance"] = cubefun::variance_p(f, 2.0);
    j["first_level_sum"] = f.fourier().first_level_sum();
    if (opt.as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : j.items()) {
            std::cout << key << ": " << value.dump() << "\n";
        }
    }
    return 0;
}

int cmd_check(const Options& opt) {
    const cubefun::CubeFunction f = cubefun::load_function(opt.input);
    const cubefun::PropertyFlags flags = cubefun::classify(f);
    std::vector<cubefun::BoundReport> reports;

    if (wants(opt, "general")) {
        for (auto& rep : cubefun::check_general(f)) reports.push_back(std::move(rep));
    }
    if (wants(opt, "interpolated")) {
        reports.push_back(cubefun::check_interpolated(f, opt.p));
    }
    if (wants(opt, "transitive")) {
        for (auto& rep : cubefun::check_transitive(f, opt.p)) reports.push_back(std::move(rep));
    }
    if (wants(opt, "noise")) {
        reports.push_back(cubefun::check_noise_contraction(f, opt.alpha));
    }
    if (wants(opt, "homogeneous")) {
        reports.push_back(cubefun::check_homogeneous_route(f));
    }
    if (wants(opt, "gopalan")) {
        reports.push_back(cubefun::gopalan_servedio_report(f));
    }
    if (wants(opt, "symmetric")) {
        cubefun::BoundReport rep;
        rep.name = "symmetric_influence_vs_degree";
        if (flags.symmetric) {
            const auto sym = cubefun::symmetric_bound_report(cubefun::profile_of(f));
            rep = cubefun::BoundReport::make(rep.name, sym.influence, sym.reference);
            rep.context["degree"] = sym.degree;
            rep.context["sup_norm_p"] = sym.sup_norm_p;
            rep.note = sym.note;
        } else {
            rep.applicable = false;
            rep.pass = true;
            rep.note = "function is not symmetric";
        }
        reports.push_back(std::move(rep));
    }

    bool all_pass = true;
    for (const auto& rep : reports) {
        print_report(rep, opt);
        if (rep.applicable && !rep.pass) all_pass = false;
    }
    return all_pass ? 0 : kExitFail;
}

int cmd_construct(const Options& opt) {
    if (opt.which == "chebyshev_symmetric") {
        const auto lp = cubefun::chebyshev_symmetric(opt.d, opt.n);
        std::cout << cubefun::profile_to_json(lp).dump() << "\n";
        return 0;
    }
    const int param = opt.which == "majority" ? opt.n : opt.d;
    const cubefun::CubeFunction f = cubefun::named_example(opt.which, param);
    std::cout << cubefun::function_to_json(f, opt.as_json).dump() << "\n";
    return 0;
}

int cmd_estimate(const Options& opt) {
    if (opt.which == "K") {
        const auto est = cubefun::estimate_k(opt.d);
        std::printf("K_%d >= %.9f (lp %.9f, grid %d, %s)\n", opt.d, est.value, est.lp_value,
                    est.grid_size, est.certified ? "certified" : "uncertified");
        return est.certified ? 0 : kExitFail;
    }
    if (opt.which == "M") {
        const auto est = cubefun::estimate_m(opt.d);
        std::printf("M_%d >= %.9f (lp %.9f, construction %.9f, bound %.9f)\n", opt.d, est.value,
                    est.lp_value, est.context.at("klurman_reference"),
                    est.context.at("klurman_bound"));
        return 0;
    }
    if (opt.which == "C") {
        const int n = opt.n > 0 ? opt.n : std::min(10, std::max(opt.d, 1) + 2);
        const double est = cubefun::estimate_c(opt.d, opt.alpha, n, opt.trials, opt.seed);
        std::printf("C_{%d,%g} >= %.9f (n=%d, trials=%d, seed=%llu)\n", opt.d, opt.alpha, est, n,
                    opt.trials, static_cast<unsigned long long>(opt.seed));
        return 0;
    }
    throw cubefun::ParamError("estimate: --which must be K, M or C");
}

int cmd_experiment(const Options& opt) {
    if (opt.which == "cheb_limit") {
        std::printf("d,n,influence,gap\n");
        const std::vector<int> ds = opt.d > 0 ? std::vector<int>{opt.d} : std::vector<int>{3, 5, 7};
        for (int d : ds) {
            if (d < 1 || d % 2 == 0) throw cubefun::ParamError("cheb_limit: odd d required");
            for (long long n : {static_cast<long long>(d) * d + 1, 1000ll, 10000ll, 100000ll}) {
                const double inf =
                    cubefun::symmetric_total_influence(cubefun::chebyshev_symmetric(d, n));
                std::printf("%d,%lld,%.9f,%.9f\n", d, n, inf, d - inf);
            }
        }
        return 0;
    }
    if (opt.which == "monotone_asymptotics") {
        std::printf("d,derivative_at_zero,ratio,limit\n");
        for (int d : {2, 4, 8, 16, 32, 64, 128, 200}) {
            const double r = cubefun::klurman_reference(d);
            std::printf("%d,%.9f,%.9f,%.9f\n", d, r, r / d, 1.0 / (2.0 * M_PI));
        }
        return 0;
    }
    if (opt.which == "kd_table") {
        std::printf("d,estimate,certified\n");
        for (int d = 1; d <= 4; ++d) {
            const auto est = cubefun::estimate_k(d);
            std::printf("%d,%.9f,%s\n", d, est.value, est.certified ? "yes" : "no");
        }
        return 0;
    }
    if (opt.which == "c_estimate") {
        const int d = opt.d > 0 ? opt.d : 2;
        const int n = opt.n > 0 ? opt.n : std::min(10, d + 2);
        const double est = cubefun::estimate_c(d, opt.alpha, n, opt.trials, opt.seed);
        const double cap = std::pow(opt.alpha, -static_cast<double>(std::min(d * d, n)));
        std::printf("d,alpha,estimate,cap\n%d,%g,%.9f,%.9f\n", d, opt.alpha, est, cap);
        return 0;
    }
    throw cubefun::ParamError("experiment: unknown name " + opt.which);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-analytic calculator for functions on the Boolean hypercube"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "function or profile JSON path");
        sub->add_option("--which", opt.which, "selection list or name");
        sub->add_flag("--json", opt.as_json, "machine-readable JSON output");
        sub->add_flag("--csv", opt.as_csv, "CSV output");
        sub->add_option("--seed", opt.seed, "RNG seed (default 42)");
        sub->add_option("--tol", opt.tol, "numeric tolerance");
        sub->add_option("--d", opt.d, "degree parameter");
        sub->add_option("--n", opt.n, "variable count");
        sub->add_option("--trials", opt.trials, "random trials (default 1000)");
        sub->add_option("--alpha", opt.alpha, "noise rate in (0,1]");
        sub->add_option("--p", opt.p, "influence exponent in [1,2]");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "classify a function and print its stats");
    CLI::App* check = app.add_subcommand("check", "run inequality checkers");
    CLI::App* construct = app.add_subcommand("construct", "emit a named example as JSON");
    CLI::App* estimate = app.add_subcommand("estimate", "extremal-constant estimators (K, M, C)");
    CLI::App* experiment = app.add_subcommand("experiment", "reproduce numerical tables as CSV");
    for (CLI::App* sub : {analyze, check, construct, estimate, experiment}) add_common(sub);
    analyze->get_option("--input")->required();
    check->get_option("--input")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(opt);
        if (check->parsed()) return cmd_check(opt);
        if (construct->parsed()) return cmd_construct(opt);
        if (estimate->parsed()) return cmd_estimate(opt);
        if (experiment->parsed()) return cmd_experiment(opt);
    } catch (const cubefun::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const cubefun::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
