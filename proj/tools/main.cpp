// Command-line front end: simulate, trace, sweep, disorder, triples, verify.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spinchain/evolve.hpp"
#include "spinchain/experiments.hpp"
#include "spinchain/fidelity.hpp"
#include "spinchain/io.hpp"
#include "spinchain/kernels.hpp"
#include "spinchain/linalg.hpp"
#include "spinchain/targets.hpp"
#include "spinchain/verify.hpp"

namespace {

using namespace spinchain;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericFailure = 3;

struct CommandArgs {
    int n = 2;
    int m = 2;
    int k = 8;
    int l = 0;
    bool l_set = false;
    double gamma = 0.0;
    bool gamma_set = false;
    std::string varphi, omega, phi;
    std::string t_final;
    int steps = 0;
    int disorder_steps = 0;
    int samples = 300;
    int threads = 0;
    double tol = 1e-8;
    std::string out;
    std::string format = "csv";
    // disorder controls
    std::string mode = "all";
    double delta_min = -0.10;
    double delta_max = 0.10;
    double delta_step = 0.01;
    // triples
    int l_max = 17;
};

void add_chain_options(CLI::App* cmd, CommandArgs& a, bool with_angles) {
    cmd->add_option("--n", a.n, "Number of qubits (2 or 3)")->check(CLI::IsMember({2, 3}));
    cmd->add_option("--m", a.m, "Static field index: alpha = m*A");
    cmd->add_option("--k", a.k, "Ising coupling index: beta = k*A");
    cmd->add_option("--l", a.l, "Resonance index (three qubits); implies J = sqrt(l^2-k^2)*A")
        ->each([&a](const std::string&) { a.l_set = true; });
    cmd->add_option("--gamma", a.gamma, "Exchange coupling J = gamma*A (three qubits)")
        ->each([&a](const std::string&) { a.gamma_set = true; });
    if (with_angles) {
        cmd->add_option("--varphi", a.varphi, "Rotation angle (radians or pi-expressions like pi/2)")
            ->required();
        cmd->add_option("--omega", a.omega, "Phase angle omega")->required();
        cmd->add_option("--phi", a.phi, "Drive phase phi")->required();
    }
    cmd->add_option("--steps", a.steps, "Integrator steps (default: 4096 per gate time)");
    cmd->add_option("--threads", a.threads, "Worker thread cap (default: hardware)");
    cmd->set_config("--config", "", "Flat key=value config file; flags override file values");
    cmd->allow_config_extras(false);
}

ChainParams make_params(const CommandArgs& a, bool with_angles) {
    ChainParams p;
    p.n_qubits = a.n;
    p.m = a.m;
    p.k = a.k;
    if (a.l_set) p.l = a.l;
    if (a.gamma_set) p.gamma = a.gamma;
    if (a.n == 3 && !a.l_set && !a.gamma_set)
        throw ConfigError("three-qubit runs need --l (or --gamma)");
    if (with_angles)
        p.angles = GateAngles::canonical(io::parse_angle(a.varphi), io::parse_angle(a.omega),
                                         io::parse_angle(a.phi));
    validate_params(p);
    return p;
}

double resolve_t_final(const CommandArgs& a, const char* fallback) {
    return io::parse_angle(a.t_final.empty() ? fallback : a.t_final);
}

int resolve_steps(const CommandArgs& a, double t_final) {
    return a.steps > 0 ? a.steps : default_steps(t_final);
}

void print_warnings(const ChainParams& p) {
    for (const std::string& w : validate_rwa(p)) std::cerr << "warning: " << w << "\n";
}

void append_chain_metadata(io::Metadata& meta, const ChainParams& p) {
    meta.emplace_back("n", std::to_string(p.n_qubits));
    meta.emplace_back("m", std::to_string(p.m));
    meta.emplace_back("k", std::to_string(p.k));
    if (p.l) meta.emplace_back("l", std::to_string(*p.l));
    if (p.gamma) meta.emplace_back("gamma", io::format_double(*p.gamma));
    if (p.angles) {
        meta.emplace_back("varphi", io::format_double(p.angles->varphi));
        meta.emplace_back("omega", io::format_double(p.angles->omega));
        meta.emplace_back("phi", io::format_double(p.angles->phi));
    }
    meta.emplace_back("kernels", kernels::backend_name(kernels::active_backend()));
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json")
        throw ConfigError("--format must be csv or json, got '" + format + "'");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open output file '" + path + "'");
    return os;
}

template <typename WriteFn>
void emit(const std::string& out, WriteFn&& write) {
    if (out.empty()) {
        write(std::cout);
    } else {
        std::ofstream os = open_out(out);
        write(os);
    }
}

int cmd_simulate(const CommandArgs& a) {
    const ChainParams p = make_params(a, true);
    print_warnings(p);
    const double t_final = resolve_t_final(a, "pi");
    const int steps = resolve_steps(a, t_final);

    const PropagatorResult r = propagate(p, t_final, steps);
    const TargetGate target = barenco(p.n_qubits, *p.angles);
    const double f = operator_fidelity(r.u, target.matrix);

    const int dim = r.u.dim();
    std::printf("propagator U(t = %s), %d steps, unitarity defect %.3e\n",
                io::format_double(t_final).c_str(), r.steps, r.unitarity_defect);
    std::printf("entries (re, im):\n");
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
            std::printf("  (%+.6f,%+.6f)", r.u(i, j).real(), r.u(i, j).imag());
        std::printf("\n");
    }
    std::printf("magnitude / phase (units of pi):\n");
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double mag = std::abs(r.u(i, j));
            const double ph = mag > 1e-12 ? std::arg(r.u(i, j)) / kGateTime : 0.0;
            std::printf("  %.6f@%+.4f", mag, ph);
        }
        std::printf("\n");
    }
    std::printf("fidelity vs %s: %.15g\n", target.label.c_str(), f);
    return 0;
}

int cmd_trace(const CommandArgs& a) {
    check_format(a.format);
    const ChainParams p = make_params(a, true);
    print_warnings(p);
    const double t_final = resolve_t_final(a, "1.5pi");
    const int steps = resolve_steps(a, t_final);

    const TargetGate target = barenco(p.n_qubits, *p.angles);
    const FidelityTrace trace = fidelity_trace(p, target, t_final, a.samples, steps);

    io::Metadata meta{{"command", "trace"}};
    append_chain_metadata(meta, p);
    meta.emplace_back("t_final", io::format_double(t_final));
    meta.emplace_back("steps", std::to_string(steps));
    meta.emplace_back("samples", std::to_string(a.samples));

    emit(a.out, [&](std::ostream& os) {
        if (a.format == "csv")
            io::write_trace_csv(os, trace, meta);
        else
            io::write_trace_json(os, trace, meta);
    });
    return 0;
}

int cmd_sweep(const CommandArgs& a) {
    check_format(a.format);
    const ChainParams base = make_params(a, false);
    print_warnings(base);
    const double t_final = resolve_t_final(a, "1.5pi");
    const int steps = resolve_steps(a, t_final);

    SweepOptions opts;
    opts.steps = steps;
    opts.threads = a.threads;
    const SweepResult sweep = average_fidelity_trace(base, t_final, a.samples, opts);

    io::Metadata meta{{"command", "sweep"}};
    append_chain_metadata(meta, base);
    meta.emplace_back("t_final", io::format_double(t_final));
    meta.emplace_back("steps", std::to_string(steps));
    meta.emplace_back("samples", std::to_string(a.samples));
    meta.emplace_back("triples", std::to_string(sweep.triples.size()));

    emit(a.out, [&](std::ostream& os) {
        if (a.format == "csv")
            io::write_sweep_csv(os, sweep, meta);
        else
            io::write_sweep_json(os, sweep, meta);
    });
    return 0;
}

int cmd_disorder(const CommandArgs& a) {
    check_format(a.format);
    CommandArgs b = a;
    b.n = 3;
    const ChainParams base = make_params(b, false);
    print_warnings(base);
    if (a.out.empty()) throw ConfigError("disorder writes two files; --out is required");
    if (a.delta_step <= 0.0) throw ConfigError("--delta-step must be positive");

    std::vector<double> deltas;
    for (double d = a.delta_min; d <= a.delta_max + 1e-12; d += a.delta_step)
        deltas.push_back(std::abs(d) < 1e-12 ? 0.0 : d);

    std::vector<DisorderMode> modes;
    if (a.mode == "all")
        modes = {DisorderMode::kMOnly, DisorderMode::kKOnly, DisorderMode::kLOnly,
                 DisorderMode::kJoint};
    else if (a.mode == "m")
        modes = {DisorderMode::kMOnly};
    else if (a.mode == "k")
        modes = {DisorderMode::kKOnly};
    else if (a.mode == "l")
        modes = {DisorderMode::kLOnly};
    else if (a.mode == "joint")
        modes = {DisorderMode::kJoint};
    else
        throw ConfigError("--mode must be one of all, m, k, l, joint");

    const int steps = a.steps > 0 ? a.steps : default_steps(kGateTime);
    SweepOptions opts;
    opts.steps = steps;
    opts.threads = a.threads;

    std::vector<DisorderSweepResult> runs;
    for (DisorderMode mode : modes)
        runs.push_back(disorder_sweep(base, DisorderScenario{mode, deltas}, opts));

    io::Metadata meta{{"command", "disorder"}};
    append_chain_metadata(meta, base);
    meta.emplace_back("mode", a.mode);
    meta.emplace_back("delta_min", io::format_double(a.delta_min));
    meta.emplace_back("delta_max", io::format_double(a.delta_max));
    meta.emplace_back("delta_step", io::format_double(a.delta_step));
    meta.emplace_back("steps", std::to_string(steps));
    meta.emplace_back("t_final", io::format_double(kGateTime));

    {
        std::ofstream os = open_out(a.out);
        if (a.format == "csv")
            io::write_disorder_csv(os, runs, meta);
        else
            io::write_disorder_json(os, runs, meta);
    }
    {
        std::ofstream os = open_out(io::companion_mean_path(a.out));
        if (a.format == "csv")
            io::write_disorder_mean_csv(os, runs, meta);
        else
            io::write_disorder_mean_json(os, runs, meta);
    }
    return 0;
}

int cmd_triples(const CommandArgs& a) {
    const auto triples = find_resonant_triples(a.l_max);
    std::printf("%6s %6s %6s\n", "k", "gamma", "l");
    for (const ResonantTriple& t : triples) std::printf("%6d %6d %6d\n", t.k, t.gamma, t.l);
    std::printf("%zu resonant triples with l <= %d\n", triples.size(), a.l_max);
    return 0;
}

int cmd_verify(const CommandArgs& a) {
    verify::Options opts;
    opts.threads = a.threads;
    if (a.steps > 0) opts.steps = a.steps;
    if (a.disorder_steps > 0) opts.disorder_steps = a.disorder_steps;
    const auto results = verify::run_acceptance(opts, &std::cout);
    return verify::all_passed(results) ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Driven spin-chain simulator for controlled-gate protocols"};
    app.require_subcommand(1);

    CommandArgs sim_args, trace_args, sweep_args, dis_args, tri_args, ver_args;

    CLI::App* sim = app.add_subcommand("simulate", "Propagate one parameter set and score the gate");
    add_chain_options(sim, sim_args, true);
    sim->add_option("--t-final", sim_args.t_final, "Evolution time (default: pi, the gate time)");

    CLI::App* trace = app.add_subcommand("trace", "Write a fidelity-vs-time trace");
    add_chain_options(trace, trace_args, true);
    trace->add_option("--t-final", trace_args.t_final, "Evolution time (default: 1.5pi)");
    trace->add_option("--samples", trace_args.samples, "Samples over (0, t_final] (default 300)");
    trace->add_option("--out", trace_args.out, "Output path (default: stdout)");
    trace->add_option("--format", trace_args.format, "csv or json");

    CLI::App* sweep = app.add_subcommand("sweep", "Average fidelity trace over the 1100-triple grid");
    add_chain_options(sweep, sweep_args, false);
    sweep->add_option("--t-final", sweep_args.t_final, "Evolution time (default: 1.5pi)");
    sweep->add_option("--samples", sweep_args.samples, "Samples over (0, t_final] (default 300)");
    sweep->add_option("--out", sweep_args.out, "Output path (default: stdout)");
    sweep->add_option("--format", sweep_args.format, "csv or json");

    CLI::App* dis = app.add_subcommand("disorder", "Per-delta fidelity scan at the gate time");
    add_chain_options(dis, dis_args, false);
    dis->add_option("--mode", dis_args.mode, "all, m, k, l or joint (default all)");
    dis->add_option("--delta-min", dis_args.delta_min, "Smallest delta (default -0.10)");
    dis->add_option("--delta-max", dis_args.delta_max, "Largest delta (default 0.10)");
    dis->add_option("--delta-step", dis_args.delta_step, "Delta increment (default 0.01)");
    dis->add_option("--out", dis_args.out, "Output path (companion *_mean file is derived)")
        ->required();
    dis->add_option("--format", dis_args.format, "csv or json");

    CLI::App* tri = app.add_subcommand("triples", "List integer resonance triples k^2+gamma^2=l^2");
    tri->add_option("--l-max", tri_args.l_max, "Largest resonance index to search")->required();

    CLI::App* ver = app.add_subcommand("verify", "Run the built-in acceptance checks");
    ver->add_option("--threads", ver_args.threads, "Worker thread cap (default: hardware)");
    ver->add_option("--steps", ver_args.steps, "Step density per gate time (default 4096)");
    ver->add_option("--disorder-steps", ver_args.disorder_steps,
                    "Step density for the disorder criterion (default 1024)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_args);
        if (trace->parsed()) return cmd_trace(trace_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (dis->parsed()) return cmd_disorder(dis_args);
        if (tri->parsed()) return cmd_triples(tri_args);
        if (ver->parsed()) return cmd_verify(ver_args);
    } catch (const spinchain::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const spinchain::SimulationError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumericFailure;
    }
    return 0;
}
