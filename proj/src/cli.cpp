#include "nevpick/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nevpick/errors.hpp"

namespace nevpick {

namespace {

InterpolationData prepared(const InterpolationData& data, const RunConfig& cfg) {
    return cfg.backend == Backend::Float ? data.to_backend(Backend::Float) : data;
}

json node_index_map(const PickSystem& sys) { return sys.order; }

json classification_json(const PickSystem& sys, const ClassificationReport& rep, const RationalFunction* w,
                         const SolverConfig& scfg) {
    json labels = json::array();
    for (std::size_t i = 0; i < rep.labels.size(); ++i) {
        const auto& l = rep.labels[i];
        const Outcome o = rep.predicted[i];
        json j = {{"node", l.node},
                  {"input_index", sys.order[l.node]},
                  {"family", to_string(l.family)},
                  {"index", l.index},
                  {"label", l.classified() ? json(l.name()) : json(nullptr)},
                  {"predicted", to_string(o)},
                  {"description", describe(o, sys.nodes[l.node].kind)},
                  {"exact", l.exact},
                  {"threshold", l.threshold}};
        if (w) {
            const PredictionCheck pc = check_prediction(sys, l.node, o, *w, scfg);
            j["verified"] = pc.verified;
            j["margin"] = std::isfinite(pc.margin) ? json(pc.margin) : json(nullptr);
            j["detail"] = pc.detail;
        } else {
            j["verified"] = nullptr;
            j["margin"] = nullptr;
        }
        labels.push_back(j);
    }
    return labels;
}

std::string witness_text(const std::vector<cplx>& pts) {
    std::ostringstream os;
    for (std::size_t k = 0; k < pts.size(); ++k) os << (k ? ", " : "") << pts[k].real() << (pts[k].imag() < 0 ? "" : "+") << pts[k].imag() << "i";
    return os.str();
}

json read_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError("cannot parse " + source + " as JSON: " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return read_json_text(ss.str(), path);
}

// An inline JSON value or a path to a file holding one.
json read_json_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return read_json_text(arg, "inline value");
    return read_json_file(arg);
}

RationalFunction function_arg(const json& j) {
    if (j.is_object() && j.contains("type")) {
        const Parameter p = parse_parameter(j);
        if (p.is_infinity()) throw InputError("w = inf is not a rational function");
        return p.kind() == Parameter::Kind::Constant ? RationalFunction(p.value()) : p.function();
    }
    return parse_rational(j);
}

}  // namespace

json cmd_pick(const InterpolationData& data, const RunConfig& cfg) {
    const PickSystem sys = build_system(prepared(data, cfg), cfg.rank_tol);
    json j = to_json(sys);
    const LyapunovReport ly = check_lyapunov(sys);
    j["lyapunov_residual"] = {{"zero", ly.zero}, {"exact", ly.exact}, {"max", ly.max_residual}};
    j["backend"] = cfg.backend == Backend::Exact ? "exact" : "float";
    return j;
}

json cmd_solve(const InterpolationData& data, const RunConfig& cfg) {
    const SolverConfig scfg = cfg.solver();
    const SolutionBundle b = solve(prepared(data, cfg), scfg);
    json j = {{"kappa", b.kappa},
              {"problem", b.problem},
              {"singular", b.system.singular()},
              {"order", node_index_map(b.system)},
              {"backend", cfg.backend == Backend::Exact ? "exact" : "float"}};
    if (b.theta) j["theta"] = to_json(*b.theta);
    if (b.w) j["w"] = to_json(*b.w);
    if (b.verification) j["verification"] = to_json(*b.verification);
    return j;
}

json cmd_apply(const InterpolationData& data, const Parameter& phi, const RunConfig& cfg) {
    const NevanlinnaCheck nev = is_nevanlinna(phi);
    if (!nev.ok)
        throw InvalidParameter("parameter " + phi.to_string() + " is not a Nevanlinna function; kernel section at " +
                               witness_text(nev.witness) + " has a negative eigenvalue");
    const SolverConfig scfg = cfg.solver();
    const PickSystem sys = build_system(prepared(data, cfg), cfg.rank_tol);
    if (sys.singular()) throw InputError("the Pick matrix is singular; use solve for the unique solution");
    const RationalMatrix2x2 theta = build_theta(sys);
    const ClassificationReport rep = classify_all(sys, phi, scfg);

    json j = {{"parameter", to_json(phi)}, {"kappa", sys.kappa}, {"order", node_index_map(sys)}};
    std::optional<RationalFunction> w;
    try {
        w = apply_lft(theta, phi);
    } catch (const DegenerateTransform&) {
        j["w"] = "inf";
    }
    if (w) j["w"] = to_json(*w);
    j["classification"] = classification_json(sys, rep, w ? &*w : nullptr, scfg);
    j["all_classified"] = rep.all_classified;
    j["k"] = rep.k;
    j["class_index"] = rep.class_index;
    j["problem1"] = rep.problem1;
    j["problem2"] = rep.problem2;
    if (w) {
        const VerificationReport v = verify_candidate(sys, *w, scfg);
        j["verification"] = to_json(v);
        j["class_confirmed"] = rep.all_classified && v.kernel_negatives == rep.class_index;
    }
    return j;
}

json cmd_verify(const InterpolationData& data, const RationalFunction& w, const RunConfig& cfg) {
    const SolverConfig scfg = cfg.solver();
    const PickSystem sys = build_system(prepared(data, cfg), cfg.rank_tol);
    const RationalFunction wf = cfg.backend == Backend::Float ? w.to_backend(Backend::Float) : w;
    json j = to_json(verify_candidate(sys, wf, scfg));
    j["w"] = to_json(wf);
    j["order"] = node_index_map(sys);
    json targets = json::array();
    for (const auto& n : sys.nodes) {
        if (n.is_regular())
            targets.push_back({{"x", to_json(n.x)}, {"w", to_json(n.w)}, {"gamma", to_json(n.gamma)}});
        else
            targets.push_back({{"x", to_json(n.x)}, {"xi", to_json(n.xi)}});
    }
    j["targets"] = targets;
    return j;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boundary Nevanlinna-Pick interpolation for generalized Nevanlinna functions", "nevpick"};
    app.require_subcommand(1);
    std::string problem_path, param_arg, config_path, out_path;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--problem", problem_path, "problem JSON file (stdin when omitted)");
        sub->add_option("--config", config_path, "run configuration JSON file");
        sub->add_option("--out", out_path, "output file (stdout when omitted)");
    };
    CLI::App* pick = app.add_subcommand("pick", "pick matrix, inertia and derived quantities");
    CLI::App* solve_cmd = app.add_subcommand("solve", "resolvent matrix or the unique degenerate solution");
    CLI::App* apply = app.add_subcommand("apply", "apply a parameter and classify the result");
    CLI::App* verify = app.add_subcommand("verify", "check a candidate w against the data");
    for (CLI::App* s : {pick, solve_cmd, apply, verify}) add_common(s);
    apply->add_option("--param", param_arg, "parameter JSON, inline or as a file")->required();
    verify->add_option("--param,--w", param_arg, "candidate w JSON, inline or as a file")->required();

    std::vector<const char*> argv{"nevpick"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : parse_run_config(read_json_file(config_path));
        if (!out_path.empty()) cfg.out = out_path;
        json problem;
        if (problem_path.empty()) {
            std::stringstream ss;
            ss << in.rdbuf();
            problem = read_json_text(ss.str(), "stdin");
        } else {
            problem = read_json_file(problem_path);
        }
        const InterpolationData data = parse_problem(problem);

        json result;
        if (*pick)
            result = cmd_pick(data, cfg);
        else if (*solve_cmd)
            result = cmd_solve(data, cfg);
        else if (*apply)
            result = cmd_apply(data, parse_parameter(read_json_arg(param_arg)), cfg);
        else
            result = cmd_verify(data, function_arg(read_json_arg(param_arg)), cfg);

        if (cfg.out.empty()) {
            out << result.dump(2) << "\n";
        } else {
            std::ofstream f(cfg.out);
            if (!f) throw InputError("cannot write " + cfg.out);
            f << result.dump(2) << "\n";
        }
        return 0;
    } catch (const ValidationError& e) {
        err << json{{"error", e.what()}, {"exit", 3}}.dump() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << json{{"error", e.what()}, {"exit", 2}}.dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << json{{"error", std::string("schema: ") + e.what()}, {"exit", 2}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        // precondition failures inside the pipeline, e.g. a degenerate transform
        err << json{{"error", e.what()}, {"exit", 2}}.dump() << "\n";
        return 2;
    }
}

}  // namespace nevpick
