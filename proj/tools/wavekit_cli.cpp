// wavekit: build, verify and sample exact solutions of the generalized NNV system.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "wavekit/scenario.hpp"

namespace {

using namespace wavekit;

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIo = 3 };

struct CommonArgs {
    double a = 1.0, b = 1.0, c = 0.0, d = 0.0;
    std::vector<double> grid_x{-5.0, 5.0, 11.0};
    std::vector<double> grid_y{-5.0, 5.0, 11.0};
    std::vector<double> times{0.0};
    std::vector<double> box;
    std::size_t points = 50;
    std::uint64_t seed = 1;
    bool require_real = false;
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--a", args.a, "coefficient a")->capture_default_str();
    cmd->add_option("--b", args.b, "coefficient b")->capture_default_str();
    cmd->add_option("--c", args.c, "coefficient c")->capture_default_str();
    cmd->add_option("--d", args.d, "coefficient d")->capture_default_str();
    cmd->add_option("--grid-x", args.grid_x, "min,max,count")->delimiter(',')->expected(3);
    cmd->add_option("--grid-y", args.grid_y, "min,max,count")->delimiter(',')->expected(3);
    cmd->add_option("--t", args.times, "grid times")->delimiter(',');
    cmd->add_option("--box", args.box, "residual sample box lo,hi")->delimiter(',')->expected(2);
    cmd->add_option("--points", args.points, "residual sample points")->capture_default_str();
    cmd->add_option("--seed", args.seed, "sample seed (WAVEKIT_SEED wins when set)");
    cmd->add_flag("--require-real", args.require_real, "fail verification on complex fields");
    cmd->add_option("-o,--out", args.out, "scenario output file (default stdout)");
}

GridAxis to_axis(const std::vector<double>& v, const char* name) {
    const double count = v[2];
    if (count < 1 || count != static_cast<double>(static_cast<int>(count))) {
        throw ParameterError(std::string("grid-") + name, std::string("grid-") + name + " count must be a positive integer");
    }
    return {v[0], v[1], static_cast<int>(count)};
}

Scenario base_scenario(const CommonArgs& args, double default_box) {
    Scenario s;
    s.eqc = {args.a, args.b, args.c, args.d};
    s.grid.x = to_axis(args.grid_x, "x");
    s.grid.y = to_axis(args.grid_y, "y");
    s.grid.t = args.times;
    s.sample.points = args.points;
    s.sample.lo = args.box.empty() ? -default_box : args.box[0];
    s.sample.hi = args.box.empty() ? default_box : args.box[1];
    s.seed = seed_from_environment().value_or(args.seed);
    s.require_real = args.require_real;
    return s;
}

void emit_scenario(const Scenario& s, const std::string& out, const std::string& echo) {
    s.validate();
    const std::string text = dump_json(Json(s));
    if (out.empty() || out == "-") {
        std::cout << text;
        std::cerr << echo;
    } else {
        write_text(out, text);
        std::cout << echo;
    }
}

int cmd_build_soliton(const CommonArgs& args, const std::string& family, const std::vector<std::string>& p_text,
                      const std::string& a000, const std::string& b000, const std::string& c000) {
    Scenario s = base_scenario(args, 5.0);
    s.bg = {parse_complex(a000, "a000"), parse_complex(b000, "b000"), parse_complex(c000, "c000")};
    std::vector<Complex> p;
    for (std::size_t i = 0; i < p_text.size(); ++i) p.push_back(parse_complex(p_text[i], "P" + std::to_string(i + 1)));
    const SolitonSpec spec = make_soliton_spec(family_from_string(family), s.eqc, s.bg, std::move(p));
    s.solution = spec;

    std::string echo;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const std::string k = std::to_string(i + 1);
        echo += "Omega_" + k + " = " + format_complex(spec.waves[i].omega) + "\n";
        echo += "K_" + k + " = " + format_complex(spec.waves[i].k) + "\n";
    }
    for (std::size_t i = 0; i < spec.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.size(); ++j) {
            echo += "a_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                    format_complex(spec.phase_shifts[i][j]) + "\n";
        }
    }
    emit_scenario(s, args.out, echo);
    return kPass;
}

ParameterMap parse_assignments(const std::vector<std::string>& sets) {
    ParameterMap m;
    for (const auto& item : sets) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ParameterError(item, "--set expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        m[name] = parse_complex(item.substr(eq + 1), name);
    }
    return m;
}

int cmd_build_threewave(const CommonArgs& args, int case_id, int branch, int eps, const std::vector<std::string>& sets,
                        bool corrected, const std::string& preset) {
    Scenario s = base_scenario(args, 2.0);
    const ParameterMap params = parse_assignments(sets);
    ThreeWaveSpec spec;
    if (!preset.empty()) {
        const Remark3Preset which = remark3_preset_from_string(preset);
        spec = remark3_preset(which, s.eqc, params, branch, eps);
        if (which == Remark3Preset::DoublyPeriodic) s.require_real = true;
    } else {
        if (case_id == 0 || branch == 0) throw ParameterError("case", "build threewave needs --case and --branch or --preset");
        spec = instantiate(case_id, branch, eps, s.eqc, params, corrected);
    }
    s.bg = spec.bg;
    s.solution = spec;

    std::string echo = "case " + std::to_string(spec.case_id) + "(" + std::to_string(spec.branch) + ")" +
                       (spec.corrected ? " corrected reading" : "") + ", epsilon = " + std::to_string(spec.epsilon) + "\n";
    for (const auto& [name, value] : spec.derived) echo += name + " = " + format_complex(value) + "\n";
    const std::string& deviation = branch_info(spec.case_id, spec.branch).known_deviation;
    if (!spec.corrected && !deviation.empty()) echo += "note: declared deviation: " + deviation + "\n";
    emit_scenario(s, args.out, echo);
    return kPass;
}

void write_report(const Json& report, const std::string& out) {
    const std::string text = dump_json(report);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        write_text(out, text);
    }
}

int cmd_verify(const std::string& path, const std::string& out) {
    Scenario s = read_scenario(path);
    if (auto seed = seed_from_environment()) s.seed = *seed;
    const VerifyResult r = verify_scenario(s);
    write_report(r.to_json(), out);
    for (const auto& c : r.checks) {
        const char* status = c.pass ? "PASS" : (c.declared_deviation ? "FLAGGED" : "FAIL");
        std::fprintf(stderr, "%-8s %s\n", status, c.check.c_str());
    }
    return r.acceptable() ? kPass : kFail;
}

int cmd_sweep(std::uint64_t seed, std::size_t points, bool include_corrected, const std::string& out) {
    SweepOptions opt;
    opt.seed = seed_from_environment().value_or(seed);
    opt.points = points;
    opt.include_corrected = include_corrected;
    const std::vector<BranchVerdict> verdicts = sweep_threewave(opt);
    write_report(sweep_report(verdicts), out);
    int printed = 0, printed_pass = 0;
    for (const auto& v : verdicts) {
        if (!v.corrected) {
            ++printed;
            printed_pass += v.pass;
        }
        const char* status = v.pass ? "PASS" : (v.as_declared() ? "FLAGGED" : "FAIL");
        std::fprintf(stderr, "%-8s case %d(%d)%s\n", status, v.case_id, v.branch, v.corrected ? " corrected" : "");
    }
    std::fprintf(stderr, "%d of %d printed branches pass\n", printed_pass, printed);
    return sweep_acceptable(verdicts) ? kPass : kFail;
}

int cmd_grid(const std::string& path, const std::string& out) {
    Scenario s = read_scenario(path);
    if (auto seed = seed_from_environment()) s.seed = *seed;
    const std::string csv = grid_csv(evaluate_grid(s));
    if (out.empty() || out == "-") {
        std::cout << csv;
    } else {
        write_text(out, csv);
    }
    return kPass;
}

int cmd_list_cases(bool as_json) {
    const auto& cases = list_cases();
    if (as_json) {
        std::cout << dump_json(Json(cases));
        return kPass;
    }
    for (const auto& info : cases) {
        std::string free;
        for (const auto& name : info.free_parameters) free += (free.empty() ? "" : ",") + name;
        std::printf("%2d(%d)  free: %s%s%s\n", info.case_id, info.branch, free.c_str(),
                    info.uses_epsilon ? "  [eps]" : "", info.known_deviation.empty() ? "" : "  [flagged]");
        if (!info.constraints.empty()) std::printf("       %s\n", info.constraints.c_str());
    }
    return kPass;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact soliton and three-wave solutions of the generalized NNV system"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "write a scenario file")->require_subcommand(1);

    CommonArgs sol_args;
    std::string family = "A";
    std::vector<std::string> p_list;
    std::string a000 = "0", b000 = "0", c000 = "0";
    auto* sol = build->add_subcommand("soliton", "N-soliton scenario");
    add_common(sol, sol_args);
    sol->add_option("--family", family, "A or B")->capture_default_str();
    sol->add_option("--P", p_list, "wave numbers, comma separated")->delimiter(',')->required();
    sol->add_option("--a000", a000, "background u")->capture_default_str();
    sol->add_option("--b000", b000, "background v")->capture_default_str();
    sol->add_option("--c000", c000, "background omega")->capture_default_str();

    CommonArgs tw_args;
    int case_id = 0, branch = 0, eps = 1;
    std::vector<std::string> sets;
    bool corrected = false;
    std::string preset;
    auto* tw = build->add_subcommand("threewave", "three-wave scenario");
    add_common(tw, tw_args);
    tw->add_option("--case", case_id, "case number");
    tw->add_option("--branch", branch, "branch number");
    tw->add_option("--eps", eps, "epsilon, +1 or -1")->capture_default_str();
    tw->add_option("--set", sets, "name=value assignments")->delimiter(',');
    tw->add_flag("--corrected", corrected, "use the corrected reading of a flagged branch");
    tw->add_option("--preset", preset, "two_soliton, periodic_solitary, doubly_periodic, kink_periodic");

    std::string verify_path, verify_out;
    bool sweep = false, include_corrected = false;
    std::uint64_t sweep_seed = SweepOptions{}.seed;
    std::size_t sweep_points = SweepOptions{}.points;
    auto* verify = app.add_subcommand("verify", "run every residual check on a scenario");
    verify->add_option("scenario", verify_path, "scenario file");
    verify->add_option("-o,--out", verify_out, "report file (default stdout)");
    verify->add_flag("--sweep-threewave", sweep, "check all printed three-wave branches");
    verify->add_flag("--include-corrected", include_corrected, "sweep: also check corrected readings");
    verify->add_option("--seed", sweep_seed, "sweep seed")->capture_default_str();
    verify->add_option("--points", sweep_points, "sweep sample points")->capture_default_str();

    std::string grid_path, grid_out;
    auto* grid = app.add_subcommand("grid", "evaluate u, v, omega on the scenario grid");
    grid->add_option("scenario", grid_path, "scenario file")->required();
    grid->add_option("-o,--out", grid_out, "CSV file (default stdout)");

    bool list_json = false;
    auto* list = app.add_subcommand("list-cases", "list the three-wave catalog");
    list->add_flag("--json", list_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*sol) return cmd_build_soliton(sol_args, family, p_list, a000, b000, c000);
        if (*tw) return cmd_build_threewave(tw_args, case_id, branch, eps, sets, corrected, preset);
        if (*verify) {
            if (sweep) return cmd_sweep(sweep_seed, sweep_points, include_corrected, verify_out);
            if (verify_path.empty()) throw ParameterError("scenario", "verify needs a scenario file or --sweep-threewave");
            return cmd_verify(verify_path, verify_out);
        }
        if (*grid) return cmd_grid(grid_path, grid_out);
        if (*list) return cmd_list_cases(list_json);
    } catch (const IoError& e) {
        std::fprintf(stderr, "wavekit: %s\n", e.what());
        return kIo;
    } catch (const ParameterError& e) {
        std::fprintf(stderr, "wavekit: %s: %s\n", e.parameter().c_str(), e.what());
        return kUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "wavekit: %s\n", e.what());
        return kUsage;
    }
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
