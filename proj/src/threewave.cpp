#include "wavekit/threewave.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "threewave_catalog.hpp"
#include "wavekit/fields.hpp"

namespace wavekit {

namespace {

using detail::BranchDef;
using detail::CaseVars;

const std::vector<std::string>& all_symbols() {
    static const std::vector<std::string> names = {
        "a000",   "b000",   "c000",  "alpha1", "alpha2", "alpha3", "beta1", "beta2", "beta3",
        "gamma1", "gamma2", "gamma3", "d1",    "d2",     "d3"};
    return names;
}

std::vector<std::string> split_words(const char* text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

/// Names a caller may omit: the background values, the root selector and the phase of a
/// wave whose amplitude the case switches off.
std::vector<std::string> optional_names(const BranchDef& def) {
    std::vector<std::string> out;
    for (const auto& n : split_words(def.free)) {
        if (n == "a000" || n == "b000" || n == "c000" || n == "root_index") out.push_back(n);
    }
    for (int wave = 2; wave <= 3; ++wave) {
        if (!detail::wave_inert(def.case_id, wave)) continue;
        for (const char* stem : {"alpha", "beta", "gamma"}) out.push_back(stem + std::to_string(wave));
    }
    return out;
}

const BranchDef& find_def(int case_id, int branch) {
    for (const auto& def : detail::branch_definitions()) {
        if (def.case_id == case_id && def.branch == branch) return def;
    }
    throw ParameterError("case", "no three-wave case " + std::to_string(case_id) + "(" + std::to_string(branch) + ")");
}

/// Runs a branch formula on already seeded variables and returns them.
CaseVars run_formula(const BranchDef& def, bool corrected, int epsilon, const EquationCoefficients& eqc,
                     const ParameterMap& seeded) {
    CaseVars vars(eqc, epsilon);
    for (const auto& [k, v] : seeded) vars.set_free(k, v);
    (corrected ? def.corrected : def.printed)(vars);
    return vars;
}

/// Generic values for a probe run of a branch.
ParameterMap probe_values(const BranchDef& def, const std::vector<std::string>& optional, int attempt) {
    ParameterMap m;
    int k = 0;
    auto next = [&] { return Complex{0.41 + 0.137 * ((k++ * 7 + attempt * 3) % 11), 0.0}; };
    for (const auto& n : split_words(def.free)) m[n] = n == "root_index" ? Complex{} : next();
    for (const auto& n : optional) {
        if (!m.count(n)) m[n] = next();
    }
    return m;
}

BranchInfo make_info(const BranchDef& def) {
    BranchInfo info;
    info.case_id = def.case_id;
    info.branch = def.branch;
    info.free_parameters = split_words(def.free);
    info.constraints = def.constraints;
    info.has_corrected_reading = def.corrected != nullptr;
    info.correction = def.correction;
    info.known_deviation = def.deviation;
    const auto candidates = optional_names(def);
    const EquationCoefficients probe_eqc{1.13, 0.87, 0.31, 0.73};
    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            const auto seeded = probe_values(def, candidates, attempt);
            const auto plus = run_formula(def, false, 1, probe_eqc, seeded);
            const auto minus = run_formula(def, false, -1, probe_eqc, seeded);
            info.uses_epsilon = plus.values() != minus.values();
            for (const auto& n : candidates) {
                if (!plus.derived().count(n)) info.optional_parameters.push_back(n);
            }
            return info;
        } catch (const ParameterError&) {
        }
    }
    info.uses_epsilon = std::string(def.constraints).find("eps") != std::string::npos;
    info.optional_parameters = candidates;
    return info;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

Complex ThreeWaveSpec::value(const std::string& name) const {
    if (name == "a") return eqc.a;
    if (name == "b") return eqc.b;
    if (name == "c") return eqc.c;
    if (name == "d") return eqc.d;
    if (auto it = derived.find(name); it != derived.end()) return it->second;
    if (auto it = free.find(name); it != free.end()) return it->second;
    throw ParameterError(name, "case " + std::to_string(case_id) + "(" + std::to_string(branch) + ") has no symbol '" +
                                   name + "'");
}

TauFunction ThreeWaveSpec::tau() const {
    std::vector<WaveTerm> terms;
    terms.push_back({1.0, WaveKind::Exp, -xi1});
    if (d1 != Complex{}) terms.push_back({d1, WaveKind::Cos, xi2});
    if (d2 != Complex{}) terms.push_back({d2, WaveKind::Cosh, xi3});
    if (d3 != Complex{}) terms.push_back({d3, WaveKind::Exp, xi1});
    return TauFunction(Complex{}, std::move(terms));
}

const std::vector<BranchInfo>& list_cases() {
    static const std::vector<BranchInfo> infos = [] {
        std::vector<BranchInfo> out;
        for (const auto& def : detail::branch_definitions()) out.push_back(make_info(def));
        return out;
    }();
    return infos;
}

const BranchInfo& branch_info(int case_id, int branch) {
    for (const auto& info : list_cases()) {
        if (info.case_id == case_id && info.branch == branch) return info;
    }
    throw ParameterError("case", "no three-wave case " + std::to_string(case_id) + "(" + std::to_string(branch) + ")");
}

ThreeWaveSpec instantiate(int case_id, int branch, int epsilon, const EquationCoefficients& eqc,
                          const ParameterMap& free, bool corrected) {
    const BranchDef& def = find_def(case_id, branch);
    const BranchInfo& info = branch_info(case_id, branch);
    if (epsilon != 1 && epsilon != -1) throw ParameterError("epsilon", "epsilon must be +1 or -1");
    if (corrected && !def.corrected) {
        throw ParameterError("corrected", "case " + std::to_string(case_id) + "(" + std::to_string(branch) +
                                              ") has no corrected reading");
    }
    ParameterMap seeded;
    for (const auto& [name, value] : free) {
        if (!contains(info.free_parameters, name) && !contains(info.optional_parameters, name)) {
            throw ParameterError(name, "'" + name + "' is not a free parameter of case " + std::to_string(case_id) +
                                           "(" + std::to_string(branch) + ")");
        }
        if (!finite(value)) throw ParameterError(name, "parameter '" + name + "' is not finite");
        seeded[name] = value;
    }
    for (const auto& name : info.free_parameters) {
        if (!seeded.count(name)) {
            if (!contains(info.optional_parameters, name)) {
                throw ParameterError(name, "missing free parameter '" + name + "' for case " + std::to_string(case_id) +
                                               "(" + std::to_string(branch) + ")");
            }
            seeded[name] = Complex{};
        }
    }
    for (const auto& name : info.optional_parameters) seeded.try_emplace(name, Complex{});

    const CaseVars vars = run_formula(def, corrected, epsilon, eqc, seeded);
    ThreeWaveSpec spec;
    spec.case_id = case_id;
    spec.branch = branch;
    spec.epsilon = epsilon;
    spec.corrected = corrected;
    spec.eqc = eqc;
    spec.derived = vars.derived();
    for (const auto& [name, value] : seeded) {
        if (!spec.derived.count(name)) spec.free[name] = value;
    }
    for (const auto& name : all_symbols()) {
        if (!vars.has(name)) {
            throw ParameterError(name, "case " + std::to_string(case_id) + "(" + std::to_string(branch) +
                                           ") leaves '" + name + "' undetermined");
        }
    }
    const auto v = [&](const std::string& n) { return vars[n]; };
    spec.d1 = v("d1");
    spec.d2 = v("d2");
    spec.d3 = v("d3");
    spec.xi1 = {v("alpha1"), v("beta1"), v("gamma1"), {}};
    spec.xi2 = {v("alpha2"), v("beta2"), v("gamma2"), {}};
    spec.xi3 = {v("alpha3"), v("beta3"), v("gamma3"), {}};
    spec.bg = {v("a000"), v("b000"), v("c000")};
    return spec;
}

namespace {

struct Factor {
    std::string symbol;
    int power;
};

struct Monomial {
    double coefficient;
    std::vector<Factor> factors;
};

struct CoefficientEquation {
    int form;
    std::vector<Monomial> terms;
};

Monomial parse_monomial(const std::string& text, double sign) {
    Monomial m{sign, {}};
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t stop = std::min(text.find('*', start), text.size());
        const std::string f = text.substr(start, stop - start);
        if (f.empty()) throw std::logic_error("malformed coefficient equation term '" + text + "'");
        if (std::isdigit(static_cast<unsigned char>(f[0]))) {
            m.coefficient *= std::stod(f);
        } else if (const auto caret = f.find('^'); caret != std::string::npos) {
            m.factors.push_back({f.substr(0, caret), std::stoi(f.substr(caret + 1))});
        } else {
            m.factors.push_back({f, 1});
        }
        start = stop + 1;
    }
    return m;
}

std::vector<Monomial> parse_polynomial(const std::string& text) {
    std::istringstream in(text);
    std::vector<Monomial> out;
    double sign = 1.0;
    for (std::string tok; in >> tok;) {
        if (tok == "+") {
            sign = 1.0;
        } else if (tok == "-") {
            sign = -1.0;
        } else {
            if (tok[0] == '-') {
                sign = -sign;
                tok.erase(0, 1);
            }
            out.push_back(parse_monomial(tok, sign));
            sign = 1.0;
        }
    }
    return out;
}

const std::vector<CoefficientEquation>& coefficient_equations() {
    struct Raw {
        int form;
        const char* text;
    };
    static const Raw raw[] = {
#include "threewave_equations.inc"
    };
    static const std::vector<CoefficientEquation> eqs = [] {
        std::vector<CoefficientEquation> out;
        for (const auto& r : raw) out.push_back({r.form, parse_polynomial(r.text)});
        return out;
    }();
    return eqs;
}

}  // namespace

std::size_t coefficient_equation_count() { return coefficient_equations().size(); }

CoefficientReport coefficient_system_residual(const ThreeWaveSpec& spec, double tolerance) {
    CoefficientReport rep;
    rep.tolerance = tolerance;
    std::map<std::string, Complex> cache;
    auto lookup = [&](const std::string& n) {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, spec.value(n)).first;
        return it->second;
    };
    const auto& eqs = coefficient_equations();
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        Complex sum{};
        double biggest = 0.0;
        for (const auto& m : eqs[i].terms) {
            Complex term = m.coefficient;
            for (const auto& f : m.factors) term *= std::pow(lookup(f.symbol), f.power);
            sum += term;
            biggest = std::max(biggest, std::abs(term));
        }
        const double r = std::abs(sum) / (1.0 + biggest);
        rep.residuals.push_back(r);
        if (!(r <= rep.max_rel)) {
            rep.max_rel = r;
            rep.worst_equation = static_cast<int>(i);
        }
    }
    rep.pass = rep.max_rel <= tolerance;
    return rep;
}

std::string_view to_string(Remark3Preset p) {
    switch (p) {
        case Remark3Preset::TwoSoliton: return "two_soliton";
        case Remark3Preset::PeriodicSolitary: return "periodic_solitary";
        case Remark3Preset::DoublyPeriodic: return "doubly_periodic";
        case Remark3Preset::KinkPeriodic: return "kink_periodic";
    }
    return "?";
}

Remark3Preset remark3_preset_from_string(std::string_view name) {
    for (auto p : {Remark3Preset::TwoSoliton, Remark3Preset::PeriodicSolitary, Remark3Preset::DoublyPeriodic,
                   Remark3Preset::KinkPeriodic}) {
        if (to_string(p) == name) return p;
    }
    throw ParameterError("preset", "unknown preset '" + std::string(name) +
                                       "' (expected two_soliton, periodic_solitary, doubly_periodic, kink_periodic)");
}

ThreeWaveSpec remark3_preset(Remark3Preset preset, const EquationCoefficients& eqc, const ParameterMap& params,
                             int branch, int epsilon) {
    ParameterMap p = params;
    if (preset == Remark3Preset::DoublyPeriodic) {
        if (branch != 0 && branch != 1) throw ParameterError("branch", "doubly_periodic is defined on case 9(1) only");
        if (auto it = p.find("alpha3"); it != p.end()) it->second *= kI;
        // Case 9(1) only solves the system under its corrected background c000 = beta1^2/3.
        return instantiate(9, 1, epsilon, eqc, p, true);
    }
    int case_id = 0;
    int fallback = 1;
    switch (preset) {
        case Remark3Preset::TwoSoliton: case_id = 4; break;
        case Remark3Preset::PeriodicSolitary: case_id = 7; break;
        default: case_id = 11; fallback = 7; break;
    }
    if (auto it = p.find("d3"); it != p.end() && it->second != Complex{1.0}) {
        throw ParameterError("d3", std::string(to_string(preset)) + " fixes d3 = 1");
    }
    const int b = branch == 0 ? fallback : branch;
    if (!contains(branch_info(case_id, b).free_parameters, "d3")) {
        throw ParameterError("branch", std::string(to_string(preset)) + " needs a branch with d3 free");
    }
    p["d3"] = 1.0;
    return instantiate(case_id, b, epsilon, eqc, p);
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, int case_id, int branch, bool corrected) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(case_id * 64 + branch * 2 + corrected);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double kMaxDerived = 1e3;
constexpr double kSampleHalfWidth = 1.5;
/// Largest |phase| allowed over the sample box, keeping e^phase well inside double range.
constexpr double kMaxPhaseReach = 30.0;
constexpr int kMaxDraws = 200;

BranchCheck run_checks(const ThreeWaveSpec& spec, const ParameterMap& drawn, std::span<const Point> pts) {
    BranchCheck chk;
    chk.epsilon = spec.epsilon;
    chk.free = drawn;
    chk.eqc = spec.eqc;
    const TauFunction w = spec.tau();
    chk.eq12 = bilinear_residual(form_eq12(spec.eqc, spec.bg), w, pts, kThreeWaveTolerance);
    chk.eq13 = bilinear_residual(form_eq13(spec.bg), w, pts, kThreeWaveTolerance);
    chk.system = coefficient_system_residual(spec);
    const PdeReport pde = pde_residual(assemble(w, spec.bg), spec.eqc, pts, kThreeWavePdeTolerance);
    chk.eq1a = pde.eq1a;
    chk.eq1b = pde.eq1b;
    chk.eq1c = pde.eq1c;
    return chk;
}

std::string describe(const BranchCheck& c) {
    std::ostringstream os;
    os.precision(3);
    os << "eps=" << c.epsilon << ": eq12 " << c.eq12.max_rel << ", eq13 " << c.eq13.max_rel << ", system "
       << c.system.max_rel << " (eq " << c.system.worst_equation << "), (1a) " << c.eq1a.max_rel;
    const ResidualReport& worst = c.eq12.max_rel >= c.eq13.max_rel ? c.eq12 : c.eq13;
    if (!worst.pass) {
        os << ", worst " << worst.equation << " at (" << worst.worst_point.x << ", " << worst.worst_point.y << ", "
           << worst.worst_point.t << ")";
    }
    return os.str();
}

}  // namespace

BranchVerdict verify_branch(int case_id, int branch, bool corrected, const SweepOptions& options) {
    const BranchInfo& info = branch_info(case_id, branch);
    BranchVerdict verdict;
    verdict.case_id = case_id;
    verdict.branch = branch;
    verdict.corrected = corrected;
    verdict.known_deviation = info.known_deviation;
    if (corrected && !info.has_corrected_reading) {
        throw ParameterError("corrected", "case " + std::to_string(case_id) + "(" + std::to_string(branch) +
                                              ") has no corrected reading");
    }
    const std::uint64_t seed = mix_seed(options.seed, case_id, branch, corrected);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto signed_in = [&](double lo, double hi) {
        const double m = lo + (hi - lo) * unit(rng);
        return unit(rng) < 0.5 ? -m : m;
    };
    const std::vector<int> epsilons = info.uses_epsilon ? std::vector<int>{1, -1} : std::vector<int>{1};
    const auto pts = sample_points(options.points, seed, SampleBox{-kSampleHalfWidth, kSampleHalfWidth});

    std::string last_error;
    for (int draw = 0; draw < kMaxDraws; ++draw) {
        EquationCoefficients eqc;
        eqc.a = 0.5 + unit(rng);
        eqc.b = 0.5 + unit(rng);
        eqc.c = -1.0 + 2.0 * unit(rng);
        eqc.d = signed_in(0.3, 1.0);
        ParameterMap drawn;
        for (const auto& n : info.free_parameters) drawn[n] = n == "root_index" ? 0.0 : signed_in(0.4, 1.2);
        for (const auto& n : info.optional_parameters) drawn.try_emplace(n, signed_in(0.4, 1.2));
        std::vector<ThreeWaveSpec> specs;
        try {
            for (int e : epsilons) {
                auto spec = instantiate(case_id, branch, e, eqc, drawn, corrected);
                for (const auto& [n, v] : spec.derived) {
                    if (std::abs(v) > kMaxDerived) throw ParameterError(n, "derived '" + n + "' too large");
                }
                for (const LinearPhase* xi : {&spec.xi1, &spec.xi2, &spec.xi3}) {
                    const double reach =
                        (std::abs(xi->alpha) + std::abs(xi->beta) + std::abs(xi->gamma)) * kSampleHalfWidth;
                    if (reach > kMaxPhaseReach) throw ParameterError("phase", "phase too steep for the sample box");
                }
                specs.push_back(std::move(spec));
            }
        } catch (const ParameterError& e) {
            last_error = e.what();
            continue;
        }
        std::vector<BranchCheck> checks;
        bool conditioned = true;
        for (const auto& spec : specs) {
            checks.push_back(run_checks(spec, drawn, pts));
            // A draw whose terms cancel over most of the box says nothing about the branch.
            conditioned = conditioned && 2 * static_cast<std::size_t>(checks.back().eq1a.evaluated_points) >= pts.size();
        }
        if (!conditioned && draw + 1 < kMaxDraws) {
            last_error = "tau ill-conditioned on most sample points";
            continue;
        }
        verdict.checks = std::move(checks);
        break;
    }
    if (verdict.checks.empty()) {
        BranchCheck failed;
        failed.error = "no admissible parameter draw: " + last_error;
        verdict.checks.push_back(failed);
        verdict.pass = false;
        verdict.diagnostic = failed.error;
        return verdict;
    }
    verdict.pass = true;
    std::vector<std::string> notes;
    for (const auto& c : verdict.checks) {
        verdict.pass = verdict.pass && c.pass();
        if (c.bilinear_pass() != c.system.pass) verdict.oracles_agree = false;
        if (!c.pass() || !c.pde_pass() || c.bilinear_pass() != c.system.pass) notes.push_back(describe(c));
    }
    for (std::size_t i = 0; i < notes.size(); ++i) verdict.diagnostic += (i ? "; " : "") + notes[i];
    return verdict;
}

std::vector<BranchVerdict> sweep_threewave(const SweepOptions& options) {
    struct Job {
        int case_id, branch;
        bool corrected;
    };
    std::vector<Job> jobs;
    for (const auto& info : list_cases()) jobs.push_back({info.case_id, info.branch, false});
    if (options.include_corrected) {
        for (const auto& info : list_cases()) {
            if (info.has_corrected_reading) jobs.push_back({info.case_id, info.branch, true});
        }
    }
    std::vector<BranchVerdict> out(jobs.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < jobs.size();) {
                out[i] = verify_branch(jobs[i].case_id, jobs[i].branch, jobs[i].corrected, options);
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace wavekit
