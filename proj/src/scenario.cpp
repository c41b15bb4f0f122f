#include "wavekit/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "wavekit/balance.hpp"
#include "wavekit/fields.hpp"

namespace wavekit {

double GridAxis::at(int i) const {
    if (count <= 1) return min;
    if (i == count - 1) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

TauFunction Scenario::tau() const {
    struct Visitor {
        TauFunction operator()(const SolitonSpec& s) const { return build_tau(s); }
        TauFunction operator()(const ThreeWaveSpec& s) const { return s.tau(); }
        TauFunction operator()(const TauFunction& w) const { return w; }
    };
    return std::visit(Visitor{}, solution);
}

std::vector<Point> Scenario::points() const { return sample_points(sample.points, seed, {sample.lo, sample.hi}); }

namespace {

void check_axis(const GridAxis& a, const char* name) {
    if (a.count < 1) throw ParameterError(std::string("grid.") + name, std::string("grid ") + name + " count must be >= 1");
    if (!std::isfinite(a.min) || !std::isfinite(a.max) || a.min > a.max) {
        throw ParameterError(std::string("grid.") + name, std::string("grid ") + name + " needs finite min <= max");
    }
}

void check_tolerance(const std::optional<double>& t, const char* name) {
    if (t && !(*t > 0.0 && std::isfinite(*t))) {
        throw ParameterError(std::string("tolerances.") + name, std::string("tolerance '") + name + "' must be positive");
    }
}

}  // namespace

void Scenario::validate() const {
    check_axis(grid.x, "x");
    check_axis(grid.y, "y");
    if (grid.t.empty()) throw ParameterError("grid.t", "grid t list must not be empty");
    for (double t : grid.t) {
        if (!std::isfinite(t)) throw ParameterError("grid.t", "grid times must be finite");
    }
    check_tolerance(tolerances.bilinear, "bilinear");
    check_tolerance(tolerances.system, "system");
    check_tolerance(tolerances.pde, "pde");
    check_tolerance(tolerances.identity, "identity");
    if (sample.points < 1) throw ParameterError("sample.points", "sample point count must be >= 1");
    if (!(sample.lo <= sample.hi)) throw ParameterError("sample", "sample box needs lo <= hi");
    if (const auto* s = std::get_if<SolitonSpec>(&solution)) {
        if (!(s->eqc == eqc)) throw ParameterError("eq", "soliton equation coefficients differ from the scenario's");
        if (!(s->bg == bg)) throw ParameterError("background", "soliton background differs from the scenario's");
    } else if (const auto* s = std::get_if<ThreeWaveSpec>(&solution)) {
        if (!(s->eqc == eqc)) throw ParameterError("eq", "three-wave equation coefficients differ from the scenario's");
        if (!(s->bg == bg)) throw ParameterError("background", "the case fixes a different background");
    }
}

bool operator==(const SolitonSpec& a, const SolitonSpec& b) {
    if (a.family != b.family || !(a.eqc == b.eqc) || !(a.bg == b.bg) || a.p != b.p) return false;
    if (a.waves.size() != b.waves.size()) return false;
    for (std::size_t i = 0; i < a.waves.size(); ++i) {
        if (a.waves[i].omega != b.waves[i].omega || a.waves[i].k != b.waves[i].k) return false;
    }
    return a.phase_shifts == b.phase_shifts;
}

bool operator==(const ThreeWaveSpec& a, const ThreeWaveSpec& b) {
    return a.case_id == b.case_id && a.branch == b.branch && a.epsilon == b.epsilon && a.corrected == b.corrected &&
           a.eqc == b.eqc && a.free == b.free && a.derived == b.derived && a.d1 == b.d1 && a.d2 == b.d2 &&
           a.d3 == b.d3 && a.xi1 == b.xi1 && a.xi2 == b.xi2 && a.xi3 == b.xi3 && a.bg == b.bg;
}

bool operator==(const Scenario& a, const Scenario& b) {
    return a.eqc == b.eqc && a.bg == b.bg && a.solution == b.solution && a.grid == b.grid &&
           a.tolerances == b.tolerances && a.sample == b.sample && a.seed == b.seed && a.require_real == b.require_real;
}

namespace {

Json axis_to_json(const GridAxis& a) { return Json::array({a.min, a.max, a.count}); }

GridAxis axis_from_json(const Json& j, const char* name) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number_integer()) {
        throw FormatError(std::string("grid.") + name + " must be [min, max, count]");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
}

void put_tolerance(Json& j, const char* key, const std::optional<double>& t) {
    if (t) j[key] = *t;
}

std::optional<double> get_tolerance(const Json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number()) throw FormatError(std::string("tolerance '") + key + "' must be a number");
    return j[key].get<double>();
}

}  // namespace

void to_json(Json& j, const Scenario& s) {
    Json sol;
    if (const auto* sp = std::get_if<SolitonSpec>(&s.solution)) {
        sol = *sp;
        sol.erase("eq");
        sol.erase("background");
        sol["type"] = "soliton";
    } else if (const auto* tw = std::get_if<ThreeWaveSpec>(&s.solution)) {
        sol = *tw;
        sol.erase("eq");
        sol.erase("background");
        sol["type"] = "threewave";
    } else {
        sol = std::get<TauFunction>(s.solution);
        sol["type"] = "raw_tau";
    }
    Json tol = Json::object();
    put_tolerance(tol, "bilinear", s.tolerances.bilinear);
    put_tolerance(tol, "system", s.tolerances.system);
    put_tolerance(tol, "pde", s.tolerances.pde);
    put_tolerance(tol, "identity", s.tolerances.identity);
    j = {{"eq", s.eqc},
         {"background", s.bg},
         {"solution", std::move(sol)},
         {"grid", {{"x", axis_to_json(s.grid.x)}, {"y", axis_to_json(s.grid.y)}, {"t", s.grid.t}}},
         {"tolerances", std::move(tol)},
         {"sample", {{"points", s.sample.points}, {"lo", s.sample.lo}, {"hi", s.sample.hi}}},
         {"seed", s.seed},
         {"require_real", s.require_real}};
}

void from_json(const Json& j, Scenario& s) {
    if (!j.is_object()) throw FormatError("scenario must be a JSON object");
    Scenario out;
    try {
        if (j.contains("eq")) out.eqc = j["eq"].get<EquationCoefficients>();
        if (j.contains("background")) out.bg = j["background"].get<Background>();
        if (!j.contains("solution")) throw FormatError("missing field 'solution'");
        Json sol = j["solution"];
        if (!sol.is_object() || !sol.contains("type") || !sol["type"].is_string()) {
            throw FormatError("solution needs a string 'type' (soliton, threewave, raw_tau)");
        }
        const std::string type = sol["type"].get<std::string>();
        if (type == "soliton") {
            if (!sol.contains("eq")) sol["eq"] = out.eqc;
            if (!sol.contains("background")) sol["background"] = out.bg;
            out.solution = sol.get<SolitonSpec>();
        } else if (type == "threewave") {
            if (!sol.contains("eq")) sol["eq"] = out.eqc;
            out.solution = sol.get<ThreeWaveSpec>();
        } else if (type == "raw_tau") {
            out.solution = sol.get<TauFunction>();
        } else {
            throw FormatError("unknown solution type '" + type + "'");
        }
        if (j.contains("grid")) {
            const Json& g = j["grid"];
            if (!g.is_object()) throw FormatError("grid must be an object");
            if (g.contains("x")) out.grid.x = axis_from_json(g["x"], "x");
            if (g.contains("y")) out.grid.y = axis_from_json(g["y"], "y");
            if (g.contains("t")) {
                const Json& t = g["t"];
                if (t.is_number()) {
                    out.grid.t = {t.get<double>()};
                } else if (t.is_array()) {
                    out.grid.t.clear();
                    for (const auto& v : t) {
                        if (!v.is_number()) throw FormatError("grid.t must hold numbers");
                        out.grid.t.push_back(v.get<double>());
                    }
                } else {
                    throw FormatError("grid.t must be a number or a list");
                }
            }
        }
        if (j.contains("tolerances")) {
            const Json& t = j["tolerances"];
            if (!t.is_object()) throw FormatError("tolerances must be an object");
            for (const auto& [k, v] : t.items()) {
                (void)v;
                if (k != "bilinear" && k != "system" && k != "pde" && k != "identity") {
                    throw FormatError("unknown tolerance '" + k + "' (expected bilinear, system, pde, identity)");
                }
            }
            out.tolerances.bilinear = get_tolerance(t, "bilinear");
            out.tolerances.system = get_tolerance(t, "system");
            out.tolerances.pde = get_tolerance(t, "pde");
            out.tolerances.identity = get_tolerance(t, "identity");
        }
        if (j.contains("sample")) {
            const Json& sm = j["sample"];
            if (!sm.is_object()) throw FormatError("sample must be an object");
            out.sample.points = sm.value("points", out.sample.points);
            out.sample.lo = sm.value("lo", out.sample.lo);
            out.sample.hi = sm.value("hi", out.sample.hi);
        }
        if (j.contains("seed")) {
            if (!j["seed"].is_number_unsigned()) throw FormatError("seed must be a nonnegative integer");
            out.seed = j["seed"].get<std::uint64_t>();
        }
        out.require_real = j.value("require_real", false);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed scenario: ") + e.what());
    }
    out.validate();
    s = std::move(out);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Scenario read_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError("'" + path + "' is not valid JSON: " + e.what());
    }
    return j.get<Scenario>();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
}

namespace {

bool parse_real(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

Complex parse_complex(std::string_view text, const std::string& what) {
    std::string s;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') s += ch;
    }
    const auto bad = [&] {
        return ParameterError(what, "cannot parse '" + std::string(text) + "' as a number for " + what);
    };
    if (s.empty()) throw bad();
    const char last = s.back();
    if (last != 'i' && last != 'I' && last != 'j') {
        double re = 0.0;
        if (!parse_real(s, re)) throw bad();
        return {re, 0.0};
    }
    const std::string_view body(s.data(), s.size() - 1);
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    double re = 0.0;
    std::string_view im_text = body;
    if (split != std::string_view::npos) {
        if (!parse_real(body.substr(0, split), re)) throw bad();
        im_text = body.substr(split);
    }
    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else if (!parse_real(im_text, im)) {
        throw bad();
    }
    return {re, im};
}

std::string format_complex(Complex z) {
    z += Complex{0.0, 0.0};  // drop negative zeros
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    }
    return buf;
}

std::optional<std::uint64_t> seed_from_environment() {
    const char* env = std::getenv("WAVEKIT_SEED");
    if (env == nullptr) return std::nullopt;
    const std::string_view s(env);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParameterError("WAVEKIT_SEED", "WAVEKIT_SEED must be an unsigned integer, got '" + std::string(s) + "'");
    }
    return value;
}

bool VerifyResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerifyResult::acceptable() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass || c.declared_deviation; });
}

Json VerifyResult::to_json() const {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json entry = {{"check", c.check}};
        entry.update(c.report);
        entry["pass"] = c.pass;
        if (c.declared_deviation) entry["declared_deviation"] = true;
        arr.push_back(std::move(entry));
    }
    return arr;
}

namespace {

struct Defaults {
    double bilinear, system, pde, identity;
};

Defaults defaults_for(const Solution& sol) {
    if (const auto* s = std::get_if<SolitonSpec>(&sol)) {
        // Four and more solitons accumulate rounding in the interaction products.
        if (s->size() >= 4) return {1e-7, 0.0, 1e-7, kIdentityTolerance};
        return {kBilinearTolerance, 0.0, kPdeTolerance, kIdentityTolerance};
    }
    if (std::holds_alternative<ThreeWaveSpec>(sol)) {
        return {kThreeWaveTolerance, kThreeWaveTolerance, kThreeWavePdeTolerance, kIdentityTolerance};
    }
    return {kBilinearTolerance, 0.0, kPdeTolerance, kIdentityTolerance};
}

void add_residual(VerifyResult& out, const std::string& check, const ResidualReport& r, bool deviation) {
    out.checks.push_back({check, Json(r), r.pass, deviation && !r.pass});
}

}  // namespace

VerifyResult verify_scenario(const Scenario& s) {
    const Defaults d = defaults_for(s.solution);
    const double tol_bilinear = s.tolerances.bilinear.value_or(d.bilinear);
    const double tol_system = s.tolerances.system.value_or(d.system);
    const double tol_pde = s.tolerances.pde.value_or(d.pde);
    const double tol_identity = s.tolerances.identity.value_or(d.identity);

    const std::vector<Point> pts = s.points();
    const TauFunction w = s.tau();
    VerifyResult out;

    // Printed three-wave branches with a declared typo are expected to fail.
    bool deviation = false;
    if (const auto* tw = std::get_if<ThreeWaveSpec>(&s.solution)) {
        deviation = !tw->corrected && !branch_info(tw->case_id, tw->branch).known_deviation.empty();
    }

    if (const auto* sp = std::get_if<SolitonSpec>(&s.solution)) {
        const auto [first, second] = family_forms(sp->family, s.eqc, s.bg);
        add_residual(out, "bilinear:" + first.name, bilinear_residual(first, w, pts, tol_bilinear), false);
        add_residual(out, "bilinear:" + second.name, bilinear_residual(second, w, pts, tol_bilinear), false);
    } else if (const auto* tw = std::get_if<ThreeWaveSpec>(&s.solution)) {
        const BilinearForm first = form_eq12(s.eqc, s.bg);
        const BilinearForm second = form_eq13(s.bg);
        add_residual(out, "bilinear:" + first.name, bilinear_residual(first, w, pts, tol_bilinear), deviation);
        add_residual(out, "bilinear:" + second.name, bilinear_residual(second, w, pts, tol_bilinear), deviation);
        const CoefficientReport sys = coefficient_system_residual(*tw, tol_system);
        out.checks.push_back({"coefficient_system", Json(sys), sys.pass, deviation && !sys.pass});
    }

    const FieldTriple ft = assemble(w, s.bg);
    const PdeReport pde = pde_residual(ft, s.eqc, pts, tol_pde, tol_identity);
    add_residual(out, "pde:1a", pde.eq1a, deviation);
    add_residual(out, "pde:1b", pde.eq1b, deviation);
    add_residual(out, "pde:1c", pde.eq1c, deviation);

    const TransformReport tr = verify_transform(s.eqc, s.bg, w, pts, tol_identity);
    add_residual(out, "transform:1b", tr.eq1b, false);
    add_residual(out, "transform:1c", tr.eq1c, false);

    const RealnessReport re = realness_report(ft, pts);
    const bool real = re.is_real(tol_identity);
    Json rj = {{"max_im_u", re.max_im_u},
               {"max_im_v", re.max_im_v},
               {"max_im_omega", re.max_im_omega},
               {"tolerance", tol_identity},
               {"real", real},
               {"enforced", s.require_real},
               {"singular_points", re.singular_points}};
    out.checks.push_back({"realness", std::move(rj), real || !s.require_real, false});
    return out;
}

std::vector<GridRow> evaluate_grid(const Scenario& s) {
    const FieldTriple ft = s.fields();
    const std::size_t nx = static_cast<std::size_t>(s.grid.x.count);
    const std::size_t ny = static_cast<std::size_t>(s.grid.y.count);
    const std::size_t total = nx * ny * s.grid.t.size();
    std::vector<GridRow> rows(total);

    auto fill = [&](std::size_t i) {
        GridRow& row = rows[i];
        const std::size_t ix = i % nx;
        const std::size_t iy = (i / nx) % ny;
        const std::size_t it = i / (nx * ny);
        row.p = {s.grid.x.at(static_cast<int>(ix)), s.grid.y.at(static_cast<int>(iy)), s.grid.t[it]};
        try {
            const FieldValues f = ft.at(row.p);
            row.u = f.u;
            row.v = f.v;
            row.omega = f.omega;
        } catch (const SingularPointError&) {
            row.singular = true;
        }
    };

    constexpr std::size_t kBlock = 256;
    std::atomic<std::size_t> next{0};
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(total / kBlock + 1)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t b; (b = next.fetch_add(kBlock)) < total;) {
                for (std::size_t i = b; i < std::min(total, b + kBlock); ++i) fill(i);
            }
        });
    }
    for (auto& th : pool) th.join();
    return rows;
}

namespace {

void put(std::string& line, double v) {
    char buf[40];
    if (std::isnan(v)) {
        line += "nan";
        return;
    }
    std::snprintf(buf, sizeof buf, "%.17g", v);
    line += buf;
}

}  // namespace

std::string grid_csv(const std::vector<GridRow>& rows) {
    std::string out = std::string(kGridHeader) + "\n";
    out.reserve(out.size() + rows.size() * 200);
    const double nan = std::nan("");
    for (const auto& r : rows) {
        put(out, r.p.x);
        out += ',';
        put(out, r.p.y);
        out += ',';
        put(out, r.p.t);
        for (Complex z : {r.u, r.v, r.omega}) {
            out += ',';
            put(out, r.singular ? nan : z.real());
            out += ',';
            put(out, r.singular ? nan : z.imag());
        }
        out += r.singular ? ",1\n" : ",0\n";
    }
    return out;
}

Json sweep_report(const std::vector<BranchVerdict>& verdicts) {
    Json arr = Json::array();
    for (const auto& v : verdicts) {
        Json entry = v;
        entry["as_declared"] = v.as_declared();
        arr.push_back(std::move(entry));
    }
    return arr;
}

bool sweep_acceptable(const std::vector<BranchVerdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const BranchVerdict& v) { return v.as_declared() && v.oracles_agree; });
}

}  // namespace wavekit
