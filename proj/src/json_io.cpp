#include "wavekit/json_io.hpp"

#include <string>

namespace wavekit {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
    const auto it = j.find(key);
    if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
    return *it;
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) throw FormatError(std::string("'") + what + "' must be a number");
    return j.get<double>();
}

Json phase_to_json(const LinearPhase& xi) {
    return {{"alpha", complex_to_json(xi.alpha)},
            {"beta", complex_to_json(xi.beta)},
            {"gamma", complex_to_json(xi.gamma)},
            {"delta", complex_to_json(xi.delta)}};
}

LinearPhase phase_from_json(const Json& j) {
    LinearPhase xi;
    xi.alpha = complex_from_json(field(j, "alpha"));
    xi.beta = complex_from_json(field(j, "beta"));
    xi.gamma = complex_from_json(field(j, "gamma"));
    if (j.contains("delta")) xi.delta = complex_from_json(j["delta"]);
    return xi;
}

Json map_to_json(const ParameterMap& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[k] = complex_to_json(v);
    return out;
}

ParameterMap map_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("parameter map must be an object");
    ParameterMap m;
    for (const auto& [k, v] : j.items()) m[k] = complex_from_json(v);
    return m;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw FormatError("complex value must be [re, im] or a number, got " + j.dump());
}

void to_json(Json& j, const Point& p) { j = Json::array({p.x, p.y, p.t}); }

void from_json(const Json& j, Point& p) {
    if (!j.is_array() || j.size() != 3) throw FormatError("point must be [x, y, t]");
    p = {number(j[0], "x"), number(j[1], "y"), number(j[2], "t")};
}

void to_json(Json& j, const EquationCoefficients& e) { j = {{"a", e.a}, {"b", e.b}, {"c", e.c}, {"d", e.d}}; }

void from_json(const Json& j, EquationCoefficients& e) {
    e.a = number(field(j, "a"), "a");
    e.b = number(field(j, "b"), "b");
    e.c = number(field(j, "c"), "c");
    e.d = number(field(j, "d"), "d");
}

void to_json(Json& j, const Background& bg) {
    j = {{"a000", complex_to_json(bg.a000)}, {"b000", complex_to_json(bg.b000)}, {"c000", complex_to_json(bg.c000)}};
}

void from_json(const Json& j, Background& bg) {
    if (!j.is_object()) throw FormatError("background must be an object");
    bg = {};
    if (j.contains("a000")) bg.a000 = complex_from_json(j["a000"]);
    if (j.contains("b000")) bg.b000 = complex_from_json(j["b000"]);
    if (j.contains("c000")) bg.c000 = complex_from_json(j["c000"]);
}

void to_json(Json& j, const TauFunction& w) {
    Json terms = Json::array();
    for (const auto& t : w.terms()) {
        Json term = phase_to_json(t.phase);
        term["coef"] = complex_to_json(t.coefficient);
        term["kind"] = std::string(to_string(t.kind));
        terms.push_back(std::move(term));
    }
    j = {{"constant", complex_to_json(w.constant())}, {"terms", std::move(terms)}};
}

void from_json(const Json& j, TauFunction& w) {
    const Complex constant = j.contains("constant") ? complex_from_json(j["constant"]) : Complex{};
    std::vector<WaveTerm> terms;
    const Json& arr = field(j, "terms");
    if (!arr.is_array()) throw FormatError("'terms' must be an array");
    for (const auto& t : arr) {
        WaveTerm term;
        term.coefficient = complex_from_json(field(t, "coef"));
        const Json& kind = field(t, "kind");
        if (!kind.is_string()) throw FormatError("'kind' must be a string");
        try {
            term.kind = wave_kind_from_string(kind.get<std::string>());
        } catch (const ParameterError& e) {
            throw FormatError(e.what());
        }
        term.phase = phase_from_json(t);
        terms.push_back(term);
    }
    w = TauFunction(constant, std::move(terms));
}

void to_json(Json& j, const ResidualReport& r) {
    j = {{"equation", r.equation},
         {"max_abs", r.max_abs},
         {"max_rel", r.max_rel},
         {"tolerance", r.tolerance},
         {"pass", r.pass},
         {"worst_point", r.worst_point},
         {"singular_points", r.singular_points},
         {"evaluated_points", r.evaluated_points},
         {"diagnostic", r.diagnostic}};
}

void from_json(const Json& j, ResidualReport& r) {
    r = {};
    r.equation = field(j, "equation").get<std::string>();
    r.max_abs = number(field(j, "max_abs"), "max_abs");
    r.max_rel = number(field(j, "max_rel"), "max_rel");
    r.tolerance = number(field(j, "tolerance"), "tolerance");
    r.pass = field(j, "pass").get<bool>();
    r.worst_point = field(j, "worst_point").get<Point>();
    r.singular_points = j.value("singular_points", 0);
    r.evaluated_points = j.value("evaluated_points", 0);
    r.diagnostic = j.value("diagnostic", std::string{});
}

void to_json(Json& j, const SolitonSpec& s) {
    Json p = Json::array();
    for (auto z : s.p) p.push_back(complex_to_json(z));
    Json waves = Json::array();
    for (const auto& w : s.waves) waves.push_back({{"omega", complex_to_json(w.omega)}, {"k", complex_to_json(w.k)}});
    Json shifts = Json::array();
    for (const auto& row : s.phase_shifts) {
        Json r = Json::array();
        for (auto z : row) r.push_back(complex_to_json(z));
        shifts.push_back(std::move(r));
    }
    j = {{"family", std::string(to_string(s.family))},
         {"eq", s.eqc},
         {"background", s.bg},
         {"P", std::move(p)},
         {"waves", std::move(waves)},
         {"phase_shifts", std::move(shifts)}};
}

void from_json(const Json& j, SolitonSpec& s) {
    const Json& fam = field(j, "family");
    if (!fam.is_string()) throw FormatError("'family' must be a string");
    const Family family = family_from_string(fam.get<std::string>());
    const auto eqc = field(j, "eq").get<EquationCoefficients>();
    const Background bg = j.contains("background") ? j["background"].get<Background>() : Background{};
    std::vector<Complex> p;
    const Json& arr = field(j, "P");
    if (!arr.is_array()) throw FormatError("'P' must be an array");
    for (const auto& z : arr) p.push_back(complex_from_json(z));
    s = make_soliton_spec(family, eqc, bg, std::move(p));
    const std::size_t n = s.size();
    if (j.contains("waves")) {
        const Json& waves = j["waves"];
        if (!waves.is_array() || waves.size() != n) throw FormatError("'waves' must hold one entry per P");
        for (std::size_t i = 0; i < n; ++i) {
            s.waves[i] = {complex_from_json(field(waves[i], "omega")), complex_from_json(field(waves[i], "k"))};
        }
    }
    if (j.contains("phase_shifts")) {
        const Json& rows = j["phase_shifts"];
        if (!rows.is_array() || rows.size() != n) throw FormatError("'phase_shifts' must be an N x N array");
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n) throw FormatError("'phase_shifts' must be an N x N array");
            for (std::size_t k = 0; k < n; ++k) s.phase_shifts[i][k] = complex_from_json(rows[i][k]);
        }
    }
}

void to_json(Json& j, const ThreeWaveSpec& s) {
    j = {{"case", s.case_id},
         {"branch", s.branch},
         {"epsilon", s.epsilon},
         {"corrected", s.corrected},
         {"eq", s.eqc},
         {"free", map_to_json(s.free)},
         {"derived", map_to_json(s.derived)},
         {"d", Json::array({complex_to_json(s.d1), complex_to_json(s.d2), complex_to_json(s.d3)})},
         {"xi1", phase_to_json(s.xi1)},
         {"xi2", phase_to_json(s.xi2)},
         {"xi3", phase_to_json(s.xi3)},
         {"background", s.bg}};
}

void from_json(const Json& j, ThreeWaveSpec& s) {
    const int case_id = field(j, "case").get<int>();
    const int branch = field(j, "branch").get<int>();
    const int epsilon = j.value("epsilon", 1);
    const bool corrected = j.value("corrected", false);
    const auto eqc = field(j, "eq").get<EquationCoefficients>();
    const ParameterMap free = map_from_json(field(j, "free"));
    s = instantiate(case_id, branch, epsilon, eqc, free, corrected);
}

void to_json(Json& j, const CoefficientReport& r) {
    j = {{"equation", "coefficient_system"},
         {"max_rel", r.max_rel},
         {"worst_equation", r.worst_equation},
         {"tolerance", r.tolerance},
         {"pass", r.pass},
         {"residuals", r.residuals}};
}

void to_json(Json& j, const BranchInfo& info) {
    j = {{"case", info.case_id},
         {"branch", info.branch},
         {"free", info.free_parameters},
         {"optional", info.optional_parameters},
         {"constraints", info.constraints},
         {"uses_epsilon", info.uses_epsilon},
         {"corrected_reading", info.correction},
         {"known_deviation", info.known_deviation}};
}

void to_json(Json& j, const BranchCheck& c) {
    j = {{"epsilon", c.epsilon}, {"free", map_to_json(c.free)}, {"eq", c.eqc}};
    if (!c.error.empty()) {
        j["error"] = c.error;
        return;
    }
    j["eq12"] = c.eq12;
    j["eq13"] = c.eq13;
    j["system"] = c.system;
    j["eq1a"] = c.eq1a;
    j["eq1b"] = c.eq1b;
    j["eq1c"] = c.eq1c;
}

void to_json(Json& j, const BranchVerdict& v) {
    j = {{"case", v.case_id},
         {"branch", v.branch},
         {"corrected", v.corrected},
         {"pass", v.pass},
         {"oracles_agree", v.oracles_agree},
         {"suspected_typo", v.suspected_typo()},
         {"known_deviation", v.known_deviation},
         {"diagnostic", v.diagnostic},
         {"checks", v.checks}};
}

void to_json(Json& j, const BalanceSolution& s) {
    j = {{"m", s.m},       {"n", s.n},       {"s", s.s},       {"p", s.p},       {"q", s.q},
         {"g", s.g},       {"l", s.l},       {"r", s.r},       {"h", s.h},       {"a110", s.a110},
         {"b200", s.b200}, {"c020", s.c020}, {"a100", s.a100}, {"a010", s.a010}, {"b100", s.b100},
         {"c010", s.c010}};
}

}  // namespace wavekit
