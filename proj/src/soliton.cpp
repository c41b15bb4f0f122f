#include "wavekit/soliton.hpp"

#include <string>

namespace wavekit {

namespace {

void require_nonzero(Complex value, const std::string& name, const std::string& message) {
    if (value == Complex{}) throw ParameterError(name, message);
}

}  // namespace

std::string_view to_string(Family f) { return f == Family::A ? "A" : "B"; }

Family family_from_string(std::string_view name) {
    if (name == "A" || name == "a") return Family::A;
    if (name == "B" || name == "b") return Family::B;
    throw ParameterError("family", "unknown family '" + std::string(name) + "' (expected A or B)");
}

void check_family(Family family, const EquationCoefficients& eqc, const Background& bg) {
    if (family == Family::A) {
        if (bg.c000 != Complex{}) throw ParameterError("c000", "Family A requires c000 = 0");
    } else {
        if (bg.a000 != Complex{}) throw ParameterError("a000", "Family B requires a000 = 0");
        if (eqc.d == 0.0) throw ParameterError("d", "d must be nonzero for Family B");
    }
}

Dispersion dispersion(Family family, const EquationCoefficients& eqc, const Background& bg, Complex p) {
    require_nonzero(p, "P", "wave number P must be nonzero");
    check_family(family, eqc, bg);
    const double a = eqc.a, b = eqc.b, c = eqc.c, d = eqc.d;
    if (family == Family::A) {
        return {3.0 * bg.a000 / p, (3.0 * p * p * a * bg.b000 - c * p * p - 3.0 * d * bg.a000) / p};
    }
    const Complex q = a * p * p - 3.0 * a * bg.b000 + c;
    return {-p * q / d, b * p * q * (p * p * q * q - 3.0 * bg.c000 * d * d) / (d * d * d)};
}

Complex phase_shift(Family family, const EquationCoefficients& eqc, const Background& bg, Complex pi, Complex pj) {
    require_nonzero(pi + pj, "P_i+P_j", "phase shift is singular: P_i + P_j = 0");
    const Complex sum2 = (pi + pj) * (pi + pj);
    const Complex diff2 = (pi - pj) * (pi - pj);
    if (family == Family::A) {
        const Complex plus = pi * pi + pi * pj + pj * pj;
        const Complex minus = pi * pi - pi * pj + pj * pj;
        require_nonzero(plus, "P_i^2+P_iP_j+P_j^2", "phase shift is singular: P_i^2 + P_iP_j + P_j^2 = 0");
        return minus * diff2 / (plus * sum2);
    }
    const double a = eqc.a, c = eqc.c;
    const Complex num = a * (pi * pi + pi * pj + pj * pj - 3.0 * bg.b000) + c;
    const Complex den = a * (pi * pi - pi * pj + pj * pj - 3.0 * bg.b000) + c;
    require_nonzero(den, "a(P_i^2-P_iP_j+P_j^2-3b000)+c",
                    "phase shift is singular: a(P_i^2 - P_iP_j + P_j^2 - 3b000) + c = 0");
    return diff2 * num / (sum2 * den);
}

SolitonSpec make_soliton_spec(Family family, const EquationCoefficients& eqc, const Background& bg,
                              std::vector<Complex> p) {
    if (p.empty()) throw ParameterError("P", "at least one wave number is required");
    if (p.size() > kMaxSolitons) {
        throw ParameterError("P", "at most " + std::to_string(kMaxSolitons) + " solitons are supported");
    }
    check_family(family, eqc, bg);
    SolitonSpec spec{family, eqc, bg, std::move(p), {}, {}};
    const std::size_t n = spec.p.size();
    for (std::size_t i = 0; i < n; ++i) spec.waves.push_back(dispersion(family, eqc, bg, spec.p[i]));
    spec.phase_shifts.assign(n, std::vector<Complex>(n, Complex{}));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) spec.phase_shifts[i][j] = phase_shift(family, eqc, bg, spec.p[i], spec.p[j]);
    }
    return spec;
}

TauFunction build_tau(const SolitonSpec& spec) {
    const std::size_t n = spec.size();
    if (n == 0) throw ParameterError("P", "at least one wave number is required");
    if (n > kMaxSolitons) throw ParameterError("P", "at most " + std::to_string(kMaxSolitons) + " solitons are supported");
    if (spec.waves.size() != n || spec.phase_shifts.size() != n) {
        throw ParameterError("spec", "soliton spec is incomplete; build it with make_soliton_spec");
    }
    std::vector<WaveTerm> terms;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Complex coef{1.0, 0.0};
        LinearPhase phase;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            phase.alpha += spec.p[i];
            phase.beta += spec.waves[i].omega;
            phase.gamma += spec.waves[i].k;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (mask & (std::size_t{1} << j)) coef *= spec.phase_shifts[i][j];
            }
        }
        terms.push_back({coef, WaveKind::Exp, phase});
    }
    return TauFunction(1.0, std::move(terms));
}

std::pair<BilinearForm, BilinearForm> family_forms(Family family, const EquationCoefficients& eqc,
                                                   const Background& bg) {
    if (family == Family::A) return {form_eq12(eqc, bg), form_eq13(bg)};
    return {form_eq17(eqc, bg), form_eq18(eqc, bg)};
}

}  // namespace wavekit
