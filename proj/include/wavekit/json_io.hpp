#pragma once

#include <json.hpp>

#include "wavekit/balance.hpp"
#include "wavekit/hirota.hpp"
#include "wavekit/model.hpp"
#include "wavekit/soliton.hpp"
#include "wavekit/threewave.hpp"
#include "wavekit/wave_expr.hpp"

// JSON adapters for the interchange formats. Complex numbers are [re, im]; readers also
// accept a bare number. Doubles are written with round-trip precision.

namespace wavekit {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class FormatError : public Error {
public:
    using Error::Error;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

void to_json(Json& j, const Point& p);
void from_json(const Json& j, Point& p);

void to_json(Json& j, const EquationCoefficients& e);
void from_json(const Json& j, EquationCoefficients& e);

void to_json(Json& j, const Background& bg);
void from_json(const Json& j, Background& bg);

/// {"constant": [re,im], "terms": [{"coef", "kind", "alpha", "beta", "gamma", "delta"}]}
void to_json(Json& j, const TauFunction& w);
void from_json(const Json& j, TauFunction& w);

/// {"equation", "max_abs", "max_rel", "tolerance", "pass", "worst_point": [x,y,t], ...}
void to_json(Json& j, const ResidualReport& r);
void from_json(const Json& j, ResidualReport& r);

/// {"family", "eq", "background", "P", "waves", "phase_shifts"}. On reading, "waves" and
/// "phase_shifts" are taken as given when present (so a hand-edited a_ij survives) and
/// recomputed from P otherwise.
void to_json(Json& j, const SolitonSpec& s);
void from_json(const Json& j, SolitonSpec& s);

/// {"case", "branch", "epsilon", "corrected", "eq", "free", "derived", "d", "xi1".."xi3",
/// "background"}. Reading re-instantiates from case, branch, epsilon, eq and free; the
/// derived block is informational.
void to_json(Json& j, const ThreeWaveSpec& s);
void from_json(const Json& j, ThreeWaveSpec& s);

void to_json(Json& j, const CoefficientReport& r);
void to_json(Json& j, const BranchInfo& info);
void to_json(Json& j, const BranchCheck& c);
void to_json(Json& j, const BranchVerdict& v);
void to_json(Json& j, const BalanceSolution& s);

}  // namespace wavekit
