#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wavekit/hirota.hpp"
#include "wavekit/model.hpp"
#include "wavekit/wave_expr.hpp"

namespace wavekit {

/// Named parameter values, e.g. {"alpha1", 1.0}, {"d3", 0.5}.
using ParameterMap = std::map<std::string, Complex>;

/// One solved case of the ansatz
///   w = e^(-xi1) + d1 cos xi2 + d2 cosh xi3 + d3 e^(xi1),  xi_i = alpha_i x + beta_i y + gamma_i t.
struct ThreeWaveSpec {
    int case_id = 0;
    int branch = 0;
    int epsilon = 1;
    /// True when built from the corrected reading of a branch rather than its printed formulas.
    bool corrected = false;
    EquationCoefficients eqc{};
    ParameterMap free;
    ParameterMap derived;
    Complex d1{}, d2{}, d3{};
    LinearPhase xi1, xi2, xi3;
    Background bg{};

    /// Every symbol of the case (free and derived) by name.
    Complex value(const std::string& name) const;
    TauFunction tau() const;
};

struct BranchInfo {
    int case_id = 0;
    int branch = 0;
    /// Free parameters in the order they are listed for the branch.
    std::vector<std::string> free_parameters;
    /// Free parameters that may be omitted; they default to 0.
    std::vector<std::string> optional_parameters;
    std::string constraints;
    bool uses_epsilon = false;
    bool has_corrected_reading = false;
    /// What the corrected reading changes, empty when there is none.
    std::string correction;
    /// Why the printed formulas fail, empty when they pass.
    std::string known_deviation;
};

/// Every printed (case, branch) pair, in case order.
const std::vector<BranchInfo>& list_cases();

/// Throws ParameterError when the pair is not in the catalog.
const BranchInfo& branch_info(int case_id, int branch);

/// Builds the case's derived parameters from the free ones.
///
/// Throws ParameterError when a required free parameter is missing, epsilon is not +-1,
/// or a denominator of the case formulas vanishes. Unknown names in free are rejected.
/// With corrected = true the corrected reading is used; branches without one reject it.
ThreeWaveSpec instantiate(int case_id, int branch, int epsilon, const EquationCoefficients& eqc,
                          const ParameterMap& free, bool corrected = false);

/// The 22 coefficient equations obtained by substituting the ansatz into the two Family A
/// bilinear forms, evaluated at the spec. Each residual is |sum| / (1 + largest |monomial|).
struct CoefficientReport {
    std::vector<double> residuals;
    double max_rel = 0.0;
    int worst_equation = -1;
    double tolerance = 0.0;
    bool pass = true;
};

inline constexpr double kThreeWaveTolerance = 1e-8;
inline constexpr double kThreeWavePdeTolerance = 1e-7;

std::size_t coefficient_equation_count();
CoefficientReport coefficient_system_residual(const ThreeWaveSpec& spec, double tolerance = kThreeWaveTolerance);

enum class Remark3Preset { TwoSoliton, PeriodicSolitary, DoublyPeriodic, KinkPeriodic };

std::string_view to_string(Remark3Preset p);
Remark3Preset remark3_preset_from_string(std::string_view name);

/// The specialised cases: two_soliton is Case 4 with d3 = 1 (default branch 1), periodic_solitary
/// Case 7 with d3 = 1 (branch 1), doubly_periodic Case 9(1) with alpha3 replaced by I alpha3,
/// kink_periodic Case 11 with d3 = 1 (branch 7). branch = 0 picks the default.
ThreeWaveSpec remark3_preset(Remark3Preset preset, const EquationCoefficients& eqc, const ParameterMap& params,
                             int branch = 0, int epsilon = 1);

/// Outcome of checking one (case, branch, epsilon) instantiation.
struct BranchCheck {
    int epsilon = 1;
    ParameterMap free;
    EquationCoefficients eqc{};
    ResidualReport eq12;
    ResidualReport eq13;
    CoefficientReport system;
    ResidualReport eq1a;
    ResidualReport eq1b;
    ResidualReport eq1c;
    /// Set when instantiation itself failed for every draw.
    std::string error;

    bool bilinear_pass() const { return error.empty() && eq12.pass && eq13.pass; }
    bool pass() const { return bilinear_pass() && system.pass; }
    bool pde_pass() const { return error.empty() && eq1a.pass && eq1b.pass && eq1c.pass; }
};

struct BranchVerdict {
    int case_id = 0;
    int branch = 0;
    bool corrected = false;
    std::vector<BranchCheck> checks;
    /// Passes the bilinear pair and the coefficient system for every epsilon the branch uses.
    bool pass = false;
    bool oracles_agree = true;
    std::string diagnostic;
    /// Copied from the catalog; a failing branch with a declared deviation is an expected failure.
    std::string known_deviation;

    /// The printed formulas fail; the failure is flagged as a suspected typo.
    bool suspected_typo() const { return !pass; }
    /// Matches the catalog: printed readings fail exactly when a deviation is declared,
    /// corrected readings always pass.
    bool as_declared() const { return corrected ? pass : pass == known_deviation.empty(); }
};

struct SweepOptions {
    std::uint64_t seed = 20240601;
    std::size_t points = 50;
    /// Also check the corrected reading of branches that have one.
    bool include_corrected = false;
};

/// Draws generic equation coefficients and free parameters for the branch (resampling draws
/// that hit a singular denominator), instantiates it for each epsilon it uses and runs every check.
BranchVerdict verify_branch(int case_id, int branch, bool corrected, const SweepOptions& options);

/// verify_branch over the whole catalog, run in parallel, results in catalog order. With
/// include_corrected the corrected readings follow the printed ones.
std::vector<BranchVerdict> sweep_threewave(const SweepOptions& options = {});

}  // namespace wavekit
