#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "wavekit/hirota.hpp"
#include "wavekit/model.hpp"
#include "wavekit/wave_expr.hpp"

namespace wavekit {

/// Family A splits the bilinear system with c000 = 0; Family B with a000 = 0.
enum class Family { A, B };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

/// Wave numbers of eta = K t + Omega y + P x.
struct Dispersion {
    Complex omega{};
    Complex k{};
};

/// Omega and K for which 1 + e^eta solves the family's bilinear pair.
/// Throws ParameterError for P = 0 or, in Family B, d = 0.
Dispersion dispersion(Family family, const EquationCoefficients& eqc, const Background& bg, Complex p);

/// Interaction coefficient a_ij of e^(eta_i + eta_j). Throws ParameterError naming the
/// vanishing denominator factor.
Complex phase_shift(Family family, const EquationCoefficients& eqc, const Background& bg, Complex pi, Complex pj);

/// Throws ParameterError when bg violates the family precondition (c000 = 0 for A,
/// a000 = 0 for B) or when the family needs a nonzero coefficient that is zero.
void check_family(Family family, const EquationCoefficients& eqc, const Background& bg);

inline constexpr std::size_t kMaxSolitons = 12;

struct SolitonSpec {
    Family family = Family::A;
    EquationCoefficients eqc{};
    Background bg{};
    std::vector<Complex> p;
    std::vector<Dispersion> waves;
    /// a_ij for i < j, row-major upper triangle; a[i][j] is phase_shifts[i][j].
    std::vector<std::vector<Complex>> phase_shifts;

    std::size_t size() const { return p.size(); }
};

/// Computes every Omega_i, K_i and a_ij.
SolitonSpec make_soliton_spec(Family family, const EquationCoefficients& eqc, const Background& bg,
                              std::vector<Complex> p);

/// sum over subsets S of {1..N} of (prod_{i<j in S} a_ij) e^{sum_{i in S} eta_i}; the empty
/// subset is the constant 1. Terms are ordered by the binary value of the subset mask.
TauFunction build_tau(const SolitonSpec& spec);

/// The bilinear pair the family's tau functions satisfy: (eq12, eq13) for A, (eq17, eq18) for B.
std::pair<BilinearForm, BilinearForm> family_forms(Family family, const EquationCoefficients& eqc,
                                                   const Background& bg);

}  // namespace wavekit
