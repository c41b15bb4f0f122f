#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavekit/model.hpp"
#include "wavekit/wave_expr.hpp"

namespace wavekit {

/// Exponents of D_x^m D_y^n D_t^p.
struct DIndex {
    int m = 0;
    int n = 0;
    int p = 0;

    constexpr int total() const { return m + n + p; }
    friend bool operator==(const DIndex&, const DIndex&) = default;
};

inline constexpr int kMaxDOrder = 6;

/// sum_k coef_k D^{index_k} w.w
struct BilinearForm {
    std::string name;
    std::vector<std::pair<Complex, DIndex>> terms;

    int max_order() const;
};

/// Outcome of substituting a candidate solution into one equation at a set of points.
struct ResidualReport {
    std::string equation;
    double max_abs = 0.0;
    double max_rel = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    Point worst_point{};
    /// Points skipped because the tau function vanishes there.
    int singular_points = 0;
    int evaluated_points = 0;
    /// Free-form note (first failing point, suspected cause).
    std::string diagnostic;
};

/// Running max-reduction used by every residual check.
class ResidualAccumulator {
public:
    ResidualAccumulator(std::string equation, double tolerance);

    /// Records value with the magnitude scale of the largest summand that produced it.
    void add(const Point& p, Complex value, double term_scale);
    void add_singular() { ++report_.singular_points; }
    ResidualReport finish() const;

private:
    ResidualReport report_;
    bool finite_ = true;
};

/// The D-operator bilinear D_x^m D_y^n D_t^p f.g evaluated at a point via the binomial expansion.
Complex d_apply(const TauFunction& f, const TauFunction& g, const DIndex& idx, const Point& p);

/// Same, from precomputed jets. When scale is non-null it receives the largest |summand|.
Complex d_apply(const TauJet& f, const TauJet& g, const DIndex& idx, double* scale = nullptr);

void check_d_index(const DIndex& idx);

inline constexpr double kBilinearTolerance = 1e-9;

/// Evaluates sum coef * D^idx w.w at each point. The relative residual divides by
/// 1 + the largest individual summand of the expansion at that point.
ResidualReport bilinear_residual(const BilinearForm& form, const TauFunction& w, std::span<const Point> points,
                                 double tolerance = kBilinearTolerance);

/// D_yD_t + a D_x^3D_y - 3a a000 D_x^2 + (c - 3a b000) D_xD_y + d D_y^2
BilinearForm form_eq12(const EquationCoefficients& eqc, const Background& bg);
/// 3 a000 D_y^2 + 3 c000 D_xD_y - D_xD_y^3
BilinearForm form_eq13(const Background& bg);
/// a D_x^3D_y - 3a a000 D_x^2 + (c - 3a b000) D_xD_y + d D_y^2
BilinearForm form_eq17(const EquationCoefficients& eqc, const Background& bg);
/// b (3 a000 D_y^2 + 3 c000 D_xD_y - D_xD_y^3) - D_xD_t
///
/// The companion of form_eq17. The D_xD_t sign here is the one under which the
/// Family B dispersion relation and the PDE agree; see form_eq18_printed.
BilinearForm form_eq18(const EquationCoefficients& eqc, const Background& bg);
/// 3 a000 D_y^2 + 3 c000 D_xD_y - D_xD_y^3 + (1/b) D_xD_t, kept for comparison. Requires b != 0.
BilinearForm form_eq18_printed(const EquationCoefficients& eqc, const Background& bg);

struct SampleBox {
    double lo = -5.0;
    double hi = 5.0;
};

/// Deterministic quasi-random points: a Halton sequence (bases 2, 3, 5) with a seeded
/// Cranley-Patterson shift, mapped into box^3.
std::vector<Point> sample_points(std::size_t count, std::uint64_t seed, SampleBox box = {});

/// Checks that where both bilinear forms vanish the assembled fields satisfy (1a).
/// Returns the (1a) report; fails with a diagnostic naming the first point where the
/// bilinear pair passes but (1a) does not.
ResidualReport decomposition_implication(const TauFunction& w, const EquationCoefficients& eqc, const Background& bg,
                                         const BilinearForm& first, const BilinearForm& second,
                                         std::span<const Point> points, double bilinear_tol = kBilinearTolerance,
                                         double pde_tol = 1e-8);

}  // namespace wavekit
