#pragma once

#include <span>
#include <vector>

#include "wavekit/hirota.hpp"
#include "wavekit/model.hpp"
#include "wavekit/wave_expr.hpp"

namespace wavekit {

/// Highest log-derivative order the field residuals need ((ln w)_xxxxy).
inline constexpr int kMaxLogOrder = 5;

/// |w| at or below this fraction of its term magnitude scale counts as a zero of w.
inline constexpr double kSingularThreshold = 1e-12;

bool is_singular(const TauJet& jet);

/// Mixed partials of L = ln w up to the order of the underlying jet.
///
/// Built from w L_e = w_e (e a unit direction): applying d^m to both sides gives
///   w L_{m+e} = w_{m+e} - sum_{q < m} C(m, q) w_{m-q} L_{q+e},
/// so each L-partial follows from exact w-partials and lower-order L-partials.
class LogJet {
public:
    /// Throws SingularPointError when w vanishes at the jet's point.
    explicit LogJet(const TauJet& w);

    int max_order() const { return max_order_; }
    const Complex& operator[](const Order& o) const;

private:
    std::size_t index(const Order& o) const;

    int max_order_;
    std::vector<Complex> values_;
};

/// (ln w)_{i,j,k} at a point; principal branch for order 0.
Complex log_partial(const TauFunction& w, const Order& order, const Point& p);

/// u, v, omega and every derivative the residuals of (1a)-(1c) use, at one point.
struct FieldValues {
    Complex u, v, omega;
    Complex u_t, u_x, u_y, u_xxx, u_yyy;
    Complex v_x, v_y;
    Complex omega_x, omega_y;
};

/// u = -2 (ln w)_xy + a000,  v = -2 (ln w)_xx + b000,  omega = -2 (ln w)_yy + c000.
class FieldTriple {
public:
    FieldTriple(TauFunction w, Background bg) : w_(std::move(w)), bg_(bg) {}

    const TauFunction& tau() const { return w_; }
    const Background& background() const { return bg_; }

    /// Throws SingularPointError where w vanishes.
    FieldValues at(const Point& p) const;

private:
    TauFunction w_;
    Background bg_;
};

FieldTriple assemble(TauFunction w, Background bg);

struct PdeReport {
    ResidualReport eq1a;
    ResidualReport eq1b;
    ResidualReport eq1c;

    bool pass() const { return eq1a.pass && eq1b.pass && eq1c.pass; }
};

inline constexpr double kPdeTolerance = 1e-8;
inline constexpr double kIdentityTolerance = 1e-10;

/// Below this |w| / magnitude_scale the fifth-order log partials in (1a) are dominated by
/// rounding in w itself, so pde_residual skips the point and counts it as singular.
inline constexpr double kPdeConditioningFloor = 3e-2;

/// Residuals of (1a), (1b), (1c). (1a) is scaled by 1 + the largest of its seven additive
/// terms; (1b) and (1c) by 1 + the larger side. Singular and ill-conditioned points are
/// skipped and counted.
PdeReport pde_residual(const FieldTriple& ft, const EquationCoefficients& eqc, std::span<const Point> points,
                       double tolerance = kPdeTolerance, double identity_tolerance = kIdentityTolerance);

struct RealnessReport {
    double max_im_u = 0.0;
    double max_im_v = 0.0;
    double max_im_omega = 0.0;
    int singular_points = 0;

    bool is_real(double tol = 1e-10) const { return max_im_u < tol && max_im_v < tol && max_im_omega < tol; }
};

RealnessReport realness_report(const FieldTriple& ft, std::span<const Point> points);

}  // namespace wavekit
