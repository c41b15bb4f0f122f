#pragma once

#include <array>
#include <span>

#include "wavekit/fields.hpp"
#include "wavekit/hirota.hpp"
#include "wavekit/model.hpp"
#include "wavekit/wave_expr.hpp"

namespace wavekit {

/// Balance numbers of the log-derivative ansatz
///   u ~ (ln w)_{m,n,s},  v ~ (ln w)_{p,q,g},  omega ~ (ln w)_{l,r,h}
/// and the transform coefficients that survive.
struct BalanceSolution {
    int m = 0, n = 0, s = 0;
    int p = 0, q = 0, g = 0;
    int l = 0, r = 0, h = 0;

    double a110 = 0.0, b200 = 0.0, c020 = 0.0;
    double a100 = 0.0, a010 = 0.0, b100 = 0.0, c010 = 0.0;

    friend bool operator==(const BalanceSolution&, const BalanceSolution&) = default;
};

/// Left-minus-right of each of the nine balance equalities for the given exponents.
std::array<int, 9> balance_defects(const BalanceSolution& s);

/// Unique nonnegative solution of the balance equalities, with the transform
/// coefficients a110 = b200 = c020 = -2 and a100 = a010 = b100 = c010 = 0.
BalanceSolution solve_balance_exponents();

struct TransformReport {
    ResidualReport eq1b;
    ResidualReport eq1c;

    bool pass() const { return eq1b.pass && eq1c.pass; }
};

/// Builds u, v, omega from w with the given transform coefficients,
///   u = a110 L_xy + a100 L_x + a010 L_y + a000,  v = b200 L_xx + b100 L_x + b000,
///   omega = c020 L_yy + c010 L_y + c000   (L = ln w),
/// and checks (1b) u_x = v_y and (1c) u_y = omega_x at the points. Points where w
/// vanishes are counted as singular, not evaluated.
TransformReport verify_transform(const EquationCoefficients& eqc, const Background& bg, const TauFunction& w,
                                 std::span<const Point> points, const BalanceSolution& coefficients,
                                 double tolerance = kIdentityTolerance);

/// verify_transform with the coefficients of solve_balance_exponents().
TransformReport verify_transform(const EquationCoefficients& eqc, const Background& bg, const TauFunction& w,
                                 std::span<const Point> points, double tolerance = kIdentityTolerance);

}  // namespace wavekit
