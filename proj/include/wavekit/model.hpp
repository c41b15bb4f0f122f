#pragma once

#include "wavekit/wave_expr.hpp"

namespace wavekit {

/// Constants a, b, c, d of
///   u_t + a u_xxx + b u_yyy + c u_x + d u_y - 3a (uv)_x - 3b (u w)_y = 0,  u_x = v_y,  u_y = w_x.
struct EquationCoefficients {
    double a = 1.0;
    double b = 1.0;
    double c = 0.0;
    double d = 0.0;

    friend bool operator==(const EquationCoefficients&, const EquationCoefficients&) = default;
};

/// Constant solution u = a000, v = b000, omega = c000 around which solutions are built.
struct Background {
    Complex a000{};
    Complex b000{};
    Complex c000{};

    friend bool operator==(const Background&, const Background&) = default;
};

}  // namespace wavekit
