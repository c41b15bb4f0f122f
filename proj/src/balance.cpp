#include "wavekit/balance.hpp"

#include <algorithm>
#include <cmath>

namespace wavekit {

std::array<int, 9> balance_defects(const BalanceSolution& s) {
    // u_xxx against (uv)_x, u_x against v_y, u_y against omega_x, one row per exponent.
    return {
        (s.m + s.p + 1) - (s.m + 3),
        (s.n + s.q) - s.n,
        (s.s + s.g) - s.s,
        (s.m + 1) - s.p,
        s.n - (s.q + 1),
        s.s - s.g,
        s.m - (s.l + 1),
        (s.n + 1) - s.r,
        s.s - s.h,
    };
}

BalanceSolution solve_balance_exponents() {
    BalanceSolution sol;
    sol.p = 2;            // m + p + 1 = m + 3
    sol.m = sol.p - 1;    // m + 1 = p
    sol.q = 0;            // n + q = n
    sol.n = sol.q + 1;    // n = q + 1
    sol.g = 0;            // s + g = s
    sol.s = sol.g;        // s = g
    sol.l = sol.m - 1;    // m = l + 1
    sol.r = sol.n + 1;    // n + 1 = r
    sol.h = sol.s;        // s = h

    // 12 a110 (a110 + 2) = 0 with a110 != 0, and b200 = c020 = a110.
    sol.a110 = -2.0;
    sol.b200 = sol.a110;
    sol.c020 = sol.a110;
    sol.a100 = sol.a010 = sol.b100 = sol.c010 = 0.0;
    return sol;
}

TransformReport verify_transform(const EquationCoefficients& /*eqc*/, const Background& bg, const TauFunction& w,
                                 std::span<const Point> points, const BalanceSolution& k, double tolerance) {
    ResidualAccumulator r1b("1b", tolerance);
    ResidualAccumulator r1c("1c", tolerance);
    for (const Point& p : points) {
        const TauJet jet(w, p, 3);
        if (is_singular(jet)) {
            r1b.add_singular();
            r1c.add_singular();
            continue;
        }
        const LogJet l(jet);
        (void)bg;  // constants drop out of every derivative
        const Complex u_x = k.a110 * l[{2, 1, 0}] + k.a100 * l[{2, 0, 0}] + k.a010 * l[{1, 1, 0}];
        const Complex u_y = k.a110 * l[{1, 2, 0}] + k.a100 * l[{1, 1, 0}] + k.a010 * l[{0, 2, 0}];
        const Complex v_y = k.b200 * l[{2, 1, 0}] + k.b100 * l[{1, 1, 0}];
        const Complex omega_x = k.c020 * l[{1, 2, 0}] + k.c010 * l[{1, 1, 0}];
        r1b.add(p, u_x - v_y, std::max(std::abs(u_x), std::abs(v_y)));
        r1c.add(p, u_y - omega_x, std::max(std::abs(u_y), std::abs(omega_x)));
    }
    return {r1b.finish(), r1c.finish()};
}

TransformReport verify_transform(const EquationCoefficients& eqc, const Background& bg, const TauFunction& w,
                                 std::span<const Point> points, double tolerance) {
    return verify_transform(eqc, bg, w, points, solve_balance_exponents(), tolerance);
}

}  // namespace wavekit
