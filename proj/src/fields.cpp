#include "wavekit/fields.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace wavekit {

namespace {

constexpr std::array<std::array<double, 9>, 9> kBinomial = [] {
    std::array<std::array<double, 9>, 9> c{};
    for (int n = 0; n < 9; ++n) {
        c[n][0] = 1.0;
        for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
    }
    return c;
}();

std::string point_string(const Point& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << p.x << ", " << p.y << ", " << p.t << ")";
    return os.str();
}

Complex L(const LogJet& jet, int x, int y, int t) { return jet[{x, y, t}]; }

}  // namespace

bool is_singular(const TauJet& jet) {
    return std::abs(jet[{0, 0, 0}]) <= kSingularThreshold * std::max(1.0, jet.scale());
}

LogJet::LogJet(const TauJet& w) : max_order_(w.max_order()) {
    if (is_singular(w)) {
        throw SingularPointError(w.point(), "tau function vanishes at " + point_string(w.point()));
    }
    const int n = max_order_ + 1;
    values_.assign(static_cast<std::size_t>(n * n * n), Complex{});
    const Complex w0 = w[{0, 0, 0}];
    values_[0] = std::log(w0);

    for (int total = 1; total <= max_order_; ++total) {
        for (int i = total; i >= 0; --i) {
            for (int j = total - i; j >= 0; --j) {
                const int k = total - i - j;
                const Order target{i, j, k};
                // Peel one unit direction e off the target: target = m + e.
                Order m = target;
                Order e{};
                if (i > 0) { --m.x; e.x = 1; }
                else if (j > 0) { --m.y; e.y = 1; }
                else { --m.t; e.t = 1; }

                Complex acc = w[target];
                for (int qx = 0; qx <= m.x; ++qx) {
                    for (int qy = 0; qy <= m.y; ++qy) {
                        for (int qt = 0; qt <= m.t; ++qt) {
                            if (qx == m.x && qy == m.y && qt == m.t) continue;
                            const double binom = kBinomial[m.x][qx] * kBinomial[m.y][qy] * kBinomial[m.t][qt];
                            acc -= binom * w[{m.x - qx, m.y - qy, m.t - qt}] *
                                   values_[index({qx + e.x, qy + e.y, qt + e.t})];
                        }
                    }
                }
                values_[index(target)] = acc / w0;
            }
        }
    }
}

const Complex& LogJet::operator[](const Order& o) const {
    check_partial_order(o, max_order_);
    return values_[index(o)];
}

std::size_t LogJet::index(const Order& o) const {
    const int n = max_order_ + 1;
    return static_cast<std::size_t>((o.x * n + o.y) * n + o.t);
}

Complex log_partial(const TauFunction& w, const Order& order, const Point& p) {
    check_partial_order(order, kMaxLogOrder);
    TauJet jet(w, p, order.total());
    LogJet log_jet(jet);
    return log_jet[order];
}

FieldValues FieldTriple::at(const Point& p) const {
    TauJet jet(w_, p, kMaxLogOrder);
    LogJet l(jet);
    FieldValues f;
    f.u = -2.0 * L(l, 1, 1, 0) + bg_.a000;
    f.v = -2.0 * L(l, 2, 0, 0) + bg_.b000;
    f.omega = -2.0 * L(l, 0, 2, 0) + bg_.c000;
    f.u_t = -2.0 * L(l, 1, 1, 1);
    f.u_x = -2.0 * L(l, 2, 1, 0);
    f.u_y = -2.0 * L(l, 1, 2, 0);
    f.u_xxx = -2.0 * L(l, 4, 1, 0);
    f.u_yyy = -2.0 * L(l, 1, 4, 0);
    f.v_x = -2.0 * L(l, 3, 0, 0);
    f.v_y = -2.0 * L(l, 2, 1, 0);
    f.omega_x = -2.0 * L(l, 1, 2, 0);
    f.omega_y = -2.0 * L(l, 0, 3, 0);
    return f;
}

FieldTriple assemble(TauFunction w, Background bg) { return FieldTriple(std::move(w), bg); }

PdeReport pde_residual(const FieldTriple& ft, const EquationCoefficients& eqc, std::span<const Point> points,
                       double tolerance, double identity_tolerance) {
    ResidualAccumulator r1a("1a", tolerance);
    ResidualAccumulator r1b("1b", identity_tolerance);
    ResidualAccumulator r1c("1c", identity_tolerance);
    const TauFunction& w = ft.tau();
    for (const Point& p : points) {
        if (std::abs(w(p)) < kPdeConditioningFloor * w.magnitude_scale(p)) {
            r1a.add_singular();
            r1b.add_singular();
            r1c.add_singular();
            continue;
        }
        FieldValues f;
        try {
            f = ft.at(p);
        } catch (const SingularPointError&) {
            r1a.add_singular();
            r1b.add_singular();
            r1c.add_singular();
            continue;
        }
        const std::array<Complex, 7> terms = {
            f.u_t,
            eqc.a * f.u_xxx,
            eqc.b * f.u_yyy,
            eqc.c * f.u_x,
            eqc.d * f.u_y,
            -3.0 * eqc.a * (f.u_x * f.v + f.u * f.v_x),
            -3.0 * eqc.b * (f.u_y * f.omega + f.u * f.omega_y),
        };
        Complex sum{};
        double scale = 0.0;
        for (const auto& term : terms) {
            sum += term;
            scale = std::max(scale, std::abs(term));
        }
        r1a.add(p, sum, scale);
        r1b.add(p, f.u_x - f.v_y, std::max(std::abs(f.u_x), std::abs(f.v_y)));
        r1c.add(p, f.u_y - f.omega_x, std::max(std::abs(f.u_y), std::abs(f.omega_x)));
    }
    return {r1a.finish(), r1b.finish(), r1c.finish()};
}

RealnessReport realness_report(const FieldTriple& ft, std::span<const Point> points) {
    RealnessReport r;
    for (const Point& p : points) {
        try {
            const FieldValues f = ft.at(p);
            r.max_im_u = std::max(r.max_im_u, std::abs(f.u.imag()));
            r.max_im_v = std::max(r.max_im_v, std::abs(f.v.imag()));
            r.max_im_omega = std::max(r.max_im_omega, std::abs(f.omega.imag()));
        } catch (const SingularPointError&) {
            ++r.singular_points;
        }
    }
    return r;
}

}  // namespace wavekit
