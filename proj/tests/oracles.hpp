#pragma once

// Independent reference computations for the tests: a scalar tau evaluator written directly
// from the term data, and Romberg-extrapolated central finite differences.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "wavekit/wave_expr.hpp"

namespace oracle {

using wavekit::Complex;
using wavekit::Point;

inline Complex eval_tau(const wavekit::TauFunction& w, const Point& p) {
    Complex sum = w.constant();
    for (const auto& t : w.terms()) {
        const Complex z = t.phase.alpha * p.x + t.phase.beta * p.y + t.phase.gamma * p.t + t.phase.delta;
        Complex f;
        switch (t.kind) {
            case wavekit::WaveKind::Exp: f = std::exp(z); break;
            case wavekit::WaveKind::Cos: f = std::cos(z); break;
            case wavekit::WaveKind::Sin: f = std::sin(z); break;
            case wavekit::WaveKind::Cosh: f = std::cosh(z); break;
            case wavekit::WaveKind::Sinh: f = std::sinh(z); break;
        }
        sum += t.coefficient * f;
    }
    return sum;
}

using Field = std::function<Complex(const Point&)>;

inline double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Tensor product of second-order central stencils for d^(i,j,k), step h.
inline Complex central(const Field& f, const Point& p, std::array<int, 3> order, double h) {
    Complex sum{};
    for (int a = 0; a <= order[0]; ++a) {
        for (int b = 0; b <= order[1]; ++b) {
            for (int c = 0; c <= order[2]; ++c) {
                const double w = ((a + b + c) % 2 ? -1.0 : 1.0) * binom(order[0], a) * binom(order[1], b) *
                                 binom(order[2], c);
                const Point q{p.x + (order[0] / 2.0 - a) * h, p.y + (order[1] / 2.0 - b) * h,
                              p.t + (order[2] / 2.0 - c) * h};
                sum += w * f(q);
            }
        }
    }
    return sum / std::pow(h, order[0] + order[1] + order[2]);
}

/// Central differences at h, h/2, ..., h/2^(levels-1) combined by Romberg extrapolation.
inline Complex derivative(const Field& f, const Point& p, std::array<int, 3> order, double h = 0.4,
                          int levels = 5) {
    if (order[0] + order[1] + order[2] == 0) return f(p);
    std::vector<Complex> row;
    for (int i = 0; i < levels; ++i) row.push_back(central(f, p, order, h / std::pow(2.0, i)));
    // The stencils are symmetric, so the error expands in even powers of h.
    for (int k = 1; k < levels; ++k) {
        const double factor = std::pow(4.0, k);
        for (int i = levels - 1; i >= k; --i) row[i] = (factor * row[i] - row[i - 1]) / (factor - 1.0);
    }
    return row.back();
}

/// D_x^m D_y^n D_t^p f.g from its definition: d/ds of f(p + s) g(p - s) at s = 0.
inline Complex hirota(const Field& f, const Field& g, const Point& p, std::array<int, 3> idx) {
    const Field prod = [&](const Point& s) {
        return f({p.x + s.x, p.y + s.y, p.t + s.t}) * g({p.x - s.x, p.y - s.y, p.t - s.t});
    };
    return derivative(prod, {0.0, 0.0, 0.0}, idx);
}

inline Complex random_complex(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

/// Constant plus 1..4 terms of random kind with complex coefficients and phases of modulus <= 1.
inline wavekit::TauFunction random_tau(std::mt19937_64& rng, bool real_phases = false) {
    std::uniform_int_distribution<int> nterms(1, 4), kind(0, 4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<wavekit::WaveTerm> terms;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        wavekit::WaveTerm t;
        t.coefficient = random_complex(rng, 1.0);
        t.kind = static_cast<wavekit::WaveKind>(kind(rng));
        if (real_phases) {
            t.phase = {u(rng), u(rng), u(rng), u(rng)};
        } else {
            t.phase = {random_complex(rng, 0.7), random_complex(rng, 0.7), random_complex(rng, 0.7),
                       random_complex(rng, 0.7)};
        }
        terms.push_back(t);
    }
    return wavekit::TauFunction(random_complex(rng, 1.0) + Complex{2.0, 0.0}, std::move(terms));
}

}  // namespace oracle
