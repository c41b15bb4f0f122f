#include "wavekit/hirota.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "wavekit/fields.hpp"

namespace wavekit {

namespace {

constexpr std::array<std::array<double, 7>, 7> kBinomial = [] {
    std::array<std::array<double, 7>, 7> c{};
    for (int n = 0; n < 7; ++n) {
        c[n][0] = 1.0;
        for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0.0);
    }
    return c;
}();

std::string describe(const Point& p) {
    std::ostringstream os;
    os.precision(10);
    os << "(" << p.x << ", " << p.y << ", " << p.t << ")";
    return os.str();
}

// Radical inverse of i in the given base.
double radical_inverse(std::uint64_t i, unsigned base) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_from_bits(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

}  // namespace

int BilinearForm::max_order() const {
    int m = 0;
    for (const auto& [coef, idx] : terms) m = std::max(m, idx.total());
    return m;
}

ResidualAccumulator::ResidualAccumulator(std::string equation, double tolerance) {
    report_.equation = std::move(equation);
    report_.tolerance = tolerance;
}

void ResidualAccumulator::add(const Point& p, Complex value, double term_scale) {
    ++report_.evaluated_points;
    const double abs_value = std::abs(value);
    const double rel = abs_value / (1.0 + term_scale);
    if (!std::isfinite(abs_value) || !std::isfinite(rel)) {
        if (finite_) {
            report_.worst_point = p;
            report_.diagnostic = "non-finite residual at " + describe(p);
        }
        finite_ = false;
        return;
    }
    report_.max_abs = std::max(report_.max_abs, abs_value);
    if (rel > report_.max_rel || report_.evaluated_points == 1) {
        if (finite_) report_.worst_point = p;
        report_.max_rel = std::max(report_.max_rel, rel);
    }
}

ResidualReport ResidualAccumulator::finish() const {
    ResidualReport r = report_;
    r.pass = finite_ && r.max_rel < r.tolerance && (r.evaluated_points > 0 || r.singular_points == 0);
    if (r.evaluated_points == 0 && r.singular_points > 0) r.diagnostic = "every sample point is singular";
    if (!r.pass && r.diagnostic.empty()) {
        std::ostringstream os;
        os.precision(3);
        os << "relative residual " << std::scientific << r.max_rel << " exceeds tolerance " << r.tolerance << " at "
           << describe(r.worst_point);
        r.diagnostic = os.str();
    }
    return r;
}

void check_d_index(const DIndex& idx) {
    if (idx.m < 0 || idx.n < 0 || idx.p < 0) throw ParameterError("idx", "D-operator exponents must be nonnegative");
    if (idx.total() > kMaxDOrder) {
        throw ParameterError("idx", "D-operator order " + std::to_string(idx.total()) + " exceeds the limit of " +
                                        std::to_string(kMaxDOrder));
    }
}

Complex d_apply(const TauJet& f, const TauJet& g, const DIndex& idx, double* scale) {
    check_d_index(idx);
    Complex sum{};
    double largest = 0.0;
    for (int i = 0; i <= idx.m; ++i) {
        for (int j = 0; j <= idx.n; ++j) {
            for (int k = 0; k <= idx.p; ++k) {
                const double sign = ((i + j + k) % 2 == 0) ? 1.0 : -1.0;
                const double binom = kBinomial[idx.m][i] * kBinomial[idx.n][j] * kBinomial[idx.p][k];
                const Complex term =
                    sign * binom * f[{idx.m - i, idx.n - j, idx.p - k}] * g[{i, j, k}];
                sum += term;
                largest = std::max(largest, std::abs(term));
            }
        }
    }
    if (scale != nullptr) *scale = largest;
    return sum;
}

Complex d_apply(const TauFunction& f, const TauFunction& g, const DIndex& idx, const Point& p) {
    check_d_index(idx);
    const TauJet fj(f, p, idx.total());
    if (&f == &g || f == g) {
        // D^idx w.w with odd total order is antisymmetric in its arguments and vanishes.
        if (idx.total() % 2 == 1) return {};
        return d_apply(fj, fj, idx);
    }
    const TauJet gj(g, p, idx.total());
    return d_apply(fj, gj, idx);
}

ResidualReport bilinear_residual(const BilinearForm& form, const TauFunction& w, std::span<const Point> points,
                                 double tolerance) {
    ResidualAccumulator acc(form.name, tolerance);
    const int order = form.max_order();
    for (const Point& p : points) {
        const TauJet jet(w, p, order);
        Complex value{};
        double scale = 0.0;
        for (const auto& [coef, idx] : form.terms) {
            if (idx.total() % 2 == 1) continue;
            double s = 0.0;
            value += coef * d_apply(jet, jet, idx, &s);
            scale = std::max(scale, std::abs(coef) * s);
        }
        acc.add(p, value, scale);
    }
    return acc.finish();
}

BilinearForm form_eq12(const EquationCoefficients& eqc, const Background& bg) {
    const double a = eqc.a;
    return {"eq12",
            {{1.0, {0, 1, 1}},
             {a, {3, 1, 0}},
             {-3.0 * a * bg.a000, {2, 0, 0}},
             {eqc.c - 3.0 * a * bg.b000, {1, 1, 0}},
             {eqc.d, {0, 2, 0}}}};
}

BilinearForm form_eq13(const Background& bg) {
    return {"eq13", {{3.0 * bg.a000, {0, 2, 0}}, {3.0 * bg.c000, {1, 1, 0}}, {-1.0, {1, 3, 0}}}};
}

BilinearForm form_eq17(const EquationCoefficients& eqc, const Background& bg) {
    const double a = eqc.a;
    return {"eq17",
            {{a, {3, 1, 0}},
             {-3.0 * a * bg.a000, {2, 0, 0}},
             {eqc.c - 3.0 * a * bg.b000, {1, 1, 0}},
             {eqc.d, {0, 2, 0}}}};
}

BilinearForm form_eq18(const EquationCoefficients& eqc, const Background& bg) {
    const double b = eqc.b;
    return {"eq18",
            {{3.0 * b * bg.a000, {0, 2, 0}}, {3.0 * b * bg.c000, {1, 1, 0}}, {-b, {1, 3, 0}}, {-1.0, {1, 0, 1}}}};
}

BilinearForm form_eq18_printed(const EquationCoefficients& eqc, const Background& bg) {
    if (eqc.b == 0.0) throw ParameterError("b", "b must be nonzero for the 1/b D_xD_t term");
    return {"eq18_printed",
            {{3.0 * bg.a000, {0, 2, 0}}, {3.0 * bg.c000, {1, 1, 0}}, {-1.0, {1, 3, 0}}, {1.0 / eqc.b, {1, 0, 1}}}};
}

std::vector<Point> sample_points(std::size_t count, std::uint64_t seed, SampleBox box) {
    std::uint64_t state = seed;
    const double shift[3] = {unit_from_bits(splitmix64(state)), unit_from_bits(splitmix64(state)),
                             unit_from_bits(splitmix64(state))};
    const unsigned bases[3] = {2, 3, 5};
    std::vector<Point> out;
    out.reserve(count);
    const double width = box.hi - box.lo;
    for (std::size_t i = 0; i < count; ++i) {
        double u[3];
        for (int d = 0; d < 3; ++d) {
            double v = radical_inverse(i + 1, bases[d]) + shift[d];
            u[d] = v - std::floor(v);
        }
        out.push_back({box.lo + width * u[0], box.lo + width * u[1], box.lo + width * u[2]});
    }
    return out;
}

ResidualReport decomposition_implication(const TauFunction& w, const EquationCoefficients& eqc, const Background& bg,
                                         const BilinearForm& first, const BilinearForm& second,
                                         std::span<const Point> points, double bilinear_tol, double pde_tol) {
    const FieldTriple ft = assemble(w, bg);
    ResidualReport r;
    r.equation = "implication(" + first.name + "+" + second.name + "=>1a)";
    r.tolerance = pde_tol;
    r.pass = true;
    for (const Point& p : points) {
        const Point single[1] = {p};
        const ResidualReport b1 = bilinear_residual(first, w, single, bilinear_tol);
        const ResidualReport b2 = bilinear_residual(second, w, single, bilinear_tol);
        if (!(b1.pass && b2.pass)) continue;  // premise false: nothing to check here
        const PdeReport pde = pde_residual(ft, eqc, single, pde_tol);
        if (pde.eq1a.singular_points > 0) {
            ++r.singular_points;
            continue;
        }
        ++r.evaluated_points;
        r.max_abs = std::max(r.max_abs, pde.eq1a.max_abs);
        if (pde.eq1a.max_rel >= r.max_rel) {
            r.max_rel = pde.eq1a.max_rel;
            if (r.pass) r.worst_point = p;
        }
        if (!pde.eq1a.pass && r.pass) {
            r.pass = false;
            r.worst_point = p;
            r.diagnostic = "bilinear pair holds but (1a) fails at " + describe(p);
        }
    }
    return r;
}

}  // namespace wavekit
