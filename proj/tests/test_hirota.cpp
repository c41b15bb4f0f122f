#include <doctest.h>

#include <random>

#include "draws.hpp"
#include "oracles.hpp"
#include "wavekit/hirota.hpp"
#include "wavekit/soliton.hpp"

using namespace wavekit;

TEST_CASE("odd D-orders vanish on identical arguments") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const TauFunction w = oracle::random_tau(rng);
        const Point p{0.1 * i - 1.0, 0.3, -0.4};
        CHECK(d_apply(w, w, {1, 0, 0}, p) == Complex{});
        CHECK(d_apply(w, w, {1, 2, 0}, p) == Complex{});
        CHECK(d_apply(w, w, {1, 1, 1}, p) == Complex{});
        CHECK(d_apply(w, w, {0, 3, 0}, p) == Complex{});
    }
}

TEST_CASE("D_x^2 of 1 + e^x at the origin") {
    const TauFunction w(1.0, {{1.0, WaveKind::Exp, {1.0, 0.0, 0.0}}});
    // 2 (w w_xx - w_x^2) = 2 e^x (1 + e^x) - 2 e^2x = 2 e^x
    CHECK(std::abs(d_apply(w, w, {2, 0, 0}, {0, 0, 0}) - 2.0) < 1e-14);
}

TEST_CASE("gauge property on a single exponential") {
    const TauFunction w(0.0, {{1.0, WaveKind::Exp, {1.0, 2.0, 0.0}}});
    for (int m = 0; m <= 2; ++m) {
        for (int n = 0; n <= 2; ++n) {
            for (int p = 0; p <= 2; ++p) {
                if (m + n + p == 0) continue;
                double scale = 0.0;
                const TauJet jet(w, {0.2, 0.1, 0.3}, m + n + p);
                const Complex v = d_apply(jet, jet, {m, n, p}, &scale);
                CHECK(std::abs(v) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("d_apply agrees with the defining finite difference") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        const TauFunction f = oracle::random_tau(rng);
        const TauFunction g = oracle::random_tau(rng);
        const oracle::Field ff = [&](const Point& q) { return oracle::eval_tau(f, q); };
        const oracle::Field gg = [&](const Point& q) { return oracle::eval_tau(g, q); };
        const Point p{0.2, -0.3, 0.5};
        for (const DIndex idx : {DIndex{1, 0, 0}, DIndex{2, 1, 0}, DIndex{1, 1, 1}, DIndex{0, 0, 2}}) {
            const Complex exact = d_apply(f, g, idx, p);
            const Complex fd = oracle::hirota(ff, gg, p, {idx.m, idx.n, idx.p});
            CHECK(std::abs(exact - fd) < 1e-6 * (1.0 + std::abs(exact)));
            // Swapping the arguments flips the sign of odd orders.
            const double sign = idx.total() % 2 ? -1.0 : 1.0;
            CHECK(std::abs(d_apply(g, f, idx, p) - sign * exact) < 1e-13 * (1.0 + std::abs(exact)));
        }
    }
}

TEST_CASE("D-order limit") {
    const TauFunction w(1.0);
    CHECK_THROWS_AS(d_apply(w, w, {4, 3, 0}, {}), ParameterError);
    CHECK_THROWS_AS(d_apply(w, w, {-1, 0, 0}, {}), ParameterError);
}

TEST_CASE("constant tau gives zero residual") {
    const auto pts = sample_points(20, 1);
    const EquationCoefficients eqc{1.0, 2.0, 0.3, -0.4};
    const Background bg{0.5, -0.2, 0.0};
    for (const auto& form : {form_eq12(eqc, bg), form_eq13(bg), form_eq17(eqc, bg), form_eq18(eqc, bg)}) {
        const ResidualReport r = bilinear_residual(form, TauFunction(1.0), pts);
        CHECK(r.pass);
        CHECK(r.max_abs == 0.0);
        CHECK(r.evaluated_points == 20);
    }
}

TEST_CASE("sample points are deterministic and inside the box") {
    const auto a = sample_points(50, 42, {-2.0, 3.0});
    const auto b = sample_points(50, 42, {-2.0, 3.0});
    CHECK(a == b);
    CHECK(sample_points(50, 43, {-2.0, 3.0}) != a);
    for (const auto& p : a) {
        CHECK(p.x >= -2.0);
        CHECK(p.x < 3.0);
        CHECK(p.y >= -2.0);
        CHECK(p.t < 3.0);
    }
}

TEST_CASE("soliton taus satisfy their bilinear pair and the implication holds") {
    std::mt19937_64 rng(8);
    const auto pts = sample_points(50, 7);
    for (auto family : {Family::A, Family::B}) {
        for (std::size_t n = 1; n <= 2; ++n) {
            const SolitonSpec spec = draws::random_soliton(rng, family, n);
            const TauFunction w = build_tau(spec);
            const auto [first, second] = family_forms(family, spec.eqc, spec.bg);
            CHECK(bilinear_residual(first, w, pts).pass);
            CHECK(bilinear_residual(second, w, pts).pass);
            const ResidualReport imp = decomposition_implication(w, spec.eqc, spec.bg, first, second, pts);
            CHECK_MESSAGE(imp.pass, imp.diagnostic);
        }
    }
}

TEST_CASE("printed sign of the Family B companion form fails") {
    std::mt19937_64 rng(21);
    const auto pts = sample_points(50, 7);
    const SolitonSpec spec = draws::random_soliton(rng, Family::B, 2);
    const TauFunction w = build_tau(spec);
    CHECK(bilinear_residual(form_eq18(spec.eqc, spec.bg), w, pts).pass);
    CHECK_FALSE(bilinear_residual(form_eq18_printed(spec.eqc, spec.bg), w, pts).pass);
    CHECK_THROWS_AS(form_eq18_printed({1.0, 0.0, 0.0, 1.0}, {}), ParameterError);
}

TEST_CASE("three-soliton existence condition is detected") {
    std::mt19937_64 rng(4);
    const auto pts = sample_points(50, 2);
    const SolitonSpec spec = draws::random_soliton(rng, Family::A, 3);
    const TauFunction good = build_tau(spec);
    const auto [first, second] = family_forms(Family::A, spec.eqc, spec.bg);
    REQUIRE(bilinear_residual(first, good, pts).pass);

    // The last term carries a_12 a_13 a_23; scale it by 1.5.
    std::vector<WaveTerm> terms = good.terms();
    terms.back().coefficient *= 1.5;
    const TauFunction bad(good.constant(), terms);
    const ResidualReport r1 = bilinear_residual(first, bad, pts);
    const ResidualReport r2 = bilinear_residual(second, bad, pts);
    CHECK(std::max(r1.max_rel, r2.max_rel) > 1e-3);
    CHECK_FALSE(r1.pass);
}
