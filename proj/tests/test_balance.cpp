#include <doctest.h>

#include <random>

#include "draws.hpp"
#include "oracles.hpp"
#include "wavekit/balance.hpp"

using namespace wavekit;

TEST_CASE("balance exponents and transform constants") {
    const BalanceSolution s = solve_balance_exponents();
    CHECK(std::array{s.m, s.n, s.s, s.p, s.q, s.g, s.l, s.r, s.h} == std::array{1, 1, 0, 2, 0, 0, 0, 2, 0});
    CHECK(std::array{s.a110, s.b200, s.c020, s.a100, s.a010, s.b100, s.c010} ==
          std::array{-2.0, -2.0, -2.0, 0.0, 0.0, 0.0, 0.0});
    CHECK(s.p == s.m + 1);
    CHECK(s.r == s.n + 1);
    CHECK(s.s == 0);
    CHECK(s.g == 0);
    CHECK(s.h == 0);
    for (int d : balance_defects(s)) CHECK(d == 0);
}

TEST_CASE("balance solution is the only small nonnegative one") {
    int found = 0;
    BalanceSolution t;
    for (t.m = 0; t.m <= 3; ++t.m)
        for (t.n = 0; t.n <= 3; ++t.n)
            for (t.s = 0; t.s <= 3; ++t.s)
                for (t.p = 0; t.p <= 3; ++t.p)
                    for (t.q = 0; t.q <= 3; ++t.q)
                        for (t.g = 0; t.g <= 3; ++t.g)
                            for (t.l = 0; t.l <= 3; ++t.l)
                                for (t.r = 0; t.r <= 3; ++t.r)
                                    for (t.h = 0; t.h <= 3; ++t.h) {
                                        const auto d = balance_defects(t);
                                        if (std::all_of(d.begin(), d.end(), [](int v) { return v == 0; })) {
                                            ++found;
                                            CHECK(std::array{t.m, t.n, t.s, t.p, t.q, t.g, t.l, t.r, t.h} ==
                                                  std::array{1, 1, 0, 2, 0, 0, 0, 2, 0});
                                        }
                                    }
    CHECK(found == 1);
}

TEST_CASE("transform identities hold for arbitrary tau functions") {
    std::mt19937_64 rng(12);
    const auto pts = sample_points(50, 3, {-1.0, 1.0});
    for (int i = 0; i < 10; ++i) {
        const TauFunction w = oracle::random_tau(rng, true);
        const TransformReport r = verify_transform({}, {}, w, pts);
        CHECK(r.pass());
    }
    const SolitonSpec spec = draws::random_soliton(rng, Family::A, 2);
    CHECK(verify_transform(spec.eqc, spec.bg, build_tau(spec), pts).pass());
}

TEST_CASE("mismatched transform coefficients break the identities") {
    const TauFunction w(1.0, {{1.0, WaveKind::Exp, {0.8, 0.6, 0.1}}, {0.5, WaveKind::Exp, {-0.4, 0.9, 0.2}}});
    const auto pts = sample_points(30, 1, {-1.0, 1.0});
    BalanceSolution k = solve_balance_exponents();
    k.b200 = -1.0;
    const TransformReport r = verify_transform({}, {}, w, pts, k);
    CHECK_FALSE(r.eq1b.pass);
    CHECK(r.eq1c.pass);
}

TEST_CASE("zero crossing of w is reported, not evaluated") {
    const TauFunction w(1.0, {{-1.0, WaveKind::Exp, {1.0, 0.0, 0.0}}});
    const std::vector<Point> pts{{0.0, 0.5, 0.0}, {0.5, 0.0, 0.0}, {0.0, -1.0, 2.0}};
    const TransformReport r = verify_transform({}, {}, w, pts);
    CHECK(r.eq1b.singular_points == 2);
    CHECK(r.eq1b.evaluated_points == 1);
    CHECK(r.pass());
}
