// Parameter formulas of the solved three-wave cases, one function per branch.

#include <cmath>
#include <numbers>

#include "threewave_catalog.hpp"

namespace wavekit::detail {

namespace {

constexpr Complex I = kI;

Complex sq(Complex x) { return x * x; }
Complex cube(Complex x) { return x * x * x; }
Complex quart(Complex x) { return sq(sq(x)); }

/// k-th complex root of z of the given degree, k = root_index.
Complex root_of(Complex z, int degree, const CaseVars& v) {
    const Complex k = v.has("root_index") ? v["root_index"] : Complex{};
    const double idx = k.real();
    if (k.imag() != 0.0 || idx != std::floor(idx) || idx < 0 || idx >= degree) {
        throw ParameterError("root_index", "root_index must be an integer in [0, " + std::to_string(degree - 1) + "]");
    }
    return std::pow(z, 1.0 / degree) * std::exp(2.0 * std::numbers::pi * idx / degree * I);
}

// Case 1: d1 = d2 = 0.

void case1_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], b0 = v["b000"], c0 = v["c000"];
    v.zero({"d1", "d2"});
    v.nonzero(b1, "beta1");
    v.set("a000", a1 * (4.0 * sq(b1) - 3.0 * c0) / (3.0 * b1));
    v.set("gamma1", -(3.0 * a * c0 * cube(a1) - 3.0 * a * b0 * a1 * sq(b1) + c * a1 * sq(b1) + d * cube(b1)) / sq(b1));
}

// Case 2: d1 = d3 = 0.

void case2_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], b0 = v["b000"], c0 = v["c000"];
    v.zero({"d1", "d3", "alpha3", "beta3", "gamma3"});
    v.nonzero(b1, "beta1");
    v.set("a000", a1 * (sq(b1) - 3.0 * c0) / (3.0 * b1));
    v.set("gamma1", -(3.0 * a * c0 * cube(a1) - 3.0 * a * b0 * a1 * sq(b1) + c * a1 * sq(b1) + d * cube(b1)) / sq(b1));
}

void case2_2(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"d1", "d3", "a000", "beta3"});
    v.set("c000", sq(b1) / 3.0);
    v.set("gamma1", 3.0 * a * b0 * a1 - a * cube(a1) - 3.0 * a * a1 * sq(a3) - c * a1 - d * b1);
    v.set("gamma3", 3.0 * a * b0 * a3 - 3.0 * a * sq(a1) * a3 - a * cube(a3) - c * a3);
}

// Case 3: d2 = d3 = 0.

void case3_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], a2 = v["alpha2"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"d2", "d3", "a000", "beta2"});
    v.set("c000", sq(b1) / 3.0);
    v.set("gamma1", 3.0 * a * a1 * sq(a2) - a * cube(a1) + 3.0 * a * b0 * a1 - c * a1 - d * b1);
    v.set("gamma2", 3.0 * a * b0 * a2 - 3.0 * a * sq(a1) * a2 + a * cube(a2) - c * a2);
}

void case3_2(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b2 = v["beta2"], b0 = v["b000"];
    v.zero({"d2", "d3", "a000", "alpha2"});
    v.set("c000", -4.0 * sq(b2) / 3.0);
    v.set("beta1", e * I * b2);
    v.set("gamma1", 3.0 * a * b0 * a1 - a * cube(a1) - e * I * d * b2 - c * a1);
    v.set("gamma2", -d * b2);
}

// Case 4: d1 = 0.

void case4_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], b3 = v["beta3"], b0 = v["b000"];
    v.zero({"d1", "a000", "alpha3", "beta1"});
    v.set("c000", sq(b3) / 3.0);
    v.set("gamma1", -a1 * (a * sq(a1) - 3.0 * a * b0 + c));
    v.set("gamma3", -b3 * d);
}

void case4_2(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], g3 = v["gamma3"], d2 = v["d2"], d3 = v["d3"],
                  b0 = v["b000"];
    v.zero({"d1", "a000"});
    const Complex q = v.nonzero(sq(d2) - 4.0 * d3, "d2^2-4d3");
    v.nonzero(d, "d");
    const Complex beta = -(4.0 * a * sq(d2) * cube(a3) + 12.0 * a * d3 * cube(a1) - 12.0 * a * d3 * sq(a1) * a3 -
                           12.0 * a * d3 * a1 * sq(a3) - 3.0 * a * b0 * sq(d2) * a3) /
                             (d * q) -
                         (12.0 * a * b0 * d3 * a3 + c * sq(d2) * a3 - 4.0 * c * d3 * a3 + sq(d2) * g3 - 4.0 * d3 * g3 -
                          4.0 * a * d3 * cube(a3)) /
                             (d * q);
    v.set("beta1", beta);
    v.set("beta3", beta);
    v.set("c000", 4.0 * sq(beta) / 3.0);
    // The printed numerator has three operators missing between adjacent products; they are
    // restored as "+" (the reading that maps onto branch 4 under xi3 -> -xi3).
    v.set("gamma1", -(a * cube(a1) * sq(d2) + 3.0 * a * sq(d2) * sq(a1) * a3 + 3.0 * a * sq(d2) * a1 * sq(a3) -
                      7.0 * a * sq(d2) * cube(a3) - 28.0 * a * d3 * cube(a1) + 12.0 * a * d3 * sq(a1) * a3) /
                        q -
                        (c * sq(d2) * a1 - c * sq(d2) * a3 - 4.0 * c * d3 * a1 + 4.0 * c * d3 * a3 - sq(d2) * g3 +
                         4.0 * d3 * g3) /
                            q -
                        (12.0 * a * d3 * a1 * sq(a3) - 3.0 * a * b0 * sq(d2) * a1 + 4.0 * a * d3 * cube(a3) +
                         3.0 * a * b0 * sq(d2) * a3 + 12.0 * a * b0 * d3 * a1 - 12.0 * a * b0 * d3 * a3) /
                            q);
}

void case4_3_impl(CaseVars& v, bool corrected) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], b0 = v["b000"], c0 = v["c000"];
    v.zero({"d1"});
    const Complex a3 = e * a1, b3 = e * b1;
    v.set("alpha3", a3);
    v.set("beta3", b3);
    v.nonzero(b3, "beta3");
    v.set("a000", a3 * (4.0 * sq(b3) - 3.0 * c0) / (3.0 * b3));
    const Complex ax = corrected ? a1 : a3;
    const Complex g1 = -(3.0 * a * c0 * cube(a1) - 3.0 * a * b0 * ax * sq(b1) + c * ax * sq(b3) + d * cube(b1)) / sq(b3);
    v.set("gamma1", g1);
    v.set("gamma3", e * g1);
}

void case4_3(CaseVars& v) { case4_3_impl(v, false); }
void case4_3_corrected(CaseVars& v) { case4_3_impl(v, true); }

void case4_4(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], g3 = v["gamma3"], d2 = v["d2"], d3 = v["d3"],
                  b0 = v["b000"];
    v.zero({"d1", "a000"});
    const Complex q = v.nonzero(sq(d2) - 4.0 * d3, "d2^2-4d3");
    v.nonzero(d, "d");
    const Complex beta = -(4.0 * a * d3 * cube(a3) - 4.0 * a * sq(d2) * cube(a3) + 12.0 * a * d3 * cube(a1) +
                           12.0 * a * d3 * sq(a1) * a3 - 12.0 * a * d3 * a1 * sq(a3)) /
                             (d * q) -
                         (3.0 * a * b0 * sq(d2) * a3 - 12.0 * a * b0 * d3 * a3 - c * sq(d2) * a3 + 4.0 * c * d3 * a3 -
                          sq(d2) * g3 + 4.0 * d3 * g3) /
                             (d * q);
    v.set("beta1", beta);
    v.set("beta3", -beta);
    v.set("c000", 4.0 * sq(beta) / 3.0);
    v.set("gamma1", -(a * sq(d2) * cube(a1) - 3.0 * a * sq(d2) * sq(a1) * a3 + 3.0 * a * sq(d2) * a1 * sq(a3) +
                      7.0 * a * sq(d2) * cube(a3) - 28.0 * a * d3 * cube(a1) - 12.0 * a * d3 * sq(a1) * a3) /
                        q -
                        (c * sq(d2) * a1 + c * sq(d2) * a3 - 4.0 * c * d3 * a1 - 4.0 * c * d3 * a3 + sq(d2) * g3 -
                         4.0 * d3 * g3) /
                            q -
                        (12.0 * a * d3 * a1 * sq(a3) - 3.0 * a * b0 * sq(d2) * a1 - 4.0 * a * d3 * cube(a3) -
                         3.0 * a * a3 * b0 * sq(d2) + 12.0 * a * b0 * d3 * a1 + 12.0 * a * b0 * d3 * a3) /
                            q);
}

void case4_5_impl(CaseVars& v, bool corrected) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex b1 = v["beta1"], a3 = v["alpha3"], b0 = v["b000"];
    v.zero({"d1", "a000", "alpha1", "beta3"});
    v.set("c000", corrected ? sq(b1) / 3.0 : Complex{});
    v.set("gamma1", -d * b1);
    v.set("gamma3", 3.0 * a * b0 * a3 - a * cube(a3) - c * a3);
}

void case4_5(CaseVars& v) { case4_5_impl(v, false); }
void case4_5_corrected(CaseVars& v) { case4_5_impl(v, true); }

// Case 5: d1 = 0, d3 = d2^2/4.

void case5_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], g3 = v["gamma3"], d2 = v["d2"], b0 = v["b000"],
                  c0 = v["c000"];
    v.zero({"d1"});
    v.set("d3", sq(d2) / 4.0);
    const Complex a3 = e * a1, b3 = e * b1;
    v.set("alpha3", a3);
    v.set("beta3", b3);
    v.nonzero(b1, "beta1");
    v.set("a000", a3 * (4.0 * sq(b3) - 3.0 * c0) / (3.0 * b3));
    v.set("gamma1", (6.0 * a * b0 * a1 * sq(b1) - 6.0 * a * c0 * cube(a1) - 2.0 * c * a1 * sq(b1) - 2.0 * d * cube(b1) -
                     e * sq(b1) * g3) /
                        sq(b1));
}

void case5_2(CaseVars& v) {
    const Complex d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], g3 = v["gamma3"], d2 = v["d2"];
    v.zero({"d1", "a000"});
    v.set("d3", sq(d2) / 4.0);
    v.set("alpha3", e * a1);
    v.set("beta3", -e * b1);
    v.set("gamma1", e * g3 - 2.0 * d * b1);
}

// Case 6: d1 = 0, d3 derived.

void case6_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], b1 = v["beta1"], b3 = v["beta3"], g3 = v["gamma3"],
                  d2 = v["d2"];
    v.zero({"d1"});
    const Complex cross = v.nonzero(a1 * b3 - a3 * b1, "alpha1*beta3-alpha3*beta1");
    const Complex spread = v.nonzero(sq(b1) - sq(b3), "beta1^2-beta3^2");
    v.nonzero(a3, "alpha3");
    v.set("d3", b3 * sq(d2) * (2.0 * a1 * b1 * b3 + a3 * sq(b1) - 3.0 * a3 * sq(b3)) /
                    v.nonzero(4.0 * b1 * (3.0 * a1 * sq(b1) - a1 * sq(b3) - 2.0 * a3 * b1 * b3),
                              "beta1*(3alpha1*beta1^2-alpha1*beta3^2-2alpha3*beta1*beta3)"));
    v.set("a000", 2.0 * b1 * b3 * (sq(a1) - sq(a3)) / (3.0 * cross));
    v.set("c000", (a1 * sq(b1) * b3 - a1 * cube(b3) + a3 * cube(b1) - a3 * b1 * sq(b3)) / (-3.0 * cross));
    const Complex den = 3.0 * a * a3 * cross * spread;
    v.set("b000", (2.0 * a * quart(a1) * b1 * sq(b3) - a * cube(a1) * a3 * sq(b1) * b3 - 3.0 * a * cube(a1) * a3 * cube(b3) -
                   3.0 * a * sq(a1) * sq(a3) * cube(b1) + 3.0 * a * sq(a1) * sq(a3) * b1 * sq(b3) +
                   5.0 * a * a1 * cube(a3) * sq(b1) * b3) /
                          den +
                      (c * a1 * a3 * sq(b1) * b3 - c * a1 * a3 * cube(b3) + d * a1 * sq(b1) * sq(b3) - d * a1 * quart(b3) -
                       c * sq(a3) * cube(b1) - a * quart(a3) * cube(b1) - a * quart(a3) * b1 * sq(b3) -
                       a * a1 * cube(a3) * cube(b3)) /
                          den +
                      (c * sq(a3) * b1 * sq(b3) - d * a3 * cube(b1) * b3 + d * a3 * b1 * cube(b3) + a1 * sq(b1) * b3 * g3 -
                       a1 * cube(b3) * g3 - a3 * cube(b1) * g3 + a3 * b1 * sq(b3) * g3) /
                          den);
    v.set("gamma1", (2.0 * a * quart(a1) * b1 * b3 + 2.0 * a * cube(a1) * a3 * sq(b1) - 2.0 * a * cube(a1) * a3 * sq(b3) -
                     4.0 * a * sq(a1) * sq(a3) * b1 * b3 - 2.0 * a * a1 * cube(a3) * sq(b1) +
                     2.0 * a * a1 * cube(a3) * sq(b3)) /
                            (a3 * spread) +
                        (2.0 * a * quart(a3) * b1 * b3 + d * a1 * sq(b1) * b3 - d * a1 * cube(b3) - d * a3 * cube(b1) +
                         d * a3 * b1 * sq(b3) + a1 * sq(b1) * g3 - a1 * sq(b3) * g3) /
                            (a3 * spread));
}

void case6_2(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], b3 = v["beta3"], d2 = v["d2"], b0 = v["b000"];
    v.zero({"d1", "alpha3"});
    const Complex spread = v.nonzero(sq(b1) - sq(b3), "beta1^2-beta3^2");
    v.set("d3", sq(d2) * sq(b3) / (2.0 * v.nonzero(3.0 * sq(b1) - sq(b3), "3beta1^2-beta3^2")));
    v.set("a000", 2.0 * a1 * b1 / 3.0);
    v.set("c000", (sq(b3) - sq(b1)) / 3.0);
    v.set("gamma1", (a * cube(a1) * sq(b1) + a * cube(a1) * sq(b3) + 3.0 * a * b0 * a1 * sq(b1) -
                     3.0 * a * b0 * a1 * sq(b3) - c * a1 * sq(b1) + c * a1 * sq(b3) - d * cube(b1) + d * b1 * sq(b3)) /
                        spread);
    v.set("gamma3", b3 * (2.0 * a * cube(a1) * b1 + d * sq(b1) - d * sq(b3)) / (-spread));
}

// Case 7: d2 = 0.

void case7_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], b2 = v["beta2"], b0 = v["b000"];
    v.zero({"d2", "a000", "alpha2", "beta1"});
    v.set("c000", -sq(b2) / 3.0);
    v.set("gamma1", -a1 * (a * sq(a1) - 3.0 * a * b0 + c));
    v.set("gamma2", -d * b2);
}

void case7_2(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a2 = v["alpha2"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"d2", "a000", "alpha1", "beta2"});
    v.set("c000", sq(b1) / 3.0);
    v.set("gamma1", -d * b1);
    v.set("gamma2", a * cube(a2) + 3.0 * a * a2 * b0 - c * a2);
}

void case7_3(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], a2 = v["alpha2"], b2 = v["beta2"], g2 = v["gamma2"], d1 = v["d1"],
                  d3 = v["d3"];
    v.zero({"d2", "a000"});
    const Complex q = v.nonzero(4.0 * d3 - sq(d1), "4d3-d1^2");
    v.nonzero(a2, "alpha2");
    v.set("c000", -4.0 * sq(b2) / 3.0);
    v.set("beta1", e * I * b2);
    v.set("b000", (4.0 * a * cube(a2) * sq(d1) + 12.0 * a * d3 * sq(a1) * a2 - 4.0 * a * d3 * cube(a2) -
                   c * sq(d1) * a2 - d * sq(d1) * b2 + 4.0 * c * d3 * a2 + 4.0 * d * d3 * b2 - sq(d1) * g2 +
                   4.0 * d3 * g2) /
                          (3.0 * a * q * a2) +
                      e * I * (4.0 * a * d3 * cube(a1) + 4.0 * a * d3 * a1 * sq(a2)) / (a * q * a2));
    v.set("gamma1", -a1 * (a * sq(a1) * a2 + a * cube(a2) - d * b2 - g2) / a2 +
                        e * I *
                            (3.0 * a * sq(d1) * sq(a1) * sq(a2) + 3.0 * a * sq(d1) * quart(a2) +
                             12.0 * a * d3 * quart(a1) + 12.0 * a * d3 * sq(a1) * sq(a2) + d * sq(d1) * a2 * b2 -
                             4.0 * d * d3 * a2 * b2) /
                            (q * a2));
}

void case7_4(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex b2 = v["beta2"], g2 = v["gamma2"], d1 = v["d1"], d3 = v["d3"], b0 = v["b000"];
    v.zero({"d2", "alpha2"});
    v.nonzero(d3, "d3");
    const Complex m = (sq(d1) - 4.0 * d3) * (d * b2 + g2);
    const Complex A6 = sq(m) / (-24.0 * sq(a) * d3 * v.nonzero(sq(d1) + 2.0 * d3, "d1^2+2d3"));
    const Complex A = v.nonzero(root_of(A6, 6, v), "A");
    v.set("A", A);
    v.set("alpha1", A);
    v.set("a000", m * b2 / (18.0 * a * sq(A) * d3));
    v.set("c000", sq(b2) * (sq(d1) - 4.0 * d3) / (18.0 * d3));
    v.set("beta1", m * b2 / (12.0 * a * cube(A) * d3));
    const Complex den = 24.0 * a * d3 * cube(A) * (sq(d1) + 2.0 * d3);
    v.set("gamma1", ((72.0 * sq(a) * b0 * sq(d1) * d3 + 144.0 * sq(a) * b0 * sq(d3) - 24.0 * a * c * sq(d1) * d3 -
                      48.0 * a * c * sq(d3)) *
                         quart(A) -
                     3.0 * sq(d) * quart(d1) * sq(b2) - 4.0 * d * quart(d1) * b2 * g2) /
                            den +
                        (48.0 * sq(d) * sq(d3) * sq(b2) - 4.0 * d * sq(d1) * d3 * b2 * g2 - quart(d1) * sq(g2) +
                         80.0 * d * sq(d3) * b2 * g2 - 4.0 * sq(d1) * d3 * sq(g2) + 32.0 * sq(d3) * sq(g2)) /
                            den);
}

void case7_5(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a2 = v["alpha2"], b2 = v["beta2"], g2 = v["gamma2"];
    v.zero({"d2", "a000"});
    v.nonzero(a2, "alpha2");
    v.set("b000", (4.0 * a * cube(a2) - c * a2 - d * b2 - g2) / (-3.0 * a * a2));
    v.set("c000", -4.0 * sq(b2) / 3.0);
    v.set("alpha1", -e * I * a2);
    v.set("beta1", e * I * b2);
    v.set("gamma1", -e * I * (2.0 * d * b2 + g2));
}

void case7_6(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a2 = v["alpha2"], b2 = v["beta2"], g2 = v["gamma2"], c0 = v["c000"];
    v.zero({"d2"});
    v.nonzero(a2, "alpha2");
    v.nonzero(b2, "beta2");
    v.set("a000", a2 * (4.0 * sq(b2) + 3.0 * c0) / (-3.0 * b2));
    v.set("b000", (3.0 * a * c0 * cube(a2) + c * a2 * sq(b2) + d * cube(b2) + sq(b2) * g2) / (3.0 * a * a2 * sq(b2)));
    v.set("alpha1", e * I * a2);
    v.set("beta1", e * I * b2);
    v.set("gamma1", e * I * g2);
}

void case7_7(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex b2 = v["beta2"], g2 = v["gamma2"], d1 = v["d1"], d3 = v["d3"], b0 = v["b000"];
    v.zero({"d2", "a000", "alpha2"});
    v.nonzero(d3, "d3");
    const Complex m = (sq(d1) - 4.0 * d3) * (d * b2 + g2);
    const Complex B = v.nonzero(root_of(sq(m) / (-144.0 * sq(a) * sq(d3)), 6, v), "B");
    v.set("B", B);
    v.set("alpha1", B);
    v.set("c000", -4.0 * sq(b2) / 3.0);
    v.set("beta1", b2 * m / (12.0 * a * d3 * cube(B)));
    const Complex den = 144.0 * a * sq(d3) * cube(B);
    v.set("gamma1", ((432.0 * sq(a) * b0 * sq(d3) - 144.0 * a * c * sq(d3)) * quart(B) + sq(d) * quart(d1) * sq(b2) -
                     32.0 * sq(d) * sq(d1) * d3 * sq(b2) + 2.0 * d * quart(d1) * b2 * g2) /
                            den +
                        (112.0 * sq(d) * sq(d3) * sq(b2) - 52.0 * d * sq(d1) * d3 * b2 * g2 + quart(d1) * sq(g2) +
                         176.0 * d * sq(d3) * b2 * g2 - 20.0 * sq(d1) * d3 * sq(g2) + 64.0 * sq(d3) * sq(g2)) /
                            den);
}

// Case 8: d2 = 0, d3 derived.

void case8_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], a2 = v["alpha2"], b1 = v["beta1"], b2 = v["beta2"], g2 = v["gamma2"],
                  d1 = v["d1"];
    v.zero({"d2"});
    const Complex cross = v.nonzero(a1 * b2 - a2 * b1, "alpha1*beta2-alpha2*beta1");
    const Complex spread = v.nonzero(sq(b1) + sq(b2), "beta1^2+beta2^2");
    v.nonzero(a2, "alpha2");
    v.set("d3", sq(d1) * b2 * (2.0 * a1 * b1 * b2 + a2 * sq(b1) + 3.0 * a2 * sq(b2)) /
                    v.nonzero(-4.0 * b1 * (3.0 * a1 * sq(b1) + a1 * sq(b2) + 2.0 * a2 * b1 * b2),
                              "beta1*(3alpha1*beta1^2+alpha1*beta2^2+2alpha2*beta1*beta2)"));
    v.set("a000", 2.0 * b1 * b2 * (sq(a1) + sq(a2)) / (3.0 * cross));
    v.set("c000", (a1 * sq(b1) * b2 + a1 * cube(b2) + a2 * cube(b1) + a2 * b1 * sq(b2)) / (-3.0 * cross));
    const Complex den = 3.0 * a * a2 * cross * spread;
    v.set("b000", (2.0 * a * quart(a1) * b1 * sq(b2) - a * cube(a1) * a2 * sq(b1) * b2 + 3.0 * a * cube(a1) * a2 * cube(b2) -
                   3.0 * a * sq(a1) * sq(a2) * cube(b1) - 3.0 * a * sq(a1) * sq(a2) * b1 * sq(b2) +
                   c * a1 * a2 * sq(b1) * b2) /
                          den +
                      (c * a1 * a2 * cube(b2) + d * a1 * sq(b1) * sq(b2) - a * a1 * cube(a2) * cube(b2) +
                       a * quart(a2) * cube(b1) - a * quart(a2) * b1 * sq(b2) - a2 * b1 * sq(b2) * g2 -
                       5.0 * a * a1 * cube(a2) * sq(b1) * b2) /
                          den +
                      (d * a1 * quart(b2) - c * sq(a2) * cube(b1) - c * sq(a2) * b1 * sq(b2) - d * a2 * cube(b1) * b2 -
                       d * a2 * b1 * cube(b2) + a1 * sq(b1) * b2 * g2 + a1 * cube(b2) * g2 - a2 * cube(b1) * g2) /
                          den);
    v.set("gamma1", (2.0 * a * quart(a1) * b1 * b2 + 2.0 * a * cube(a1) * a2 * sq(b1) + 2.0 * a * cube(a1) * a2 * sq(b2) +
                     4.0 * a * sq(a1) * sq(a2) * b1 * b2 + 2.0 * a * a1 * cube(a2) * sq(b1) +
                     2.0 * a * a1 * cube(a2) * sq(b2)) /
                            (a2 * spread) +
                        (2.0 * a * quart(a2) * b1 * b2 + d * a1 * sq(b1) * b2 + d * a1 * cube(b2) - d * a2 * cube(b1) -
                         d * a2 * b1 * sq(b2) + a1 * sq(b1) * g2 + a1 * sq(b2) * g2) /
                            (a2 * spread));
}

void case8_2(CaseVars& v) {
    const Complex d = v.d;
    const double e = v.e;
    const Complex a2 = v["alpha2"], b2 = v["beta2"], g2 = v["gamma2"], d1 = v["d1"];
    v.zero({"d2", "a000"});
    v.set("d3", sq(d1) / 4.0);
    v.set("alpha1", -e * I * a2);
    v.set("beta1", e * I * b2);
    v.set("gamma1", -e * I * (2.0 * d * b2 + g2));
}

void case8_3(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a2 = v["alpha2"], b2 = v["beta2"], g2 = v["gamma2"], d1 = v["d1"], b0 = v["b000"],
                  c0 = v["c000"];
    v.zero({"d2"});
    v.nonzero(b2, "beta2");
    v.set("d3", sq(d1) / 4.0);
    v.set("a000", a2 * (4.0 * sq(b2) + 3.0 * c0) / (-3.0 * b2));
    v.set("alpha1", e * I * a2);
    v.set("beta1", e * I * b2);
    v.set("gamma1", e * I *
                        (6.0 * a * c0 * cube(a2) - 6.0 * a * b0 * a2 * sq(b2) + 2.0 * c * a2 * sq(b2) + 2.0 * d * cube(b2) +
                         sq(b2) * g2) /
                        (-sq(b2)));
}

// Case 9: d3 = 0.

void case9_1_impl(CaseVars& v, bool corrected) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"d3", "a000", "beta2", "beta3"});
    v.set("c000", corrected ? sq(b1) / 3.0 : sq(v["beta2"]) / 3.0);
    v.set("alpha2", e * I * a3);
    v.set("gamma1", 3.0 * a * b0 * a1 - a * cube(a1) - 3.0 * a * a1 * sq(a3) - c * a1 - d * b1);
    v.set("gamma2", e * I * a3 * (3.0 * a * b0 - 3.0 * a * sq(a1) - a * sq(a3) - c));
    v.set("gamma3", 3.0 * a * b0 * a3 - 3.0 * a * sq(a1) * a3 - a * cube(a3) - c * a3);
}

void case9_1(CaseVars& v) { case9_1_impl(v, false); }
void case9_1_corrected(CaseVars& v) { case9_1_impl(v, true); }

void case9_2_impl(CaseVars& v, bool corrected) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], b0 = v["b000"], c0 = v["c000"];
    v.zero({"d3"});
    const Complex a3 = e * a1, b3 = e * b1;
    v.nonzero(b1, "beta1");
    v.set("alpha2", e * I * a1);
    v.set("alpha3", a3);
    v.set("beta2", e * I * b1);
    v.set("beta3", b3);
    v.set("a000", a3 * (4.0 * sq(b3) - 3.0 * c0) / (3.0 * b3));
    const Complex g = (3.0 * a * c0 * cube(a1) - 3.0 * a * b0 * a1 * sq(b1) + c * a1 * sq(b1) + d * cube(b1)) / (-sq(b1));
    v.set("gamma1", g);
    v.set("gamma3", corrected ? e * g : g);
    v.set("gamma2", e * I * g);
}

void case9_2(CaseVars& v) { case9_2_impl(v, false); }
void case9_2_corrected(CaseVars& v) { case9_2_impl(v, true); }

void case9_3(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"d3", "a000", "alpha2", "alpha3"});
    v.set("beta2", -e * I * b1);
    v.set("beta3", -b1);
    v.set("c000", 4.0 * sq(b1) / 3.0);
    v.set("gamma1", 3.0 * a * b0 * a1 - a * cube(a1) - c * a1 - d * b1);
    v.set("gamma2", e * I * d * b1);
    v.set("gamma3", d * b1);
}

// Case 10: d3 = 0, d1 = d2 C.

void case10_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], b1 = v["beta1"], d2 = v["d2"], b0 = v["b000"];
    v.zero({"d3", "a000", "alpha2"});
    const Complex C2 = (a1 + 2.0 * a3) * (a1 - a3) / v.nonzero(a1 * (a1 + a3), "alpha1*(alpha1+alpha3)");
    const Complex C = root_of(C2, 2, v);
    v.set("C", C);
    v.set("d1", d2 * C);
    v.set("beta2", e * I * b1);
    v.set("beta3", b1);
    v.set("c000", 4.0 * sq(b1) / 3.0);
    v.set("gamma1", 3.0 * a * b0 * a1 - a * cube(a1) - 1.5 * a * sq(a1) * a3 - 1.5 * a * a1 * sq(a3) - c * a1 - d * b1);
    v.set("gamma2", e * I / 2.0 * (3.0 * a * sq(a1) * a3 + 3.0 * a * a1 * sq(a3) - 2.0 * d * b1));
    v.set("gamma3",
          3.0 * a * b0 * a3 - 1.5 * a * sq(a1) * a3 - 1.5 * a * a1 * sq(a3) - a * cube(a3) - c * a3 - d * b1);
}

void case10_2_impl(CaseVars& v, bool corrected) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], b1 = v["beta1"], d2 = v["d2"], b0 = v["b000"];
    v.zero({"d3", "a000", "alpha2"});
    const Complex C2 = (a1 - 2.0 * a3) * (a1 + a3) / v.nonzero(a1 * (a1 - a3), "alpha1*(alpha1-alpha3)");
    const Complex C = root_of(C2, 2, v);
    v.set("C", C);
    v.set("d1", d2 * C);
    v.set("beta2", -e * I * b1);
    v.set("beta3", -b1);
    v.set("c000", 4.0 * sq(b1) / 3.0);
    v.set("gamma1", 3.0 * a * b0 * a1 - a * cube(a1) + 1.5 * a * sq(a1) * a3 - 1.5 * a * a1 * sq(a3) - c * a1 - d * b1);
    v.set("gamma2", e * I / 2.0 * (3.0 * a * sq(a1) * a3 - 3.0 * a * a1 * sq(a3) + 2.0 * d * b1));
    const Complex a3_power = corrected ? cube(a3) : sq(a3);
    v.set("gamma3", 3.0 * a * b0 * a3 - 1.5 * a * sq(a1) * a3 + 1.5 * a * a1 * sq(a3) - a * a3_power - c * a3 + d * b1);
}

void case10_2(CaseVars& v) { case10_2_impl(v, false); }
void case10_2_corrected(CaseVars& v) { case10_2_impl(v, true); }

// Case 11: all amplitudes free.

void case11_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], b2 = v["beta2"], b0 = v["b000"];
    v.zero({"a000", "alpha2", "beta1", "beta3"});
    v.set("c000", -sq(b2) / 3.0);
    v.set("gamma1", 3.0 * a * b0 * a1 - a * cube(a1) - c * a1);
    v.set("gamma2", -d * b2);
    v.set("gamma3", 3.0 * a * b0 * a3 - a * cube(a3) - c * a3);
}

void case11_2_impl(CaseVars& v, bool corrected) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a2 = v["alpha2"], a3 = v["alpha3"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"a000", "alpha1", "beta2", "beta3"});
    v.set("c000", corrected ? sq(b1) / 3.0 : sq(v["beta2"]) / 3.0);
    v.set("gamma1", -d * b1);
    v.set("gamma2", a2 * (a * sq(a2) + 3.0 * a * b0 - c));
    v.set("gamma3", 3.0 * a * b0 * a3 - a * cube(a3) - c * a3);
}

void case11_2(CaseVars& v) { case11_2_impl(v, false); }
void case11_2_corrected(CaseVars& v) { case11_2_impl(v, true); }

void case11_3(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a3 = v["alpha3"], b2 = v["beta2"], b0 = v["b000"];
    v.zero({"a000", "alpha1", "alpha2", "beta3"});
    v.set("c000", -sq(b2) / 3.0);
    v.set("beta1", e * I * b2);
    v.set("gamma1", -e * I * d * b2);
    v.set("gamma2", -d * b2);
    v.set("gamma3", 3.0 * a * a3 * b0 - a * cube(a3) - c * a3);
}

void case11_4(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a2 = v["alpha2"], b3 = v["beta3"], b0 = v["b000"];
    v.zero({"a000", "alpha1", "beta1", "gamma1"});
    v.set("alpha3", e * I * a2);
    v.set("beta2", e * I * b3);
    v.set("c000", sq(v["beta2"]) / 3.0);
    v.set("gamma2", a * cube(a2) + 3.0 * a * b0 * a2 - e * I * d * b3 - c * a2);
    v.set("gamma3", e * I * a * cube(a2) + 3.0 * e * I * a * b0 * a2 - e * I * c * a2 - d * b3);
}

void case11_5_impl(CaseVars& v, bool corrected) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a2 = v["alpha2"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"a000", "alpha1", "alpha3", "beta2"});
    v.set("beta3", e * b1);
    v.set("c000", sq(v["beta3"]) / 3.0);
    v.set("gamma1", corrected ? -d * b1 : e * d * b1);
    v.set("gamma2", a2 * (a * sq(a2) + 3.0 * a * b0 - c));
    v.set("gamma3", -e * d * b1);
}

void case11_5(CaseVars& v) { case11_5_impl(v, false); }
void case11_5_corrected(CaseVars& v) { case11_5_impl(v, true); }

void case11_6(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b3 = v["beta3"], b0 = v["b000"];
    v.zero({"a000", "alpha2", "alpha3", "beta1"});
    v.set("c000", sq(b3) / 3.0);
    v.set("beta2", e * I * b3);
    v.set("gamma1", -a1 * (a * sq(a1) - 3.0 * a * b0 + c));
    v.set("gamma2", -e * I * d * b3);
    v.set("gamma3", -d * b3);
}

void case11_7(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const Complex a1 = v["alpha1"], a2 = v["alpha2"], b3 = v["beta3"], b0 = v["b000"];
    v.zero({"a000", "alpha3", "beta1", "beta2"});
    v.set("c000", sq(b3) / 3.0);
    v.set("gamma1", -a1 * (a * sq(a1) - 3.0 * a * b0 + c));
    v.set("gamma2", a2 * (a * sq(a2) + 3.0 * a * b0 - c));
    v.set("gamma3", -d * b3);
}

void case11_8(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"a000"});
    v.set("alpha2", e * I * a1);
    v.set("alpha3", a1);
    v.set("beta2", e * I * b1);
    v.set("beta3", b1);
    v.set("c000", 4.0 * sq(b1) / 3.0);
    const Complex g = 3.0 * a * b0 * a1 - 4.0 * a * cube(a1) - c * a1 - d * b1;
    v.set("gamma1", g);
    v.set("gamma2", e * I * g);
    v.set("gamma3", 3.0 * a * a1 * b0 - 4.0 * a * cube(a1) - c * a1 - d * b1);
}

void case11_9(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], b0 = v["b000"];
    v.zero({"a000"});
    v.set("alpha2", -e * I * a1);
    v.set("alpha3", -a1);
    v.set("beta2", -e * I * b1);
    v.set("beta3", -b1);
    v.set("c000", 4.0 * sq(b1) / 3.0);
    v.set("gamma1", 3.0 * a * b0 * a1 - 4.0 * a * cube(a1) - c * a1 - d * b1);
    v.set("gamma2", e * I * (4.0 * a * cube(a1) - 3.0 * a * b0 * a1 + c * a1 + d * b1));
    v.set("gamma3", 4.0 * a * cube(a1) - 3.0 * a * b0 * a1 + c * a1 + d * b1);
}

// Case 12: d3 tied to d1 or d2.

void case12_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], a3 = v["alpha3"], b2 = v["beta2"], d1 = v["d1"], b0 = v["b000"];
    v.zero({"a000", "beta3"});
    v.set("d3", sq(d1) / 4.0);
    v.set("c000", -sq(b2) / 3.0);
    v.set("alpha2", e * I * a1);
    v.set("beta1", e * I * b2);
    v.set("gamma1", 3.0 * a * b0 * a1 - a * cube(a1) - 3.0 * a * a1 * sq(a3) - c * a1 - e * I * d * b2);
    v.set("gamma2", 3.0 * e * I * a * b0 * a1 - e * I * a * cube(a1) - 3.0 * e * I * a * a1 * sq(a3) - e * I * c * a1 -
                        d * b2);
    v.set("gamma3", 3.0 * a * b0 * a3 - 3.0 * a * sq(a1) * a3 - a * cube(a3) - c * a3);
}

void case12_2(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], a2 = v["alpha2"], b1 = v["beta1"], d2 = v["d2"], b0 = v["b000"];
    v.zero({"a000", "beta2"});
    v.set("d3", sq(d2) / 4.0);
    v.set("c000", sq(b1) / 3.0);
    v.set("alpha3", e * a1);
    v.set("beta3", e * b1);
    v.set("gamma1", 3.0 * a * a1 * sq(a2) - a * cube(a1) + 3.0 * a * b0 * a1 - c * a1 - d * b1);
    v.set("gamma2", -a2 * (3.0 * a * sq(a1) - a * sq(a2) - 3.0 * a * b0 + c));
    v.set("gamma3", e * (a * cube(a1) - 3.0 * a * a1 * sq(a2) - 3.0 * a * b0 * a1 + c * a1 - d * b1));
}

void case12_3(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], b1 = v["beta1"], d2 = v["d2"], b0 = v["b000"];
    v.zero({"a000", "alpha2", "beta2", "gamma2"});
    v.set("d3", sq(d2) / 4.0);
    v.set("alpha3", e * a1);
    v.set("beta3", e * b1);
    v.set("c000", sq(v["beta3"]) / 3.0);
    v.set("gamma1", a * cube(a1) - 3.0 * a * b0 * a1 + c * a1 - d * b1);
    v.set("gamma3", e * (3.0 * a * b0 * a1 - a * cube(a1) - c * a1 - d * b1));
}

// Case 13: d2 = -d1.

void case13_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a2 = v["alpha2"], b3 = v["beta3"], d1 = v["d1"], b0 = v["b000"];
    v.zero({"a000", "alpha1", "beta1", "gamma1"});
    v.set("d2", -d1);
    v.set("c000", sq(b3) / 3.0);
    v.set("alpha3", e * I * a2);
    v.set("beta2", e * I * b3);
    v.set("gamma2", a * cube(a2) + 3.0 * a * b0 * a2 - e * I * d * b3 - c * a2);
    v.set("gamma3", e * I * a * cube(a2) + 3.0 * e * I * a * b0 * a2 - e * I * c * a2 - d * b3);
}

// Case 14: d3 derived.

void case14_1(CaseVars& v) {
    const Complex a = v.a, c = v.c, d = v.d;
    const double e = v.e;
    const Complex a1 = v["alpha1"], a2 = v["alpha2"], a3 = v["alpha3"], b1 = v["beta1"], d1 = v["d1"],
                  d2 = v["d2"], b0 = v["b000"];
    v.zero({"a000"});
    const Complex den = v.nonzero(e * I * (4.0 * a2 * sq(a3) - 4.0 * sq(a1) * a2) - 8.0 * cube(a1) + 4.0 * sq(a1) * a3 -
                                      4.0 * a1 * sq(a2) + 4.0 * a1 * sq(a3) + 4.0 * sq(a2) * a3,
                                  "d3 denominator");
    v.set("d3", (sq(d1) * sq(a1) * a3 - sq(d2) * sq(a1) * a3 + sq(d1) * a1 * sq(a2) - sq(d2) * a1 * sq(a2) +
                 sq(d1) * a1 * sq(a3) - sq(d2) * a1 * sq(a3) + sq(d1) * sq(a2) * a3) /
                        den +
                    (sq(d2) * sq(a2) * a3 + 2.0 * sq(d2) * cube(a3) +
                     e * I *
                         (sq(d1) * sq(a1) * a2 - sq(d2) * sq(a1) * a2 + 2.0 * sq(d1) * cube(a2) + sq(d1) * a2 * sq(a3) +
                          sq(d2) * a2 * sq(a3))) /
                        den);
    v.set("c000", 4.0 * sq(b1) / 3.0);
    v.set("beta2", e * I * b1);
    v.set("beta3", b1);
    v.set("gamma1", 1.5 * e * I * (a * sq(a1) * a2 - a * a2 * sq(a3)) +
                        1.5 * (a * a1 * sq(a2) - a * sq(a1) * a3 - a * a1 * sq(a3) - a * sq(a2) * a3) +
                        3.0 * a * b0 * a1 - c * a1 - d * b1 - a * cube(a1));
    v.set("gamma2", a * cube(a2) - 1.5 * a * sq(a1) * a2 - 1.5 * a * a2 * sq(a3) + 3.0 * a * b0 * a2 - c * a2 +
                        1.5 * e * I *
                            (a * sq(a1) * a3 + a * a1 * sq(a2) + a * a1 * sq(a3) + a * sq(a2) * a3 - 2.0 / 3.0 * d * b1));
    v.set("gamma3", 1.5 * (a * sq(a2) * a3 - a * sq(a1) * a3 - a * a1 * sq(a2) - a * a1 * sq(a3)) - a * cube(a3) +
                        3.0 * a * b0 * a3 - c * a3 - d * b1 + 1.5 * e * I * (a * a2 * sq(a3) - a * sq(a1) * a2));
}

}  // namespace

Complex CaseVars::operator[](const std::string& name) const {
    const auto it = values_.find(name);
    if (it == values_.end()) throw ParameterError(name, "parameter '" + name + "' has no value");
    return it->second;
}

void CaseVars::set_free(const std::string& name, Complex value) { values_[name] = value; }

void CaseVars::set(const std::string& name, Complex value) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw ParameterError(name, "derived parameter '" + name + "' is not finite (singular configuration)");
    }
    values_[name] = value;
    derived_[name] = value;
}

void CaseVars::zero(std::initializer_list<const char*> names) {
    for (const char* n : names) set(n, Complex{});
}

Complex CaseVars::nonzero(Complex value, const char* factor) const {
    if (std::abs(value) < 1e-12) {
        throw ParameterError(factor, std::string("singular configuration: ") + factor + " vanishes");
    }
    return value;
}

bool wave_inert(int case_id, int wave) {
    switch (case_id) {
        case 1: return true;
        case 2: case 4: case 5: case 6: return wave == 2;
        case 3: case 7: case 8: return wave == 3;
        default: return false;
    }
}

const std::vector<BranchDef>& branch_definitions() {
    static const std::vector<BranchDef> defs = {
        {1, 1, "alpha1 beta1 d3 b000 c000", "d1=0, d2=0; a000, gamma1 derived; beta1 != 0", case1_1},
        {2, 1, "alpha1 beta1 d2 b000 c000", "d1=0, d3=0, alpha3=beta3=gamma3=0; a000, gamma1 derived", case2_1},
        {2, 2, "alpha1 alpha3 beta1 d2 b000", "d1=0, d3=0, a000=0, beta3=0, c000=beta1^2/3", case2_2},
        {3, 1, "alpha1 alpha2 beta1 d1 b000", "d2=0, d3=0, a000=0, beta2=0, c000=beta1^2/3", case3_1},
        {3, 2, "alpha1 beta2 d1 b000", "d2=0, d3=0, a000=0, alpha2=0, beta1=eps I beta2, c000=-4beta2^2/3", case3_2},
        {4, 1, "alpha1 beta3 d2 d3 b000", "d1=0, a000=0, alpha3=0, beta1=0, c000=beta3^2/3", case4_1},
        {4, 2, "alpha1 alpha3 gamma3 d2 d3 b000", "d1=0, a000=0, beta1=beta3 derived, c000=4beta1^2/3; d != 0, d2^2 != 4d3",
         case4_2},
        {4, 3, "alpha1 beta1 d2 d3 b000 c000", "d1=0, alpha3=eps alpha1, beta3=eps beta1, gamma3=eps gamma1", case4_3,
         case4_3_corrected, "alpha3 replaced by alpha1 in the gamma1 numerator",
         "gamma1 fails for eps = -1: its numerator mixes alpha3 = eps alpha1 into terms that need alpha1"},
        {4, 4, "alpha1 alpha3 gamma3 d2 d3 b000", "d1=0, a000=0, beta3=-beta1, beta1 derived, c000=4beta1^2/3; d != 0",
         case4_4},
        {4, 5, "beta1 alpha3 d2 d3 b000", "d1=0, a000=0, c000=0, alpha1=0, beta3=0", case4_5,
         case4_5_corrected, "c000 = beta1^2/3 instead of 0",
         "eq13 leaves alpha3 beta1^3 d2 terms with the printed c000 = 0"},
        {5, 1, "alpha1 beta1 gamma3 d2 b000 c000", "d1=0, d3=d2^2/4, alpha3=eps alpha1, beta3=eps beta1", case5_1},
        {5, 2, "alpha1 beta1 gamma3 d2 b000 c000", "d1=0, d3=d2^2/4, a000=0, alpha3=eps alpha1, beta3=-eps beta1",
         case5_2},
        {6, 1, "alpha1 alpha3 beta1 beta3 gamma3 d2", "d1=0; d3, a000, b000, c000, gamma1 derived", case6_1},
        {6, 2, "alpha1 beta1 beta3 d2 b000", "d1=0, alpha3=0; d3, a000, c000, gamma1, gamma3 derived", case6_2},
        {7, 1, "alpha1 beta2 d1 d3 b000", "d2=0, a000=0, alpha2=0, beta1=0, c000=-beta2^2/3", case7_1},
        {7, 2, "beta1 alpha2 d1 d3 b000", "d2=0, a000=0, alpha1=0, beta2=0, c000=beta1^2/3", case7_2},
        {7, 3, "alpha1 alpha2 beta2 gamma2 d1 d3", "d2=0, a000=0, beta1=eps I beta2, c000=-4beta2^2/3; b000 derived",
         case7_3},
        {7, 4, "beta2 gamma2 d1 d3 b000 root_index", "d2=0, alpha2=0, alpha1=A with A^6 fixed by d1, d3, beta2, gamma2",
         case7_4},
        {7, 5, "alpha2 beta2 gamma2 d1 d3", "d2=0, a000=0, alpha1=-eps I alpha2, beta1=eps I beta2; b000 derived",
         case7_5},
        {7, 6, "alpha2 beta2 gamma2 d1 d3 c000", "d2=0, alpha1=eps I alpha2, beta1=eps I beta2; a000, b000 derived",
         case7_6},
        {7, 7, "beta2 gamma2 d1 d3 b000 root_index", "d2=0, a000=0, alpha2=0, alpha1=B with B^6 fixed by d1, d3, beta2, gamma2",
         case7_7},
        {8, 1, "alpha1 alpha2 beta1 beta2 gamma2 d1", "d2=0; d3, a000, b000, c000, gamma1 derived", case8_1},
        {8, 2, "alpha2 beta2 gamma2 d1 b000 c000", "d2=0, d3=d1^2/4, a000=0, alpha1=-eps I alpha2, beta1=eps I beta2",
         case8_2},
        {8, 3, "alpha2 beta2 gamma2 d1 b000 c000", "d2=0, d3=d1^2/4, alpha1=eps I alpha2, beta1=eps I beta2", case8_3},
        {9, 1, "alpha1 alpha3 beta1 d1 d2 b000", "d3=0, a000=0, alpha2=eps I alpha3, beta2=beta3=0", case9_1,
         case9_1_corrected, "c000 = beta1^2/3 instead of beta2^2/3",
         "eq13 leaves beta1^3 terms: the printed c000 = beta2^2/3 vanishes because beta2 = 0"},
        {9, 2, "alpha1 beta1 d1 d2 b000 c000",
         "d3=0, alpha2=eps I alpha1, alpha3=eps alpha1, beta2=eps I beta1, beta3=eps beta1, gamma3=gamma1", case9_2,
         case9_2_corrected, "gamma3 = eps gamma1 instead of gamma1",
         "eq12 fails for eps = -1 with the printed gamma3 = gamma1"},
        {9, 3, "alpha1 beta1 d1 d2 b000", "d3=0, a000=0, alpha2=alpha3=0, beta2=-eps I beta1, beta3=-beta1", case9_3},
        {10, 1, "alpha1 alpha3 beta1 d2 b000 root_index",
         "d3=0, d1=d2 C, C^2=(alpha1+2alpha3)(alpha1-alpha3)/(alpha1(alpha1+alpha3)), beta2=eps I beta1, beta3=beta1",
         case10_1},
        {10, 2, "alpha1 alpha3 beta1 d2 b000 root_index",
         "d3=0, d1=d2 C, C^2=(alpha1-2alpha3)(alpha1+alpha3)/(alpha1(alpha1-alpha3)), beta2=-eps I beta1, beta3=-beta1",
         case10_2, case10_2_corrected, "alpha3^2 read as alpha3^3 in gamma3",
         "eq12 fails with the printed a alpha3^2 term in gamma3"},
        {11, 1, "alpha1 alpha3 beta2 d1 d2 d3 b000", "a000=0, alpha2=0, beta1=beta3=0, c000=-beta2^2/3", case11_1},
        {11, 2, "alpha2 alpha3 beta1 d1 d2 d3 b000", "a000=0, alpha1=0, beta2=beta3=0, c000=beta2^2/3", case11_2,
         case11_2_corrected, "c000 = beta1^2/3 instead of beta2^2/3",
         "eq13 leaves beta1^3 terms: the printed c000 = beta2^2/3 vanishes because beta2 = 0"},
        {11, 3, "alpha3 beta2 d1 d2 d3 b000", "a000=0, alpha1=alpha2=0, beta1=eps I beta2, beta3=0, c000=-beta2^2/3",
         case11_3},
        {11, 4, "alpha2 beta3 d1 d2 d3 b000", "a000=0, alpha1=beta1=gamma1=0, alpha3=eps I alpha2, beta2=eps I beta3",
         case11_4, nullptr, "",
         "both forms leave terms in (d1 - d2)(d1 + d2); the branch only closes for d2 = -d1, which is Case 13"},
        {11, 5, "alpha2 beta1 d1 d2 d3 b000", "a000=0, alpha1=alpha3=0, beta2=0, beta3=eps beta1", case11_5,
         case11_5_corrected, "gamma1 = -d beta1 instead of eps d beta1",
         "eq12 fails for eps = +1 with the printed gamma1 = eps d beta1"},
        {11, 6, "alpha1 beta3 d1 d2 d3 b000", "a000=0, alpha2=alpha3=0, beta1=0, beta2=eps I beta3", case11_6},
        {11, 7, "alpha1 alpha2 beta3 d1 d2 d3 b000", "a000=0, alpha3=0, beta1=beta2=0, c000=beta3^2/3", case11_7},
        {11, 8, "alpha1 beta1 d1 d2 d3 b000", "a000=0, alpha2=eps I alpha1, alpha3=alpha1, beta2=eps I beta1, beta3=beta1",
         case11_8},
        {11, 9, "alpha1 beta1 d1 d2 d3 b000",
         "a000=0, alpha2=-eps I alpha1, alpha3=-alpha1, beta2=-eps I beta1, beta3=-beta1", case11_9},
        {12, 1, "alpha1 alpha3 beta2 d1 d2 b000", "d3=d1^2/4, a000=0, alpha2=eps I alpha1, beta1=eps I beta2, beta3=0",
         case12_1},
        {12, 2, "alpha1 alpha2 beta1 d1 d2 b000", "d3=d2^2/4, a000=0, alpha3=eps alpha1, beta2=0, beta3=eps beta1",
         case12_2, nullptr, "",
         "no choice of gamma1, gamma3 closes the system unless alpha1 beta1 = 0"},
        {12, 3, "alpha1 beta1 d1 d2 b000", "d3=d2^2/4, a000=0, alpha2=beta2=gamma2=0, alpha3=eps alpha1, beta3=eps beta1",
         case12_3, nullptr, "",
         "no choice of gamma1, gamma3 closes the system unless alpha1 beta1 = 0"},
        {13, 1, "alpha2 beta3 d1 d3 b000", "d2=-d1, a000=0, alpha1=beta1=gamma1=0, alpha3=eps I alpha2, beta2=eps I beta3",
         case13_1},
        {14, 1, "alpha1 alpha2 alpha3 beta1 d1 d2 b000", "d3 derived, a000=0, beta2=eps I beta1, beta3=beta1, c000=4beta1^2/3",
         case14_1},
    };
    return defs;
}

}  // namespace wavekit::detail
