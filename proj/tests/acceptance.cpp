// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if every criterion passes.
//
//   wavekit_acceptance [--known-deviations FILE] [--only N]...

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "draws.hpp"
#include "oracles.hpp"
#include "wavekit/balance.hpp"
#include "wavekit/fields.hpp"
#include "wavekit/hirota.hpp"
#include "wavekit/scenario.hpp"
#include "wavekit/soliton.hpp"
#include "wavekit/threewave.hpp"

using namespace wavekit;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string label(int case_id, int branch) { return std::to_string(case_id) + "(" + std::to_string(branch) + ")"; }

// Every solution built by the run, for the field identity criterion.
struct Constructed {
    std::string name;
    TauFunction w;
    Background bg;
    EquationCoefficients eqc;
    SampleBox box;
};
std::vector<Constructed> g_constructed;

std::string g_known_deviations_path = WAVEKIT_KNOWN_DEVIATIONS;

Outcome balance_reproduction(double& budget_ms) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const BalanceSolution s = solve_balance_exponents();
    budget_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    o.require(s.m == 1 && s.n == 1 && s.s == 0 && s.p == 2 && s.q == 0 && s.g == 0 && s.l == 0 && s.r == 2 &&
                  s.h == 0,
              "balance numbers (1,1,0,2,0,0,0,2,0)");
    o.require(s.a110 == -2.0 && s.b200 == -2.0 && s.c020 == -2.0 && s.a100 == 0.0 && s.a010 == 0.0 &&
                  s.b100 == 0.0 && s.c010 == 0.0,
              "transform constants (-2,-2,-2,0,0,0,0)");
    o.require(budget_ms < 1.0, "solve time " + fmt(budget_ms) + " ms < 1 ms");
    o.note("solve " + fmt(budget_ms) + " ms");
    return o;
}

Outcome derivative_engine() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Order> orders;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j)
            for (int k = 0; i + j + k <= 4; ++k) orders.push_back({i, j, k});
    double worst = 0.0;
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const TauFunction w = oracle::random_tau(rng);
        const oracle::Field f = [&](const Point& p) { return oracle::eval_tau(w, p); };
        const Point p{u(rng), u(rng), u(rng)};
        for (const Order& ord : orders) {
            const Complex exact = w.eval_partial(ord, p);
            const Complex fd = oracle::derivative(f, p, {ord.x, ord.y, ord.t});
            worst = std::max(worst, std::abs(exact - fd) / (1.0 + std::abs(exact)));
            ++compared;
        }
    }
    o.require(worst < 1e-6, "worst relative difference " + fmt(worst) + " < 1e-6");
    o.note(std::to_string(compared) + " partials, worst " + fmt(worst));
    return o;
}

Outcome d_operator_identities() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<DIndex> all;
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n)
            for (int p = 0; m + n + p <= 4; ++p)
                if (m + n + p > 0) all.push_back({m, n, p});

    int odd_nonzero = 0;
    double gauge = 0.0, antisym = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const TauFunction f = oracle::random_tau(rng);
        const TauFunction g = oracle::random_tau(rng);
        const Point p{u(rng), u(rng), u(rng)};
        const TauJet jf(f, p, 4), jg(g, p, 4);
        for (const DIndex& idx : all) {
            if (idx.total() % 2 && d_apply(f, f, idx, p) != Complex{}) ++odd_nonzero;
            double scale = 0.0;
            const Complex fg = d_apply(jf, jg, idx, &scale);
            const Complex gf = d_apply(jg, jf, idx);
            const double sign = idx.total() % 2 ? -1.0 : 1.0;
            antisym = std::max(antisym, std::abs(gf - sign * fg) / std::max(scale, 1e-300));
        }
        const Complex k = oracle::random_complex(rng, 1.0);
        const TauFunction e(0.0, {{k, WaveKind::Exp, {oracle::random_complex(rng, 1.0), oracle::random_complex(rng, 1.0),
                                                     oracle::random_complex(rng, 1.0), oracle::random_complex(rng, 1.0)}}});
        const TauJet je(e, p, 4);
        for (const DIndex& idx : all) {
            double scale = 0.0;
            const Complex v = d_apply(je, je, idx, &scale);
            gauge = std::max(gauge, std::abs(v) / scale);
        }
    }
    o.require(odd_nonzero == 0, "odd orders on identical pairs are exactly zero (" + std::to_string(odd_nonzero) +
                                    " nonzero)");
    o.require(gauge < 1e-12, "gauge residual " + fmt(gauge) + " < 1e-12");
    o.require(antisym < 1e-14, "antisymmetry mismatch " + fmt(antisym) + " < 1e-14");
    o.note("gauge " + fmt(gauge) + ", antisymmetry " + fmt(antisym));
    return o;
}

// Criterion 4 and, with nnv, criterion 8.
Outcome soliton_families(bool nnv) {
    Outcome o;
    std::mt19937_64 rng(nnv ? 55 : 44);
    const auto pts = sample_points(50, nnv ? 8 : 4);
    double worst_bilinear = 0.0, worst_pde = 0.0, worst_bilinear4 = 0.0, worst_pde4 = 0.0;
    int runs = 0;
    for (auto family : {Family::A, Family::B}) {
        if (nnv && family == Family::B) {
            try {
                draws::random_soliton(rng, family, 1, true);
                o.require(false, "Family B must reject c = d = 0");
            } catch (const ParameterError& e) {
                o.require(std::string(e.what()) == "d must be nonzero for Family B", "Family B error message");
                o.note("Family B rejects d = 0 by construction");
            }
            continue;
        }
        for (std::size_t n = 1; n <= 4; ++n) {
            const double bil_tol = n == 4 ? 1e-7 : kBilinearTolerance;
            const double pde_tol = n == 4 ? 1e-7 : kPdeTolerance;
            for (int draw = 0; draw < 20; ++draw) {
                const SolitonSpec s = draws::random_soliton(rng, family, n, nnv);
                const TauFunction w = build_tau(s);
                const auto [first, second] = family_forms(family, s.eqc, s.bg);
                const ResidualReport r1 = bilinear_residual(first, w, pts, bil_tol);
                const ResidualReport r2 = bilinear_residual(second, w, pts, bil_tol);
                const PdeReport pde = pde_residual(assemble(w, s.bg), s.eqc, pts, pde_tol);
                const std::string tag = std::string(to_string(family)) + " N=" + std::to_string(n) + " draw " +
                                        std::to_string(draw);
                o.require(r1.pass && r2.pass, tag + " bilinear " + fmt(std::max(r1.max_rel, r2.max_rel)));
                o.require(pde.pass(), tag + " PDE " + fmt(pde.eq1a.max_rel) + " " + pde.eq1a.diagnostic);
                o.require(pde.eq1a.evaluated_points > 0, tag + " has evaluated points");
                const double b = std::max(r1.max_rel, r2.max_rel);
                const double p = std::max({pde.eq1a.max_rel, pde.eq1b.max_rel, pde.eq1c.max_rel});
                (n == 4 ? worst_bilinear4 : worst_bilinear) = std::max(n == 4 ? worst_bilinear4 : worst_bilinear, b);
                (n == 4 ? worst_pde4 : worst_pde) = std::max(n == 4 ? worst_pde4 : worst_pde, p);
                g_constructed.push_back({(nnv ? "nnv " : "") + tag, w, s.bg, s.eqc, {}});
                ++runs;
            }
        }
    }
    o.note(std::to_string(runs) + " solutions; N<=3 bilinear " + fmt(worst_bilinear) + ", PDE " + fmt(worst_pde) +
           "; N=4 bilinear " + fmt(worst_bilinear4) + ", PDE " + fmt(worst_pde4));
    return o;
}

bool interaction_in_box(const SolitonSpec& s, double half_width) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (std::abs(std::log(std::abs(s.phase_shifts[i][j]))) > half_width) return false;
        }
    }
    return true;
}

Outcome three_soliton_condition() {
    Outcome o;
    std::mt19937_64 rng(12);
    const auto pts = sample_points(50, 12);
    double weakest = 1e300;
    int redrawn = 0;
    for (auto family : {Family::A, Family::B}) {
        for (int draw = 0; draw < 10; ++draw) {
            // A phase shift |ln a_ij| larger than the box half-width moves the region where the triple
            // term matters outside the box (P_i near +-P_j), so a 1% change to it is invisible to any
            // sampling there; such draws are replaced.
            SolitonSpec s = draws::random_soliton(rng, family, 3);
            while (!interaction_in_box(s, 5.0)) {
                s = draws::random_soliton(rng, family, 3);
                ++redrawn;
            }
            const TauFunction good = build_tau(s);
            std::vector<WaveTerm> terms = good.terms();
            // The last term is e^(eta1+eta2+eta3) with coefficient a12 a13 a23.
            const auto& a = s.phase_shifts;
            o.require(std::abs(terms.back().coefficient - a[0][1] * a[0][2] * a[1][2]) <=
                          1e-14 * std::abs(terms.back().coefficient),
                      "a123 = a12 a13 a23 in the built tau");
            terms.back().coefficient *= 1.01;
            const TauFunction bad(good.constant(), terms);
            const auto [first, second] = family_forms(family, s.eqc, s.bg);
            const double r = std::max(bilinear_residual(first, bad, pts).max_rel,
                                      bilinear_residual(second, bad, pts).max_rel);
            weakest = std::min(weakest, r);
            o.require(r > 1e-6, std::string(to_string(family)) + " perturbed residual " + fmt(r) + " > 1e-6");
        }
    }
    o.note("smallest perturbed residual " + fmt(weakest) + " over 20 draws (" + std::to_string(redrawn) +
           " near-degenerate draws replaced)");
    return o;
}

void record_threewave(const std::string& name, const BranchVerdict& v, const BranchCheck& c) {
    const ThreeWaveSpec spec = instantiate(v.case_id, v.branch, c.epsilon, c.eqc, c.free, v.corrected);
    g_constructed.push_back({name + " eps=" + std::to_string(c.epsilon), spec.tau(), spec.bg, c.eqc, {-1.5, 1.5}});
}

std::set<std::string> documented_deviations(Outcome& o) {
    std::set<std::string> out;
    std::ifstream in(g_known_deviations_path);
    if (!in) {
        o.require(false, "read " + g_known_deviations_path);
        return out;
    }
    const std::regex heading(R"(^## ([0-9]+\([0-9]+\)))");
    for (std::string line; std::getline(in, line);) {
        std::smatch m;
        if (std::regex_search(line, m, heading)) out.insert(m[1]);
    }
    return out;
}

Outcome threewave_sweep() {
    Outcome o;
    const std::vector<BranchVerdict> verdicts = sweep_threewave();
    const std::set<std::string> documented = documented_deviations(o);
    int passed = 0, errors = 0;
    std::set<std::string> failing;
    for (const auto& v : verdicts) {
        const std::string name = label(v.case_id, v.branch);
        bool errored = v.checks.empty();
        for (const auto& c : v.checks) errored = errored || !c.error.empty();
        if (errored) ++errors;
        if (v.pass) {
            ++passed;
            for (const auto& c : v.checks) {
                if (!c.pde_pass()) o.note(name + " passes both oracles but not the PDE check");
            }
            for (const auto& c : v.checks) record_threewave("threewave " + name, v, c);
            continue;
        }
        failing.insert(name);
        o.require(!v.diagnostic.empty(), name + " carries a diagnostic");
        o.require(!v.known_deviation.empty(), name + " is flagged in the catalog");
        o.require(documented.count(name) == 1, name + " is recorded in KNOWN_DEVIATIONS.md");
    }
    for (const auto& name : documented) {
        o.require(failing.count(name) == 1, name + " in KNOWN_DEVIATIONS.md fails the sweep");
    }
    const bool agree = std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.oracles_agree; });
    const double rate = 100.0 * passed / static_cast<double>(verdicts.size());
    o.require(verdicts.size() == 43, "43 printed branches instantiated (" + std::to_string(verdicts.size()) + ")");
    o.require(errors == 0, "every branch runs without an instantiation error (" + std::to_string(errors) + ")");
    o.require(agree, "bilinear oracle and coefficient system agree on every branch");
    o.require(5 * passed >= 4 * static_cast<int>(verdicts.size()),
              "at least 80% pass as printed (" + std::to_string(passed) + " of " + std::to_string(verdicts.size()) +
                  " = " + fmt(rate) + "%)");
    o.note(std::to_string(passed) + " of " + std::to_string(verdicts.size()) + " printed branches pass (" +
           fmt(rate) + "%); " + std::to_string(failing.size()) + " flagged and documented");

    SweepOptions with_corrected;
    with_corrected.include_corrected = true;
    int corrected_pass = 0, corrected_total = 0;
    for (const auto& v : sweep_threewave(with_corrected)) {
        if (!v.corrected) continue;
        ++corrected_total;
        corrected_pass += v.pass;
        if (v.pass) {
            for (const auto& c : v.checks) record_threewave("corrected " + label(v.case_id, v.branch), v, c);
        }
    }
    o.note("corrected readings: " + std::to_string(corrected_pass) + " of " + std::to_string(corrected_total) +
           " pass (not counted above)");
    return o;
}

Outcome remark3_presets() {
    Outcome o;
    const EquationCoefficients eqc{1.1, 0.9, 0.2, 0.3};
    const SampleBox box{-2.0, 2.0};
    const auto pts = sample_points(50, 21, box);
    struct Case {
        Remark3Preset preset;
        ParameterMap params;
    };
    const std::vector<Case> cases{
        {Remark3Preset::TwoSoliton, {{"alpha1", 0.6}, {"beta3", 0.7}, {"d2", 0.5}, {"b000", 0.1}}},
        {Remark3Preset::PeriodicSolitary, {{"alpha1", 0.6}, {"beta2", 0.7}, {"d1", 0.5}, {"b000", 0.1}}},
        {Remark3Preset::DoublyPeriodic,
         {{"alpha1", 0.7}, {"alpha3", 0.5}, {"beta1", 0.8}, {"d1", 0.6}, {"d2", 0.4}, {"b000", 0.2}}},
        {Remark3Preset::KinkPeriodic,
         {{"alpha1", 0.6}, {"alpha2", 0.4}, {"beta3", 0.7}, {"d1", 0.5}, {"d2", 0.3}, {"b000", 0.1}}},
    };
    for (const auto& c : cases) {
        const std::string name(to_string(c.preset));
        const ThreeWaveSpec spec = remark3_preset(c.preset, eqc, c.params);
        const TauFunction w = spec.tau();
        const double r12 = bilinear_residual(form_eq12(eqc, spec.bg), w, pts, kThreeWaveTolerance).max_rel;
        const double r13 = bilinear_residual(form_eq13(spec.bg), w, pts, kThreeWaveTolerance).max_rel;
        const CoefficientReport sys = coefficient_system_residual(spec);
        const PdeReport pde = pde_residual(assemble(w, spec.bg), eqc, pts, kThreeWavePdeTolerance);
        o.require(r12 < kThreeWaveTolerance && r13 < kThreeWaveTolerance,
                  name + " bilinear " + fmt(std::max(r12, r13)));
        o.require(sys.pass, name + " coefficient system " + fmt(sys.max_rel));
        o.require(pde.pass(), name + " PDE " + fmt(pde.eq1a.max_rel));
        g_constructed.push_back({"preset " + name, w, spec.bg, eqc, box});
        if (c.preset == Remark3Preset::DoublyPeriodic) {
            o.require(spec.xi3.alpha.imag() != 0.0, "doubly periodic preset has an imaginary phase coefficient");
            const RealnessReport r = realness_report(assemble(w, spec.bg), pts);
            const double im = std::max({r.max_im_u, r.max_im_v, r.max_im_omega});
            o.require(r.is_real(1e-10), "doubly periodic fields real to 1e-10 (max imaginary part " + fmt(im) + ")");
            o.note("doubly periodic max imaginary part " + fmt(im));
        }
    }
    return o;
}

Outcome field_identities() {
    Outcome o;
    double worst = 0.0;
    int evaluated = 0;
    for (const auto& c : g_constructed) {
        const auto pts = sample_points(50, 99, c.box);
        const PdeReport r = pde_residual(assemble(c.w, c.bg), c.eqc, pts);
        o.require(r.eq1b.pass && r.eq1c.pass, c.name + " identities " + fmt(std::max(r.eq1b.max_rel, r.eq1c.max_rel)));
        worst = std::max({worst, r.eq1b.max_rel, r.eq1c.max_rel});
        evaluated += r.eq1b.evaluated_points;
    }
    o.require(!g_constructed.empty(), "constructed solutions available");
    o.note(std::to_string(g_constructed.size()) + " solutions, " + std::to_string(evaluated) +
           " points, worst " + fmt(worst));
    return o;
}

Outcome determinism() {
    Outcome o;
    std::mt19937_64 rng(10);
    std::vector<Scenario> scenarios;
    for (auto family : {Family::A, Family::B}) {
        const SolitonSpec spec = draws::random_soliton(rng, family, 3);
        Scenario s;
        s.eqc = spec.eqc;
        s.bg = spec.bg;
        s.solution = spec;
        s.grid = {{-3.0, 3.0, 31}, {-3.0, 3.0, 21}, {0.0, 0.5}};
        s.seed = 12345;
        scenarios.push_back(s);
    }
    const EquationCoefficients eqc{1.2, 0.8, 0.3, -0.5};
    Scenario tw;
    const ThreeWaveSpec spec = instantiate(11, 8, -1, eqc,
                                           {{"alpha1", 0.6}, {"beta1", 0.9}, {"d1", 0.5}, {"d2", 0.4},
                                            {"d3", 0.3}, {"b000", 0.1}});
    tw.eqc = eqc;
    tw.bg = spec.bg;
    tw.solution = spec;
    tw.sample = {50, -2.0, 2.0};
    tw.grid = {{-2.0, 2.0, 25}, {-2.0, 2.0, 25}, {0.0}};
    scenarios.push_back(tw);

    for (const auto& s : scenarios) {
        const std::string text = dump_json(Json(s));
        const Scenario back = Json::parse(text).get<Scenario>();
        o.require(back == s, "scenario round trip preserves every value");
        o.require(dump_json(Json(back)) == text, "scenario round trip is byte-identical");
        o.require(grid_csv(evaluate_grid(s)) == grid_csv(evaluate_grid(back)), "grid CSV is byte-identical");
        o.require(dump_json(verify_scenario(s).to_json()) == dump_json(verify_scenario(back).to_json()),
                  "verification report is byte-identical");
    }
    o.require(dump_json(sweep_report(sweep_threewave())) == dump_json(sweep_report(sweep_threewave())),
              "sweep report is byte-identical");
    o.note(std::to_string(scenarios.size()) + " scenarios round-tripped; grids, reports and sweep repeated");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--known-deviations" && i + 1 < argc) {
            g_known_deviations_path = argv[++i];
        } else if (arg == "--only" && i + 1 < argc) {
            only.insert(std::stoi(argv[++i]));
        } else {
            std::cerr << "usage: wavekit_acceptance [--known-deviations FILE] [--only N]...\n";
            return 2;
        }
    }

    double balance_ms = 0.0;
    struct Criterion {
        int id;
        std::string title;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "balance reproduction", 1.0, [&] { return balance_reproduction(balance_ms); }},
        {2, "derivative engine vs finite differences", 5.0, derivative_engine},
        {3, "D-operator identities", 1.0, d_operator_identities},
        {4, "soliton families N = 1..4", 30.0, [] { return soliton_families(false); }},
        {5, "3-soliton existence condition", 1.0, three_soliton_condition},
        {6, "three-wave sweep", 60.0, threewave_sweep},
        {7, "three-wave presets", 1.0, remark3_presets},
        {8, "NNV reduction c = d = 0", 30.0, [] { return soliton_families(true); }},
        {9, "field identities", 30.0, field_identities},
        {10, "round trip and determinism", 60.0, determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs < c.budget_s, "runtime " + fmt(secs) + " s < " + fmt(c.budget_s) + " s");
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << fmt(secs)
                  << " s)\n";
        for (const auto& n : o.notes) std::cout << "      " << n << "\n";
        std::cout.flush();
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
