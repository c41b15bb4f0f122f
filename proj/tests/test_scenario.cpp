#include <doctest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "draws.hpp"
#include "wavekit/scenario.hpp"

using namespace wavekit;

namespace {

Scenario soliton_scenario(Family family, std::vector<Complex> p, EquationCoefficients eqc, Background bg) {
    Scenario s;
    s.eqc = eqc;
    s.bg = bg;
    s.solution = make_soliton_spec(family, eqc, bg, std::move(p));
    return s;
}

Scenario round_trip(const Scenario& s) { return Json::parse(Json(s).dump()).get<Scenario>(); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("complex number parsing") {
    CHECK(parse_complex("1.5") == Complex(1.5, 0.0));
    CHECK(parse_complex("+4") == Complex(4.0, 0.0));
    CHECK(parse_complex("-2i") == Complex(0.0, -2.0));
    CHECK(parse_complex("0.3+1e-2i") == Complex(0.3, 0.01));
    CHECK(parse_complex("1e-3-2j") == Complex(0.001, -2.0));
    CHECK(parse_complex("i") == Complex(0.0, 1.0));
    CHECK(parse_complex("-I") == Complex(0.0, -1.0));
    CHECK(parse_complex(" 2 - 3i ") == Complex(2.0, -3.0));
    for (const char* bad : {"", "abc", "1+", "inf", "nan", "1+2", "1..2", "2ii"}) {
        CHECK_THROWS_AS(parse_complex(bad, "x"), ParameterError);
    }
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const Complex z{n(rng), i % 3 ? n(rng) : 0.0};
        CHECK(parse_complex(format_complex(z)) == z);
    }
    CHECK(format_complex(Complex(-0.0, 0.0)) == "0");
}

TEST_CASE("scenario JSON round trip") {
    Scenario sol = soliton_scenario(Family::A, {0.8, -1.1, 0.6}, {1.1, 0.7, 0.3, -0.2}, {0.3, -0.1, 0.0});
    sol.tolerances.bilinear = 1e-10;
    sol.grid = {{-1.0, 2.0, 7}, {0.0, 0.0, 1}, {0.0, 0.5, 1.5}};
    sol.seed = 123456789012345ULL;
    CHECK(round_trip(sol) == sol);
    CHECK(Json(round_trip(sol)).dump() == Json(sol).dump());

    Scenario tw;
    const ThreeWaveSpec spec = instantiate(11, 8, -1, {1.2, 0.8, 0.3, -0.5},
                                           {{"alpha1", 0.6}, {"beta1", 0.9}, {"d1", 0.5}, {"d2", 0.4},
                                            {"d3", 0.3}, {"b000", 0.1}});
    tw.eqc = spec.eqc;
    tw.bg = spec.bg;
    tw.solution = spec;
    tw.require_real = true;
    CHECK(round_trip(tw) == tw);

    Scenario raw;
    raw.solution = TauFunction(0.5, {{Complex(1.0, 0.2), WaveKind::Sinh, {0.1, 0.2, 0.3, 0.4}}});
    raw.tolerances.pde = 1e-6;
    raw.tolerances.identity = 1e-9;
    CHECK(round_trip(raw) == raw);
}

TEST_CASE("scenario validation") {
    Scenario s;
    s.grid.x.count = 0;
    CHECK_THROWS_AS(s.validate(), ParameterError);
    s = {};
    s.grid.y = {1.0, 0.0, 3};
    CHECK_THROWS_AS(s.validate(), ParameterError);
    s = {};
    s.tolerances.pde = -1.0;
    CHECK_THROWS_AS(s.validate(), ParameterError);
    s = {};
    s.grid.t.clear();
    CHECK_THROWS_AS(s.validate(), ParameterError);
    s = soliton_scenario(Family::A, {1.0}, {}, {0.2, 0.0, 0.0});
    s.bg.a000 = 0.3;
    CHECK_THROWS_AS(s.validate(), ParameterError);

    CHECK_THROWS_AS(Json::parse("[1, 2]").get<Scenario>(), FormatError);
    CHECK_THROWS_AS(Json::parse(R"({"solution": {"type": "dromion"}})").get<Scenario>(), FormatError);
    CHECK_THROWS_AS(Json::parse(R"({"solution": {"type": "raw_tau", "terms": []}, "seed": -4})").get<Scenario>(),
                    FormatError);
    CHECK_THROWS_AS(
        Json::parse(R"({"solution": {"type": "raw_tau", "terms": []}, "tolerances": {"pdee": 1}})").get<Scenario>(),
        FormatError);
    CHECK_THROWS_AS(Json::parse(R"({"solution": {"type": "raw_tau", "terms": []}, "grid": {"x": [0, 1]}})")
                        .get<Scenario>(),
                    FormatError);
}

TEST_CASE("verifying soliton scenarios") {
    std::mt19937_64 rng(77);
    const SolitonSpec spec = draws::random_soliton(rng, Family::A, 3);
    Scenario s = soliton_scenario(Family::A, spec.p, spec.eqc, spec.bg);
    const VerifyResult r = verify_scenario(s);
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 8);
    CHECK(r.to_json().size() == r.checks.size());
    CHECK(r.to_json()[0]["check"] == "bilinear:eq12");

    Json j = s;
    j["solution"]["phase_shifts"][0][1][0] = j["solution"]["phase_shifts"][0][1][0].get<double>() * 1.1;
    const Scenario corrupted = j.get<Scenario>();
    const VerifyResult bad = verify_scenario(corrupted);
    CHECK_FALSE(bad.all_pass());
    CHECK_FALSE(bad.acceptable());
    CHECK_FALSE(bad.checks[0].pass);

    const Scenario nnv = soliton_scenario(Family::A, {0.9, 1.2}, {1.3, 0.8, 0.0, 0.0}, {0.2, -0.3, 0.0});
    CHECK(verify_scenario(nnv).all_pass());
}

TEST_CASE("verifying three-wave scenarios") {
    const EquationCoefficients eqc{1.1, 0.9, 0.2, 0.3};
    Scenario flagged;
    const ThreeWaveSpec spec = instantiate(9, 1, 1, eqc,
                                           {{"alpha1", 0.7}, {"alpha3", 0.5}, {"beta1", 0.8}, {"d1", 0.6},
                                            {"d2", 0.4}, {"b000", 0.2}});
    flagged.eqc = eqc;
    flagged.bg = spec.bg;
    flagged.solution = spec;
    flagged.sample = {50, -2.0, 2.0};
    const VerifyResult r = verify_scenario(flagged);
    CHECK_FALSE(r.all_pass());
    CHECK(r.acceptable());

    Scenario fixed = flagged;
    const ThreeWaveSpec corrected = instantiate(9, 1, 1, eqc,
                                                {{"alpha1", 0.7}, {"alpha3", 0.5}, {"beta1", 0.8}, {"d1", 0.6},
                                                 {"d2", 0.4}, {"b000", 0.2}},
                                                true);
    fixed.bg = corrected.bg;
    fixed.solution = corrected;
    CHECK(verify_scenario(fixed).all_pass());
}

TEST_CASE("vacuum grid") {
    Scenario s;
    s.bg = {0.25, -0.5, 0.125};
    s.grid = {{0.0, 1.0, 2}, {-1.0, 1.0, 2}, {0.0}};
    const auto rows = parse_csv(grid_csv(evaluate_grid(s)));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].size() == 10);
    CHECK(rows[1] == std::vector<std::string>{"0", "-1", "0", "0.25", "0", "-0.5", "0", "0.125", "0", "0"});
    CHECK(rows[2][0] == "1");
    CHECK(rows[2][1] == "-1");
    CHECK(rows[3][0] == "0");
    CHECK(rows[3][1] == "1");
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][3] == "0.25");
}

TEST_CASE("one-soliton grid traces the closed-form profile") {
    const Complex p = 1.2;
    Scenario s = soliton_scenario(Family::A, {p}, {}, {0.3, 0.4, 0.0});
    s.grid = {{-4.0, 4.0, 81}, {0.0, 0.0, 1}, {0.0}};
    const auto rows = evaluate_grid(s);
    REQUIRE(rows.size() == 81);
    double min_v = 1e300;
    for (const auto& r : rows) {
        const double e = std::exp(p.real() * r.p.x);
        CHECK(std::abs(r.v.real() - (0.4 - 2.0 * 1.44 * e / ((1.0 + e) * (1.0 + e)))) < 1e-14);
        min_v = std::min(min_v, r.v.real());
    }
    CHECK(std::abs(min_v - (0.4 - 1.44 / 2.0)) < 1e-14);
}

TEST_CASE("grid marks zeros of w as singular") {
    Scenario s;
    s.solution = TauFunction(1.0, {{-1.0, WaveKind::Exp, {1.0, 0.0, 0.0}}});
    s.grid = {{-1.0, 1.0, 3}, {0.0, 0.0, 1}, {0.0}};
    const auto rows = parse_csv(grid_csv(evaluate_grid(s)));
    CHECK(rows[2][9] == "1");
    CHECK(rows[2][3] == "nan");
    CHECK(rows[1][9] == "0");
}

TEST_CASE("grid output is deterministic") {
    std::mt19937_64 rng(3);
    const SolitonSpec spec = draws::random_soliton(rng, Family::B, 3);
    Scenario s = soliton_scenario(Family::B, spec.p, spec.eqc, spec.bg);
    s.grid = {{-3.0, 3.0, 40}, {-3.0, 3.0, 30}, {0.0, 1.0}};
    CHECK(grid_csv(evaluate_grid(s)) == grid_csv(evaluate_grid(s)));
}

TEST_CASE("file errors") {
    CHECK_THROWS_AS(read_scenario("/nonexistent/scenario.json"), IoError);
    CHECK_THROWS_AS(write_text("/nonexistent/dir/out.csv", "x"), IoError);
}

TEST_CASE("seed override from the environment") {
    ::unsetenv("WAVEKIT_SEED");
    CHECK_FALSE(seed_from_environment().has_value());
    ::setenv("WAVEKIT_SEED", "42", 1);
    CHECK(seed_from_environment() == std::optional<std::uint64_t>(42));
    ::setenv("WAVEKIT_SEED", "4x", 1);
    CHECK_THROWS_AS(seed_from_environment(), ParameterError);
    ::unsetenv("WAVEKIT_SEED");
}

TEST_CASE("sweep report has one entry per branch") {
    const auto verdicts = sweep_threewave();
    const Json report = sweep_report(verdicts);
    CHECK(report.size() == 43);
    CHECK(sweep_acceptable(verdicts));
    for (const auto& e : report) {
        CHECK(e.contains("case"));
        CHECK(e["as_declared"].get<bool>());
    }
}
