#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wavekit/json_io.hpp"
#include "wavekit/soliton.hpp"
#include "wavekit/threewave.hpp"

namespace wavekit {

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

struct GridAxis {
    double min = 0.0;
    double max = 0.0;
    int count = 1;

    /// min + i (max - min) / (count - 1); min when count == 1.
    double at(int i) const;
    friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

struct Grid {
    GridAxis x{-5.0, 5.0, 11};
    GridAxis y{-5.0, 5.0, 11};
    std::vector<double> t{0.0};

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Per-scenario tolerance overrides; unset entries use the defaults of the solution type.
struct Tolerances {
    std::optional<double> bilinear;
    std::optional<double> system;
    std::optional<double> pde;
    std::optional<double> identity;

    friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// Residual sample set: `points` quasi-random points in [lo, hi]^3 drawn from the scenario seed.
struct SampleSpec {
    std::size_t points = 50;
    double lo = -5.0;
    double hi = 5.0;

    friend bool operator==(const SampleSpec&, const SampleSpec&) = default;
};

using Solution = std::variant<SolitonSpec, ThreeWaveSpec, TauFunction>;

struct Scenario {
    EquationCoefficients eqc{};
    Background bg{};
    Solution solution{TauFunction(Complex{1.0})};
    Grid grid{};
    Tolerances tolerances{};
    SampleSpec sample{};
    std::uint64_t seed = 1;
    /// Fail verification when u, v, omega are not real to the identity tolerance.
    bool require_real = false;

    TauFunction tau() const;
    FieldTriple fields() const { return assemble(tau(), bg); }
    std::vector<Point> points() const;

    /// Throws ParameterError on an empty grid axis, min > max, a non-positive tolerance,
    /// or a solution whose equation/background disagree with the scenario's.
    void validate() const;
};

bool operator==(const SolitonSpec& a, const SolitonSpec& b);
bool operator==(const ThreeWaveSpec& a, const ThreeWaveSpec& b);
bool operator==(const Scenario& a, const Scenario& b);

/// {"eq", "background", "solution": {"type": "soliton"|"threewave"|"raw_tau", ...}, "grid":
/// {"x": [min,max,count], "y": [...], "t": [...]}, "tolerances", "sample", "seed", "require_real"}
void to_json(Json& j, const Scenario& s);
/// Validates after reading.
void from_json(const Json& j, Scenario& s);

std::string dump_json(const Json& j);
Scenario read_scenario(const std::string& path);
void write_text(const std::string& path, const std::string& text);

/// Parses "1.5", "-2i", "0.3+1e-2i", "i". The imaginary unit may be written i, I or j.
/// Throws ParameterError naming `what` on malformed or non-finite input.
Complex parse_complex(std::string_view text, const std::string& what = "value");
/// "re", "re+imi" or "re-imi" with 17 significant digits; parse_complex reads it back exactly.
std::string format_complex(Complex z);

/// Returns the integer value of WAVEKIT_SEED, or nothing when unset. Throws ParameterError
/// when it is set but not an unsigned integer.
std::optional<std::uint64_t> seed_from_environment();

/// One entry of a verification report.
struct CheckResult {
    std::string check;
    Json report;
    bool pass = false;
    /// The failure matches a declared suspected typo of the printed formulas.
    bool declared_deviation = false;
};

struct VerifyResult {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    /// Every failing check is a declared deviation.
    bool acceptable() const;
    Json to_json() const;
};

/// Runs every check that applies to the solution: its bilinear pair, the coefficient system
/// for three-wave specs, the PDE residuals and the transform identities, and realness.
VerifyResult verify_scenario(const Scenario& s);

struct GridRow {
    Point p;
    Complex u, v, omega;
    bool singular = false;
};

/// Rows in t-major, then y, then x order. Computed in parallel.
std::vector<GridRow> evaluate_grid(const Scenario& s);

inline constexpr const char* kGridHeader = "x,y,t,re_u,im_u,re_v,im_v,re_omega,im_omega,singular";

/// The CSV text, numbers with 17 significant digits, singular rows with nan fields.
std::string grid_csv(const std::vector<GridRow>& rows);

/// One report entry per verdict; `acceptable` when every verdict matches its declared status.
Json sweep_report(const std::vector<BranchVerdict>& verdicts);
bool sweep_acceptable(const std::vector<BranchVerdict>& verdicts);

}  // namespace wavekit
