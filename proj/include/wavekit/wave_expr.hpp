#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wavekit {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// A point (x, y, t) of space-time.
struct Point {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Order of a mixed partial derivative: d^(i+j+k) / dx^i dy^j dt^k.
struct Order {
    int x = 0;
    int y = 0;
    int t = 0;

    constexpr int total() const { return x + y + t; }
    friend bool operator==(const Order&, const Order&) = default;
};

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A named parameter is missing, zero where it must not be, or out of range.
class ParameterError : public Error {
public:
    ParameterError(std::string parameter, const std::string& message)
        : Error(message), parameter_(std::move(parameter)) {}

    const std::string& parameter() const { return parameter_; }

private:
    std::string parameter_;
};

/// The tau function vanishes (numerically) at a point where a logarithm is needed.
class SingularPointError : public Error {
public:
    SingularPointError(Point p, const std::string& message) : Error(message), point_(p) {}

    const Point& point() const { return point_; }

private:
    Point point_;
};

/// alpha*x + beta*y + gamma*t + delta.
struct LinearPhase {
    Complex alpha{};
    Complex beta{};
    Complex gamma{};
    Complex delta{};

    Complex operator()(const Point& p) const { return alpha * p.x + beta * p.y + gamma * p.t + delta; }

    /// alpha^i beta^j gamma^k, the chain-rule factor of a mixed partial.
    Complex chain_factor(const Order& o) const;

    LinearPhase operator-() const { return {-alpha, -beta, -gamma, -delta}; }
    friend bool operator==(const LinearPhase&, const LinearPhase&) = default;
};

enum class WaveKind { Exp, Cos, Sin, Cosh, Sinh };

std::string_view to_string(WaveKind kind);
WaveKind wave_kind_from_string(std::string_view name);

struct WaveTerm {
    Complex coefficient{1.0, 0.0};
    WaveKind kind = WaveKind::Exp;
    LinearPhase phase{};

    Complex operator()(const Point& p) const;

    /// The exact mixed partial; always a single term (cos/sin and cosh/sinh rotate into each other).
    WaveTerm derivative(const Order& o) const;

    friend bool operator==(const WaveTerm&, const WaveTerm&) = default;
};

/// Maximum total order accepted by TauFunction::partial.
inline constexpr int kMaxPartialOrder = 8;

/// w(x,y,t) = constant + sum of wave terms. Immutable value type.
class TauFunction {
public:
    TauFunction() = default;
    explicit TauFunction(Complex constant, std::vector<WaveTerm> terms = {})
        : constant_(constant), terms_(std::move(terms)) {}

    const Complex& constant() const { return constant_; }
    const std::vector<WaveTerm>& terms() const { return terms_; }

    Complex operator()(const Point& p) const { return eval(p); }
    Complex eval(const Point& p) const;

    /// Value of the mixed partial at p without materialising the derivative.
    Complex eval_partial(const Order& o, const Point& p) const;

    /// Sum of |constant| and |term value| at p; the magnitude scale of w there.
    double magnitude_scale(const Point& p) const;

    /// Exact derivative as a new tau function. Throws ParameterError beyond kMaxPartialOrder.
    TauFunction partial(const Order& o) const;

    TauFunction with_term(WaveTerm term) const;
    /// Adds the same offset to the delta of every phase.
    TauFunction translated(Complex delta_shift) const;

    friend TauFunction operator+(const TauFunction& a, const TauFunction& b);
    friend bool operator==(const TauFunction&, const TauFunction&) = default;

private:
    Complex constant_{};
    std::vector<WaveTerm> terms_;
};

void check_partial_order(const Order& o, int max_total);

/// All mixed partials of w up to a fixed total order at one point, indexed by Order.
class TauJet {
public:
    TauJet(const TauFunction& w, const Point& p, int max_order);

    int max_order() const { return max_order_; }
    const Point& point() const { return point_; }
    /// Throws ParameterError when o exceeds the jet order.
    const Complex& operator[](const Order& o) const;
    /// sum of |constant| + |term values|; used to detect numerical zeros of w.
    double scale() const { return scale_; }

private:
    std::size_t index(const Order& o) const;

    int max_order_;
    Point point_;
    double scale_ = 0.0;
    std::vector<Complex> values_;
};

}  // namespace wavekit
