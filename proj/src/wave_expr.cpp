#include "wavekit/wave_expr.hpp"

#include <cmath>
#include <utility>

namespace wavekit {

namespace {

Complex ipow(Complex base, int n) {
    Complex r{1.0, 0.0};
    for (int k = 0; k < n; ++k) r *= base;
    return r;
}

Complex kind_value(WaveKind kind, Complex phi) {
    switch (kind) {
        case WaveKind::Exp: return std::exp(phi);
        case WaveKind::Cos: return std::cos(phi);
        case WaveKind::Sin: return std::sin(phi);
        case WaveKind::Cosh: return std::cosh(phi);
        case WaveKind::Sinh: return std::sinh(phi);
    }
    return {};
}

// n-th derivative of kind(phi) with respect to phi, as (sign, kind).
std::pair<double, WaveKind> rotate(WaveKind kind, int n) {
    switch (kind) {
        case WaveKind::Exp: return {1.0, WaveKind::Exp};
        case WaveKind::Cosh: return {1.0, n % 2 == 0 ? WaveKind::Cosh : WaveKind::Sinh};
        case WaveKind::Sinh: return {1.0, n % 2 == 0 ? WaveKind::Sinh : WaveKind::Cosh};
        case WaveKind::Cos:
            switch (n % 4) {
                case 0: return {1.0, WaveKind::Cos};
                case 1: return {-1.0, WaveKind::Sin};
                case 2: return {-1.0, WaveKind::Cos};
                default: return {1.0, WaveKind::Sin};
            }
        case WaveKind::Sin:
            switch (n % 4) {
                case 0: return {1.0, WaveKind::Sin};
                case 1: return {1.0, WaveKind::Cos};
                case 2: return {-1.0, WaveKind::Sin};
                default: return {-1.0, WaveKind::Cos};
            }
    }
    return {1.0, kind};
}

}  // namespace

Complex LinearPhase::chain_factor(const Order& o) const {
    return ipow(alpha, o.x) * ipow(beta, o.y) * ipow(gamma, o.t);
}

std::string_view to_string(WaveKind kind) {
    switch (kind) {
        case WaveKind::Exp: return "exp";
        case WaveKind::Cos: return "cos";
        case WaveKind::Sin: return "sin";
        case WaveKind::Cosh: return "cosh";
        case WaveKind::Sinh: return "sinh";
    }
    return "exp";
}

WaveKind wave_kind_from_string(std::string_view name) {
    if (name == "exp") return WaveKind::Exp;
    if (name == "cos") return WaveKind::Cos;
    if (name == "sin") return WaveKind::Sin;
    if (name == "cosh") return WaveKind::Cosh;
    if (name == "sinh") return WaveKind::Sinh;
    throw ParameterError("kind", "unknown wave kind '" + std::string(name) + "'");
}

Complex WaveTerm::operator()(const Point& p) const { return coefficient * kind_value(kind, phase(p)); }

WaveTerm WaveTerm::derivative(const Order& o) const {
    auto [sign, k] = rotate(kind, o.total());
    return {sign * coefficient * phase.chain_factor(o), k, phase};
}

void check_partial_order(const Order& o, int max_total) {
    if (o.x < 0 || o.y < 0 || o.t < 0) throw ParameterError("order", "derivative orders must be nonnegative");
    if (o.total() > max_total) {
        throw ParameterError("order", "total derivative order " + std::to_string(o.total()) +
                                          " exceeds the limit of " + std::to_string(max_total));
    }
}

Complex TauFunction::eval(const Point& p) const {
    Complex s = constant_;
    for (const auto& term : terms_) s += term(p);
    return s;
}

Complex TauFunction::eval_partial(const Order& o, const Point& p) const {
    check_partial_order(o, kMaxPartialOrder);
    if (o.total() == 0) return eval(p);
    Complex s{};
    for (const auto& term : terms_) s += term.derivative(o)(p);
    return s;
}

double TauFunction::magnitude_scale(const Point& p) const {
    double s = std::abs(constant_);
    for (const auto& term : terms_) s += std::abs(term(p));
    return s;
}

TauFunction TauFunction::partial(const Order& o) const {
    check_partial_order(o, kMaxPartialOrder);
    if (o.total() == 0) return *this;
    std::vector<WaveTerm> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) out.push_back(term.derivative(o));
    return TauFunction(Complex{}, std::move(out));
}

TauFunction TauFunction::with_term(WaveTerm term) const {
    TauFunction r = *this;
    r.terms_.push_back(std::move(term));
    return r;
}

TauFunction TauFunction::translated(Complex delta_shift) const {
    TauFunction r = *this;
    for (auto& term : r.terms_) term.phase.delta += delta_shift;
    return r;
}

TauFunction operator+(const TauFunction& a, const TauFunction& b) {
    std::vector<WaveTerm> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return TauFunction(a.constant_ + b.constant_, std::move(terms));
}

TauJet::TauJet(const TauFunction& w, const Point& p, int max_order) : max_order_(max_order), point_(p) {
    check_partial_order({max_order, 0, 0}, kMaxPartialOrder);
    const int n = max_order + 1;
    values_.assign(static_cast<std::size_t>(n * n * n), Complex{});
    values_[0] = w.constant();
    scale_ = std::abs(w.constant());

    std::vector<Complex> ax(n), by(n), gt(n);
    for (const auto& term : w.terms()) {
        const Complex phi = term.phase(p);
        // kind(phi) and its first phi-derivative; higher ones repeat up to sign.
        Complex base0, base1;
        switch (term.kind) {
            case WaveKind::Exp: base0 = base1 = std::exp(phi); break;
            case WaveKind::Cos: base0 = std::cos(phi); base1 = -std::sin(phi); break;
            case WaveKind::Sin: base0 = std::sin(phi); base1 = std::cos(phi); break;
            case WaveKind::Cosh: base0 = std::cosh(phi); base1 = std::sinh(phi); break;
            case WaveKind::Sinh: base0 = std::sinh(phi); base1 = std::cosh(phi); break;
        }
        const bool periodic = term.kind == WaveKind::Cos || term.kind == WaveKind::Sin;
        const Complex c = term.coefficient;
        scale_ += std::abs(c * base0);

        ax[0] = by[0] = gt[0] = 1.0;
        for (int k = 1; k < n; ++k) {
            ax[k] = ax[k - 1] * term.phase.alpha;
            by[k] = by[k - 1] * term.phase.beta;
            gt[k] = gt[k - 1] * term.phase.gamma;
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; i + j < n; ++j) {
                for (int k = 0; i + j + k < n; ++k) {
                    const int total = i + j + k;
                    Complex d = (total % 2 == 0) ? base0 : base1;
                    // cos'' = -cos, sin'' = -sin: every second pair of derivatives flips sign.
                    if (periodic && (total / 2) % 2 == 1) d = -d;
                    values_[index({i, j, k})] += c * ax[i] * by[j] * gt[k] * d;
                }
            }
        }
    }
}

const Complex& TauJet::operator[](const Order& o) const {
    check_partial_order(o, max_order_);
    return values_[index(o)];
}

std::size_t TauJet::index(const Order& o) const {
    const int n = max_order_ + 1;
    return static_cast<std::size_t>((o.x * n + o.y) * n + o.t);
}

}  // namespace wavekit
