#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "wavekit/threewave.hpp"

namespace wavekit::detail {

/// Symbol table a case formula reads from and writes into.
class CaseVars {
public:
    CaseVars(const EquationCoefficients& eqc, int epsilon) : a(eqc.a), b(eqc.b), c(eqc.c), d(eqc.d), e(epsilon) {}

    const Complex a, b, c, d;
    const double e;

    /// Value of a free or already derived symbol; throws if neither.
    Complex operator[](const std::string& name) const;
    bool has(const std::string& name) const { return values_.count(name) > 0; }

    void set_free(const std::string& name, Complex value);
    void set(const std::string& name, Complex value);
    void zero(std::initializer_list<const char*> names);

    /// Returns value, or throws ParameterError naming the factor when it vanishes.
    Complex nonzero(Complex value, const char* factor) const;

    const ParameterMap& values() const { return values_; }
    const ParameterMap& derived() const { return derived_; }

private:
    ParameterMap values_;
    ParameterMap derived_;
};

using CaseFormula = void (*)(CaseVars&);

struct BranchDef {
    int case_id;
    int branch;
    const char* free;
    const char* constraints;
    CaseFormula printed;
    CaseFormula corrected = nullptr;
    const char* correction = "";
    /// Non-empty when the printed formulas are known to fail the residual oracles.
    const char* deviation = "";
};

/// Every branch in catalog order.
const std::vector<BranchDef>& branch_definitions();

/// Which of the cos/cosh waves a case switches off (its amplitude is identically zero).
bool wave_inert(int case_id, int wave);

}  // namespace wavekit::detail
