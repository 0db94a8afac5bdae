#pragma once

#include <stdexcept>
#include <string>

namespace csieve {

struct NegativeCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadTauShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFreeAction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitDivisor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AdmissibilityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalDivisionFailure : std::logic_error {
    using std::logic_error::logic_error;
};

struct NonPolynomialResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace csieve
