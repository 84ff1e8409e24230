#pragma once

#include <stdexcept>
#include <string>

namespace novikov {

// Requested evaluation outside the regime an operation is defined on
// (e.g. xi outside (-1/8, 0), s outside a solved Painleve grid).
struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation too close to a spectral singularity (z = +-1, e^{i pi/6}, ...).
struct singular_point_error : std::domain_error {
    using std::domain_error::domain_error;
};

// The momentum density u - u_xx + 1 lost positivity.
struct sign_condition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numerical scheme failed to converge or broke a stated contract.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration / misuse of an API contract.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace novikov
