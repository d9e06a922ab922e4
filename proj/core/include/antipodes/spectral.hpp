#pragma once

#include <cstddef>

#include "antipodes/matrix.hpp"

namespace antipodes {

struct PowerIterationOptions {
    double tolerance = 1e-9;  // relative, on the Rayleigh quotient
    std::size_t max_iterations = 100000;
};

struct EigenEstimate {
    // |M x| / |x| for the final iterate x: at least its Rayleigh quotient
    // and never above the true lambda_1.
    double value = 0.0;
    // Collatz-Wielandt bound sqrt(max_i (M^2 x)_i / x_i); never below lambda_1.
    double upper = 0.0;
    std::size_t iterations = 0;
};

// Largest eigenvalue of a symmetric non-negative matrix by power iteration
// from the all-ones vector. Stops once the estimate has settled to the
// relative tolerance, including an extrapolated estimate of the remaining
// climb, or once the [value, upper] bracket closes. Throws
// ConvergenceError carrying the last bracket when the cap is reached.
EigenEstimate top_eigenvalue(const AntipodalityMatrix& m, const PowerIterationOptions& opts = {});

}  // namespace antipodes
