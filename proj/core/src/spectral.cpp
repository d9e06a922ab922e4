#include "antipodes/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "antipodes/errors.hpp"

namespace antipodes {

EigenEstimate top_eigenvalue(const AntipodalityMatrix& m, const PowerIterationOptions& opts) {
    const std::size_t k = m.size();
    if (k == 0) {
        throw InputError("top_eigenvalue needs a non-empty matrix");
    }
    if (m.ones() == 0) {
        return {0.0, 0.0, 0};
    }
    // x is the normalized iterate and y = M x. Since M is symmetric with
    // spectral radius lambda_1, |y| / |x| is the square root of the
    // Rayleigh quotient of M^2: it dominates the Rayleigh quotient of M and
    // never exceeds lambda_1, and it converges even when -lambda_1 is also
    // an eigenvalue (bipartite structure), where plain Rayleigh quotients of
    // M would oscillate.
    std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
    std::vector<double> y(k);
    std::vector<double> z(k);
    m.multiply(x, y);
    double previous = -1.0;
    double previous_step = 0.0;
    double value = 0.0;
    double upper = 0.0;
    for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
        double yy = 0.0;
        for (double v : y) {
            yy += v * v;
        }
        value = std::sqrt(yy);
        m.multiply(y, z);
        // Collatz-Wielandt on M^2: lambda_1^2 <= max_i (M^2 x)_i / x_i.
        // Rows of M that are zero keep x_i = 0 and do not matter.
        double cw = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (x[i] > 0.0) {
                cw = std::max(cw, z[i] / x[i]);
            }
        }
        upper = std::sqrt(cw);
        if (upper - value <= opts.tolerance * value) {
            return {value, upper, it};
        }
        if (previous >= 0.0) {
            const double step = value - previous;
            if (std::abs(step) <= opts.tolerance * value) {
                // Geometric extrapolation of the climb still ahead.
                double remaining = 0.0;
                if (previous_step > 0.0 && step > 0.0 && step < previous_step) {
                    const double ratio = step / previous_step;
                    remaining = step * ratio / (1.0 - ratio);
                }
                if (remaining <= opts.tolerance * value) {
                    return {value, std::max(upper, value), it};
                }
            }
            previous_step = step;
        }
        previous = value;
        for (std::size_t i = 0; i < k; ++i) {
            x[i] = y[i] / value;
            y[i] = z[i] / value;
        }
    }
    throw ConvergenceError("power iteration did not converge in " +
                               std::to_string(opts.max_iterations) + " iterations; bracket [" +
                               std::to_string(value) + ", " + std::to_string(upper) + "]",
                           value, upper);
}

}  // namespace antipodes
