#pragma once

#include "irreg/graph.hpp"

#include <optional>
#include <vector>

namespace irreg {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr long kDefaultMaxIterations = 1'000'000;
inline constexpr int kOracleCap = 12;

struct SpectralResult {
    double rho = 0.0;          // adjacency spectral radius
    std::optional<double> q1;  // signless Laplacian spectral radius
    long iterations = 0;       // summed over components and operators
    double residual = 0.0;     // largest final ||Mx - theta x|| over components
};

/// Power iteration on A + I per connected component, started from the
/// vector 1 + d and stopped once ||Ax - theta x|| <= tol * max(theta, 1),
/// which bounds the eigenvalue error by the same amount. Isolated vertices
/// contribute 0. Throws ConvergenceError if the cap is hit.
SpectralResult adjacency_spectral_radius(const Graph& g, double tol = kDefaultTolerance,
                                         long max_iterations = kDefaultMaxIterations);

/// Largest eigenvalue of Q = A + D; Q is positive semidefinite so plain power
/// iteration suffices.
double signless_laplacian_radius(const Graph& g, double tol = kDefaultTolerance,
                                 long max_iterations = kDefaultMaxIterations);

/// Both radii in one result.
SpectralResult spectral_radii(const Graph& g, double tol = kDefaultTolerance,
                              long max_iterations = kDefaultMaxIterations);

/// Coefficients c[0..n] of det(xI - A), lowest degree first, by the
/// Faddeev-LeVerrier recurrence in exact integer arithmetic.
std::vector<long long> characteristic_polynomial(const Graph& g);

/// Independent check on rho: bisection over [2m/n, max degree + 1] with the
/// exact predicate "every Taylor coefficient of det(xI - A) at x is positive",
/// which for a real-rooted polynomial holds iff x exceeds the largest root.
/// All evaluation is in exact rationals. Throws CapExceeded for n > kOracleCap.
double spectral_oracle(const Graph& g);

}  // namespace irreg
