#pragma once

#include <cstddef>
#include <vector>

namespace pendulum {

/// Symmetric tridiagonal matrix: diag has size n, offdiag size n-1.
struct TridiagSystem {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const { return diag.size(); }

    /// Throws std::invalid_argument on size mismatch or non-finite entries.
    void validate() const;
};

/// Number of eigenvalues strictly below x, from the Sturm sequence of the
/// LDL^T recurrence. Exact in the sense of counting, stable for any x.
int sturm_count_below(const TridiagSystem& sys, double x);

/// The k smallest eigenvalues, ascending, each bracketed by bisection to an
/// interval of width <= tol * max(1, |lambda|). Fully deterministic.
/// tol below ~4 eps is clamped to the achievable floor.
std::vector<double> eigen_tridiag(const TridiagSystem& sys, int k, double tol = 1e-12);

}  // namespace pendulum
