#include "pendulum/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pendulum {

void TridiagSystem::validate() const {
    if (diag.empty()) throw std::invalid_argument("TridiagSystem: empty diagonal");
    if (offdiag.size() + 1 != diag.size()) {
        throw std::invalid_argument("TridiagSystem: offdiag must have size diag.size()-1");
    }
    auto finite = [](double x) { return std::isfinite(x); };
    if (!std::all_of(diag.begin(), diag.end(), finite) ||
        !std::all_of(offdiag.begin(), offdiag.end(), finite)) {
        throw std::invalid_argument("TridiagSystem: non-finite entry");
    }
}

namespace {

double pivot_floor(const TridiagSystem& sys) {
    double max_off2 = 1.0;
    for (double e : sys.offdiag) max_off2 = std::max(max_off2, e * e);
    return std::numeric_limits<double>::min() * max_off2;
}

int count_below(const TridiagSystem& sys, double x, double pivmin) {
    // d_i = (diag_i - x) - off_{i-1}^2 / d_{i-1}; negative pivots count
    // eigenvalues below x (Sturm sequence of the shifted LDL^T factorization).
    int count = 0;
    double d = 1.0;
    const std::size_t n = sys.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double off2 = i == 0 ? 0.0 : sys.offdiag[i - 1] * sys.offdiag[i - 1];
        d = (sys.diag[i] - x) - off2 / d;
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

}  // namespace

int sturm_count_below(const TridiagSystem& sys, double x) {
    sys.validate();
    return count_below(sys, x, pivot_floor(sys));
}

std::vector<double> eigen_tridiag(const TridiagSystem& sys, int k, double tol) {
    sys.validate();
    const int n = static_cast<int>(sys.size());
    if (k < 1 || k > n) throw std::invalid_argument("eigen_tridiag: need 1 <= k <= dimension");
    if (!(tol > 0.0)) throw std::invalid_argument("eigen_tridiag: tol must be positive");
    tol = std::max(tol, 4.0 * std::numeric_limits<double>::epsilon());

    // Gershgorin bounds.
    double lo = sys.diag[0], hi = sys.diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(sys.offdiag[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(sys.offdiag[i]) : 0.0);
        lo = std::min(lo, sys.diag[i] - r);
        hi = std::max(hi, sys.diag[i] + r);
    }
    const double span = hi - lo;
    lo -= 1e-12 * (1.0 + std::abs(lo)) + 1e-3 * span * 1e-12;
    hi += 1e-12 * (1.0 + std::abs(hi));

    const double pivmin = pivot_floor(sys);
    std::vector<double> out(k);
    double lower = lo;  // eigenvalues are found in ascending order
    for (int j = 0; j < k; ++j) {
        double a = lower, b = hi;
        // Maintain count(a) <= j < count(b).
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;  // interval at machine resolution
            if (count_below(sys, mid, pivmin) > j) {
                b = mid;
            } else {
                a = mid;
            }
            if (b - a <= tol * std::max(1.0, std::abs(mid))) break;
        }
        out[j] = 0.5 * (a + b);
        lower = a;  // lambda_{j+1} >= lambda_j
    }
    return out;
}

}  // namespace pendulum
