#include "pendulum/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pendulum {

double elliptic_k_from_complement(double m1) {
    if (!(m1 > 0.0) || !(m1 <= 1.0)) {
        throw std::invalid_argument("elliptic_k_from_complement: need 0 < m1 <= 1");
    }
    double a = 1.0;
    double b = std::sqrt(m1);
    // AGM converges quadratically; 40 iterations is far beyond what double
    // precision can use even for m1 near the underflow threshold.
    for (int i = 0; i < 40 && std::abs(a - b) > 1e-15 * a; ++i) {
        const double am = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = am;
    }
    return std::numbers::pi / (2.0 * a);
}

double elliptic_k(double k) {
    if (!(k >= 0.0) || k >= 1.0) {
        throw std::invalid_argument("elliptic_k: modulus must satisfy 0 <= k < 1");
    }
    return elliptic_k_from_complement((1.0 - k) * (1.0 + k));
}

}  // namespace pendulum
