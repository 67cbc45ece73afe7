#pragma once

namespace pendulum {

/// Complete elliptic integral of the first kind in the MODULUS convention:
/// K(k) = int_0^{pi/2} dphi / sqrt(1 - k^2 sin^2 phi), NOT the parameter
/// m = k^2 convention. Computed by arithmetic-geometric mean iteration to
/// 1e-15 relative. Requires 0 <= k < 1; k >= 1 is rejected (K diverges
/// logarithmically at k = 1).
double elliptic_k(double k);

/// Same integral parametrized by the complementary parameter m1 = 1 - k^2,
/// m1 in (0, 1]. Callers that know m1 exactly (e.g. from an energy ratio)
/// avoid the cancellation in forming 1 - k^2 near the divergence.
double elliptic_k_from_complement(double m1);

}  // namespace pendulum
