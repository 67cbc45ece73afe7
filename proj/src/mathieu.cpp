#include "pendulum/mathieu.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pendulum {

TridiagSystem build_even_matrix(double q, int n) {
    if (n < 4) throw std::invalid_argument("build_even_matrix: need n >= 4");
    TridiagSystem sys;
    sys.diag.resize(n);
    sys.offdiag.resize(n - 1);
    for (int k = 0; k < n; ++k) sys.diag[k] = 4.0 * k * k;
    sys.offdiag[0] = std::sqrt(2.0) * q;
    for (int k = 1; k < n - 1; ++k) sys.offdiag[k] = q;
    return sys;
}

TridiagSystem build_odd_matrix(double q, int n) {
    if (n < 4) throw std::invalid_argument("build_odd_matrix: need n >= 4");
    TridiagSystem sys;
    sys.diag.resize(n);
    sys.offdiag.resize(n - 1, q);
    for (int k = 0; k < n; ++k) sys.diag[k] = 4.0 * (k + 1) * (k + 1);
    return sys;
}

namespace {

std::vector<double> sweep(double q, Parity parity, int count, int trunc, double tol) {
    const TridiagSystem sys = parity == Parity::even ? build_even_matrix(q, trunc)
                                                     : build_odd_matrix(q, trunc);
    // eigen_tridiag brackets to width <= tol_eff * max(1, |lambda|); divide by
    // the spectral bound so the width is absolute and well below the doubling
    // tolerance, which must measure truncation error, not bisection noise.
    // (eigen_tridiag clamps to the machine floor when this underflows.)
    const double bound = sys.diag.back() + 2.0 * std::abs(sys.offdiag.front());
    const double tol_eff = 0.01 * tol / std::max(1.0, bound);
    return eigen_tridiag(sys, count, tol_eff);
}

}  // namespace

std::vector<CharValue> char_values(double q, Parity parity, int count, double tol,
                                   int max_doublings) {
    if (count < 1) throw std::invalid_argument("char_values: count must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("char_values: tol must be positive");
    q = std::abs(q);  // a_{2m}(-q) = a_{2m}(q), b_{2m}(-q) = b_{2m}(q)

    int trunc = std::max(2 * count, static_cast<int>(std::ceil(2.0 * std::sqrt(q))) + 10);
    trunc = std::max(trunc, 4);

    std::vector<double> prev = sweep(q, parity, count, trunc, tol);
    std::vector<bool> settled(count, false);
    bool all_settled = false;
    for (int pass = 0; pass < max_doublings && !all_settled; ++pass) {
        trunc *= 2;
        std::vector<double> next = sweep(q, parity, count, trunc, tol);
        all_settled = true;
        for (int i = 0; i < count; ++i) {
            settled[i] = std::abs(next[i] - prev[i]) < tol;
            all_settled = all_settled && settled[i];
        }
        prev = std::move(next);
    }

    std::vector<CharValue> out(count);
    for (int i = 0; i < count; ++i) {
        out[i].parity = parity;
        out[i].order_r = parity == Parity::even ? 2 * i : 2 * (i + 1);
        out[i].a = prev[i];
        out[i].truncation = trunc;
        out[i].converged = settled[i];
    }
    return out;
}

namespace {

SpectrumTable merge_spectrum(double q, double energy_scale, int count, double tol) {
    // Interlacing a_0 < b_2 <= a_2 < b_4 <= a_4 ... guarantees the merged
    // k-th state draws at most ceil((k+1)/2)+1 values from either parity.
    const int per_parity = count / 2 + 2;
    const auto even = char_values(q, Parity::even, per_parity, tol);
    const auto odd = char_values(q, Parity::odd, per_parity, tol);

    SpectrumTable table;
    table.q = q;
    table.energy_scale = energy_scale;

    std::vector<const CharValue*> all;
    all.reserve(even.size() + odd.size());
    for (const auto& cv : even) all.push_back(&cv);
    for (const auto& cv : odd) all.push_back(&cv);
    std::sort(all.begin(), all.end(), [](const CharValue* x, const CharValue* y) {
        const double tie = 1e-12 * std::max(1.0, std::max(std::abs(x->a), std::abs(y->a)));
        if (std::abs(x->a - y->a) <= tie) return x->parity == Parity::even && y->parity == Parity::odd;
        return x->a < y->a;
    });

    table.rows.resize(count);
    for (int i = 0; i < count; ++i) {
        const CharValue& cv = *all[i];
        table.rows[i].label = StateLabel{cv.parity, cv.order_r, i};
        table.rows[i].a = cv.a;
        table.rows[i].energy = cv.a * energy_scale;
        table.all_converged = table.all_converged && cv.converged;
    }
    return table;
}

}  // namespace

SpectrumTable spectrum(const PendulumConfig& cfg, int count, double tol) {
    cfg.validate();
    if (count < 1) throw std::invalid_argument("spectrum: count must be >= 1");
    const double scale = cfg.hbar * cfg.hbar / (8.0 * cfg.inertia());
    return merge_spectrum(q_of_config(cfg), scale, count, tol);
}

SpectrumTable spectrum_from_q(double q, int count, double tol) {
    if (count < 1) throw std::invalid_argument("spectrum_from_q: count must be >= 1");
    if (!(q >= 0.0)) throw std::invalid_argument("spectrum_from_q: q must be >= 0");
    return merge_spectrum(q, 0.25, count, tol);
}

}  // namespace pendulum
