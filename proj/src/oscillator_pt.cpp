#include "pendulum/oscillator_pt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <type_traits>

namespace pendulum {

OscillatorFrame OscillatorFrame::for_config(const PendulumConfig& cfg, int n_max, int r_max) {
    cfg.validate();
    OscillatorFrame f;
    f.hbar = cfg.hbar;
    f.mass = cfg.mass;
    f.omega = std::sqrt(cfg.v0 / cfg.inertia());
    f.basis_dim = n_max + 4 * r_max + 14;
    return f;
}

double OscillatorFrame::ladder_unit() const {
    return std::sqrt(hbar / (2.0 * mass * omega));
}

int PerturbationPolynomial::max_power() const {
    int p = 0;
    for (const auto& t : terms) p = std::max(p, t.power);
    return p;
}

namespace {

// Dense symmetric matvec helpers over a scalar ring R. R must provide
// +=, *, and construction from 0.0; instantiated with double and with the
// grade-truncated polynomial below.

constexpr int kGrades = 5;  // lambda^0 .. lambda^4

// Polynomial in the grading parameter, truncated beyond lambda^4. Products of
// term grades land in the coefficient whose index is the total grade, which is
// exactly the order-mixing bookkeeping of the oscillator expansion.
struct GradePoly {
    std::array<double, kGrades> c{};

    GradePoly() = default;
    GradePoly(double x) { c[0] = x; }  // NOLINT: implicit by design

    GradePoly& operator+=(const GradePoly& o) {
        for (int i = 0; i < kGrades; ++i) c[i] += o.c[i];
        return *this;
    }
    friend GradePoly operator+(GradePoly a, const GradePoly& b) { return a += b; }
    friend GradePoly operator-(const GradePoly& a, const GradePoly& b) {
        GradePoly r;
        for (int i = 0; i < kGrades; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend GradePoly operator*(const GradePoly& a, const GradePoly& b) {
        GradePoly r;
        for (int i = 0; i < kGrades; ++i) {
            if (a.c[i] == 0.0) continue;
            for (int j = 0; j + i < kGrades; ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    friend GradePoly operator*(const GradePoly& a, double s) {
        GradePoly r;
        for (int i = 0; i < kGrades; ++i) r.c[i] = a.c[i] * s;
        return r;
    }
    friend GradePoly operator-(const GradePoly& a) { return a * -1.0; }
};

template <class R>
struct RsTerms {
    R e1{}, e2{}, e3{}, e4{};
};

// RS corrections through fourth order from resolvent chains. V is a dense
// symmetric dim x dim matrix over R; G_s is the diagonal resolvent
// 1/(E_n - E_j)^s with the n-th entry zeroed, which removes j = n from every
// sum. E_n - E_j = (n - j) hbar omega, never degenerate for j != n.
template <class R>
RsTerms<R> rs_chain(const std::vector<R>& v, int dim, int n, double hbar_omega) {
    auto at = [&](int i, int j) -> const R& { return v[i * dim + j]; };

    std::vector<R> c0(dim);  // V e_n
    for (int i = 0; i < dim; ++i) c0[i] = at(i, n);

    auto resolvent = [&](const std::vector<R>& x, int s) {
        std::vector<R> y(dim);
        for (int j = 0; j < dim; ++j) {
            if (j == n) continue;
            const double inv = 1.0 / ((n - j) * hbar_omega);
            double w = inv;
            for (int t = 1; t < s; ++t) w *= inv;
            y[j] = x[j] * w;
        }
        return y;
    };
    auto matvec = [&](const std::vector<R>& x) {
        std::vector<R> y(dim);
        for (int i = 0; i < dim; ++i) {
            R acc{};
            for (int j = 0; j < dim; ++j) acc += at(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    };
    auto dot = [&](const std::vector<R>& x, const std::vector<R>& y) {
        R acc{};
        for (int i = 0; i < dim; ++i) acc += x[i] * y[i];
        return acc;
    };

    const R d = c0[n];  // <n|V|n>
    const auto a1 = resolvent(c0, 1);
    const auto a2 = resolvent(c0, 2);
    const auto a3 = resolvent(c0, 3);
    const R s11 = dot(c0, a1);
    const R s12 = dot(c0, a2);
    const R s13 = dot(c0, a3);
    const auto w1 = matvec(a1);  // (V G1 V) e_n
    const auto w2 = matvec(a2);  // (V G2 V) e_n

    RsTerms<R> out;
    out.e1 = d;
    out.e2 = s11;
    out.e3 = dot(a1, w1) - d * s12;
    const R t1 = dot(resolvent(w1, 1), w1);
    const R t2 = -(d * dot(a1, w2));
    const R t3 = -(d * dot(a2, w1));
    const R t4 = d * d * s13;
    const R t5 = -(s11 * s12);
    out.e4 = t1 + t2 + t3 + t4 + t5;
    return out;
}

std::vector<double> ladder_x(int dim, const OscillatorFrame& frame) {
    std::vector<double> x(static_cast<std::size_t>(dim) * dim, 0.0);
    const double s = frame.ladder_unit();
    for (int j = 0; j + 1 < dim; ++j) {
        x[j * dim + (j + 1)] = x[(j + 1) * dim + j] = s * std::sqrt(j + 1.0);
    }
    return x;
}

std::vector<double> mat_mul(const std::vector<double>& a, const std::vector<double>& b,
                            int dim) {
    std::vector<double> c(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int k = 0; k < dim; ++k) {
            const double aik = a[i * dim + k];
            if (aik == 0.0) continue;
            for (int j = 0; j < dim; ++j) c[i * dim + j] += aik * b[k * dim + j];
        }
    }
    return c;
}

// All powers 0..max_power at once: x^p is p ladder multiplications.
std::vector<std::vector<double>> x_powers(int max_power, int dim,
                                          const OscillatorFrame& frame) {
    std::vector<std::vector<double>> powers(max_power + 1);
    powers[0].assign(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) powers[0][i * dim + i] = 1.0;
    if (max_power >= 1) powers[1] = ladder_x(dim, frame);
    for (int p = 2; p <= max_power; ++p) powers[p] = mat_mul(powers[p - 1], powers[1], dim);
    return powers;
}

template <class R>
std::vector<R> assemble(const PerturbationPolynomial& pert, int dim,
                        const OscillatorFrame& frame, bool graded) {
    const auto powers = x_powers(pert.max_power(), dim, frame);
    std::vector<R> v(static_cast<std::size_t>(dim) * dim, R{});
    for (const auto& term : pert.terms) {
        const auto& xp = powers[term.power];
        for (int i = 0; i < dim * dim; ++i) {
            const double entry = term.coeff * xp[i];
            if constexpr (std::is_same_v<R, GradePoly>) {
                v[i].c[graded ? term.grade : 1] += entry;
            } else {
                v[i] += entry;
            }
        }
    }
    return v;
}

}  // namespace

std::vector<double> x_power_matrix(int power, int dim, const OscillatorFrame& frame) {
    if (power < 0) throw std::invalid_argument("x_power_matrix: power must be >= 0");
    if (dim < power + 2) throw std::invalid_argument("x_power_matrix: dim must be >= power+2");
    return x_powers(power, dim, frame).back();
}

PerturbationPolynomial pendulum_perturbation(const PendulumConfig& cfg, int max_r) {
    cfg.validate();
    if (max_r < 2) throw std::invalid_argument("pendulum_perturbation: max_r must be >= 2");
    PerturbationPolynomial pert;
    double factorial = 2.0;                 // (2r)! running value, starts at 2!
    double lpow = cfg.length * cfg.length;  // l^{2r}, starts at l^2
    double sign = -1.0;                     // (-1)^{r+1}
    for (int r = 2; r <= max_r; ++r) {
        factorial *= 2.0 * r * (2.0 * r - 1.0);
        lpow *= cfg.length * cfg.length;
        pert.terms.push_back({2 * r, sign * cfg.v0 / (factorial * lpow), r - 1});
        sign = -sign;
    }
    return pert;
}

double rs_pt(const PerturbationPolynomial& pert, int n, const OscillatorFrame& frame,
             int rs_order) {
    if (rs_order < 1 || rs_order > 4) throw std::invalid_argument("rs_pt: rs_order in 1..4");
    if (n < 0) throw std::invalid_argument("rs_pt: n must be >= 0");
    const int needed = n + (rs_order + 1) * std::max(pert.max_power(), 1) + 2;
    const int dim = std::max(frame.basis_dim, needed);

    auto run = [&](int d) {
        const auto v = assemble<double>(pert, d, frame, false);
        const auto rs = rs_chain<double>(v, d, n, frame.hbar * frame.omega);
        switch (rs_order) {
            case 1: return rs.e1;
            case 2: return rs.e2;
            case 3: return rs.e3;
            default: return rs.e4;
        }
    };
    const double value = run(dim);
    const double check = run(dim + 10);
    const double scale = std::max({1e-300, std::abs(value), std::abs(check)});
    if (std::abs(value - check) > 1e-9 * scale + 1e-14) {
        throw std::runtime_error("rs_pt: perturbation sums not converged at basis_dim");
    }
    return check;
}

PtCorrection graded_correction(int order, int n, const PendulumConfig& cfg) {
    if (order < 1 || order > 4) {
        throw std::invalid_argument("graded_correction: order in 1..4");
    }
    if (n < 0) throw std::invalid_argument("graded_correction: n must be >= 0");
    const auto frame = OscillatorFrame::for_config(cfg, n);
    const auto pert = pendulum_perturbation(cfg);
    const auto v = assemble<GradePoly>(pert, frame.basis_dim, frame, true);
    const auto rs = rs_chain<GradePoly>(v, frame.basis_dim, n, frame.hbar * frame.omega);
    const GradePoly total = rs.e1 + rs.e2 + rs.e3 + rs.e4;
    return PtCorrection{n, order, total.c[order]};
}

double closed_form(int order, int n, const PendulumConfig& cfg) {
    cfg.validate();
    if (n < 0) throw std::invalid_argument("closed_form: n must be >= 0");
    const double hb = cfg.hbar;
    const double inertia = cfg.inertia();
    const double nn = n;
    switch (order) {
        case 0:
            return (nn + 0.5) * hb * std::sqrt(cfg.v0 / inertia) - cfg.v0;
        case 1:
            return -hb * hb / (32.0 * inertia) * (2.0 * nn * nn + 2.0 * nn + 1.0);
        case 2:
            return -std::pow(hb, 3) / (inertia * inertia) * std::sqrt(inertia / cfg.v0) *
                   (2.0 * nn * nn * nn + 3.0 * nn * nn + 3.0 * nn + 1.0) / 512.0;
        case 3:
            return -std::pow(hb, 4) / (cfg.v0 * inertia * inertia) *
                   (5.0 * std::pow(nn, 4) + 10.0 * std::pow(nn, 3) + 16.0 * nn * nn +
                    11.0 * nn + 3.0) /
                   8192.0;
        case 4:
            return -std::pow(hb, 5) / (std::pow(inertia, 2.5) * std::pow(cfg.v0, 1.5)) *
                   (66.0 * std::pow(nn, 5) + 165.0 * std::pow(nn, 4) +
                    370.0 * std::pow(nn, 3) + 390.0 * nn * nn + 225.0 * nn + 53.0) /
                   524288.0;
        default:
            throw std::invalid_argument("closed_form: order in 0..4");
    }
}

double handbook_a_low(int n, double q, int terms) {
    if (!(q > 0.0)) throw std::invalid_argument("handbook_a_low: q must be > 0");
    if (n < 0) throw std::invalid_argument("handbook_a_low: n must be >= 0");
    if (terms < 0 || terms > 6) throw std::invalid_argument("handbook_a_low: terms in 0..6");
    const double p = 2.0 * n + 1.0;
    const double rq = std::sqrt(q);
    const double series[6] = {
        -2.0 * q,
        2.0 * p * rq,
        -(p * p + 1.0) / 8.0,
        -(p * p * p + 3.0 * p) / (128.0 * rq),
        -(5.0 * std::pow(p, 4) + 34.0 * p * p + 9.0) / (4096.0 * q),
        -(33.0 * std::pow(p, 5) + 410.0 * p * p * p + 405.0 * p) / (131072.0 * q * rq),
    };
    double a = 0.0;
    for (int i = 0; i < terms; ++i) a += series[i];
    return a;
}

}  // namespace pendulum
