#pragma once

#include <Eigen/Dense>

#include <functional>

#include "tbcurv/chart.hpp"

namespace tbcurv {

/// A metric tensor field y -> G(y) on an open subset of R^d, as used by the
/// finite-difference curvature engine.
using MetricField = std::function<Eigen::MatrixXd(const Eigen::VectorXd&)>;

namespace detail {

inline Tensor3 fd_christoffels(const MetricField& field, const Eigen::VectorXd& y, double h,
                               const Eigen::MatrixXd& g_inv) {
    const int d = static_cast<int>(y.size());
    // dg[c](a,b) = central difference of g_ab in direction c.
    std::vector<Eigen::MatrixXd> dg(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
        e(c) = h;
        dg[static_cast<std::size_t>(c)] = (field(y + e) - field(y - e)) / (2.0 * h);
    }
    Tensor3 gamma(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = b; c < d; ++c) {
                double sum = 0.0;
                for (int e = 0; e < d; ++e)
                    sum += g_inv(a, e) *
                           (dg[static_cast<std::size_t>(b)](e, c) +
                            dg[static_cast<std::size_t>(c)](e, b) -
                            dg[static_cast<std::size_t>(e)](b, c));
                gamma(a, b, c) = 0.5 * sum;
                gamma(a, c, b) = gamma(a, b, c);
            }
    return gamma;
}

}  // namespace detail

/// Scalar curvature of the field at y with a single central-difference step:
/// metric derivatives -> Christoffels -> Riemann (with first differences of
/// the Christoffels) -> Ricci contraction -> trace. Second-order accurate in
/// the step.
inline double scalar_curvature_fd(const MetricField& field, const Eigen::VectorXd& y, double step,
                                  double* condition = nullptr) {
    const int d = static_cast<int>(y.size());
    const Eigen::MatrixXd g = field(y);
    const Eigen::MatrixXd g_inv = g.inverse();
    if (condition) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
        const auto& ev = es.eigenvalues();
        *condition = ev(d - 1) / ev(0);
    }

    const Tensor3 gamma = detail::fd_christoffels(field, y, step, g_inv);

    // dgamma[c] = central difference of the Christoffels in direction c;
    // each shifted evaluation recomputes the local metric inverse.
    std::vector<Tensor3> dgamma;
    dgamma.reserve(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
        e(c) = step;
        const Eigen::VectorXd yp = y + e, ym = y - e;
        const Tensor3 gp = detail::fd_christoffels(field, yp, step, field(yp).inverse());
        const Tensor3 gm = detail::fd_christoffels(field, ym, step, field(ym).inverse());
        Tensor3 dg(d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int cc = 0; cc < d; ++cc)
                    dg(a, b, cc) = (gp(a, b, cc) - gm(a, b, cc)) / (2.0 * step);
        dgamma.push_back(std::move(dg));
    }

    // R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
    //           + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb};
    // Ricci_{bd} = R^a_{bad}; Sc = g^{bd} Ricci_{bd}.
    double sc = 0.0;
    for (int b = 0; b < d; ++b)
        for (int dd = 0; dd < d; ++dd) {
            double ric = 0.0;
            for (int a = 0; a < d; ++a) {
                double r = dgamma[static_cast<std::size_t>(a)](a, dd, b) -
                           dgamma[static_cast<std::size_t>(dd)](a, a, b);
                for (int e = 0; e < d; ++e)
                    r += gamma(a, a, e) * gamma(e, dd, b) - gamma(a, dd, e) * gamma(e, a, b);
                ric += r;
            }
            sc += g_inv(b, dd) * ric;
        }
    return sc;
}

/// Richardson-extrapolated scalar curvature from steps h and h/2:
/// (4 Sc(h/2) - Sc(h)) / 3, cancelling the second-order error term.
inline double scalar_curvature_richardson(const MetricField& field, const Eigen::VectorXd& y,
                                          double step, double* condition = nullptr) {
    const double coarse = scalar_curvature_fd(field, y, step, condition);
    const double fine = scalar_curvature_fd(field, y, step / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace tbcurv
