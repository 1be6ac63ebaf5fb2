#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <utility>
#include <vector>

#include "tbcurv/errors.hpp"
#include "tbcurv/metrics.hpp"

namespace tbcurv {

/// Index-3 array of doubles, sized n x n x n (Christoffel symbols).
class Tensor3 {
public:
    explicit Tensor3(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n, 0.0) {}

    double& operator()(int a, int b, int c) { return data_[idx(a, b, c)]; }
    double operator()(int a, int b, int c) const { return data_[idx(a, b, c)]; }
    int dim() const { return n_; }

private:
    std::size_t idx(int a, int b, int c) const {
        return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
    }
    int n_;
    std::vector<double> data_;
};

/// Local model of the space form (M^n, C): the conformal chart metric
/// lambda(x) * I with lambda = 4 / (1 + C |x|^2)^2 (Poincare ball for C < 0,
/// stereographic sphere for C > 0, scaled flat space for C = 0). The chart
/// domain is |x| <= radius; by default half the singular radius for C < 0
/// and 1/2 otherwise.
struct ConformalChart {
    int n;
    Rational curvature;
    double radius;

    ConformalChart(int n, const Rational& curvature)
        : ConformalChart(n, curvature,
                         curvature < 0 ? 0.5 / std::sqrt(-to_double(curvature)) : 0.5) {}

    ConformalChart(int n, const Rational& curvature, double radius)
        : n(n), curvature(curvature), radius(radius) {
        if (n < 2) throw std::invalid_argument("chart dimension must be at least 2");
        if (curvature < 0 && radius * radius >= 1.0 / -to_double(curvature))
            throw std::invalid_argument("chart radius reaches the singular locus");
    }

    double curvature_value() const { return to_double(curvature); }

    bool in_domain(const Eigen::VectorXd& x, double margin = 0.0) const {
        return x.norm() + margin <= radius;
    }

    double lambda(const Eigen::VectorXd& x) const {
        const double s = 1.0 + curvature_value() * x.squaredNorm();
        return 4.0 / (s * s);
    }

    Eigen::MatrixXd metric(const Eigen::VectorXd& x) const {
        return lambda(x) * Eigen::MatrixXd::Identity(n, n);
    }
};

/// Point (x, u) of the induced chart on TM: x base coordinates, u fiber
/// coordinates of U = u^i d/dx^i. At this point t = lambda(x) |u|^2 / 2.
struct TangentChartPoint {
    Eigen::VectorXd x;
    Eigen::VectorXd u;

    double t(const ConformalChart& chart) const { return 0.5 * chart.lambda(x) * u.squaredNorm(); }
};

/// Christoffel symbols of the chart metric:
/// Gamma^k_ij = delta^k_i d_j phi + delta^k_j d_i phi - delta_ij d^k phi
/// with phi = log(lambda)/2, so d_i phi = -2 C x_i / (1 + C |x|^2).
inline Tensor3 base_christoffels(const ConformalChart& chart, const Eigen::VectorXd& x) {
    if (!chart.in_domain(x)) throw chart_domain_error("chart point outside the domain");
    const double c = chart.curvature_value();
    const double s = 1.0 + c * x.squaredNorm();
    const Eigen::VectorXd dphi = (-2.0 * c / s) * x;
    Tensor3 gamma(chart.n);
    for (int k = 0; k < chart.n; ++k)
        for (int i = 0; i < chart.n; ++i)
            for (int j = 0; j < chart.n; ++j) {
                double v = 0.0;
                if (k == i) v += dphi(j);
                if (k == j) v += dphi(i);
                if (i == j) v -= dphi(k);
                gamma(k, i, j) = v;
            }
    return gamma;
}

/// Components of the (a, b) metric in the coordinate frame (d/dx, d/du) of
/// TM. In the adapted frame (horizontal dx^i - Gamma^k_il u^l du^k, vertical
/// du^i) the blocks are H = scale * g, mixed 0 and
/// V = scale * (a(t) g + b(t) (gu)(gu)^T); the coordinate expression is the
/// congruent push-through of that block form.
inline Eigen::MatrixXd assemble_total_metric(const ConformalChart& chart, const GNaturalMetric& m,
                                             const TangentChartPoint& pt) {
    if (!chart.in_domain(pt.x)) throw chart_domain_error("chart point outside the domain");
    const int n = chart.n;
    const double lam = chart.lambda(pt.x);
    const double t = pt.t(chart);
    const double scale = to_double(m.scale());

    const Eigen::MatrixXd g = lam * Eigen::MatrixXd::Identity(n, n);
    const Eigen::VectorXd gu = lam * pt.u;
    const Eigen::MatrixXd H = scale * g;
    const Eigen::MatrixXd V =
        scale * (m.a().evaluate(t) * g + m.b().evaluate(t) * (gu * gu.transpose()));

    const Tensor3 gamma = base_christoffels(chart, pt.x);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);  // B(k,i) = Gamma^k_il u^l
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) B(k, i) += gamma(k, i, l) * pt.u(l);

    Eigen::MatrixXd G(2 * n, 2 * n);
    G.topLeftCorner(n, n) = H + B.transpose() * V * B;
    G.topRightCorner(n, n) = B.transpose() * V;
    G.bottomLeftCorner(n, n) = V * B;
    G.bottomRightCorner(n, n) = V;
    // exact symmetry (summation order in the products is not)
    return 0.5 * (G + G.transpose());
}

}  // namespace tbcurv
