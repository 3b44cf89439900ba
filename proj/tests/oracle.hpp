#pragma once

// Reference computations for the tests. Nothing here calls into the
// library's quadrature: integrals use Gauss-Legendre nodes from the
// Golub-Welsch eigenproblem and the collapsed (Duffy) map onto simplices.

#include "mwx/common.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

using mwx::Vec3;

struct Rule1D {
    std::vector<double> x;  // on [0, 1]
    std::vector<double> w;
};

inline Rule1D gauss_legendre(int n)
{
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double b = i / std::sqrt(4.0 * i * i - 1.0);
        jac(i, i - 1) = b;
        jac(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    Rule1D r;
    for (int i = 0; i < n; ++i) {
        r.x.push_back(0.5 * (es.eigenvalues()[i] + 1.0));
        const double v0 = es.eigenvectors()(0, i);
        r.w.push_back(v0 * v0);
    }
    return r;
}

using Fn = std::function<double(const Vec3&)>;

inline double integrate_segment(const Vec3& a, const Vec3& b, const Fn& f, int n = 10)
{
    const Rule1D g = gauss_legendre(n);
    const double len = (b - a).norm();
    double s = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        s += g.w[i] * f(a + g.x[i] * (b - a));
    }
    return s * len;
}

inline double integrate_triangle(const Vec3& a, const Vec3& b, const Vec3& c, const Fn& f, int n = 10)
{
    const Rule1D g = gauss_legendre(n);
    const double area = 0.5 * (b - a).cross(c - a).norm();
    double s = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        for (std::size_t j = 0; j < g.x.size(); ++j) {
            const double u = g.x[i];
            const double v = g.x[j] * (1.0 - u);
            const Vec3 x = a + u * (b - a) + v * (c - a);
            s += g.w[i] * g.w[j] * (1.0 - u) * f(x);
        }
    }
    return 2.0 * area * s;
}

inline double integrate_tetrahedron(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Fn& f,
                                    int n = 8)
{
    const Rule1D g = gauss_legendre(n);
    const double vol = std::abs((b - a).dot((c - a).cross(d - a))) / 6.0;
    double s = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
        for (std::size_t j = 0; j < g.x.size(); ++j) {
            for (std::size_t k = 0; k < g.x.size(); ++k) {
                const double u = g.x[i];
                const double v = g.x[j] * (1.0 - u);
                const double w = g.x[k] * (1.0 - u - v);
                const Vec3 x = a + u * (b - a) + v * (c - a) + w * (d - a);
                s += g.w[i] * g.w[j] * g.w[k] * (1.0 - u) * (1.0 - u - v) * f(x);
            }
        }
    }
    return 6.0 * vol * s;
}

// Integral over a simplex given by its vertex list (2 to 4 points).
inline double integrate_simplex(const std::vector<Vec3>& v, const Fn& f)
{
    switch (v.size()) {
    case 2:
        return integrate_segment(v[0], v[1], f);
    case 3:
        return integrate_triangle(v[0], v[1], v[2], f);
    default:
        return integrate_tetrahedron(v[0], v[1], v[2], v[3], f);
    }
}

}  // namespace oracle
