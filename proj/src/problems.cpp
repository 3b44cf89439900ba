#include "mwx/problems.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mwx {

namespace {

constexpr double kPi = std::numbers::pi;

// Derivatives up to order 4 of one factor s(t) = sin^2(pi t).
struct SquaredSine {
    std::array<double, 5> d{};
    explicit SquaredSine(double t)
    {
        const double s = std::sin(kPi * t);
        const double s2 = std::sin(2.0 * kPi * t);
        const double c2 = std::cos(2.0 * kPi * t);
        d = {s * s, kPi * s2, 2.0 * kPi * kPi * c2, -4.0 * kPi * kPi * kPi * s2, -8.0 * kPi * kPi * kPi * kPi * c2};
    }
};

// Derivatives up to order 4 of one factor s(t) = sin(pi t).
struct Sine {
    std::array<double, 5> d{};
    explicit Sine(double t)
    {
        const double s = std::sin(kPi * t);
        const double c = std::cos(kPi * t);
        d = {s, kPi * c, -kPi * kPi * s, -kPi * kPi * kPi * c, kPi * kPi * kPi * kPi * s};
    }
};

// u(x) = prod_i g(x_i) for a one-dimensional factor g with tabulated derivatives.
template <class Factor>
struct Separable {
    int dim;

    std::array<std::array<double, 5>, 3> factors(const Vec3& x) const
    {
        std::array<std::array<double, 5>, 3> f{};
        for (int i = 0; i < dim; ++i) {
            f[i] = Factor(x[i]).d;
        }
        return f;
    }

    // prod_i g^{(orders_i)}(x_i)
    double term(const std::array<std::array<double, 5>, 3>& f, std::array<int, 3> orders) const
    {
        double v = 1.0;
        for (int i = 0; i < dim; ++i) {
            v *= f[i][orders[i]];
        }
        return v;
    }

    double value(const Vec3& x) const { return term(factors(x), {0, 0, 0}); }

    Vec3 gradient(const Vec3& x) const
    {
        const auto f = factors(x);
        Vec3 g = Vec3::Zero();
        for (int i = 0; i < dim; ++i) {
            std::array<int, 3> o{0, 0, 0};
            o[i] = 1;
            g[i] = term(f, o);
        }
        return g;
    }

    Mat3 hessian(const Vec3& x) const
    {
        const auto f = factors(x);
        Mat3 h = Mat3::Zero();
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                std::array<int, 3> o{0, 0, 0};
                ++o[i];
                ++o[j];
                h(i, j) = term(f, o);
            }
        }
        return h;
    }

    double laplacian(const Vec3& x) const { return hessian(x).trace(); }

    double bilaplacian(const Vec3& x) const
    {
        const auto f = factors(x);
        double v = 0.0;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                std::array<int, 3> o{0, 0, 0};
                o[i] += 2;
                o[j] += 2;
                v += term(f, o);
            }
        }
        return v;
    }
};

template <class Factor>
ManufacturedProblem separable_problem(Example id, int dim)
{
    const Separable<Factor> u{dim};
    ManufacturedProblem p;
    p.id = id;
    p.dim = dim;
    p.reference.value = [u](const Vec3& x) { return u.value(x); };
    p.reference.gradient = [u](const Vec3& x) { return u.gradient(x); };
    p.reference.hessian = [u](const Vec3& x) { return u.hessian(x); };
    p.laplacian = [u](const Vec3& x) { return u.laplacian(x); };
    p.bilaplacian = [u](const Vec3& x) { return u.bilaplacian(x); };
    return p;
}

}  // namespace

Example parse_example(int id)
{
    MWX_REQUIRE(id >= 1 && id <= 3, "example must be 1, 2 or 3, got " + std::to_string(id));
    return static_cast<Example>(id);
}

ManufacturedProblem make_problem(Example id)
{
    switch (id) {
    case Example::Smooth2D:
        return separable_problem<SquaredSine>(id, 2);
    case Example::Smooth3D:
        return separable_problem<SquaredSine>(id, 3);
    case Example::BoundaryLayer:
        break;
    }
    return separable_problem<Sine>(Example::BoundaryLayer, 2);
}

std::function<double(const Vec3&)> derive_rhs(const ManufacturedProblem& problem, double epsilon)
{
    MWX_REQUIRE(epsilon >= 0.0, "derive_rhs: epsilon must be non-negative");
    if (problem.id == Example::BoundaryLayer) {
        return [](const Vec3& x) { return 2.0 * kPi * kPi * std::sin(kPi * x[0]) * std::sin(kPi * x[1]); };
    }
    const double e2 = epsilon * epsilon;
    auto lap = problem.laplacian;
    auto bilap = problem.bilaplacian;
    if (epsilon == 0.0) {
        return [lap](const Vec3& x) { return -lap(x); };
    }
    return [e2, lap, bilap](const Vec3& x) { return e2 * bilap(x) - lap(x); };
}

}  // namespace mwx
