#pragma once

#include "mwx/element.hpp"

#include <functional>
#include <string>

namespace mwx {

enum class Example {
    Smooth2D = 1,       // u = (sin(pi x) sin(pi y))^2 on the unit square
    BoundaryLayer = 2,  // f = 2 pi^2 sin(pi x) sin(pi y); errors against u0 = sin(pi x) sin(pi y)
    Smooth3D = 3,       // u = (sin(pi x) sin(pi y) sin(pi z))^2 on the unit cube
};

Example parse_example(int id);

/// Test problem with closed-form data.
///
/// `reference` is the function errors are measured against: the exact
/// solution for the smooth examples, the limiting Poisson solution u0 for
/// the boundary-layer example.
struct ManufacturedProblem {
    Example id = Example::Smooth2D;
    int dim = 2;
    SmoothFunction reference;
    std::function<double(const Vec3&)> laplacian;    // of the reference
    std::function<double(const Vec3&)> bilaplacian;  // of the reference
};

ManufacturedProblem make_problem(Example id);

/// Right-hand side for the given epsilon: eps^2 lap^2 u - lap u for the smooth
/// examples, the fixed 2 pi^2 sin(pi x) sin(pi y) for the boundary-layer one.
std::function<double(const Vec3&)> derive_rhs(const ManufacturedProblem& problem, double epsilon);

}  // namespace mwx
