#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace mwx {

// Points, gradients and Hessians are stored in three components; in 2D the
// third component (row/column) is identically zero.
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

using Index = int;

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an assembled operator fails to be positive definite.
class CoercivityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an iterative solve does not reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MWX_REQUIRE(cond, msg)                 \
    do {                                       \
        if (!(cond)) {                         \
            throw ::mwx::InvalidArgument(msg); \
        }                                      \
    } while (false)

}  // namespace mwx
