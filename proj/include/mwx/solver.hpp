#pragma once

#include "mwx/forms.hpp"

#include <string>
#include <vector>

namespace mwx {

enum class SolverKind {
    SparseCholesky,     // supernodal LL^T (CHOLMOD) with iterative refinement
    ConjugateGradient,  // Jacobi-preconditioned CG
    Dense,              // dense LL^T, for small systems and oracles
};

std::string to_string(SolverKind k);
SolverKind parse_solver(const std::string& name);

struct SolverOptions {
    SolverKind kind = SolverKind::SparseCholesky;
    double tol = 1e-10;
    int max_iter = -1;  // -1: 50 * sqrt(n) + 1000
};

struct SolveReport {
    Eigen::VectorXd solution;
    int iterations = 0;
    double relative_residual = 0.0;
    SolverKind method = SolverKind::SparseCholesky;
    std::vector<double> residual_history;  // CG only
};

/// Solves A x = b for symmetric positive definite A.
///
/// Residuals are accumulated in extended precision so that the reported
/// value is the residual of the returned vector, not of its rounding.
/// Throws CoercivityError if A is found not to be positive definite and
/// ConvergenceError if the residual contract ||Ax - b|| <= tol ||b|| fails.
SolveReport solve_spd(const SparseMatrix& a, const Eigen::VectorXd& b, const SolverOptions& options = {});

/// As above; diagnostics name sigma, epsilon, method and mesh level.
SolveReport solve_spd(const AssembledSystem& system, const SolverOptions& options = {});

/// True iff a sparse LL^T factorization of `a` succeeds.
bool is_positive_definite(const SparseMatrix& a);

/// ||b - A x||_2 / ||b||_2 with the residual accumulated in extended precision.
double residual_norm(const SparseMatrix& a, const Eigen::VectorXd& x, const Eigen::VectorXd& b);

}  // namespace mwx
