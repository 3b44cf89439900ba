#include "mwx/solver.hpp"

#include <Eigen/CholmodSupport>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mwx {

std::string to_string(SolverKind k)
{
    switch (k) {
    case SolverKind::SparseCholesky:
        return "cholesky";
    case SolverKind::ConjugateGradient:
        return "cg";
    case SolverKind::Dense:
        return "dense";
    }
    return "?";
}

SolverKind parse_solver(const std::string& name)
{
    if (name == "cholesky") {
        return SolverKind::SparseCholesky;
    }
    if (name == "cg") {
        return SolverKind::ConjugateGradient;
    }
    if (name == "dense") {
        return SolverKind::Dense;
    }
    throw InvalidArgument("unknown solver '" + name + "'");
}

namespace {

// b - A x with every dot product accumulated in long double.
Eigen::VectorXd accurate_residual(const SparseMatrix& a, const Eigen::VectorXd& x, const Eigen::VectorXd& b,
                                  long double& norm_sq)
{
    std::vector<long double> acc(std::size_t(b.size()));
    for (long i = 0; i < b.size(); ++i) {
        acc[i] = b[i];
    }
    for (int col = 0; col < a.outerSize(); ++col) {
        const long double xc = x[col];
        for (SparseMatrix::InnerIterator it(a, col); it; ++it) {
            acc[it.row()] -= static_cast<long double>(it.value()) * xc;
        }
    }
    Eigen::VectorXd r(b.size());
    norm_sq = 0.0L;
    for (long i = 0; i < b.size(); ++i) {
        r[i] = static_cast<double>(acc[i]);
        norm_sq += acc[i] * acc[i];
    }
    return r;
}

double relative_residual(const SparseMatrix& a, const Eigen::VectorXd& x, const Eigen::VectorXd& b)
{
    long double rr = 0.0L;
    accurate_residual(a, x, b, rr);
    long double bb = 0.0L;
    for (long i = 0; i < b.size(); ++i) {
        bb += static_cast<long double>(b[i]) * b[i];
    }
    return bb > 0.0L ? static_cast<double>(std::sqrt(rr / bb)) : static_cast<double>(std::sqrt(rr));
}

using Factorization = Eigen::CholmodSupernodalLLT<SparseMatrix, Eigen::Lower>;

void factorize(Factorization& llt, const SparseMatrix& a)
{
    llt.cholmod().print = 0;
    llt.compute(a);
}

// Jacobi-preconditioned CG. The recursively updated residual drifts away
// from b - Ax on ill-conditioned systems, so whenever it meets the
// tolerance the true residual is recomputed and the iteration restarted
// from it.
SolveReport conjugate_gradient(const SparseMatrix& a, const Eigen::VectorXd& b, const SolverOptions& opt)
{
    const long n = a.rows();
    const int max_iter =
        opt.max_iter > 0 ? opt.max_iter : static_cast<int>(50.0 * std::sqrt(static_cast<double>(n))) + 1000;
    Eigen::VectorXd inv_diag = a.diagonal();
    for (long i = 0; i < n; ++i) {
        if (!(inv_diag[i] > 0.0)) {
            throw CoercivityError("conjugate gradient: nonpositive diagonal entry " + std::to_string(i));
        }
        inv_diag[i] = 1.0 / inv_diag[i];
    }

    SolveReport rep;
    rep.method = SolverKind::ConjugateGradient;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    const double nb = b.norm();
    if (nb == 0.0) {
        rep.solution = x;
        rep.residual_history.push_back(0.0);
        return rep;
    }

    Eigen::VectorXd r = b;
    Eigen::VectorXd z(n);
    Eigen::VectorXd p(n);
    Eigen::VectorXd ap(n);
    int it = 0;
    double true_res = 1.0;
    rep.residual_history.push_back(1.0);
    while (it < max_iter) {
        z = inv_diag.cwiseProduct(r);
        p = z;
        double rz = r.dot(z);
        double res = r.norm() / nb;
        while (res > opt.tol && it < max_iter) {
            ap.noalias() = a * p;
            const double curvature = p.dot(ap);
            if (!(curvature > 0.0)) {
                throw CoercivityError("conjugate gradient: nonpositive curvature at iteration " + std::to_string(it));
            }
            const double alpha = rz / curvature;
            x += alpha * p;
            r -= alpha * ap;
            ++it;
            res = r.norm() / nb;
            rep.residual_history.push_back(res);
            z = inv_diag.cwiseProduct(r);
            const double rz_new = r.dot(z);
            p = z + (rz_new / rz) * p;
            rz = rz_new;
        }
        const double previous = true_res;
        long double rr = 0.0L;
        r = accurate_residual(a, x, b, rr);
        true_res = static_cast<double>(std::sqrt(rr)) / nb;
        if (true_res <= opt.tol || true_res >= previous) {
            break;
        }
    }
    rep.iterations = it;
    rep.solution = std::move(x);
    rep.relative_residual = relative_residual(a, rep.solution, b);
    if (rep.relative_residual > opt.tol) {
        std::ostringstream os;
        os << "conjugate gradient: relative residual " << rep.relative_residual << " > " << opt.tol << " after "
           << it << " iterations; history:";
        const std::size_t stride = std::max<std::size_t>(1, rep.residual_history.size() / 10);
        for (std::size_t i = 0; i < rep.residual_history.size(); i += stride) {
            os << ' ' << rep.residual_history[i];
        }
        throw ConvergenceError(os.str());
    }
    return rep;
}

SolveReport sparse_cholesky(const SparseMatrix& a, const Eigen::VectorXd& b, const SolverOptions& opt)
{
    Factorization llt;
    factorize(llt, a);
    if (llt.info() != Eigen::Success) {
        throw CoercivityError("sparse Cholesky factorization failed: matrix is not positive definite");
    }
    SolveReport rep;
    rep.method = SolverKind::SparseCholesky;
    rep.solution = llt.solve(b);
    rep.iterations = 1;
    rep.relative_residual = relative_residual(a, rep.solution, b);
    // Iterative refinement against the accurately computed residual.
    for (int step = 0; step < 3 && rep.relative_residual > opt.tol; ++step) {
        long double rr = 0.0L;
        const Eigen::VectorXd r = accurate_residual(a, rep.solution, b, rr);
        const Eigen::VectorXd candidate = rep.solution + llt.solve(r);
        const double res = relative_residual(a, candidate, b);
        if (!(res < rep.relative_residual)) {
            break;
        }
        rep.solution = candidate;
        rep.relative_residual = res;
        ++rep.iterations;
    }
    if (rep.relative_residual > opt.tol) {
        std::ostringstream os;
        os << "sparse Cholesky: relative residual " << rep.relative_residual << " > " << opt.tol;
        throw ConvergenceError(os.str());
    }
    return rep;
}

SolveReport dense_cholesky(const SparseMatrix& a, const Eigen::VectorXd& b, const SolverOptions& opt)
{
    const Eigen::MatrixXd dense(a);
    Eigen::LLT<Eigen::MatrixXd> llt(dense);
    if (llt.info() != Eigen::Success) {
        throw CoercivityError("dense Cholesky factorization failed: matrix is not positive definite");
    }
    SolveReport rep;
    rep.method = SolverKind::Dense;
    rep.solution = llt.solve(b);
    rep.iterations = 1;
    rep.relative_residual = relative_residual(a, rep.solution, b);
    if (rep.relative_residual > opt.tol) {
        std::ostringstream os;
        os << "dense Cholesky: relative residual " << rep.relative_residual << " > " << opt.tol;
        throw ConvergenceError(os.str());
    }
    return rep;
}

}  // namespace

SolveReport solve_spd(const SparseMatrix& a, const Eigen::VectorXd& b, const SolverOptions& options)
{
    MWX_REQUIRE(a.rows() == a.cols() && a.rows() == b.size(), "solve_spd: dimension mismatch");
    MWX_REQUIRE(options.tol > 0.0, "solve_spd: tolerance must be positive");
    switch (options.kind) {
    case SolverKind::ConjugateGradient:
        return conjugate_gradient(a, b, options);
    case SolverKind::Dense:
        return dense_cholesky(a, b, options);
    case SolverKind::SparseCholesky:
        break;
    }
    return sparse_cholesky(a, b, options);
}

SolveReport solve_spd(const AssembledSystem& system, const SolverOptions& options)
{
    auto context = [&system]() {
        std::ostringstream os;
        os << " [method " << to_string(system.params.method) << ", sigma " << system.params.sigma << ", epsilon "
           << system.params.epsilon << ", mesh level " << system.mesh_level << "]";
        return os.str();
    };
    try {
        return solve_spd(system.matrix, system.rhs, options);
    } catch (const CoercivityError& e) {
        throw CoercivityError(e.what() + context());
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(e.what() + context());
    }
}

bool is_positive_definite(const SparseMatrix& a)
{
    Factorization llt;
    factorize(llt, a);
    return llt.info() == Eigen::Success;
}

double residual_norm(const SparseMatrix& a, const Eigen::VectorXd& x, const Eigen::VectorXd& b)
{
    return relative_residual(a, x, b);
}

}  // namespace mwx
