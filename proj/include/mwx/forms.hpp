#pragma once

#include "mwx/common.hpp"
#include "mwx/element.hpp"

#include <Eigen/Sparse>

#include <functional>
#include <string>
#include <vector>

namespace mwx {

using SparseMatrix = Eigen::SparseMatrix<double>;

enum class Method { IPMWX, SPMWX, NITSCHE };

std::string to_string(Method m);
Method parse_method(const std::string& name);

struct FormParameters {
    Method method = Method::IPMWX;
    double epsilon = 1.0;  // exactly 0 drops the Hessian block
    double sigma = 5.0;    // interior penalty
    double p = 1.0;        // super penalty exponent, in (0, 1]
    double sigma1 = 5.0;   // Nitsche: normal-derivative penalty
    double sigma2 = 5.0;   // Nitsche: value penalty
    int assembly_degree = 4;
    int load_degree = 6;
};

/// Dense contribution of one cell or face, over global DOF indices `dofs`.
struct LocalMatrix {
    std::vector<Index> dofs;
    Eigen::MatrixXd values;
};

// Per-cell and per-face pieces; the global matrices below are their sums.
LocalMatrix cell_hessian_matrix(const MorleySpace& space, Index k);
LocalMatrix cell_gradient_matrix(const MorleySpace& space, Index k, int degree = 4);
/// -({d_n w}, [[v]]) - ({d_n v}, [[w]]) + sigma / h_F ([[w]], [[v]]) on face f.
LocalMatrix face_interior_penalty_matrix(const MorleySpace& space, Index f, double sigma, int degree = 4);
/// h_F^{-(2p+1)} ([[w]], [[v]]) on face f.
LocalMatrix face_super_penalty_matrix(const MorleySpace& space, Index f, double p, int degree = 4);
/// Boundary Nitsche terms for the Hessian form on boundary face f.
LocalMatrix face_nitsche_matrix(const MorleySpace& space, Index f, double sigma1, double sigma2, int degree = 4);

/// a_h: sum over cells of (hess w, hess v)_K.
SparseMatrix assemble_a(const MorleySpace& space);
/// sum over cells of (grad w, grad v)_K.
SparseMatrix assemble_gradient_gram(const MorleySpace& space, int degree = 4);
/// Interior penalty form b_h; face sums run over all faces, boundary included.
SparseMatrix assemble_b_ip(const MorleySpace& space, double sigma, int degree = 4);
/// Super penalty form with weight h_F^{-(2p+1)}, 0 < p <= 1.
SparseMatrix assemble_b_sp(const MorleySpace& space, double p, int degree = 4);
/// Correction turning a_h into the Nitsche form a_h^N (boundary faces only).
SparseMatrix assemble_nitsche(const MorleySpace& space, double sigma1, double sigma2, int degree = 4);
/// (f, phi_i) for every global basis function.
Eigen::VectorXd assemble_load(const MorleySpace& space, const std::function<double(const Vec3&)>& f,
                              int degree = 6);

/// Linear system over the unknown DOFs.
///
/// For IPMWX and SPMWX boundary DOFs are eliminated (the space V_h0); for
/// NITSCHE every DOF is unknown.
struct AssembledSystem {
    SparseMatrix matrix;
    Eigen::VectorXd rhs;
    FormParameters params;
    std::vector<Index> free_to_global;
    std::vector<Index> global_to_free;  // -1 for eliminated DOFs
    int mesh_level = -1;                // informational, used in diagnostics

    Index num_unknowns() const { return static_cast<Index>(free_to_global.size()); }
    /// Global coefficient vector, zero on eliminated DOFs.
    Eigen::VectorXd expand(const Eigen::VectorXd& free_values) const;
};

AssembledSystem build_system(const MorleySpace& space, const FormParameters& params,
                             const std::function<double(const Vec3&)>& f);

/// Restriction of a global matrix to the given DOFs (entries copied verbatim).
SparseMatrix restrict_matrix(const SparseMatrix& m, const std::vector<Index>& global_to_free, Index num_free);

}  // namespace mwx
