#pragma once

#include "mwx/element.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace mwx {

/// Error of a discrete solution measured in the broken norms.
///
/// `jump_term` is the squared face sum  sum_F w_F ||[[u - u_h]]||_F^2  with
/// w_F = 1/h_F (interior penalty norm) or h_F^{-(2p+1)} (super penalty
/// norm), so that triple^2 = broken_h1^2 + jump_term and
/// energy^2 = epsilon^2 broken_h2^2 + triple^2.
struct ErrorBreakdown {
    double l2 = 0.0;
    double broken_h1 = 0.0;
    double broken_h2 = 0.0;
    double jump_term = 0.0;
    double triple = 0.0;
    double energy = 0.0;
    double osc = 0.0;
};

/// Errors of u_h against u; `p` selects the super penalty jump weight.
/// `degree` is the exactness degree of the cell and face quadrature.
ErrorBreakdown error_norms(const SmoothFunction& u, const FEFunction& uh, double epsilon,
                           std::optional<double> p = std::nullopt, int degree = 6);

/// Data oscillation sqrt(sum_K h_K^2 ||f - Q_K^r f||_K^2), where Q_K^r is the
/// L^2 projection onto P_r(K), computed by a local mass-matrix solve.
double oscillation(const std::function<double(const Vec3&)>& f, const SimplexMesh& mesh, int r, int degree = 8);

/// Residual indicators of a discrete function w_h.
struct IndicatorField {
    std::vector<double> volume;         // per cell: ||f + lap w_h||_{0,K}
    std::vector<double> hessian_jump;   // per face: ||[[d_nn w_h]]||_{0,F}; 0 on boundary faces
    std::vector<double> gradient_jump;  // per face: ||[[d_{n_F} w_h]]||_{0,F}; one-sided on the boundary
};

IndicatorField residual_indicators(const std::function<double(const Vec3&)>& f, const FEFunction& wh,
                                   int degree = 6);

/// Indicators combined with the mesh-size weights that make every term
/// scale like the broken H^2 error when epsilon = 1:
///   sqrt( sum_K h_K^4 vol_K^2 + sum_{F interior} h_F hj_F^2 + sum_F h_F^3 gj_F^2 ).
double weighted_indicator(const IndicatorField& field, const SimplexMesh& mesh);

/// rate_k = log2(e_{k-1} / e_k); the first entry is empty.
std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors);

}  // namespace mwx
