#pragma once

#include "mwx/common.hpp"
#include "mwx/mesh.hpp"

#include <array>
#include <span>
#include <vector>

namespace mwx {

/// Quadrature rule on the reference simplex of dimension 1, 2 or 3.
///
/// Points are stored as barycentric coordinates (d+1 entries, the first
/// one belonging to the origin vertex). Weights are positive and sum to the
/// reference measure 1, 1/2 or 1/6.
struct QuadratureRule {
    int dim = 0;
    int exactness_degree = 0;
    std::vector<std::array<double, 4>> barycentric;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    double reference_measure() const;
};

struct MappedQuadrature {
    std::vector<Vec3> points;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
};

/// Rule of the given dimension exact for polynomials of total degree <= degree.
/// Degrees 0..8 are available; the returned reference stays valid for the
/// lifetime of the program.
const QuadratureRule& simplex_rule(int dim, int degree);

/// Affine image of `rule` on the simplex spanned by `vertices`
/// (rule.dim + 1 points, possibly embedded in a higher-dimensional space).
/// Weights are scaled by the simplex measure over the reference measure.
MappedQuadrature map_rule(const QuadratureRule& rule, std::span<const Vec3> vertices);

/// `rule` (of the mesh dimension) mapped onto cell k.
MappedQuadrature map_rule_to_cell(const QuadratureRule& rule, const SimplexMesh& mesh, Index k);

/// `rule` (of dimension d - 1) mapped onto face f.
MappedQuadrature map_rule_to_face(const QuadratureRule& rule, const SimplexMesh& mesh, Index f);

}  // namespace mwx
