#pragma once

#include "mwx/common.hpp"
#include "mwx/mesh.hpp"

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace mwx {

/// Quadratic polynomial in physical coordinates, expanded about `center`:
///   p(x) = value + gradient . (x - c) + 1/2 (x - c)^T hessian (x - c).
struct Quadratic {
    Vec3 center = Vec3::Zero();
    double value = 0.0;
    Vec3 gradient = Vec3::Zero();
    Mat3 hessian = Mat3::Zero();

    double operator()(const Vec3& x) const
    {
        const Vec3 d = x - center;
        return value + gradient.dot(d) + 0.5 * d.dot(hessian * d);
    }
    Vec3 grad(const Vec3& x) const { return gradient + hessian * (x - center); }
    double laplacian() const { return hessian.trace(); }

    /// this += alpha * other; both must share the same center.
    void add_scaled(double alpha, const Quadratic& other)
    {
        value += alpha * other.value;
        gradient += alpha * other.gradient;
        hessian += alpha * other.hessian;
    }
};

/// Function on the closed domain with first (and optionally second) derivatives.
struct SmoothFunction {
    std::function<double(const Vec3&)> value;
    std::function<Vec3(const Vec3&)> gradient;
    std::function<Mat3(const Vec3&)> hessian;
};

/// Global numbering of Morley-Wang-Xu degrees of freedom: one value mean
/// per subface (indices [0, #subfaces)), then one normal-derivative mean
/// per face (indices [#subfaces, #subfaces + #faces)).
struct DofMap {
    Index num_dofs = 0;
    Index num_subface_dofs = 0;
    int dofs_per_cell = 0;
    std::vector<char> boundary;                  // per DOF
    std::vector<std::array<Index, 10>> cell_dofs;  // subface DOFs, then facet DOFs

    Index subface_dof(Index s) const { return s; }
    Index face_dof(Index f) const { return num_subface_dofs + f; }
    std::span<const Index> cell(Index k) const { return {cell_dofs[k].data(), std::size_t(dofs_per_cell)}; }
    Index num_boundary_dofs() const;
};

DofMap build_dof_map(const SimplexMesh& mesh);

/// Applies the local nodal functionals of cell k to a function given by its
/// value and gradient: the value means over the local subfaces followed by
/// the means of grad(v) . n_F over the local facets (global face normals).
/// `degree` is the exactness degree of the subface/face quadrature.
std::vector<double> apply_nodal_functionals(const SimplexMesh& mesh, Index k,
                                            const std::function<double(const Vec3&)>& value,
                                            const std::function<Vec3(const Vec3&)>& gradient, int degree = 2);

/// Quadratic basis on one cell, dual to the local nodal functionals.
struct MorleyCellBasis {
    Index cell = -1;
    int size = 0;  // 6 in 2D, 10 in 3D
    std::array<Quadratic, 10> functions{};

    const Quadratic& operator[](int i) const { return functions[i]; }
};

MorleyCellBasis build_cell_basis(const SimplexMesh& mesh, Index k);

/// Mesh + DOF map + all cell bases. The mesh must outlive the space.
class MorleySpace {
public:
    explicit MorleySpace(const SimplexMesh& mesh);

    const SimplexMesh& mesh() const { return *mesh_; }
    const DofMap& dofs() const { return dofs_; }
    const MorleyCellBasis& basis(Index k) const { return bases_[k]; }
    Index num_dofs() const { return dofs_.num_dofs; }

private:
    const SimplexMesh* mesh_;
    DofMap dofs_;
    std::vector<MorleyCellBasis> bases_;
};

/// Coefficient vector over a MorleySpace: a piecewise quadratic field.
class FEFunction {
public:
    explicit FEFunction(const MorleySpace& space);
    FEFunction(const MorleySpace& space, Eigen::VectorXd coefficients);

    const MorleySpace& space() const { return *space_; }
    const Eigen::VectorXd& coefficients() const { return coefficients_; }
    Eigen::VectorXd& coefficients() { return coefficients_; }

    /// The restriction to cell k as a single quadratic.
    Quadratic restrict_to(Index k) const;

    double value(Index k, const Vec3& x) const { return restrict_to(k)(x); }
    Vec3 gradient(Index k, const Vec3& x) const { return restrict_to(k).grad(x); }
    Mat3 hessian(Index k) const { return restrict_to(k).hessian; }

private:
    const MorleySpace* space_;
    Eigen::VectorXd coefficients_;
};

/// I_h: every global DOF set to the matching nodal functional of u.
FEFunction morley_interpolate(const MorleySpace& space, const SmoothFunction& u, int degree = 6);

}  // namespace mwx
