#include "mwx/element.hpp"

#include "mwx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mwx {

Index DofMap::num_boundary_dofs() const
{
    return static_cast<Index>(std::count(boundary.begin(), boundary.end(), char{1}));
}

DofMap build_dof_map(const SimplexMesh& mesh)
{
    DofMap dm;
    const int d = mesh.dimension();
    dm.num_subface_dofs = mesh.num_subfaces();
    dm.num_dofs = mesh.num_subfaces() + mesh.num_faces();
    dm.dofs_per_cell = mesh.subfaces_per_cell() + d + 1;
    dm.boundary.assign(std::size_t(dm.num_dofs), 0);
    for (Index s = 0; s < mesh.num_subfaces(); ++s) {
        dm.boundary[s] = mesh.subface(s).on_boundary ? 1 : 0;
    }
    for (Index f = 0; f < mesh.num_faces(); ++f) {
        dm.boundary[dm.face_dof(f)] = mesh.face(f).on_boundary() ? 1 : 0;
    }
    dm.cell_dofs.resize(std::size_t(mesh.num_cells()));
    for (Index k = 0; k < mesh.num_cells(); ++k) {
        auto& local = dm.cell_dofs[k];
        local.fill(-1);
        int i = 0;
        for (int s = 0; s < mesh.subfaces_per_cell(); ++s) {
            local[i++] = dm.subface_dof(mesh.cell_subface(k, s));
        }
        for (int j = 0; j <= d; ++j) {
            local[i++] = dm.face_dof(mesh.cell_face(k, j));
        }
    }
    return dm;
}

std::vector<double> apply_nodal_functionals(const SimplexMesh& mesh, Index k,
                                            const std::function<double(const Vec3&)>& value,
                                            const std::function<Vec3(const Vec3&)>& gradient, int degree)
{
    const int d = mesh.dimension();
    std::vector<double> out;
    out.reserve(std::size_t(mesh.subfaces_per_cell() + d + 1));
    const auto& cell = mesh.cell(k);
    if (d == 2) {
        for (int s = 0; s < 3; ++s) {
            out.push_back(value(mesh.vertex(cell[s])));
        }
    } else {
        const QuadratureRule& edge_rule = simplex_rule(1, degree);
        for (int s = 0; s < 6; ++s) {
            const auto lv = mesh.local_subface_vertices(s);
            const std::array<Vec3, 2> ends{mesh.vertex(cell[lv[0]]), mesh.vertex(cell[lv[1]])};
            const MappedQuadrature q = map_rule(edge_rule, ends);
            double integral = 0.0;
            for (std::size_t p = 0; p < q.size(); ++p) {
                integral += q.weights[p] * value(q.points[p]);
            }
            out.push_back(integral / (ends[1] - ends[0]).norm());
        }
    }
    const QuadratureRule& face_rule = simplex_rule(d - 1, degree);
    for (int j = 0; j <= d; ++j) {
        const Index f = mesh.cell_face(k, j);
        const Face& face = mesh.face(f);
        const MappedQuadrature q = map_rule_to_face(face_rule, mesh, f);
        double integral = 0.0;
        for (std::size_t p = 0; p < q.size(); ++p) {
            integral += q.weights[p] * gradient(q.points[p]).dot(face.normal);
        }
        out.push_back(integral / face.measure);
    }
    return out;
}

namespace {

// Monomials of degree <= 2 in xi = (x - c) / h, as Quadratics.
std::vector<Quadratic> scaled_monomials(int d, const Vec3& c, double h)
{
    std::vector<Quadratic> m;
    Quadratic one;
    one.center = c;
    one.value = 1.0;
    m.push_back(one);
    for (int a = 0; a < d; ++a) {
        Quadratic q;
        q.center = c;
        q.gradient[a] = 1.0 / h;
        m.push_back(q);
    }
    for (int a = 0; a < d; ++a) {
        for (int b = a; b < d; ++b) {
            Quadratic q;
            q.center = c;
            q.hessian(a, b) += 1.0 / (h * h);
            q.hessian(b, a) += 1.0 / (h * h);
            m.push_back(q);
        }
    }
    return m;
}

}  // namespace

MorleyCellBasis build_cell_basis(const SimplexMesh& mesh, Index k)
{
    const CellGeometry& g = mesh.geometry(k);
    const int d = mesh.dimension();
    const auto monomials = scaled_monomials(d, g.centroid, g.diameter);
    const int n = static_cast<int>(monomials.size());

    Eigen::MatrixXd nodal(n, n);
    for (int i = 0; i < n; ++i) {
        const Quadratic& m = monomials[i];
        const auto column = apply_nodal_functionals(
            mesh, k, [&m](const Vec3& x) { return m(x); }, [&m](const Vec3& x) { return m.grad(x); }, 2);
        for (int j = 0; j < n; ++j) {
            nodal(j, i) = column[j];
        }
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(nodal);
    if (!lu.isInvertible() || lu.rcond() < 1e-12) {
        throw InvalidArgument("build_cell_basis: singular nodal system on cell " + std::to_string(k));
    }
    const Eigen::MatrixXd coeff = lu.inverse();

    MorleyCellBasis basis;
    basis.cell = k;
    basis.size = n;
    for (int i = 0; i < n; ++i) {
        Quadratic phi;
        phi.center = g.centroid;
        for (int m = 0; m < n; ++m) {
            phi.add_scaled(coeff(m, i), monomials[m]);
        }
        basis.functions[i] = phi;
    }
    return basis;
}

MorleySpace::MorleySpace(const SimplexMesh& mesh) : mesh_(&mesh), dofs_(build_dof_map(mesh))
{
    bases_.reserve(std::size_t(mesh.num_cells()));
    for (Index k = 0; k < mesh.num_cells(); ++k) {
        bases_.push_back(build_cell_basis(mesh, k));
    }
}

FEFunction::FEFunction(const MorleySpace& space)
    : space_(&space), coefficients_(Eigen::VectorXd::Zero(space.num_dofs()))
{
}

FEFunction::FEFunction(const MorleySpace& space, Eigen::VectorXd coefficients)
    : space_(&space), coefficients_(std::move(coefficients))
{
    MWX_REQUIRE(coefficients_.size() == space.num_dofs(), "FEFunction: coefficient vector has wrong length");
}

Quadratic FEFunction::restrict_to(Index k) const
{
    const MorleyCellBasis& basis = space_->basis(k);
    const auto dofs = space_->dofs().cell(k);
    Quadratic q;
    q.center = basis[0].center;
    for (int i = 0; i < basis.size; ++i) {
        q.add_scaled(coefficients_[dofs[i]], basis[i]);
    }
    return q;
}

FEFunction morley_interpolate(const MorleySpace& space, const SmoothFunction& u, int degree)
{
    const SimplexMesh& mesh = space.mesh();
    const DofMap& dm = space.dofs();
    const int d = mesh.dimension();
    FEFunction out(space);
    Eigen::VectorXd& c = out.coefficients();

    const QuadratureRule& edge_rule = simplex_rule(1, degree);
    for (Index s = 0; s < mesh.num_subfaces(); ++s) {
        const Subface& sf = mesh.subface(s);
        if (d == 2) {
            c[dm.subface_dof(s)] = u.value(mesh.vertex(sf.vertices[0]));
            continue;
        }
        const std::array<Vec3, 2> ends{mesh.vertex(sf.vertices[0]), mesh.vertex(sf.vertices[1])};
        const MappedQuadrature q = map_rule(edge_rule, ends);
        double integral = 0.0;
        for (std::size_t p = 0; p < q.size(); ++p) {
            integral += q.weights[p] * u.value(q.points[p]);
        }
        c[dm.subface_dof(s)] = integral / sf.measure;
    }

    const QuadratureRule& face_rule = simplex_rule(d - 1, degree);
    for (Index f = 0; f < mesh.num_faces(); ++f) {
        const Face& face = mesh.face(f);
        const MappedQuadrature q = map_rule_to_face(face_rule, mesh, f);
        double integral = 0.0;
        for (std::size_t p = 0; p < q.size(); ++p) {
            integral += q.weights[p] * u.gradient(q.points[p]).dot(face.normal);
        }
        c[dm.face_dof(f)] = integral / face.measure;
    }
    return out;
}

}  // namespace mwx
