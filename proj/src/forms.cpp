#include "mwx/forms.hpp"

#include "mwx/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mwx {

std::string to_string(Method m)
{
    switch (m) {
    case Method::IPMWX:
        return "ipmwx";
    case Method::SPMWX:
        return "spmwx";
    case Method::NITSCHE:
        return "nitsche";
    }
    return "?";
}

Method parse_method(const std::string& name)
{
    if (name == "ipmwx") {
        return Method::IPMWX;
    }
    if (name == "spmwx") {
        return Method::SPMWX;
    }
    if (name == "nitsche") {
        return Method::NITSCHE;
    }
    throw InvalidArgument("unknown method '" + name + "'");
}

namespace {

LocalMatrix cell_local(const MorleySpace& space, Index k)
{
    LocalMatrix lm;
    const auto dofs = space.dofs().cell(k);
    lm.dofs.assign(dofs.begin(), dofs.end());
    lm.values = Eigen::MatrixXd::Zero(long(lm.dofs.size()), long(lm.dofs.size()));
    return lm;
}

// Basis traces of the cells incident on a face, merged over their DOFs.
struct FaceTraces {
    TracePairing pairing;
    std::vector<Index> dofs;
    // position of local basis i of side s inside `dofs`
    std::array<std::array<int, 10>, 2> slot{};
};

FaceTraces face_traces(const MorleySpace& space, Index f)
{
    FaceTraces ft;
    ft.pairing = space.mesh().face_trace_pairing(f);
    for (int s = 0; s < ft.pairing.count; ++s) {
        const auto dofs = space.dofs().cell(ft.pairing.cells[s]);
        for (std::size_t i = 0; i < dofs.size(); ++i) {
            auto it = std::find(ft.dofs.begin(), ft.dofs.end(), dofs[i]);
            if (it == ft.dofs.end()) {
                ft.slot[s][i] = static_cast<int>(ft.dofs.size());
                ft.dofs.push_back(dofs[i]);
            } else {
                ft.slot[s][i] = static_cast<int>(it - ft.dofs.begin());
            }
        }
    }
    return ft;
}

// Jumps of the basis values and averages of grad(phi) . n_F at x.
void jumps_and_averages(const MorleySpace& space, const FaceTraces& ft, const Vec3& normal, const Vec3& x,
                        Eigen::VectorXd& jump, Eigen::VectorXd& average)
{
    jump.setZero(long(ft.dofs.size()));
    average.setZero(long(ft.dofs.size()));
    const double weight = 1.0 / ft.pairing.count;
    for (int s = 0; s < ft.pairing.count; ++s) {
        const MorleyCellBasis& basis = space.basis(ft.pairing.cells[s]);
        for (int i = 0; i < basis.size; ++i) {
            const int a = ft.slot[s][i];
            jump[a] += ft.pairing.sign[s] * basis[i](x);
            average[a] += weight * basis[i].grad(x).dot(normal);
        }
    }
}

// Mirrors the upper triangle so that local matrices are exactly symmetric.
void mirror_upper(Eigen::MatrixXd& m)
{
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < i; ++j) {
            m(i, j) = m(j, i);
        }
    }
}

using Triplets = std::vector<Eigen::Triplet<double>>;

void scatter(const LocalMatrix& lm, Triplets& out)
{
    for (std::size_t i = 0; i < lm.dofs.size(); ++i) {
        for (std::size_t j = 0; j < lm.dofs.size(); ++j) {
            const double v = lm.values(long(i), long(j));
            if (v != 0.0) {
                out.emplace_back(lm.dofs[i], lm.dofs[j], v);
            }
        }
    }
}

SparseMatrix from_triplets(Index n, const Triplets& t)
{
    SparseMatrix m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    m.makeCompressed();
    return m;
}

}  // namespace

LocalMatrix cell_hessian_matrix(const MorleySpace& space, Index k)
{
    LocalMatrix lm = cell_local(space, k);
    const MorleyCellBasis& basis = space.basis(k);
    const double measure = space.mesh().geometry(k).measure;
    for (int i = 0; i < basis.size; ++i) {
        for (int j = i; j < basis.size; ++j) {
            lm.values(i, j) = measure * basis[i].hessian.cwiseProduct(basis[j].hessian).sum();
        }
    }
    mirror_upper(lm.values);
    return lm;
}

LocalMatrix cell_gradient_matrix(const MorleySpace& space, Index k, int degree)
{
    LocalMatrix lm = cell_local(space, k);
    const MorleyCellBasis& basis = space.basis(k);
    const MappedQuadrature q =
        map_rule_to_cell(simplex_rule(space.mesh().dimension(), degree), space.mesh(), k);
    std::array<Vec3, 10> g{};
    for (std::size_t p = 0; p < q.size(); ++p) {
        for (int i = 0; i < basis.size; ++i) {
            g[i] = basis[i].grad(q.points[p]);
        }
        for (int i = 0; i < basis.size; ++i) {
            for (int j = i; j < basis.size; ++j) {
                lm.values(i, j) += q.weights[p] * g[i].dot(g[j]);
            }
        }
    }
    mirror_upper(lm.values);
    return lm;
}

LocalMatrix face_interior_penalty_matrix(const MorleySpace& space, Index f, double sigma, int degree)
{
    MWX_REQUIRE(sigma > 0.0, "interior penalty: sigma must be positive");
    const SimplexMesh& mesh = space.mesh();
    const Face& face = mesh.face(f);
    const FaceTraces ft = face_traces(space, f);
    const MappedQuadrature q = map_rule_to_face(simplex_rule(mesh.dimension() - 1, degree), mesh, f);
    const double penalty = sigma / face.size;

    LocalMatrix lm;
    lm.dofs = ft.dofs;
    const long n = long(ft.dofs.size());
    lm.values = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd jump;
    Eigen::VectorXd avg;
    for (std::size_t p = 0; p < q.size(); ++p) {
        jumps_and_averages(space, ft, face.normal, q.points[p], jump, avg);
        const double w = q.weights[p];
        for (long a = 0; a < n; ++a) {
            for (long b = a; b < n; ++b) {
                lm.values(a, b) += w * (penalty * jump[a] * jump[b] - avg[a] * jump[b] - avg[b] * jump[a]);
            }
        }
    }
    mirror_upper(lm.values);
    return lm;
}

LocalMatrix face_super_penalty_matrix(const MorleySpace& space, Index f, double p, int degree)
{
    MWX_REQUIRE(p > 0.0 && p <= 1.0, "super penalty: p must lie in (0, 1]");
    const SimplexMesh& mesh = space.mesh();
    const Face& face = mesh.face(f);
    const FaceTraces ft = face_traces(space, f);
    const MappedQuadrature q = map_rule_to_face(simplex_rule(mesh.dimension() - 1, degree), mesh, f);
    const double penalty = std::pow(face.size, -(2.0 * p + 1.0));

    LocalMatrix lm;
    lm.dofs = ft.dofs;
    const long n = long(ft.dofs.size());
    lm.values = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd jump;
    Eigen::VectorXd avg;
    for (std::size_t pt = 0; pt < q.size(); ++pt) {
        jumps_and_averages(space, ft, face.normal, q.points[pt], jump, avg);
        const double w = q.weights[pt] * penalty;
        for (long a = 0; a < n; ++a) {
            for (long b = a; b < n; ++b) {
                lm.values(a, b) += w * jump[a] * jump[b];
            }
        }
    }
    mirror_upper(lm.values);
    return lm;
}

LocalMatrix face_nitsche_matrix(const MorleySpace& space, Index f, double sigma1, double sigma2, int degree)
{
    MWX_REQUIRE(sigma1 > 0.0 && sigma2 > 0.0, "Nitsche: sigma1 and sigma2 must be positive");
    const SimplexMesh& mesh = space.mesh();
    const Face& face = mesh.face(f);
    MWX_REQUIRE(face.on_boundary(), "Nitsche: face is not on the boundary");
    const Index k = face.cells[0];
    LocalMatrix lm = cell_local(space, k);
    const MorleyCellBasis& basis = space.basis(k);
    const Vec3& n = face.normal;  // outward on boundary faces
    const double h = face.size;
    const MappedQuadrature q = map_rule_to_face(simplex_rule(mesh.dimension() - 1, degree), mesh, f);

    std::array<double, 10> dnn{};
    for (int i = 0; i < basis.size; ++i) {
        dnn[i] = n.dot(basis[i].hessian * n);
    }
    std::array<double, 10> dn{};
    std::array<double, 10> val{};
    for (std::size_t p = 0; p < q.size(); ++p) {
        for (int i = 0; i < basis.size; ++i) {
            dn[i] = basis[i].grad(q.points[p]).dot(n);
            val[i] = basis[i](q.points[p]);
        }
        const double w = q.weights[p];
        for (int i = 0; i < basis.size; ++i) {
            for (int j = i; j < basis.size; ++j) {
                lm.values(i, j) += w * (-dnn[i] * dn[j] - dn[i] * dnn[j] + sigma1 / h * dn[i] * dn[j] +
                                        sigma2 / (h * h * h) * val[i] * val[j]);
            }
        }
    }
    mirror_upper(lm.values);
    return lm;
}

SparseMatrix assemble_a(const MorleySpace& space)
{
    Triplets t;
    for (Index k = 0; k < space.mesh().num_cells(); ++k) {
        scatter(cell_hessian_matrix(space, k), t);
    }
    return from_triplets(space.num_dofs(), t);
}

SparseMatrix assemble_gradient_gram(const MorleySpace& space, int degree)
{
    Triplets t;
    for (Index k = 0; k < space.mesh().num_cells(); ++k) {
        scatter(cell_gradient_matrix(space, k, degree), t);
    }
    return from_triplets(space.num_dofs(), t);
}

SparseMatrix assemble_b_ip(const MorleySpace& space, double sigma, int degree)
{
    MWX_REQUIRE(sigma > 0.0, "assemble_b_ip: sigma must be positive");
    Triplets t;
    for (Index k = 0; k < space.mesh().num_cells(); ++k) {
        scatter(cell_gradient_matrix(space, k, degree), t);
    }
    for (Index f = 0; f < space.mesh().num_faces(); ++f) {
        scatter(face_interior_penalty_matrix(space, f, sigma, degree), t);
    }
    return from_triplets(space.num_dofs(), t);
}

SparseMatrix assemble_b_sp(const MorleySpace& space, double p, int degree)
{
    MWX_REQUIRE(p > 0.0 && p <= 1.0, "assemble_b_sp: p must lie in (0, 1]");
    Triplets t;
    for (Index k = 0; k < space.mesh().num_cells(); ++k) {
        scatter(cell_gradient_matrix(space, k, degree), t);
    }
    for (Index f = 0; f < space.mesh().num_faces(); ++f) {
        scatter(face_super_penalty_matrix(space, f, p, degree), t);
    }
    return from_triplets(space.num_dofs(), t);
}

SparseMatrix assemble_nitsche(const MorleySpace& space, double sigma1, double sigma2, int degree)
{
    MWX_REQUIRE(sigma1 > 0.0 && sigma2 > 0.0, "assemble_nitsche: sigma1 and sigma2 must be positive");
    Triplets t;
    for (Index f = 0; f < space.mesh().num_faces(); ++f) {
        if (space.mesh().face(f).on_boundary()) {
            scatter(face_nitsche_matrix(space, f, sigma1, sigma2, degree), t);
        }
    }
    return from_triplets(space.num_dofs(), t);
}

Eigen::VectorXd assemble_load(const MorleySpace& space, const std::function<double(const Vec3&)>& f, int degree)
{
    const SimplexMesh& mesh = space.mesh();
    const QuadratureRule& rule = simplex_rule(mesh.dimension(), degree);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(space.num_dofs());
    for (Index k = 0; k < mesh.num_cells(); ++k) {
        const MorleyCellBasis& basis = space.basis(k);
        const auto dofs = space.dofs().cell(k);
        const MappedQuadrature q = map_rule_to_cell(rule, mesh, k);
        for (std::size_t p = 0; p < q.size(); ++p) {
            const double wf = q.weights[p] * f(q.points[p]);
            for (int i = 0; i < basis.size; ++i) {
                b[dofs[i]] += wf * basis[i](q.points[p]);
            }
        }
    }
    return b;
}

Eigen::VectorXd AssembledSystem::expand(const Eigen::VectorXd& free_values) const
{
    MWX_REQUIRE(free_values.size() == num_unknowns(), "expand: wrong vector length");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(long(global_to_free.size()));
    for (Index i = 0; i < num_unknowns(); ++i) {
        out[free_to_global[i]] = free_values[i];
    }
    return out;
}

SparseMatrix restrict_matrix(const SparseMatrix& m, const std::vector<Index>& global_to_free, Index num_free)
{
    Triplets t;
    t.reserve(std::size_t(m.nonZeros()));
    for (int col = 0; col < m.outerSize(); ++col) {
        const Index fc = global_to_free[col];
        if (fc < 0) {
            continue;
        }
        for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
            const Index fr = global_to_free[it.row()];
            if (fr >= 0) {
                t.emplace_back(fr, fc, it.value());
            }
        }
    }
    return from_triplets(num_free, t);
}

AssembledSystem build_system(const MorleySpace& space, const FormParameters& params,
                             const std::function<double(const Vec3&)>& f)
{
    MWX_REQUIRE(params.epsilon >= 0.0, "build_system: epsilon must be non-negative");
    MWX_REQUIRE(params.sigma > 0.0, "build_system: sigma must be positive");
    MWX_REQUIRE(params.p > 0.0 && params.p <= 1.0, "build_system: p must lie in (0, 1]");
    if (params.method == Method::NITSCHE) {
        MWX_REQUIRE(params.epsilon > 0.0, "build_system: the Nitsche variant needs epsilon > 0");
        MWX_REQUIRE(params.sigma1 > 0.0 && params.sigma2 > 0.0, "build_system: sigma1 and sigma2 must be positive");
    }

    const int deg = params.assembly_degree;
    SparseMatrix full = params.method == Method::SPMWX ? assemble_b_sp(space, params.p, deg)
                                                       : assemble_b_ip(space, params.sigma, deg);
    if (params.epsilon != 0.0) {
        SparseMatrix hess = assemble_a(space);
        if (params.method == Method::NITSCHE) {
            hess += assemble_nitsche(space, params.sigma1, params.sigma2, deg);
        }
        const double e2 = params.epsilon * params.epsilon;
        full = SparseMatrix(e2 * hess + full);
    }
    const Eigen::VectorXd load = assemble_load(space, f, params.load_degree);

    AssembledSystem sys;
    sys.params = params;
    const DofMap& dm = space.dofs();
    sys.global_to_free.assign(std::size_t(dm.num_dofs), -1);
    for (Index i = 0; i < dm.num_dofs; ++i) {
        if (params.method == Method::NITSCHE || !dm.boundary[i]) {
            sys.global_to_free[i] = static_cast<Index>(sys.free_to_global.size());
            sys.free_to_global.push_back(i);
        }
    }
    if (params.method == Method::NITSCHE) {
        sys.matrix = std::move(full);
        sys.rhs = load;
    } else {
        sys.matrix = restrict_matrix(full, sys.global_to_free, sys.num_unknowns());
        sys.rhs.resize(sys.num_unknowns());
        for (Index i = 0; i < sys.num_unknowns(); ++i) {
            sys.rhs[i] = load[sys.free_to_global[i]];
        }
    }
    return sys;
}

}  // namespace mwx
