#include "mwx/forms.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace mwx;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Global basis function g restricted to cell k (zero if g is not a DOF of k).
Quadratic global_basis(const MorleySpace& s, Index g, Index k)
{
    const auto dofs = s.dofs().cell(k);
    for (std::size_t i = 0; i < dofs.size(); ++i) {
        if (dofs[i] == g) {
            return s.basis(k)[int(i)];
        }
    }
    Quadratic zero;
    zero.center = s.basis(k)[0].center;
    return zero;
}

std::vector<Vec3> face_points(const SimplexMesh& m, Index f)
{
    std::vector<Vec3> v;
    for (int i = 0; i < m.dimension(); ++i) {
        v.push_back(m.vertex(m.face(f).vertices[i]));
    }
    return v;
}

std::vector<Vec3> cell_points(const SimplexMesh& m, Index k)
{
    std::vector<Vec3> v;
    for (int i = 0; i <= m.dimension(); ++i) {
        v.push_back(m.vertex(m.cell(k)[i]));
    }
    return v;
}

// h_F computed from the vertices: edge length in 2D, sqrt(area) in 3D.
double face_length_scale(const SimplexMesh& m, Index f)
{
    const auto p = face_points(m, f);
    if (p.size() == 2) {
        return (p[1] - p[0]).norm();
    }
    return std::sqrt(0.5 * (p[1] - p[0]).cross(p[2] - p[0]).norm());
}

struct FaceTrace {
    double jump = 0.0;    // [[v]]
    double avg_dn = 0.0;  // {d_n v}
};

FaceTrace trace(const MorleySpace& s, Index g, Index f, const Vec3& x)
{
    const Face& face = s.mesh().face(f);
    const Quadratic a = global_basis(s, g, face.cells[0]);
    FaceTrace t;
    if (face.on_boundary()) {
        t.jump = a(x);
        t.avg_dn = a.grad(x).dot(face.normal);
    } else {
        const Quadratic b = global_basis(s, g, face.cells[1]);
        t.jump = a(x) - b(x);
        t.avg_dn = 0.5 * (a.grad(x) + b.grad(x)).dot(face.normal);
    }
    return t;
}

// Local matrix entry lookup by global DOF ids.
double entry(const LocalMatrix& lm, Index gi, Index gj)
{
    const auto i = std::find(lm.dofs.begin(), lm.dofs.end(), gi) - lm.dofs.begin();
    const auto j = std::find(lm.dofs.begin(), lm.dofs.end(), gj) - lm.dofs.begin();
    if (i == long(lm.dofs.size()) || j == long(lm.dofs.size())) {
        return 0.0;
    }
    return lm.values(i, j);
}

std::vector<Index> face_dofs(const MorleySpace& s, Index f)
{
    std::set<Index> d;
    const Face& face = s.mesh().face(f);
    for (int c = 0; c < face.num_cells(); ++c) {
        for (Index g : s.dofs().cell(face.cells[c])) {
            d.insert(g);
        }
    }
    return {d.begin(), d.end()};
}

Eigen::MatrixXd dense(const SparseMatrix& m)
{
    return Eigen::MatrixXd(m);
}

double max_abs(const Eigen::MatrixXd& m)
{
    return m.cwiseAbs().maxCoeff();
}

// Dense oracle of b_h (interior penalty) from the defining integrals.
Eigen::MatrixXd oracle_b_ip(const MorleySpace& s, double sigma)
{
    const SimplexMesh& m = s.mesh();
    const Index n = s.num_dofs();
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (Index k = 0; k < m.num_cells(); ++k) {
        const auto dofs = s.dofs().cell(k);
        for (Index gi : dofs) {
            for (Index gj : dofs) {
                const Quadratic pi = global_basis(s, gi, k);
                const Quadratic pj = global_basis(s, gj, k);
                b(gi, gj) += oracle::integrate_simplex(cell_points(m, k),
                                                       [&](const Vec3& x) { return pi.grad(x).dot(pj.grad(x)); });
            }
        }
    }
    for (Index f = 0; f < m.num_faces(); ++f) {
        const double h = face_length_scale(m, f);
        const auto dofs = face_dofs(s, f);
        for (Index gi : dofs) {
            for (Index gj : dofs) {
                b(gi, gj) += oracle::integrate_simplex(face_points(m, f), [&](const Vec3& x) {
                    const FaceTrace ti = trace(s, gi, f, x);
                    const FaceTrace tj = trace(s, gj, f, x);
                    return -tj.avg_dn * ti.jump - ti.avg_dn * tj.jump + sigma / h * ti.jump * tj.jump;
                });
            }
        }
    }
    return b;
}

SparseMatrix sum_interior_face_ip(const MorleySpace& s, double sigma)
{
    std::vector<Eigen::Triplet<double>> t;
    for (Index f = 0; f < s.mesh().num_faces(); ++f) {
        if (s.mesh().face(f).on_boundary()) {
            continue;
        }
        const LocalMatrix lm = face_interior_penalty_matrix(s, f, sigma);
        for (std::size_t i = 0; i < lm.dofs.size(); ++i) {
            for (std::size_t j = 0; j < lm.dofs.size(); ++j) {
                t.emplace_back(lm.dofs[i], lm.dofs[j], lm.values(long(i), long(j)));
            }
        }
    }
    SparseMatrix out(s.num_dofs(), s.num_dofs());
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

Quadratic random_quadratic(int dim, std::mt19937& gen)
{
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    Quadratic q;
    q.value = U(gen);
    for (int i = 0; i < dim; ++i) {
        q.gradient[i] = U(gen);
        for (int j = 0; j <= i; ++j) {
            q.hessian(i, j) = q.hessian(j, i) = U(gen);
        }
    }
    return q;
}

SmoothFunction as_smooth(const Quadratic& q)
{
    return {[q](const Vec3& x) { return q(x); }, [q](const Vec3& x) { return q.grad(x); },
            [q](const Vec3&) { return q.hessian; }};
}

}  // namespace

TEST(Forms, MethodNames)
{
    EXPECT_EQ(parse_method("ipmwx"), Method::IPMWX);
    EXPECT_EQ(parse_method("spmwx"), Method::SPMWX);
    EXPECT_EQ(parse_method("nitsche"), Method::NITSCHE);
    EXPECT_EQ(to_string(Method::SPMWX), "spmwx");
    EXPECT_THROW(parse_method("morley"), InvalidArgument);
}

TEST(Forms, CellHessianMatchesOracle)
{
    for (int dim : {2, 3}) {
        const SimplexMesh m = dim == 2 ? build_uniform_square(2) : build_uniform_cube(1);
        const MorleySpace s(m);
        for (Index k = 0; k < m.num_cells(); ++k) {
            const LocalMatrix lm = cell_hessian_matrix(s, k);
            for (Index gi : lm.dofs) {
                for (Index gj : lm.dofs) {
                    const Quadratic a = global_basis(s, gi, k);
                    const Quadratic b = global_basis(s, gj, k);
                    const double ref = oracle::integrate_simplex(cell_points(m, k), [&](const Vec3&) {
                        return (a.hessian.array() * b.hessian.array()).sum();
                    });
                    EXPECT_NEAR(entry(lm, gi, gj), ref, 1e-12 * std::max(1.0, std::abs(ref)));
                }
            }
        }
    }
}

TEST(Forms, CellGradientMatchesOracle)
{
    for (int dim : {2, 3}) {
        const SimplexMesh m = dim == 2 ? build_uniform_square(2) : build_uniform_cube(1);
        const MorleySpace s(m);
        for (Index k = 0; k < m.num_cells(); ++k) {
            const LocalMatrix lm = cell_gradient_matrix(s, k);
            for (Index gi : lm.dofs) {
                for (Index gj : lm.dofs) {
                    const Quadratic a = global_basis(s, gi, k);
                    const Quadratic b = global_basis(s, gj, k);
                    const double ref = oracle::integrate_simplex(
                        cell_points(m, k), [&](const Vec3& x) { return a.grad(x).dot(b.grad(x)); });
                    EXPECT_NEAR(entry(lm, gi, gj), ref, 1e-12 * std::max(1.0, std::abs(ref)));
                }
            }
        }
    }
}

// The face matrix is affine in sigma; its sigma-free part holds the two
// consistency integrals and its slope the penalty integral.
TEST(Forms, InteriorPenaltyFaceTermsSeparately)
{
    const SimplexMesh m = build_uniform_square(1);
    const MorleySpace s(m);
    for (Index f = 0; f < m.num_faces(); ++f) {
        const LocalMatrix m1 = face_interior_penalty_matrix(s, f, 1.0);
        const LocalMatrix m2 = face_interior_penalty_matrix(s, f, 2.0);
        const double h = face_length_scale(m, f);
        for (Index gi : m1.dofs) {
            for (Index gj : m1.dofs) {
                const double slope = entry(m2, gi, gj) - entry(m1, gi, gj);
                const double base = 2.0 * entry(m1, gi, gj) - entry(m2, gi, gj);
                const double pen = oracle::integrate_simplex(face_points(m, f), [&](const Vec3& x) {
                    return trace(s, gi, f, x).jump * trace(s, gj, f, x).jump / h;
                });
                const double cons_ij = oracle::integrate_simplex(face_points(m, f), [&](const Vec3& x) {
                    return -trace(s, gj, f, x).avg_dn * trace(s, gi, f, x).jump;
                });
                const double cons_ji = oracle::integrate_simplex(face_points(m, f), [&](const Vec3& x) {
                    return -trace(s, gi, f, x).avg_dn * trace(s, gj, f, x).jump;
                });
                EXPECT_NEAR(slope, pen, 1e-12 * std::max(1.0, std::abs(pen)));
                EXPECT_NEAR(base, cons_ij + cons_ji, 1e-12 * std::max(1.0, std::abs(base)));
            }
        }
    }
}

TEST(Forms, SuperPenaltyFaceMatchesOracle)
{
    for (int dim : {2, 3}) {
        const SimplexMesh m = dim == 2 ? build_uniform_square(2) : build_uniform_cube(1);
        const MorleySpace s(m);
        for (double p : {1.0, 0.5}) {
            for (Index f = 0; f < m.num_faces(); ++f) {
                const LocalMatrix lm = face_super_penalty_matrix(s, f, p);
                const double w = std::pow(face_length_scale(m, f), -(2 * p + 1));
                for (Index gi : lm.dofs) {
                    for (Index gj : lm.dofs) {
                        const double ref = w * oracle::integrate_simplex(face_points(m, f), [&](const Vec3& x) {
                            return trace(s, gi, f, x).jump * trace(s, gj, f, x).jump;
                        });
                        EXPECT_NEAR(entry(lm, gi, gj), ref, 1e-12 * std::max(1.0, std::abs(ref)));
                    }
                }
            }
        }
    }
}

TEST(Forms, SuperPenaltyWeightOnHalfLengthFace)
{
    const SimplexMesh m = build_uniform_square(2);
    const MorleySpace s(m);
    Index f = 0;
    while (!(m.face(f).on_boundary())) {
        ++f;
    }
    ASSERT_DOUBLE_EQ(m.face(f).size, 0.5);
    const LocalMatrix lm = face_super_penalty_matrix(s, f, 1.0);    // (1/2)^-3 = 8
    const LocalMatrix half = face_super_penalty_matrix(s, f, 0.5);  // (1/2)^-2 = 4
    EXPECT_NEAR(max_abs(lm.values - 2.0 * half.values), 0.0, 1e-12 * max_abs(lm.values));
    const Index g = lm.dofs[0];
    const double mass = oracle::integrate_simplex(face_points(m, f), [&](const Vec3& x) {
        const double j = trace(s, g, f, x).jump;
        return j * j;
    });
    EXPECT_NEAR(entry(lm, g, g), 8.0 * mass, 1e-12);
}

TEST(Forms, NitscheFaceTermsMatchOracle)
{
    for (int dim : {2, 3}) {
        const SimplexMesh m = dim == 2 ? build_uniform_square(2) : build_uniform_cube(1);
        const MorleySpace s(m);
        for (Index f = 0; f < m.num_faces(); ++f) {
            const Face& face = m.face(f);
            if (!face.on_boundary()) {
                EXPECT_THROW(face_nitsche_matrix(s, f, 5.0, 5.0), InvalidArgument);
                continue;
            }
            const double h = face_length_scale(m, f);
            const Vec3 n = face.normal;
            const LocalMatrix base = face_nitsche_matrix(s, f, 1.0, 1.0);
            const LocalMatrix s1 = face_nitsche_matrix(s, f, 2.0, 1.0);
            const LocalMatrix s2 = face_nitsche_matrix(s, f, 1.0, 2.0);
            const Index k = face.cells[0];
            for (Index gi : base.dofs) {
                for (Index gj : base.dofs) {
                    const Quadratic a = global_basis(s, gi, k);
                    const Quadratic b = global_basis(s, gj, k);
                    const auto pts = face_points(m, f);
                    const double cons = oracle::integrate_simplex(pts, [&](const Vec3& x) {
                        return -n.dot(a.hessian * n) * b.grad(x).dot(n) - a.grad(x).dot(n) * n.dot(b.hessian * n);
                    });
                    const double dn = oracle::integrate_simplex(
                        pts, [&](const Vec3& x) { return a.grad(x).dot(n) * b.grad(x).dot(n) / h; });
                    const double val =
                        oracle::integrate_simplex(pts, [&](const Vec3& x) { return a(x) * b(x) / (h * h * h); });
                    const double tol = 1e-12 * std::max({1.0, std::abs(cons), dn, val});
                    EXPECT_NEAR(entry(s1, gi, gj) - entry(base, gi, gj), dn, tol);
                    EXPECT_NEAR(entry(s2, gi, gj) - entry(base, gi, gj), val, tol);
                    EXPECT_NEAR(entry(base, gi, gj) - dn - val, cons, tol);
                }
            }
        }
    }
}

TEST(Forms, GlobalInteriorPenaltyMatchesDenseOracle)
{
    for (int dim : {2, 3}) {
        const SimplexMesh m = dim == 2 ? build_uniform_square(2) : build_uniform_cube(1);
        const MorleySpace s(m);
        const Eigen::MatrixXd lib = dense(assemble_b_ip(s, 5.0));
        const Eigen::MatrixXd ref = oracle_b_ip(s, 5.0);
        EXPECT_LE(max_abs(lib - ref), 1e-12 * max_abs(ref)) << "dim " << dim;
    }
}

TEST(Forms, AssemblyExactAtDegreeFour)
{
    for (int dim : {2, 3}) {
        const SimplexMesh m = dim == 2 ? build_uniform_square(3) : build_uniform_cube(1);
        const MorleySpace s(m);
        const std::pair<SparseMatrix, SparseMatrix> pairs[] = {
            {assemble_b_ip(s, 5.0, 4), assemble_b_ip(s, 5.0, 6)},
            {assemble_b_sp(s, 1.0, 4), assemble_b_sp(s, 1.0, 6)},
            {assemble_nitsche(s, 5.0, 5.0, 4), assemble_nitsche(s, 5.0, 5.0, 6)},
            {assemble_gradient_gram(s, 4), assemble_gradient_gram(s, 6)},
        };
        for (const auto& [lo, hi] : pairs) {
            EXPECT_LE(max_abs(dense(lo) - dense(hi)), 1e-12 * max_abs(dense(hi)));
        }
    }
}

TEST(Forms, ExactSymmetry)
{
    for (int dim : {2, 3}) {
        const SimplexMesh m = dim == 2 ? build_uniform_square(4) : build_uniform_cube(2);
        const MorleySpace s(m);
        for (const SparseMatrix& a : {assemble_a(s), assemble_b_ip(s, 5.0), assemble_b_sp(s, 0.7),
                                      assemble_nitsche(s, 5.0, 5.0)}) {
            const SparseMatrix t = a.transpose();
            EXPECT_EQ((dense(a) - dense(t)).cwiseAbs().maxCoeff(), 0.0);
        }
    }
}

TEST(Forms, HessianFormProperties)
{
    const SimplexMesh m = build_uniform_square(3);
    const MorleySpace s(m);
    const Eigen::MatrixXd a = dense(assemble_a(s));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-10 * es.eigenvalues().maxCoeff());
    Quadratic lin;
    lin.value = 0.3;
    lin.gradient = Vec3(1.2, -0.7, 0.0);
    const FEFunction v = morley_interpolate(s, as_smooth(lin));
    EXPECT_NEAR(v.coefficients().dot(a * v.coefficients()), 0.0, 1e-12);
}

TEST(Forms, InteriorFaceTermsVanishOnGlobalQuadratics)
{
    std::mt19937 gen(5);
    for (int dim : {2, 3}) {
        const SimplexMesh m = dim == 2 ? build_uniform_square(3) : build_uniform_cube(2);
        const MorleySpace s(m);
        const SparseMatrix faces = sum_interior_face_ip(s, 5.0);
        const FEFunction v = morley_interpolate(s, as_smooth(random_quadratic(dim, gen)));
        const FEFunction w = morley_interpolate(s, as_smooth(random_quadratic(dim, gen)));
        EXPECT_NEAR(v.coefficients().dot(faces * w.coefficients()), 0.0, 1e-10);
    }
}

TEST(Forms, SuperPenaltyStructure)
{
    const SimplexMesh m = build_uniform_square(3);
    const MorleySpace s(m);
    const SparseMatrix diff = assemble_b_sp(s, 1.0) - assemble_gradient_gram(s);
    std::set<std::pair<Index, Index>> coupled;
    for (Index f = 0; f < m.num_faces(); ++f) {
        const auto d = face_dofs(s, f);
        for (Index i : d) {
            for (Index j : d) {
                coupled.insert({i, j});
            }
        }
    }
    for (int c = 0; c < diff.outerSize(); ++c) {
        for (SparseMatrix::InnerIterator it(diff, c); it; ++it) {
            if (it.value() != 0.0) {
                EXPECT_TRUE(coupled.count({Index(it.row()), Index(it.col())}));
            }
        }
    }
}

TEST(Forms, NitscheCorrectionSupportedNearBoundary)
{
    const SimplexMesh m = build_uniform_square(4);
    const MorleySpace s(m);
    const SparseMatrix nit = assemble_nitsche(s, 5.0, 5.0);
    std::vector<char> near(std::size_t(s.num_dofs()), 0);
    for (Index f = 0; f < m.num_faces(); ++f) {
        if (m.face(f).on_boundary()) {
            for (Index g : s.dofs().cell(m.face(f).cells[0])) {
                near[g] = 1;
            }
        }
    }
    const Eigen::MatrixXd d = dense(nit);
    for (Index i = 0; i < s.num_dofs(); ++i) {
        if (!near[i]) {
            EXPECT_EQ(d.row(i).cwiseAbs().maxCoeff(), 0.0);
        }
    }
}

TEST(Forms, PenaltyArgumentsValidated)
{
    const SimplexMesh m = build_uniform_square(1);
    const MorleySpace s(m);
    EXPECT_THROW(assemble_b_ip(s, 0.0), InvalidArgument);
    EXPECT_THROW(assemble_b_ip(s, -1.0), InvalidArgument);
    EXPECT_THROW(assemble_b_sp(s, 0.0), InvalidArgument);
    EXPECT_THROW(assemble_b_sp(s, 1.5), InvalidArgument);
    EXPECT_THROW(assemble_nitsche(s, 0.0, 1.0), InvalidArgument);
    EXPECT_THROW(assemble_nitsche(s, 1.0, -1.0), InvalidArgument);
}

TEST(Forms, LoadVector)
{
    const SimplexMesh m = build_uniform_square(4);
    const MorleySpace s(m);
    EXPECT_EQ(assemble_load(s, [](const Vec3&) { return 0.0; }).cwiseAbs().maxCoeff(), 0.0);

    // The constant 1 has value DOFs 1 and normal-derivative DOFs 0.
    const Eigen::VectorXd one = assemble_load(s, [](const Vec3&) { return 1.0; });
    EXPECT_NEAR(one.head(s.dofs().num_subface_dofs).sum(), 1.0, 1e-13);

    auto f = [](const Vec3& x) { return 2 * kPi * kPi * std::sin(kPi * x.x()) * std::sin(kPi * x.y()); };
    const Eigen::VectorXd b = assemble_load(s, f);
    for (Index g = 0; g < s.num_dofs(); g += 3) {
        double ref = 0.0;
        for (Index k = 0; k < m.num_cells(); ++k) {
            const Quadratic phi = global_basis(s, g, k);
            ref += oracle::integrate_simplex(cell_points(m, k), [&](const Vec3& x) { return f(x) * phi(x); });
        }
        EXPECT_NEAR(b[g], ref, 1e-6 * std::max(1.0, std::abs(ref)));
    }
}

TEST(Forms, BuildSystem)
{
    const SimplexMesh m = build_uniform_square(4);
    const MorleySpace s(m);
    auto f = [](const Vec3&) { return 1.0; };
    FormParameters ip;
    const AssembledSystem sys = build_system(s, ip, f);
    EXPECT_EQ(sys.num_unknowns(), 49);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(sys.matrix));
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);

    FormParameters sp;
    sp.method = Method::SPMWX;
    sp.epsilon = 0.0;
    const AssembledSystem sys_sp = build_system(s, sp, f);
    const SparseMatrix ref_sp = restrict_matrix(assemble_b_sp(s, 1.0), sys_sp.global_to_free, sys_sp.num_unknowns());
    EXPECT_EQ(max_abs(dense(sys_sp.matrix) - dense(ref_sp)), 0.0);

    FormParameters ip0;
    ip0.epsilon = 0.0;
    const AssembledSystem sys_ip0 = build_system(s, ip0, f);
    const SparseMatrix ref_ip = restrict_matrix(assemble_b_ip(s, 5.0), sys_ip0.global_to_free, sys_ip0.num_unknowns());
    EXPECT_EQ(max_abs(dense(sys_ip0.matrix) - dense(ref_ip)), 0.0);

    FormParameters nit;
    nit.method = Method::NITSCHE;
    nit.sigma = 8.0;
    const AssembledSystem sys_n = build_system(s, nit, f);
    EXPECT_EQ(sys_n.num_unknowns(), s.num_dofs());
    const Eigen::MatrixXd ref_n =
        dense(assemble_a(s)) + dense(assemble_nitsche(s, 5.0, 5.0)) + dense(assemble_b_ip(s, 8.0));
    EXPECT_LE(max_abs(dense(sys_n.matrix) - ref_n), 1e-13 * max_abs(ref_n));

    for (Index g = 0; g < s.num_dofs(); ++g) {
        EXPECT_EQ(sys.global_to_free[g] < 0, static_cast<bool>(s.dofs().boundary[g]));
    }
    const Eigen::VectorXd e = sys.expand(Eigen::VectorXd::Ones(sys.num_unknowns()));
    EXPECT_EQ(e.sum(), 49.0);
    EXPECT_THROW(sys.expand(Eigen::VectorXd::Ones(3)), InvalidArgument);
}

TEST(Forms, BuildSystemRejectsBadParameters)
{
    const SimplexMesh m = build_uniform_square(1);
    const MorleySpace s(m);
    auto f = [](const Vec3&) { return 1.0; };
    FormParameters p;
    p.method = Method::NITSCHE;
    p.epsilon = 0.0;
    EXPECT_THROW(build_system(s, p, f), InvalidArgument);
    p = {};
    p.sigma = 0.0;
    EXPECT_THROW(build_system(s, p, f), InvalidArgument);
    p = {};
    p.method = Method::SPMWX;
    p.p = 0.0;
    EXPECT_THROW(build_system(s, p, f), InvalidArgument);
    p = {};
    p.epsilon = -1.0;
    EXPECT_THROW(build_system(s, p, f), InvalidArgument);
}
