#include "mwx/quadrature.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace mwx;

namespace {

double factorial(int n)
{
    return std::tgamma(n + 1.0);
}

// Integral of x^a y^b z^c over the reference simplex of dimension d.
double monomial_oracle(int d, int a, int b, int c)
{
    return factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + d);
}

double apply_rule(const QuadratureRule& rule, int a, int b, int c)
{
    double s = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto& l = rule.barycentric[q];
        const double x = rule.dim >= 1 ? l[1] : 0.0;
        const double y = rule.dim >= 2 ? l[2] : 0.0;
        const double z = rule.dim >= 3 ? l[3] : 0.0;
        s += rule.weights[q] * std::pow(x, a) * std::pow(y, b) * std::pow(z, c);
    }
    return s;
}

}  // namespace

TEST(Quadrature, WeightsPositiveAndSumToMeasure)
{
    const double measure[] = {0.0, 1.0, 0.5, 1.0 / 6.0};
    for (int d = 1; d <= 3; ++d) {
        for (int deg = 0; deg <= 8; ++deg) {
            const QuadratureRule& r = simplex_rule(d, deg);
            EXPECT_EQ(r.dim, d);
            EXPECT_GE(r.exactness_degree, deg);
            EXPECT_DOUBLE_EQ(r.reference_measure(), measure[d]);
            double sum = 0.0;
            for (std::size_t q = 0; q < r.size(); ++q) {
                EXPECT_GT(r.weights[q], 0.0);
                double bsum = 0.0;
                for (int i = 0; i <= d; ++i) {
                    EXPECT_GE(r.barycentric[q][i], 0.0);
                    bsum += r.barycentric[q][i];
                }
                EXPECT_NEAR(bsum, 1.0, 1e-14);
                sum += r.weights[q];
            }
            EXPECT_NEAR(sum, measure[d], 1e-14) << "d=" << d << " degree=" << deg;
        }
    }
}

TEST(Quadrature, ExactForAllMonomialsUpToDegree)
{
    for (int d = 1; d <= 3; ++d) {
        for (int deg = 1; deg <= 8; ++deg) {
            const QuadratureRule& r = simplex_rule(d, deg);
            for (int a = 0; a <= deg; ++a) {
                for (int b = 0; b <= (d >= 2 ? deg - a : 0); ++b) {
                    for (int c = 0; c <= (d >= 3 ? deg - a - b : 0); ++c) {
                        const double exact = monomial_oracle(d, a, b, c);
                        EXPECT_NEAR(apply_rule(r, a, b, c), exact, 1e-12 * std::max(1.0, exact))
                            << "d=" << d << " rule degree=" << deg << " monomial " << a << b << c;
                    }
                }
            }
        }
    }
}

TEST(Quadrature, NotExactBeyondDegreeForSomeMonomial)
{
    // A degree-2 triangle rule must fail for some quartic; otherwise the
    // exactness check above would not be discriminating.
    const QuadratureRule& r = simplex_rule(2, 2);
    EXPECT_GT(std::abs(apply_rule(r, 4, 0, 0) - monomial_oracle(2, 4, 0, 0)), 1e-6);
}

TEST(Quadrature, SpecExamples)
{
    const QuadratureRule& tri = simplex_rule(2, 2);
    EXPECT_NEAR(apply_rule(tri, 2, 0, 0) + apply_rule(tri, 0, 2, 0), 1.0 / 6.0, 1e-14);
    for (int deg = 0; deg <= 8; ++deg) {
        EXPECT_NEAR(apply_rule(simplex_rule(1, deg), 0, 0, 0), 1.0, 1e-15);
    }
    EXPECT_NEAR(apply_rule(simplex_rule(3, 4), 4, 0, 0), 1.0 / 210.0, 1e-15);
}

TEST(Quadrature, UnsupportedRequestsThrow)
{
    EXPECT_THROW(simplex_rule(2, 9), InvalidArgument);
    EXPECT_THROW(simplex_rule(2, -1), InvalidArgument);
    EXPECT_THROW(simplex_rule(0, 2), InvalidArgument);
    EXPECT_THROW(simplex_rule(4, 2), InvalidArgument);
}

TEST(Quadrature, RulesAreCachedAndStable)
{
    const QuadratureRule& a = simplex_rule(3, 6);
    const QuadratureRule& b = simplex_rule(3, 6);
    EXPECT_EQ(&a, &b);
}

TEST(Quadrature, MappedCellRules)
{
    const SimplexMesh m = build_uniform_square(3);
    const QuadratureRule& r = simplex_rule(2, 4);
    for (Index k = 0; k < m.num_cells(); ++k) {
        const MappedQuadrature q = map_rule_to_cell(r, m, k);
        double one = 0.0, x = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            one += q.weights[i];
            x += q.weights[i] * q.points[i].x();
        }
        EXPECT_NEAR(one, m.geometry(k).measure, 1e-15);
        EXPECT_NEAR(x, m.geometry(k).measure * m.geometry(k).centroid.x(), 1e-15);
    }
}

TEST(Quadrature, QuadraticOnFaceOf3DCellMatchesOracle)
{
    const SimplexMesh m = build_uniform_cube(2);
    const QuadratureRule& r = simplex_rule(2, 2);
    auto g = [](const Vec3& p) { return 1.0 + p.x() * p.y() - 2.0 * p.z() * p.z() + 3.0 * p.x(); };
    for (Index f = 0; f < m.num_faces(); f += 7) {
        const Face& face = m.face(f);
        const MappedQuadrature q = map_rule_to_face(r, m, f);
        double s = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            s += q.weights[i] * g(q.points[i]);
        }
        const double ref = oracle::integrate_triangle(m.vertex(face.vertices[0]), m.vertex(face.vertices[1]),
                                                      m.vertex(face.vertices[2]), g);
        EXPECT_NEAR(s, ref, 1e-14);
    }
}

TEST(Quadrature, PhysicalPolynomialOnTetrahedron)
{
    const std::vector<Vec3> v{Vec3(0.1, 0.2, 0.0), Vec3(1.0, 0.3, 0.2), Vec3(0.4, 1.1, 0.1), Vec3(0.3, 0.2, 0.9)};
    auto g = [](const Vec3& p) { return std::pow(p.x(), 3) * p.y() - p.y() * p.z() * p.z() * p.x() + 0.5; };
    const MappedQuadrature q = map_rule(simplex_rule(3, 4), v);
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        s += q.weights[i] * g(q.points[i]);
    }
    EXPECT_NEAR(s, oracle::integrate_simplex(v, g), 1e-14);
}

TEST(Quadrature, DegenerateSimplexRejected)
{
    const std::vector<Vec3> flat{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(2, 0, 0)};
    EXPECT_THROW(map_rule(simplex_rule(2, 2), flat), InvalidArgument);
    const std::vector<Vec3> wrong_count{Vec3(0, 0, 0), Vec3(1, 0, 0)};
    EXPECT_THROW(map_rule(simplex_rule(2, 2), wrong_count), InvalidArgument);
    const SimplexMesh m = build_uniform_square(1);
    EXPECT_THROW(map_rule_to_cell(simplex_rule(3, 2), m, 0), InvalidArgument);
    EXPECT_THROW(map_rule_to_face(simplex_rule(2, 2), m, 0), InvalidArgument);
}
