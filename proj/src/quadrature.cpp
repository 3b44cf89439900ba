#include "mwx/quadrature.hpp"

#include "quadrature_tables.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace mwx {

namespace {

double simplex_measure(int dim, std::span<const Vec3> v)
{
    switch (dim) {
    case 1:
        return (v[1] - v[0]).norm();
    case 2:
        return 0.5 * (v[1] - v[0]).cross(v[2] - v[0]).norm();
    default:
        return std::abs((v[1] - v[0]).dot((v[2] - v[0]).cross(v[3] - v[0]))) / 6.0;
    }
}

QuadratureRule load_rule(int dim, int degree)
{
    for (int r = 0; r < detail::kRawRuleCount; ++r) {
        const detail::RawRule& raw = detail::kRawRules[r];
        if (raw.dim != dim || raw.degree != degree) {
            continue;
        }
        QuadratureRule rule;
        rule.dim = dim;
        rule.exactness_degree = degree;
        for (int q = 0; q < raw.num_points; ++q) {
            const double* row = raw.data + q * (dim + 1);
            std::array<double, 4> lambda{0.0, 0.0, 0.0, 0.0};
            double sum = 0.0;
            for (int i = 0; i < dim; ++i) {
                lambda[i + 1] = row[i];
                sum += row[i];
            }
            lambda[0] = 1.0 - sum;
            rule.barycentric.push_back(lambda);
            rule.weights.push_back(row[dim]);
        }
        return rule;
    }
    throw InvalidArgument("simplex_rule: no rule for dim " + std::to_string(dim) + ", degree " +
                          std::to_string(degree));
}

}  // namespace

double QuadratureRule::reference_measure() const
{
    return dim == 1 ? 1.0 : (dim == 2 ? 0.5 : 1.0 / 6.0);
}

const QuadratureRule& simplex_rule(int dim, int degree)
{
    MWX_REQUIRE(dim >= 1 && dim <= 3, "simplex_rule: dimension must be 1, 2 or 3");
    MWX_REQUIRE(degree >= 0 && degree <= 8, "simplex_rule: degree must be in [0, 8]");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, QuadratureRule> cache;
    const int table_degree = degree < 1 ? 1 : degree;
    std::lock_guard lock(mutex);
    auto it = cache.find({dim, table_degree});
    if (it == cache.end()) {
        it = cache.emplace(std::pair{dim, table_degree}, load_rule(dim, table_degree)).first;
    }
    return it->second;
}

MappedQuadrature map_rule(const QuadratureRule& rule, std::span<const Vec3> vertices)
{
    MWX_REQUIRE(static_cast<int>(vertices.size()) == rule.dim + 1, "map_rule: vertex count does not match rule");
    const double measure = simplex_measure(rule.dim, vertices);
    MWX_REQUIRE(measure > 0.0, "map_rule: degenerate simplex");
    const double scale = measure / rule.reference_measure();
    MappedQuadrature mq;
    mq.points.reserve(rule.size());
    mq.weights.reserve(rule.size());
    for (std::size_t q = 0; q < rule.size(); ++q) {
        Vec3 x = Vec3::Zero();
        for (int i = 0; i <= rule.dim; ++i) {
            x += rule.barycentric[q][i] * vertices[i];
        }
        mq.points.push_back(x);
        mq.weights.push_back(rule.weights[q] * scale);
    }
    return mq;
}

MappedQuadrature map_rule_to_cell(const QuadratureRule& rule, const SimplexMesh& mesh, Index k)
{
    MWX_REQUIRE(rule.dim == mesh.dimension(), "map_rule_to_cell: rule dimension differs from mesh dimension");
    std::array<Vec3, 4> v{};
    for (int i = 0; i <= rule.dim; ++i) {
        v[i] = mesh.vertex(mesh.cell(k)[i]);
    }
    return map_rule(rule, std::span<const Vec3>(v.data(), std::size_t(rule.dim + 1)));
}

MappedQuadrature map_rule_to_face(const QuadratureRule& rule, const SimplexMesh& mesh, Index f)
{
    MWX_REQUIRE(rule.dim == mesh.dimension() - 1, "map_rule_to_face: rule dimension must be d - 1");
    const Face& face = mesh.face(f);
    std::array<Vec3, 3> v{};
    for (int i = 0; i <= rule.dim; ++i) {
        v[i] = mesh.vertex(face.vertices[i]);
    }
    return map_rule(rule, std::span<const Vec3>(v.data(), std::size_t(rule.dim + 1)));
}

}  // namespace mwx
