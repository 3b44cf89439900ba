#include "mwx/analysis.hpp"

#include "mwx/quadrature.hpp"

#include <cmath>
#include <string>

namespace mwx {

ErrorBreakdown error_norms(const SmoothFunction& u, const FEFunction& uh, double epsilon, std::optional<double> p,
                           int degree)
{
    MWX_REQUIRE(u.value && u.gradient && u.hessian, "error_norms: exact solution needs derivatives up to order 2");
    MWX_REQUIRE(!p || (*p > 0.0 && *p <= 1.0), "error_norms: p must lie in (0, 1]");
    const MorleySpace& space = uh.space();
    const SimplexMesh& mesh = space.mesh();
    const QuadratureRule& cell_rule = simplex_rule(mesh.dimension(), degree);
    const QuadratureRule& face_rule = simplex_rule(mesh.dimension() - 1, degree);

    double l2 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    std::vector<Quadratic> local(std::size_t(mesh.num_cells()));
    for (Index k = 0; k < mesh.num_cells(); ++k) {
        local[k] = uh.restrict_to(k);
        const Quadratic& w = local[k];
        const MappedQuadrature q = map_rule_to_cell(cell_rule, mesh, k);
        for (std::size_t i = 0; i < q.size(); ++i) {
            const Vec3& x = q.points[i];
            const double wt = q.weights[i];
            const double e0 = u.value(x) - w(x);
            l2 += wt * e0 * e0;
            h1 += wt * (u.gradient(x) - w.grad(x)).squaredNorm();
            h2 += wt * (u.hessian(x) - w.hessian).squaredNorm();
        }
    }

    double jumps = 0.0;
    for (Index f = 0; f < mesh.num_faces(); ++f) {
        const Face& face = mesh.face(f);
        const TracePairing tp = mesh.face_trace_pairing(f);
        const double weight = p ? std::pow(face.size, -(2.0 * *p + 1.0)) : 1.0 / face.size;
        const MappedQuadrature q = map_rule_to_face(face_rule, mesh, f);
        double sum = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            const Vec3& x = q.points[i];
            // u is continuous: its interior jump vanishes, its boundary trace does not.
            double jump = tp.count == 1 ? u.value(x) : 0.0;
            for (int s = 0; s < tp.count; ++s) {
                jump -= tp.sign[s] * local[tp.cells[s]](x);
            }
            sum += q.weights[i] * jump * jump;
        }
        jumps += weight * sum;
    }

    ErrorBreakdown e;
    e.l2 = std::sqrt(l2);
    e.broken_h1 = std::sqrt(h1);
    e.broken_h2 = std::sqrt(h2);
    e.jump_term = jumps;
    e.triple = std::sqrt(h1 + jumps);
    e.energy = std::sqrt(epsilon * epsilon * h2 + h1 + jumps);
    return e;
}

namespace {

// Exponent tuples of the monomials of total degree <= r in d variables.
std::vector<std::array<int, 3>> monomial_exponents(int d, int r)
{
    std::vector<std::array<int, 3>> out;
    for (int total = 0; total <= r; ++total) {
        for (int a = total; a >= 0; --a) {
            if (d == 2) {
                out.push_back({a, total - a, 0});
                continue;
            }
            for (int b = total - a; b >= 0; --b) {
                out.push_back({a, b, total - a - b});
            }
        }
    }
    return out;
}

}  // namespace

double oscillation(const std::function<double(const Vec3&)>& f, const SimplexMesh& mesh, int r, int degree)
{
    MWX_REQUIRE(r >= 0, "oscillation: r must be non-negative");
    MWX_REQUIRE(2 * r <= degree, "oscillation: quadrature degree must be at least 2r");
    const int d = mesh.dimension();
    const QuadratureRule& rule = simplex_rule(d, degree);
    const auto exps = monomial_exponents(d, r);
    const long m = long(exps.size());

    double total = 0.0;
    Eigen::MatrixXd basis_values(long(rule.size()), m);
    Eigen::VectorXd fvals(long(rule.size()));
    for (Index k = 0; k < mesh.num_cells(); ++k) {
        const CellGeometry& g = mesh.geometry(k);
        const MappedQuadrature q = map_rule_to_cell(rule, mesh, k);
        for (std::size_t i = 0; i < q.size(); ++i) {
            const Vec3 xi = (q.points[i] - g.centroid) / g.diameter;
            for (long j = 0; j < m; ++j) {
                const auto& e = exps[j];
                basis_values(long(i), j) = std::pow(xi[0], e[0]) * std::pow(xi[1], e[1]) * std::pow(xi[2], e[2]);
            }
            fvals[long(i)] = f(q.points[i]);
        }
        const Eigen::Map<const Eigen::VectorXd> w(q.weights.data(), long(q.size()));
        const Eigen::MatrixXd mass = basis_values.transpose() * w.asDiagonal() * basis_values;
        const Eigen::VectorXd rhs = basis_values.transpose() * w.cwiseProduct(fvals);
        const Eigen::VectorXd coeff = mass.ldlt().solve(rhs);
        const Eigen::VectorXd resid = fvals - basis_values * coeff;
        total += g.diameter * g.diameter * w.dot(resid.cwiseProduct(resid));
    }
    return std::sqrt(total);
}

IndicatorField residual_indicators(const std::function<double(const Vec3&)>& f, const FEFunction& wh, int degree)
{
    const SimplexMesh& mesh = wh.space().mesh();
    const QuadratureRule& cell_rule = simplex_rule(mesh.dimension(), degree);
    const QuadratureRule& face_rule = simplex_rule(mesh.dimension() - 1, degree);

    IndicatorField out;
    std::vector<Quadratic> local(std::size_t(mesh.num_cells()));
    out.volume.resize(local.size());
    for (Index k = 0; k < mesh.num_cells(); ++k) {
        local[k] = wh.restrict_to(k);
        const double lap = local[k].laplacian();
        const MappedQuadrature q = map_rule_to_cell(cell_rule, mesh, k);
        double sum = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            const double res = f(q.points[i]) + lap;
            sum += q.weights[i] * res * res;
        }
        out.volume[k] = std::sqrt(sum);
    }

    out.hessian_jump.assign(std::size_t(mesh.num_faces()), 0.0);
    out.gradient_jump.assign(std::size_t(mesh.num_faces()), 0.0);
    for (Index f = 0; f < mesh.num_faces(); ++f) {
        const Face& face = mesh.face(f);
        const TracePairing tp = mesh.face_trace_pairing(f);
        const Vec3& n = face.normal;
        if (tp.count == 2) {
            const double jump = tp.sign[0] * n.dot(local[tp.cells[0]].hessian * n) +
                                tp.sign[1] * n.dot(local[tp.cells[1]].hessian * n);
            out.hessian_jump[f] = std::abs(jump) * std::sqrt(face.measure);
        }
        const MappedQuadrature q = map_rule_to_face(face_rule, mesh, f);
        double sum = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            double jump = 0.0;
            for (int s = 0; s < tp.count; ++s) {
                jump += tp.sign[s] * local[tp.cells[s]].grad(q.points[i]).dot(n);
            }
            sum += q.weights[i] * jump * jump;
        }
        out.gradient_jump[f] = std::sqrt(sum);
    }
    return out;
}

double weighted_indicator(const IndicatorField& field, const SimplexMesh& mesh)
{
    double total = 0.0;
    for (Index k = 0; k < mesh.num_cells(); ++k) {
        const double h = mesh.geometry(k).diameter;
        total += std::pow(h, 4) * field.volume[k] * field.volume[k];
    }
    for (Index f = 0; f < mesh.num_faces(); ++f) {
        const double h = mesh.face(f).size;
        total += h * field.hessian_jump[f] * field.hessian_jump[f];
        total += h * h * h * field.gradient_jump[f] * field.gradient_jump[f];
    }
    return std::sqrt(total);
}

std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors)
{
    std::vector<std::optional<double>> rates;
    rates.reserve(errors.size());
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0.0)) {
            throw InvalidArgument("convergence_rates: error at position " + std::to_string(i) + " is not positive");
        }
        if (i == 0) {
            rates.emplace_back();
        } else {
            rates.emplace_back(std::log2(errors[i - 1] / errors[i]));
        }
    }
    return rates;
}

}  // namespace mwx
