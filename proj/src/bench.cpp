#include "mwx/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mwx {

namespace {

std::string shortest(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string printf_double(const char* format, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

double parse_double(const std::string& s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw InvalidArgument("read_csv: bad number '" + s + "'");
    }
    return v;
}

std::string epsilon_label(double eps)
{
    if (eps == 0.0 || eps == 1.0) {
        return shortest(eps);
    }
    const double e = std::log10(eps);
    if (std::abs(e - std::round(e)) < 1e-12) {
        return "1e" + std::to_string(static_cast<int>(std::round(e)));
    }
    return shortest(eps);
}

std::string rate_cell(const std::optional<double>& r)
{
    return r ? printf_double("%.2f", *r) : std::string("-");
}

}  // namespace

void BenchConfig::validate() const
{
    MWX_REQUIRE(min_level >= 1, "min-level must be >= 1");
    MWX_REQUIRE(max_level >= min_level, "max-level must be >= min-level");
    MWX_REQUIRE(max_level <= 12, "max-level must be <= 12");
    MWX_REQUIRE(!epsilons.empty(), "at least one epsilon is required");
    for (double e : epsilons) {
        MWX_REQUIRE(e >= 0.0 && std::isfinite(e), "epsilon values must be finite and >= 0");
    }
    MWX_REQUIRE(sigma > 0.0, "sigma must be positive");
    MWX_REQUIRE(p > 0.0 && p <= 1.0, "p must lie in (0, 1]");
    MWX_REQUIRE(sigma1 > 0.0 && sigma2 > 0.0, "sigma1 and sigma2 must be positive");
    MWX_REQUIRE(r >= 0 && 2 * r <= 8, "r must lie in [0, 4]");
    MWX_REQUIRE(tol > 0.0, "tol must be positive");
    if (method == Method::NITSCHE) {
        for (double e : epsilons) {
            MWX_REQUIRE(e > 0.0, "the Nitsche variant needs epsilon > 0");
        }
    }
}

SimplexMesh build_level_mesh(Example example, int level)
{
    MWX_REQUIRE(level >= 0 && level <= 12, "level out of range");
    const int n = 1 << level;
    return example == Example::Smooth3D ? build_uniform_cube(n) : build_uniform_square(n);
}

StudyTable run_convergence_study(const BenchConfig& config)
{
    config.validate();
    const ManufacturedProblem problem = make_problem(config.example);
    const std::optional<double> p_norm =
        config.method == Method::SPMWX ? std::optional<double>(config.p) : std::nullopt;

    StudyTable table;
    for (int level = config.min_level; level <= config.max_level; ++level) {
        const SimplexMesh mesh = build_level_mesh(config.example, level);
        const MorleySpace space(mesh);
        for (double eps : config.epsilons) {
            FormParameters params;
            params.method = config.method;
            params.epsilon = eps;
            params.sigma = config.sigma;
            params.p = config.p;
            params.sigma1 = config.sigma1;
            params.sigma2 = config.sigma2;
            params.assembly_degree = config.quad_assembly;
            params.load_degree = config.quad_error;
            const auto f = derive_rhs(problem, eps);
            AssembledSystem system = build_system(space, params, f);
            system.mesh_level = level;

            SolverOptions opts;
            opts.kind = config.solver;
            opts.tol = config.tol;
            const SolveReport report = solve_spd(system, opts);
            const FEFunction uh(space, system.expand(report.solution));

            StudyRow row;
            row.method = config.method;
            row.dim = mesh.dimension();
            row.epsilon = eps;
            row.level = level;
            row.h = std::ldexp(1.0, -level);
            row.ndof = system.num_unknowns();
            row.errors = error_norms(problem.reference, uh, eps, p_norm, config.quad_error);
            row.errors.osc = oscillation(f, mesh, config.r, std::max(config.quad_error, 2 * config.r));
            row.solver_iterations = report.iterations;
            row.solver_residual = report.relative_residual;
            table.push_back(row);
        }
    }

    std::map<double, std::size_t> order;
    for (std::size_t i = 0; i < config.epsilons.size(); ++i) {
        order.emplace(config.epsilons[i], i);
    }
    std::stable_sort(table.begin(), table.end(), [&order](const StudyRow& a, const StudyRow& b) {
        return order.at(a.epsilon) < order.at(b.epsilon);
    });

    for (std::size_t i = 1; i < table.size(); ++i) {
        if (table[i].epsilon == table[i - 1].epsilon) {
            table[i].rate_energy = std::log2(table[i - 1].errors.energy / table[i].errors.energy);
        }
    }
    return table;
}

void write_csv(std::ostream& os, const StudyTable& table)
{
    os << "method,dim,epsilon,level,h,ndof,err_l2,err_h1b,err_h2b,err_triple,err_energy,rate_energy,osc\n";
    for (const StudyRow& r : table) {
        os << to_string(r.method) << ',' << r.dim << ',' << shortest(r.epsilon) << ',' << r.level << ','
           << shortest(r.h) << ',' << r.ndof << ',' << shortest(r.errors.l2) << ',' << shortest(r.errors.broken_h1)
           << ',' << shortest(r.errors.broken_h2) << ',' << shortest(r.errors.triple) << ','
           << shortest(r.errors.energy) << ',' << (r.rate_energy ? shortest(*r.rate_energy) : std::string()) << ','
           << shortest(r.errors.osc) << '\n';
    }
}

void write_markdown(std::ostream& os, const StudyTable& table, Example example)
{
    MWX_REQUIRE(!table.empty(), "write_markdown: empty table");
    const std::string method = to_string(table.front().method);

    if (example == Example::BoundaryLayer) {
        os << "Errors against u0 of the " << method << " method, epsilon = " << epsilon_label(table.front().epsilon)
           << "\n\n";
        os << "| h | L2 | rate | broken H1 | rate | energy | rate |\n";
        os << "|---|---|---|---|---|---|---|\n";
        std::vector<double> l2;
        std::vector<double> h1;
        std::vector<double> en;
        for (const StudyRow& r : table) {
            if (r.epsilon != table.front().epsilon) {
                continue;
            }
            l2.push_back(r.errors.l2);
            h1.push_back(r.errors.broken_h1);
            en.push_back(r.errors.energy);
        }
        const auto rl2 = convergence_rates(l2);
        const auto rh1 = convergence_rates(h1);
        const auto ren = convergence_rates(en);
        std::size_t i = 0;
        for (const StudyRow& r : table) {
            if (r.epsilon != table.front().epsilon) {
                continue;
            }
            os << "| 2^-" << r.level << " | " << printf_double("%.4E", l2[i]) << " | " << rate_cell(rl2[i]) << " | "
               << printf_double("%.4E", h1[i]) << " | " << rate_cell(rh1[i]) << " | "
               << printf_double("%.4E", en[i]) << " | " << rate_cell(ren[i]) << " |\n";
            ++i;
        }
        return;
    }

    std::vector<int> levels;
    std::vector<double> epsilons;
    for (const StudyRow& r : table) {
        if (std::find(levels.begin(), levels.end(), r.level) == levels.end()) {
            levels.push_back(r.level);
        }
        if (std::find(epsilons.begin(), epsilons.end(), r.epsilon) == epsilons.end()) {
            epsilons.push_back(r.epsilon);
        }
    }
    std::sort(levels.begin(), levels.end());

    os << "Energy-norm errors of the " << method << " method\n\n";
    os << "| epsilon | h |";
    for (int l : levels) {
        os << " 2^-" << l << " |";
    }
    os << "\n|---|---|";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        os << "---|";
    }
    os << '\n';
    for (double eps : epsilons) {
        std::ostringstream err;
        std::ostringstream rate;
        err << "| " << epsilon_label(eps) << " | error |";
        rate << "| | rate |";
        for (int l : levels) {
            auto it = std::find_if(table.begin(), table.end(),
                                   [&](const StudyRow& r) { return r.epsilon == eps && r.level == l; });
            if (it == table.end()) {
                err << " |";
                rate << " |";
                continue;
            }
            err << ' ' << printf_double("%.3E", it->errors.energy) << " |";
            rate << ' ' << rate_cell(it->rate_energy) << " |";
        }
        os << err.str() << '\n' << rate.str() << '\n';
    }
}

void emit_table(const StudyTable& table, TableFormat format, Example example, const std::string& path)
{
    MWX_REQUIRE(!table.empty(), "emit_table: empty table");
    auto write = [&](std::ostream& os) {
        if (format == TableFormat::Csv) {
            write_csv(os, table);
        } else {
            write_markdown(os, table, example);
        }
    };
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write(file);
    file.close();
    if (!file) {
        throw std::runtime_error("error while writing '" + path + "'");
    }
}

StudyTable read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line)) {
        throw InvalidArgument("read_csv: missing header");
    }
    StudyTable table;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (line.back() == ',') {
            cells.emplace_back();
        }
        if (cells.size() != 13) {
            throw InvalidArgument("read_csv: expected 13 columns in '" + line + "'");
        }
        StudyRow r;
        r.method = parse_method(cells[0]);
        r.dim = std::stoi(cells[1]);
        r.epsilon = parse_double(cells[2]);
        r.level = std::stoi(cells[3]);
        r.h = parse_double(cells[4]);
        r.ndof = std::stoi(cells[5]);
        r.errors.l2 = parse_double(cells[6]);
        r.errors.broken_h1 = parse_double(cells[7]);
        r.errors.broken_h2 = parse_double(cells[8]);
        r.errors.triple = parse_double(cells[9]);
        r.errors.energy = parse_double(cells[10]);
        if (!cells[11].empty()) {
            r.rate_energy = parse_double(cells[11]);
        }
        r.errors.osc = parse_double(cells[12]);
        table.push_back(r);
    }
    return table;
}

}  // namespace mwx
