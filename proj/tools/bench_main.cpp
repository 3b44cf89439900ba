// Convergence benchmark driver for the penalized Morley-Wang-Xu methods.

#include "mwx/bench.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<double> parse_eps_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) {
            throw mwx::InvalidArgument("bad epsilon value '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Convergence study for the interior/super penalty Morley-Wang-Xu methods"};

    int example = 1;
    std::string method = "ipmwx";
    std::string eps = "1";
    std::string format = "csv";
    std::string solver = "cholesky";
    mwx::BenchConfig config;

    app.add_option("--example", example, "1: smooth 2D, 2: boundary layer, 3: smooth 3D")
        ->check(CLI::IsMember({1, 2, 3}));
    app.add_option("--method", method, "ipmwx | spmwx | nitsche")
        ->check(CLI::IsMember({"ipmwx", "spmwx", "nitsche"}));
    app.add_option("--eps", eps, "comma-separated epsilon list; 0 allowed");
    app.add_option("--min-level", config.min_level, "coarsest level, h = 2^-L");
    app.add_option("--max-level", config.max_level, "finest level");
    app.add_option("--sigma", config.sigma, "interior penalty parameter");
    app.add_option("--p", config.p, "super penalty exponent in (0, 1]");
    app.add_option("--sigma1", config.sigma1, "Nitsche normal-derivative penalty");
    app.add_option("--sigma2", config.sigma2, "Nitsche value penalty");
    app.add_option("--r", config.r, "polynomial degree of the oscillation projection");
    app.add_option("--quad-assembly", config.quad_assembly, "quadrature degree for bilinear forms");
    app.add_option("--quad-error", config.quad_error, "quadrature degree for loads and error norms");
    app.add_option("--tol", config.tol, "relative residual tolerance");
    app.add_option("--solver", solver, "cholesky | cg | dense")->check(CLI::IsMember({"cholesky", "cg", "dense"}));
    app.add_option("--format", format, "csv | md")->check(CLI::IsMember({"csv", "md"}));
    app.add_option("--out", config.out, "output path, '-' for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        config.example = mwx::parse_example(example);
        config.method = mwx::parse_method(method);
        config.epsilons = parse_eps_list(eps);
        config.solver = mwx::parse_solver(solver);
        config.format = format == "md" ? mwx::TableFormat::Markdown : mwx::TableFormat::Csv;
        const mwx::StudyTable table = mwx::run_convergence_study(config);
        mwx::emit_table(table, config.format, config.example, config.out);
    } catch (const std::exception& e) {
        std::cerr << "bench: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
