#pragma once

#include "mwx/analysis.hpp"
#include "mwx/forms.hpp"
#include "mwx/problems.hpp"
#include "mwx/solver.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mwx {

enum class TableFormat { Csv, Markdown };

struct BenchConfig {
    Example example = Example::Smooth2D;
    Method method = Method::IPMWX;
    std::vector<double> epsilons{1.0};
    int min_level = 2;  // h = 2^-level, i.e. 2^level cells per axis
    int max_level = 5;
    double sigma = 5.0;
    double p = 1.0;
    double sigma1 = 5.0;
    double sigma2 = 5.0;
    int r = 2;
    int quad_assembly = 4;
    int quad_error = 6;
    double tol = 1e-10;
    SolverKind solver = SolverKind::SparseCholesky;
    TableFormat format = TableFormat::Csv;
    std::string out;

    void validate() const;
};

struct StudyRow {
    Method method = Method::IPMWX;
    int dim = 2;
    double epsilon = 0.0;
    int level = 0;
    double h = 0.0;
    Index ndof = 0;
    ErrorBreakdown errors;
    std::optional<double> rate_energy;
    int solver_iterations = 0;
    double solver_residual = 0.0;
};

using StudyTable = std::vector<StudyRow>;

/// Meshes, assembles, solves and measures every (epsilon, level) pair.
/// Rows are ordered by epsilon (as given), then by level.
StudyTable run_convergence_study(const BenchConfig& config);

/// Mesh for a study level: 2^level cells per axis in the example's dimension.
SimplexMesh build_level_mesh(Example example, int level);

void write_csv(std::ostream& os, const StudyTable& table);
/// Error/rate pairs per epsilon row and h column; for the boundary-layer
/// example, one row per h with L2, broken H1 and energy errors and rates.
void write_markdown(std::ostream& os, const StudyTable& table, Example example);
/// Writes the table to `path` ("-" for stdout).
void emit_table(const StudyTable& table, TableFormat format, Example example, const std::string& path);

/// Parses the output of write_csv.
StudyTable read_csv(std::istream& is);

}  // namespace mwx
