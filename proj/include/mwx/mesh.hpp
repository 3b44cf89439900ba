#pragma once

#include "mwx/common.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace mwx {

/// A (d-1)-dimensional face of the triangulation.
///
/// `normal` is the fixed unit normal n_F. It equals the outward normal of
/// `cells[0]`, which is always the incident cell with the smaller index.
/// `size` is the length scale h_F used by penalty and jump weights:
/// |F|^{1/(d-1)}, i.e. the edge length in 2D and sqrt(area) in 3D.
struct Face {
    std::array<Index, 3> vertices{-1, -1, -1};  // sorted; 2 used in 2D
    std::array<Index, 2> cells{-1, -1};         // cells[1] == -1 on the boundary
    std::array<int, 2> local_facet{-1, -1};     // facet index inside each cell
    Vec3 normal = Vec3::Zero();
    Vec3 barycenter = Vec3::Zero();
    double diameter = 0.0;
    double size = 0.0;
    double measure = 0.0;

    bool on_boundary() const { return cells[1] < 0; }
    int num_cells() const { return on_boundary() ? 1 : 2; }
};

/// A (d-2)-dimensional subsimplex: a vertex in 2D, an edge in 3D.
struct Subface {
    std::array<Index, 2> vertices{-1, -1};  // sorted; 1 used in 2D
    double measure = 1.0;                   // point measure in 2D is taken as 1
    bool on_boundary = false;
    std::vector<Index> cells;
};

struct CellGeometry {
    double diameter = 0.0;
    double measure = 0.0;
    Vec3 centroid = Vec3::Zero();
    std::array<Vec3, 4> facet_normals{};  // outward, facet j is opposite vertex j
    std::array<double, 4> facet_measures{};
};

/// Sign-annotated view of the cells incident on a face, with
/// [[v]] = sign[0] * v|cells[0] + sign[1] * v|cells[1].
struct TracePairing {
    std::array<Index, 2> cells{-1, -1};
    std::array<int, 2> local_facet{-1, -1};
    std::array<double, 2> sign{1.0, 0.0};
    int count = 1;
};

/// Simplicial triangulation of a polytope, in practice the unit square or cube.
///
/// Immutable after construction. Faces and subfaces are stored in the order
/// in which they are first met while sweeping cells in index order.
class SimplexMesh {
public:
    int dimension() const { return dim_; }
    int vertices_per_cell() const { return dim_ + 1; }
    int subfaces_per_cell() const { return dim_ == 2 ? 3 : 6; }

    Index num_vertices() const { return static_cast<Index>(vertices_.size()); }
    Index num_cells() const { return static_cast<Index>(cells_.size()); }
    Index num_faces() const { return static_cast<Index>(faces_.size()); }
    Index num_subfaces() const { return static_cast<Index>(subfaces_.size()); }
    Index num_boundary_faces() const;
    Index num_boundary_subfaces() const;

    const Vec3& vertex(Index v) const { return vertices_[v]; }
    const std::array<Index, 4>& cell(Index k) const { return cells_[k]; }
    const Face& face(Index f) const { return faces_.at(f); }
    const Subface& subface(Index s) const { return subfaces_.at(s); }
    const CellGeometry& geometry(Index k) const { return geometry_[k]; }

    /// Global face index of local facet j (opposite local vertex j) of cell k.
    Index cell_face(Index k, int j) const { return cell_faces_[k][j]; }
    /// Global subface index of local subface s of cell k; see local_subface_vertices().
    Index cell_subface(Index k, int s) const { return cell_subfaces_[k][s]; }

    /// Local vertex numbers of local subface s: vertex s in 2D; the s-th
    /// pair of (0,1),(0,2),(0,3),(1,2),(1,3),(2,3) in 3D.
    std::array<int, 2> local_subface_vertices(int s) const;

    /// Largest cell diameter.
    double max_diameter() const;

    TracePairing face_trace_pairing(Index f) const;

    /// Debug dump: d / #V / vertex lines / #K / cell lines.
    void write(std::ostream& os) const;

    friend SimplexMesh build_mesh(int dim, std::vector<Vec3> vertices, std::vector<std::array<Index, 4>> cells);
    friend SimplexMesh build_uniform_square(int n);
    friend SimplexMesh build_uniform_cube(int n);

private:
    void finalize();

    int dim_ = 0;
    std::vector<Vec3> vertices_;
    std::vector<std::array<Index, 4>> cells_;
    std::vector<Face> faces_;
    std::vector<Subface> subfaces_;
    std::vector<CellGeometry> geometry_;
    std::vector<std::array<Index, 4>> cell_faces_;
    std::vector<std::array<Index, 6>> cell_subfaces_;
};

/// Mesh from explicit cells ((dim + 1) vertex indices each, the rest ignored).
/// Faces with a single incident cell are treated as boundary faces.
SimplexMesh build_mesh(int dim, std::vector<Vec3> vertices, std::vector<std::array<Index, 4>> cells);

/// n x n squares, each split along its lower-left to upper-right diagonal.
SimplexMesh build_uniform_square(int n);

/// n^3 subcubes, each split into the six Kuhn tetrahedra around its main diagonal.
SimplexMesh build_uniform_cube(int n);

}  // namespace mwx
