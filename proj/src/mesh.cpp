#include "mwx/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <string>

namespace mwx {

namespace {

constexpr std::array<std::array<int, 2>, 6> kTetEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Barycentric gradients of a nondegenerate simplex; returns the measure.
double barycentric_gradients(int dim, const std::array<Vec3, 4>& p, std::array<Vec3, 4>& grad)
{
    Eigen::MatrixXd jac(dim, dim);
    for (int c = 0; c < dim; ++c) {
        for (int r = 0; r < dim; ++r) {
            jac(r, c) = p[c + 1][r] - p[0][r];
        }
    }
    const double det = jac.determinant();
    const double measure = std::abs(det) / (dim == 2 ? 2.0 : 6.0);
    if (!(measure > 0.0)) {
        throw InvalidArgument("degenerate simplex");
    }
    const Eigen::MatrixXd inv = jac.inverse();
    grad[0].setZero();
    for (int i = 1; i <= dim; ++i) {
        Vec3 g = Vec3::Zero();
        for (int r = 0; r < dim; ++r) {
            g[r] = inv(i - 1, r);
        }
        grad[i] = g;
        grad[0] -= g;
    }
    return measure;
}

double max_edge(const Vec3* pts, int count)
{
    double h = 0.0;
    for (int a = 0; a < count; ++a) {
        for (int b = a + 1; b < count; ++b) {
            h = std::max(h, (pts[a] - pts[b]).norm());
        }
    }
    return h;
}

}  // namespace

std::array<int, 2> SimplexMesh::local_subface_vertices(int s) const
{
    if (dim_ == 2) {
        return {s, -1};
    }
    return kTetEdges[s];
}

Index SimplexMesh::num_boundary_faces() const
{
    return static_cast<Index>(std::count_if(faces_.begin(), faces_.end(), [](const Face& f) { return f.on_boundary(); }));
}

Index SimplexMesh::num_boundary_subfaces() const
{
    return static_cast<Index>(
        std::count_if(subfaces_.begin(), subfaces_.end(), [](const Subface& s) { return s.on_boundary; }));
}

double SimplexMesh::max_diameter() const
{
    double h = 0.0;
    for (const auto& g : geometry_) {
        h = std::max(h, g.diameter);
    }
    return h;
}

TracePairing SimplexMesh::face_trace_pairing(Index f) const
{
    if (f < 0 || f >= num_faces()) {
        throw InvalidArgument("face_trace_pairing: face id " + std::to_string(f) + " out of range");
    }
    const Face& face = faces_[f];
    TracePairing tp;
    tp.cells = face.cells;
    tp.local_facet = face.local_facet;
    if (face.on_boundary()) {
        tp.count = 1;
        tp.sign = {1.0, 0.0};
    } else {
        // n_F is the outward normal of cells[0]; the neighbour's outward normal is -n_F.
        tp.count = 2;
        tp.sign = {1.0, -1.0};
    }
    return tp;
}

void SimplexMesh::write(std::ostream& os) const
{
    os << dim_ << '\n' << vertices_.size() << '\n';
    for (const auto& v : vertices_) {
        for (int r = 0; r < dim_; ++r) {
            os << (r ? " " : "") << v[r];
        }
        os << '\n';
    }
    os << cells_.size() << '\n';
    for (const auto& c : cells_) {
        for (int r = 0; r <= dim_; ++r) {
            os << (r ? " " : "") << c[r];
        }
        os << '\n';
    }
}

void SimplexMesh::finalize()
{
    const int nv = dim_ + 1;
    const std::size_t ncells = cells_.size();
    geometry_.resize(ncells);
    cell_faces_.assign(ncells, {-1, -1, -1, -1});
    cell_subfaces_.assign(ncells, {-1, -1, -1, -1, -1, -1});

    for (std::size_t k = 0; k < ncells; ++k) {
        std::array<Vec3, 4> p{};
        for (int i = 0; i < nv; ++i) {
            p[i] = vertices_[cells_[k][i]];
        }
        std::array<Vec3, 4> grad{};
        CellGeometry& g = geometry_[k];
        g.measure = barycentric_gradients(dim_, p, grad);
        g.diameter = max_edge(p.data(), nv);
        g.centroid.setZero();
        for (int i = 0; i < nv; ++i) {
            g.centroid += p[i] / nv;
        }
        for (int j = 0; j < nv; ++j) {
            const auto uj = j;
            const double gn = grad[uj].norm();
            g.facet_normals[uj] = -grad[uj] / gn;
            g.facet_measures[uj] = dim_ * g.measure * gn;
        }
    }

    // Faces, in order of first appearance.
    std::map<std::array<Index, 3>, Index> face_lookup;
    for (std::size_t k = 0; k < ncells; ++k) {
        for (int j = 0; j < nv; ++j) {
            std::array<Index, 3> key{-1, -1, -1};
            int m = 0;
            for (int i = 0; i < nv; ++i) {
                if (i != j) {
                    key[m++] = cells_[k][i];
                }
            }
            std::sort(key.begin(), key.begin() + dim_);
            auto [it, inserted] = face_lookup.emplace(key, static_cast<Index>(faces_.size()));
            if (inserted) {
                Face f;
                f.vertices = key;
                f.cells[0] = static_cast<Index>(k);
                f.local_facet[0] = j;
                f.normal = geometry_[k].facet_normals[j];
                f.measure = geometry_[k].facet_measures[j];
                std::array<Vec3, 3> fp{};
                f.barycenter.setZero();
                for (int i = 0; i < dim_; ++i) {
                    fp[i] = vertices_[key[i]];
                    f.barycenter += fp[i] / dim_;
                }
                f.diameter = max_edge(fp.data(), dim_);
                f.size = dim_ == 2 ? f.measure : std::sqrt(f.measure);
                faces_.push_back(f);
            } else {
                Face& f = faces_[it->second];
                if (f.cells[1] >= 0) {
                    throw InvalidArgument("nonmanifold face in mesh");
                }
                f.cells[1] = static_cast<Index>(k);
                f.local_facet[1] = j;
            }
            cell_faces_[k][j] = it->second;
        }
    }

    // Subfaces: vertices (in vertex order) in 2D, edges (first appearance) in 3D.
    std::map<std::array<Index, 2>, Index> sub_lookup;
    if (dim_ == 2) {
        subfaces_.resize(vertices_.size());
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            subfaces_[v].vertices = {static_cast<Index>(v), -1};
            sub_lookup.emplace(std::array<Index, 2>{static_cast<Index>(v), -1}, static_cast<Index>(v));
        }
    }
    for (std::size_t k = 0; k < ncells; ++k) {
        for (int s = 0; s < subfaces_per_cell(); ++s) {
            const auto lv = local_subface_vertices(s);
            std::array<Index, 2> key{cells_[k][lv[0]], -1};
            if (dim_ == 3) {
                key[1] = cells_[k][lv[1]];
                if (key[0] > key[1]) {
                    std::swap(key[0], key[1]);
                }
            }
            auto [it, inserted] = sub_lookup.emplace(key, static_cast<Index>(subfaces_.size()));
            if (inserted) {
                Subface sf;
                sf.vertices = key;
                sf.measure = (vertex(key[0]) - vertex(key[1])).norm();
                subfaces_.push_back(sf);
            }
            subfaces_[it->second].cells.push_back(static_cast<Index>(k));
            cell_subfaces_[k][s] = it->second;
        }
    }

    for (const Face& f : faces_) {
        if (!f.on_boundary()) {
            continue;
        }
        for (int a = 0; a < dim_; ++a) {
            if (dim_ == 2) {
                subfaces_[f.vertices[a]].on_boundary = true;
                continue;
            }
            for (int b = a + 1; b < dim_; ++b) {
                const std::array<Index, 2> key{f.vertices[a], f.vertices[b]};
                subfaces_[sub_lookup.at(key)].on_boundary = true;
            }
        }
    }
}

SimplexMesh build_mesh(int dim, std::vector<Vec3> vertices, std::vector<std::array<Index, 4>> cells)
{
    MWX_REQUIRE(dim == 2 || dim == 3, "build_mesh: dimension must be 2 or 3");
    MWX_REQUIRE(!cells.empty(), "build_mesh: no cells");
    for (const auto& c : cells) {
        for (int i = 0; i <= dim; ++i) {
            MWX_REQUIRE(c[i] >= 0 && c[i] < static_cast<Index>(vertices.size()), "build_mesh: vertex index out of range");
        }
    }
    for (auto& v : vertices) {
        if (dim == 2) {
            v.z() = 0.0;
        }
    }
    SimplexMesh mesh;
    mesh.dim_ = dim;
    mesh.vertices_ = std::move(vertices);
    mesh.cells_ = std::move(cells);
    for (auto& c : mesh.cells_) {
        for (int i = dim + 1; i < 4; ++i) {
            c[i] = -1;
        }
    }
    mesh.finalize();
    return mesh;
}

SimplexMesh build_uniform_square(int n)
{
    MWX_REQUIRE(n >= 1, "build_uniform_square: n must be >= 1");
    SimplexMesh mesh;
    mesh.dim_ = 2;
    const int m = n + 1;
    mesh.vertices_.reserve((m * m));
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            mesh.vertices_.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n, 0.0);
        }
    }
    mesh.cells_.reserve((2 * n * n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const Index v00 = j * m + i;
            const Index v10 = v00 + 1;
            const Index v01 = v00 + m;
            const Index v11 = v01 + 1;
            mesh.cells_.push_back({v00, v10, v11, -1});
            mesh.cells_.push_back({v00, v11, v01, -1});
        }
    }
    mesh.finalize();
    return mesh;
}

SimplexMesh build_uniform_cube(int n)
{
    MWX_REQUIRE(n >= 1, "build_uniform_cube: n must be >= 1");
    SimplexMesh mesh;
    mesh.dim_ = 3;
    const int m = n + 1;
    auto id = [m](int i, int j, int k) { return static_cast<Index>((k * m + j) * m + i); };
    mesh.vertices_.reserve((m * m * m));
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i) {
                mesh.vertices_.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n,
                                            static_cast<double>(k) / n);
            }
        }
    }
    constexpr std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    mesh.cells_.reserve((6 * n * n * n));
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                for (const auto& perm : perms) {
                    std::array<int, 3> c{i, j, k};
                    std::array<Index, 4> cell{id(i, j, k), -1, -1, -1};
                    for (int s = 0; s < 3; ++s) {
                        ++c[perm[s]];
                        cell[s + 1] = id(c[0], c[1], c[2]);
                    }
                    mesh.cells_.push_back(cell);
                }
            }
        }
    }
    mesh.finalize();
    return mesh;
}

}  // namespace mwx
