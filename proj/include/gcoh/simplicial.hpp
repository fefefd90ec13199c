#pragma once

#include "gcoh/sparse.hpp"

#include <map>
#include <string>
#include <vector>

namespace gcoh {

/// Sorted list of simplex ids forming a subcomplex (closed under faces).
using Subcomplex = std::vector<int>;

/// Finite abstract simplicial complex. Vertices are globally ordered by index, which fixes orientations;
/// simplices are stored as ascending vertex lists, ordered by dimension and then lexicographically.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Downward closure of the given facets (names index `vertex_names`).
    static SimplicialComplex from_facets(std::vector<std::string> vertex_names, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex point();

    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    int num_simplices() const { return static_cast<int>(simplices_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<int>& simplex(int id) const { return simplices_.at(id); }
    int simplex_dim(int id) const { return static_cast<int>(simplices_.at(id).size()) - 1; }
    /// Ids of all k-simplices, ascending.
    const std::vector<int>& simplices_of_dim(int k) const;
    /// Position of a simplex inside simplices_of_dim(its dimension).
    int position(int id) const { return position_.at(id); }
    /// -1 if absent.
    int find(const std::vector<int>& vertices) const;
    int vertex_index(const std::string& name) const;
    /// Face obtained by deleting vertex j (j = 0..k).
    int face(int id, int j) const;
    std::string simplex_name(int id) const;
    Subcomplex all() const;

    /// Closure of a set of simplex ids.
    Subcomplex closure(const std::vector<int>& ids) const;
    /// Closed star of a vertex.
    Subcomplex closed_star(int vertex) const;
    bool is_subcomplex(const Subcomplex& s) const;

    /// Coboundary C^k -> C^{k+1} on all simplices: (dc)(tau) = sum_j (-1)^j c(tau minus vertex j).
    SparseMatrix coboundary(int k) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::vector<int>> simplices_;
    std::vector<std::vector<int>> by_dim_;
    std::vector<int> position_;
    std::map<std::vector<int>, int> index_;
};

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b);
Subcomplex unite(const Subcomplex& a, const Subcomplex& b);

/// Boundary of the n-simplex on vertices v0..vn.
SimplicialComplex simplex_boundary(int n);
/// The full n-simplex.
SimplicialComplex full_simplex(int n);

/// Barycentric subdivision. The vertex of sd(K) for a simplex s of K is named after s
/// ("v0" for a vertex, "v0+v1" for an edge, ...); original vertices keep their names and come first.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

struct Patch {
    std::string name;
    Subcomplex simplices;
};

struct Cover {
    SimplicialComplex complex;
    std::vector<Patch> patches;

    int size() const { return static_cast<int>(patches.size()); }
    int patch_index(const std::string& name) const;
};

/// Violations: patches not subcomplexes, empty patches, union not the whole complex.
std::vector<std::string> validate_cover(const Cover& cover);

/// Closed stars of the original vertices inside the barycentric subdivision (patches "U<vertex>").
Cover vertex_star_cover(const SimplicialComplex& k);
/// One patch per facet of the complex (closure of the facet).
Cover facet_cover(const SimplicialComplex& k, const std::string& prefix = "F");
Cover single_patch_cover(const SimplicialComplex& k, const std::string& name = "K");
/// Splits patch `index` into two halves along a walk through its facets; the halves are named
/// "<name>a" and "<name>b".
Cover split_patch(const Cover& cover, int index);

/// First coarse patch containing each fine patch (-1 where none does).
std::vector<int> containment_assignment(const Cover& fine, const Cover& coarse);

}  // namespace gcoh
