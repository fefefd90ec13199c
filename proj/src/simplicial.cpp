#include "gcoh/simplicial.hpp"

#include "gcoh/error.hpp"

#include <algorithm>
#include <set>

namespace gcoh {

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_names,
                                                 const std::vector<std::vector<int>>& facets) {
    SimplicialComplex k;
    k.vertex_names_ = std::move(vertex_names);
    int nv = k.num_vertices();
    std::set<std::vector<int>> all;
    for (int v = 0; v < nv; ++v) all.insert({v});
    for (auto facet : facets) {
        std::sort(facet.begin(), facet.end());
        if (facet.empty()) throw InputError("empty facet");
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end()) throw InputError("facet repeats a vertex");
        for (int v : facet)
            if (v < 0 || v >= nv) throw InputError("facet refers to an unknown vertex");
        if (facet.size() > 20) throw InputError("facet dimension too large");
        std::size_t n = facet.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(facet[i]);
            all.insert(std::move(face));
        }
    }
    std::vector<std::vector<int>> sorted(all.begin(), all.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (auto& s : sorted) {
        int id = static_cast<int>(k.simplices_.size());
        int dim = static_cast<int>(s.size()) - 1;
        if (static_cast<int>(k.by_dim_.size()) <= dim) k.by_dim_.resize(static_cast<std::size_t>(dim + 1));
        k.position_.push_back(static_cast<int>(k.by_dim_[dim].size()));
        k.by_dim_[dim].push_back(id);
        k.index_[s] = id;
        k.simplices_.push_back(std::move(s));
    }
    return k;
}

SimplicialComplex SimplicialComplex::point() { return from_facets({"pt"}, {{0}}); }

const std::vector<int>& SimplicialComplex::simplices_of_dim(int k) const {
    static const std::vector<int> none;
    if (k < 0 || k >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[k];
}

int SimplicialComplex::find(const std::vector<int>& vertices) const {
    auto it = index_.find(vertices);
    return it == index_.end() ? -1 : it->second;
}

int SimplicialComplex::vertex_index(const std::string& name) const {
    auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
    if (it == vertex_names_.end()) throw InputError("unknown vertex '" + name + "'");
    return static_cast<int>(it - vertex_names_.begin());
}

int SimplicialComplex::face(int id, int j) const {
    std::vector<int> f = simplices_.at(id);
    f.erase(f.begin() + j);
    return index_.at(f);
}

std::string SimplicialComplex::simplex_name(int id) const {
    std::string out = "[";
    const auto& s = simplices_.at(id);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += vertex_names_[s[i]];
    }
    return out + "]";
}

Subcomplex SimplicialComplex::all() const {
    Subcomplex out(simplices_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
}

Subcomplex SimplicialComplex::closure(const std::vector<int>& ids) const {
    std::set<int> out;
    std::vector<int> stack(ids.begin(), ids.end());
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        if (!out.insert(id).second) continue;
        int k = simplex_dim(id);
        if (k == 0) continue;
        for (int j = 0; j <= k; ++j) stack.push_back(face(id, j));
    }
    return Subcomplex(out.begin(), out.end());
}

Subcomplex SimplicialComplex::closed_star(int vertex) const {
    std::vector<int> containing;
    for (int id = 0; id < num_simplices(); ++id) {
        const auto& s = simplices_[id];
        if (std::binary_search(s.begin(), s.end(), vertex)) containing.push_back(id);
    }
    return closure(containing);
}

bool SimplicialComplex::is_subcomplex(const Subcomplex& s) const {
    if (!std::is_sorted(s.begin(), s.end())) return false;
    for (int id : s) {
        if (id < 0 || id >= num_simplices()) return false;
        int k = simplex_dim(id);
        if (k == 0) continue;
        for (int j = 0; j <= k; ++j)
            if (!std::binary_search(s.begin(), s.end(), face(id, j))) return false;
    }
    return true;
}

SparseMatrix SimplicialComplex::coboundary(int k) const {
    const auto& src = simplices_of_dim(k);
    const auto& dst = simplices_of_dim(k + 1);
    std::vector<Triplet> trips;
    for (int id : dst)
        for (int j = 0; j <= k + 1; ++j)
            trips.push_back({position(id), position(face(id, j)), (j % 2 == 0) ? 1 : -1});
    return SparseMatrix::from_triplets(static_cast<int>(dst.size()), static_cast<int>(src.size()), trips);
}

Subcomplex intersect(const Subcomplex& a, const Subcomplex& b) {
    Subcomplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Subcomplex unite(const Subcomplex& a, const Subcomplex& b) {
    Subcomplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

std::vector<std::string> numbered_vertices(int count) {
    std::vector<std::string> names;
    for (int i = 0; i < count; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

}  // namespace

SimplicialComplex simplex_boundary(int n) {
    if (n < 1) throw InputError("simplex boundary needs dimension >= 1");
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> f;
        for (int v = 0; v <= n; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(numbered_vertices(n + 1), facets);
}

SimplicialComplex full_simplex(int n) {
    if (n < 0) throw InputError("simplex dimension must be nonnegative");
    std::vector<int> all(static_cast<std::size_t>(n + 1));
    for (int v = 0; v <= n; ++v) all[v] = v;
    return SimplicialComplex::from_facets(numbered_vertices(n + 1), {all});
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    std::vector<std::string> names;
    for (int id = 0; id < k.num_simplices(); ++id) {
        const auto& s = k.simplex(id);
        std::string name;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) name += "+";
            name += k.vertex_names()[s[i]];
        }
        names.push_back(name);
    }
    // Facets of sd(K): maximal flags, built by extending chains down from each simplex.
    std::vector<std::vector<int>> flags;
    std::vector<std::vector<int>> stack;
    for (int id = 0; id < k.num_simplices(); ++id) stack.push_back({id});
    while (!stack.empty()) {
        auto chain = stack.back();
        stack.pop_back();
        int bottom = chain.back();
        int dim = k.simplex_dim(bottom);
        if (dim == 0) {
            flags.push_back(chain);
            continue;
        }
        for (int j = 0; j <= dim; ++j) {
            auto next = chain;
            next.push_back(k.face(bottom, j));
            stack.push_back(std::move(next));
        }
    }
    return SimplicialComplex::from_facets(names, flags);
}

int Cover::patch_index(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (patches[i].name == name) return i;
    throw InputError("unknown patch '" + name + "'");
}

std::vector<std::string> validate_cover(const Cover& cover) {
    std::vector<std::string> out;
    Subcomplex covered;
    std::set<std::string> names;
    for (const auto& patch : cover.patches) {
        if (!names.insert(patch.name).second) out.push_back("duplicate patch name " + patch.name);
        if (patch.simplices.empty()) out.push_back("patch " + patch.name + " is empty");
        if (!cover.complex.is_subcomplex(patch.simplices)) out.push_back("patch " + patch.name + " is not a subcomplex");
        covered = unite(covered, patch.simplices);
    }
    if (static_cast<int>(covered.size()) != cover.complex.num_simplices()) out.push_back("cover does not cover the complex");
    return out;
}

Cover vertex_star_cover(const SimplicialComplex& k) {
    Cover cover;
    cover.complex = barycentric_subdivision(k);
    for (int v = 0; v < k.num_vertices(); ++v) {
        // Original vertex v is vertex v of the subdivision.
        cover.patches.push_back({"U" + k.vertex_names()[v], cover.complex.closed_star(v)});
    }
    return cover;
}

namespace {

std::vector<int> facets_of(const SimplicialComplex& k, const Subcomplex& s) {
    std::vector<int> out;
    for (int id : s) {
        bool maximal = true;
        for (int other : s) {
            if (k.simplex_dim(other) != k.simplex_dim(id) + 1) continue;
            const auto& big = k.simplex(other);
            const auto& small = k.simplex(id);
            if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(id);
    }
    return out;
}

}  // namespace

Cover facet_cover(const SimplicialComplex& k, const std::string& prefix) {
    Cover cover;
    cover.complex = k;
    auto facets = facets_of(k, k.all());
    for (std::size_t i = 0; i < facets.size(); ++i)
        cover.patches.push_back({prefix + std::to_string(i), k.closure({facets[i]})});
    return cover;
}

Cover single_patch_cover(const SimplicialComplex& k, const std::string& name) {
    Cover cover;
    cover.complex = k;
    cover.patches.push_back({name, k.all()});
    return cover;
}

Cover split_patch(const Cover& cover, int index) {
    const auto& k = cover.complex;
    const auto& patch = cover.patches.at(index);
    auto facets = facets_of(k, patch.simplices);
    if (facets.size() < 2) throw InputError("patch " + patch.name + " has a single facet and cannot be split");
    auto adjacent = [&](int a, int b) {
        const auto& x = k.simplex(a);
        const auto& y = k.simplex(b);
        std::vector<int> common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        return common.size() + 1 == std::max(x.size(), y.size()) && x.size() == y.size();
    };
    std::vector<int> walk{facets[0]};
    std::vector<char> used(facets.size(), 0);
    used[0] = 1;
    while (walk.size() < facets.size()) {
        int next = -1;
        for (std::size_t i = 0; i < facets.size() && next < 0; ++i)
            if (!used[i] && adjacent(walk.back(), facets[i])) next = static_cast<int>(i);
        for (std::size_t i = 0; i < facets.size() && next < 0; ++i)
            if (!used[i]) next = static_cast<int>(i);
        used[next] = 1;
        walk.push_back(facets[next]);
    }
    std::size_t half = (walk.size() + 1) / 2;
    Cover out;
    out.complex = k;
    for (int i = 0; i < cover.size(); ++i) {
        if (i != index) {
            out.patches.push_back(cover.patches[i]);
            continue;
        }
        out.patches.push_back({patch.name + "a", k.closure(std::vector<int>(walk.begin(), walk.begin() + half))});
        out.patches.push_back({patch.name + "b", k.closure(std::vector<int>(walk.begin() + half, walk.end()))});
    }
    return out;
}

std::vector<int> containment_assignment(const Cover& fine, const Cover& coarse) {
    std::vector<int> out;
    for (const auto& f : fine.patches) {
        int found = -1;
        for (int c = 0; c < coarse.size() && found < 0; ++c)
            if (std::includes(coarse.patches[c].simplices.begin(), coarse.patches[c].simplices.end(),
                              f.simplices.begin(), f.simplices.end()))
                found = c;
        out.push_back(found);
    }
    return out;
}

}  // namespace gcoh
