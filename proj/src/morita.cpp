#include "gcoh/morita.hpp"

#include "gcoh/error.hpp"
#include "gcoh/smith.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>

namespace gcoh {

namespace {

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_names() != b.vertex_names() || a.num_simplices() != b.num_simplices()) return false;
    for (int s = 0; s < a.num_simplices(); ++s)
        if (a.simplex(s) != b.simplex(s)) return false;
    return true;
}

bool contains(const Subcomplex& big, const Subcomplex& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Arrows carried on each simplex.
std::vector<std::vector<int>> arrows_over(const CarriedGroupoid& cg) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(cg.complex.num_simplices()));
    for (int a = 0; a < cg.groupoid.num_arrows(); ++a)
        for (int s : cg.arrow_carrier[a]) out[s].push_back(a);
    return out;
}

std::vector<std::vector<int>> objects_over(const CarriedGroupoid& cg) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(cg.complex.num_simplices()));
    for (int x = 0; x < cg.groupoid.num_objects(); ++x)
        for (int s : cg.object_carrier[x]) out[s].push_back(x);
    return out;
}

// Does [m | diag(relations)] generate Z^rows?
bool generates(const std::vector<std::vector<Integer>>& columns, const std::vector<Integer>& relations, int rows) {
    if (rows == 0) return true;
    int cols = static_cast<int>(columns.size() + relations.size());
    IntegerMatrix m(rows, cols);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (int r = 0; r < rows; ++r) m(r, static_cast<int>(c)) = columns[c][r];
    for (std::size_t i = 0; i < relations.size(); ++i) m(static_cast<int>(i), static_cast<int>(columns.size() + i)) = relations[i];
    auto s = snf(m);
    if (s.rank != rows) return false;
    for (const auto& e : s.invariants())
        if (e != 1) return false;
    return true;
}

Integer square_determinant(const std::vector<std::vector<Integer>>& columns, int rows) {
    IntegerMatrix m(rows, rows);
    for (int c = 0; c < rows; ++c)
        for (int r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    return determinant(m);
}

std::vector<Integer> integer_coordinates(const ClassCoordinates& c, bool with_torsion) {
    std::vector<Integer> out;
    if (with_torsion) out = c.torsion;
    for (const auto& v : c.free) {
        if (!is_integral(v)) throw std::logic_error("free coordinate of an integral class is not an integer");
        out.push_back(as_integer(v));
    }
    return out;
}

}  // namespace

std::vector<std::string> validate_morita(const CarriedGroupoid& source, const CarriedGroupoid& target,
                                         const GroupoidMorphism& f) {
    auto out = validate_morphism(source.groupoid, target.groupoid, f);
    if (!out.empty()) return out;
    if (!same_complex(source.complex, target.complex)) return {"source and target live over different complexes"};
    const auto& g = source.groupoid;
    const auto& h = target.groupoid;
    for (int x = 0; x < g.num_objects(); ++x)
        if (!contains(target.object_carrier[f.object_map[x]], source.object_carrier[x]))
            out.push_back("object " + g.objects[x] + " is not carried inside its image");
    for (int a = 0; a < g.num_arrows(); ++a)
        if (!contains(target.arrow_carrier[f.arrow_map[a]], source.arrow_carrier[a]))
            out.push_back("arrow " + g.arrows[a].id + " is not carried inside its image");
    if (!out.empty()) return out;

    auto src_arrows = arrows_over(source), tgt_arrows = arrows_over(target);
    auto src_objects = objects_over(source), tgt_objects = objects_over(target);
    const auto& k = source.complex;
    for (int s = 0; s < k.num_simplices() && out.size() < 20; ++s) {
        std::map<std::pair<int, int>, std::vector<int>> fibers;
        for (int a : tgt_arrows[s]) fibers[{h.source(a), h.target(a)}].push_back(a);
        std::map<std::pair<int, int>, std::vector<int>> images;
        for (int a : src_arrows[s]) images[{g.source(a), g.target(a)}].push_back(f.arrow_map[a]);
        for (int x : src_objects[s])
            for (int y : src_objects[s]) {
                auto img = images[{x, y}];
                std::sort(img.begin(), img.end());
                auto expected = fibers[{f.object_map[x], f.object_map[y]}];
                std::sort(expected.begin(), expected.end());
                if (img != expected)
                    out.push_back("not cartesian over " + k.simplex_name(s) + ": arrows " + g.objects[x] + " -> " +
                                  g.objects[y] + " do not match arrows " + h.objects[f.object_map[x]] + " -> " +
                                  h.objects[f.object_map[y]]);
            }
        for (int y : tgt_objects[s]) {
            bool reached = false;
            for (int x : src_objects[s])
                if (!fibers[{f.object_map[x], y}].empty()) reached = true;
            if (!reached) out.push_back("object " + h.objects[y] + " is not reached over " + k.simplex_name(s));
        }
    }
    return out;
}

std::vector<SparseMatrix> pullback_map(const TotalComplex& target, const TotalComplex& source, const GroupoidMorphism& f) {
    if (!same_complex(source.base().complex, target.base().complex))
        throw InputError("source and target live over different complexes");
    int top = std::min(target.top_degree(), source.top_degree());
    std::vector<SparseMatrix> maps;
    for (int n = 0; n <= top; ++n) {
        std::vector<Triplet> entries;
        const auto& cells = source.cells(n);
        for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
            const auto& c = cells[i];
            const auto& tuple = source.nerve().levels[c.p].cells[c.nerve];
            auto image = map_cell(f, tuple, c.p);
            const auto& level = target.nerve().levels.at(c.p);
            auto it = level.lookup.find(image);
            int j = it == level.lookup.end() ? -1 : target.index_of(c.p, it->second, c.simplex);
            if (j < 0) throw InputError("morphism does not respect carriers at " + source.cell_label(n, i));
            entries.push_back({i, j, 1});
        }
        maps.push_back(SparseMatrix::from_triplets(source.dim(n), target.dim(n), entries));
    }
    return maps;
}

std::vector<std::string> check_chain_map(const TotalComplex& target, const TotalComplex& source,
                                         const std::vector<SparseMatrix>& maps) {
    std::vector<std::string> out;
    for (int n = 0; n + 1 < static_cast<int>(maps.size()); ++n) {
        auto lhs = source.delta(n) * maps[n];
        auto rhs = maps[n + 1] * target.delta(n);
        if (!(lhs + rhs.scaled(-1)).is_zero()) out.push_back("pullback does not commute with delta in degree " + std::to_string(n));
    }
    return out;
}

std::vector<DegreeVerdict> verify_invariance(const TotalComplex& target, const TotalComplex& source,
                                             const GroupoidMorphism& f, const Coeff& coeff, int max_degree) {
    if (coeff.kind == Coeff::Kind::Zmod) throw InputError("invariance verdicts are available for Z, Q and QmodZ");
    auto maps = pullback_map(target, source, f);
    auto broken = check_chain_map(target, source, maps);
    if (!broken.empty()) throw std::logic_error(broken.front());
    std::vector<DegreeVerdict> out;
    for (int n = 0; n <= max_degree; ++n) {
        require_exact_degree(target, n);
        require_exact_degree(source, n);
        DegreeVerdict v;
        v.degree = n;
        v.target_group = target.engine().cohomology(n, coeff);
        v.source_group = source.engine().cohomology(n, coeff);
        const auto& te = target.engine();
        const auto& se = source.engine();
        if (!(v.target_group == v.source_group)) {
            v.reason = "groups differ";
            out.push_back(v);
            continue;
        }
        switch (coeff.kind) {
            case Coeff::Kind::Z: {
                std::vector<std::vector<Integer>> cols;
                for (const auto& g : te.integral_generators(n))
                    cols.push_back(integer_coordinates(se.coordinates(n, maps[n].apply(g), coeff), true));
                int rows = static_cast<int>(v.source_group.torsion.size()) + v.source_group.rank;
                v.isomorphism = generates(cols, v.source_group.torsion, rows);
                v.reason = v.isomorphism ? "pullback is onto between equal groups" : "pullback is not onto";
                break;
            }
            case Coeff::Kind::Q: {
                std::vector<std::vector<Integer>> cols;
                for (const auto& g : te.circle_free_generators(n))
                    cols.push_back(integer_coordinates(se.coordinates(n, maps[n].apply(g), coeff), false));
                v.isomorphism = v.source_group.rank == 0 || square_determinant(cols, v.source_group.rank) != 0;
                v.reason = v.isomorphism ? "free block has nonzero determinant" : "free block is singular";
                break;
            }
            case Coeff::Kind::QmodZ: {
                std::vector<std::vector<Integer>> free_cols;
                for (const auto& g : te.circle_free_generators(n))
                    free_cols.push_back(integer_coordinates(se.coordinates(n, maps[n].apply(g), Coeff::Z()), false));
                Integer det = v.source_group.rank == 0 ? Integer(1) : square_determinant(free_cols, v.source_group.rank);
                std::vector<std::vector<Integer>> torsion_cols;
                for (const auto& g : te.circle_torsion_generators(n))
                    torsion_cols.push_back(se.coordinates(n, maps[n].apply(g), coeff).torsion);
                bool onto = generates(torsion_cols, v.source_group.torsion, static_cast<int>(v.source_group.torsion.size()));
                v.isomorphism = abs(det) == 1 && onto;
                v.reason = abs(det) != 1 ? "free block is not unimodular"
                           : onto        ? "free block unimodular and torsion map bijective"
                                         : "torsion map is not bijective";
                break;
            }
            case Coeff::Kind::Zmod:
                break;
        }
        out.push_back(v);
    }
    return out;
}

GroupoidMorphism refinement_morphism(const Cover& fine, const Cover& coarse, const std::vector<int>& assignment) {
    if (!same_complex(fine.complex, coarse.complex)) throw InputError("covers live over different complexes");
    if (static_cast<int>(assignment.size()) != fine.size()) throw InputError("assignment must name one coarse patch per fine patch");
    for (int i = 0; i < fine.size(); ++i) {
        int a = assignment[i];
        if (a < 0 || a >= coarse.size() || !contains(coarse.patches[a].simplices, fine.patches[i].simplices)) {
            nlohmann::json detail{{"fine", fine.patches[i].name}, {"coarse", a >= 0 && a < coarse.size() ? coarse.patches[a].name : "?"}};
            throw MathError(MathErrorKind::NotARefinement,
                            "patch " + fine.patches[i].name + " is not contained in its assigned coarse patch", detail.dump());
        }
    }
    GroupoidMorphism f;
    f.object_map = assignment;
    int m = fine.size(), mc = coarse.size();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) f.arrow_map.push_back(assignment[a] * mc + assignment[b]);
    return f;
}

}  // namespace gcoh
