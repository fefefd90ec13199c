#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gcoh {

struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;
};

/// A finite groupoid with composition in diagrammatic order:
/// compose(g, h) is defined iff target(g) == source(h), and goes from source(g) to target(h).
struct FiniteGroupoid {
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    /// compose_table[g * arrows.size() + h], -1 where undefined.
    std::vector<int> compose_table;
    std::vector<int> identity;  // per object
    std::vector<int> inverse;   // per arrow

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }
    int source(int g) const { return arrows.at(g).source; }
    int target(int g) const { return arrows.at(g).target; }
    /// Throws std::out_of_range if the pair is not composable.
    int compose(int g, int h) const;
    bool composable(int g, int h) const { return target(g) == source(h); }

    int object_index(const std::string& id) const;
    int arrow_index(const std::string& id) const;
    bool is_one_object() const { return objects.size() == 1; }
};

/// Builds a groupoid from its composition law and fills identity/inverse maps where the law provides them.
/// `law(g, h)` is only called on composable pairs and may return -1.
FiniteGroupoid make_groupoid(std::vector<std::string> objects, std::vector<Arrow> arrows,
                             const std::function<int(int, int)>& law);

/// Violated axioms, empty iff the groupoid is valid.
std::vector<std::string> validate_groupoid(const FiniteGroupoid& g);

struct NerveLevel {
    int p = 0;
    /// p = 0: one-element tuples holding an object; p >= 1: composable arrow tuples.
    std::vector<std::vector<int>> cells;
    /// faces[i][cell] = index of d_i(cell) in level p-1 (empty for p = 0).
    std::vector<std::vector<int>> faces;

    int size() const { return static_cast<int>(cells.size()); }
    int index_of(const std::vector<int>& cell) const;
    std::map<std::vector<int>, int> lookup;
};

/// d_i of a nerve cell: d_0 drops the first arrow, d_p drops the last, inner faces compose neighbours.
std::vector<int> face_of(const FiniteGroupoid& g, const std::vector<int>& cell, int p, int i);

/// Levels 0..p_max of the nerve; `keep` (applied to levels >= 1) prunes cells and must be
/// closed under faces.
std::vector<NerveLevel> build_nerve(const FiniteGroupoid& g, int p_max,
                                    const std::function<bool(const std::vector<int>&)>& keep = {});

NerveLevel nerve(const FiniteGroupoid& g, int p);

/// Violations of d_i d_j = d_{j-1} d_i (i < j) between consecutive levels.
std::vector<std::string> check_simplicial_identities(const std::vector<NerveLevel>& levels);

struct GroupoidMorphism {
    std::vector<int> object_map;
    std::vector<int> arrow_map;
};

std::vector<std::string> validate_morphism(const FiniteGroupoid& source, const FiniteGroupoid& target,
                                           const GroupoidMorphism& f);
GroupoidMorphism identity_morphism(const FiniteGroupoid& g);

/// Image of a nerve cell under f (arrow-wise; object-wise at p = 0).
std::vector<int> map_cell(const GroupoidMorphism& f, const std::vector<int>& cell, int p);

FiniteGroupoid trivial_groupoid();
FiniteGroupoid cyclic_group(int n);
FiniteGroupoid klein_four();
FiniteGroupoid symmetric_group3();
FiniteGroupoid pair_groupoid(int m);
/// One-object groupoid from a multiplication table on named elements; element 0 must be the unit.
FiniteGroupoid group_from_table(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table);

/// act[h][x] = h . x. Validity: act(compose(h,k), x) == act(k, act(h, x)) and identity acts trivially.
std::vector<std::string> validate_action(const FiniteGroupoid& group, const std::vector<std::string>& points,
                                         const std::vector<std::vector<int>>& act);
/// Arrows "h@x": x -> h.x. Throws InputError on an invalid action.
FiniteGroupoid action_groupoid(const FiniteGroupoid& group, const std::vector<std::string>& points,
                               const std::vector<std::vector<int>>& act);

/// Connected components with the isotropy group order at a representative object.
struct ComponentSummary {
    std::vector<int> objects;
    int isotropy_order = 0;
};
std::vector<ComponentSummary> skeleton(const FiniteGroupoid& g);

}  // namespace gcoh
