#include "gcoh/groupoid.hpp"

#include "gcoh/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gcoh {

namespace {

std::string cell_name(const FiniteGroupoid& g, const std::vector<int>& cell, int p) {
    if (p == 0) return g.objects.at(cell.at(0));
    std::string out = "(";
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i) out += ",";
        out += g.arrows.at(cell[i]).id;
    }
    return out + ")";
}

}  // namespace

int FiniteGroupoid::compose(int g, int h) const {
    if (!composable(g, h))
        throw std::out_of_range("arrows " + arrows.at(g).id + " and " + arrows.at(h).id + " are not composable");
    int out = compose_table.at(static_cast<std::size_t>(g) * arrows.size() + h);
    if (out < 0) throw std::out_of_range("composition table has no entry for " + arrows[g].id + "," + arrows[h].id);
    return out;
}

int FiniteGroupoid::object_index(const std::string& id) const {
    auto it = std::find(objects.begin(), objects.end(), id);
    if (it == objects.end()) throw InputError("unknown object '" + id + "'");
    return static_cast<int>(it - objects.begin());
}

int FiniteGroupoid::arrow_index(const std::string& id) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[i].id == id) return i;
    throw InputError("unknown arrow '" + id + "'");
}

FiniteGroupoid make_groupoid(std::vector<std::string> objects, std::vector<Arrow> arrows,
                             const std::function<int(int, int)>& law) {
    FiniteGroupoid g;
    g.objects = std::move(objects);
    g.arrows = std::move(arrows);
    int n = g.num_arrows();
    g.compose_table.assign(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.arrows[a].target == g.arrows[b].source) g.compose_table[static_cast<std::size_t>(a) * n + b] = law(a, b);

    auto table = [&](int a, int b) { return g.compose_table[static_cast<std::size_t>(a) * n + b]; };
    g.identity.assign(g.objects.size(), -1);
    for (int x = 0; x < g.num_objects(); ++x) {
        for (int e = 0; e < n && g.identity[x] < 0; ++e) {
            if (g.arrows[e].source != x || g.arrows[e].target != x) continue;
            bool ok = true;
            for (int h = 0; h < n && ok; ++h) {
                if (g.arrows[h].source == x && table(e, h) != h) ok = false;
                if (g.arrows[h].target == x && table(h, e) != h) ok = false;
            }
            if (ok) g.identity[x] = e;
        }
    }
    g.inverse.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        int s = g.arrows[a].source, t = g.arrows[a].target;
        if (g.identity[s] < 0 || g.identity[t] < 0) continue;
        for (int b = 0; b < n; ++b) {
            if (g.arrows[b].source != t || g.arrows[b].target != s) continue;
            if (table(a, b) == g.identity[s] && table(b, a) == g.identity[t]) {
                g.inverse[a] = b;
                break;
            }
        }
    }
    return g;
}

std::vector<std::string> validate_groupoid(const FiniteGroupoid& g) {
    std::vector<std::string> out;
    int n = g.num_arrows(), m = g.num_objects();
    if (m == 0) out.push_back("groupoid has no objects");
    std::set<std::string> ids;
    for (const auto& a : g.arrows) {
        if (!ids.insert(a.id).second) out.push_back("duplicate arrow id " + a.id);
        if (a.source < 0 || a.source >= m || a.target < 0 || a.target >= m)
            out.push_back("arrow " + a.id + " has source or target outside the object set");
    }
    if (!out.empty()) return out;
    if (g.compose_table.size() != static_cast<std::size_t>(n) * n) {
        out.push_back("composition table has the wrong size");
        return out;
    }
    auto table = [&](int a, int b) { return g.compose_table[static_cast<std::size_t>(a) * n + b]; };

    bool closed = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = table(a, b);
            bool composable = g.arrows[a].target == g.arrows[b].source;
            if (composable && (c < 0 || c >= n)) {
                out.push_back("composition undefined for composable pair (" + g.arrows[a].id + "," + g.arrows[b].id + ")");
                closed = false;
            } else if (!composable && c >= 0) {
                out.push_back("composition defined for non-composable pair (" + g.arrows[a].id + "," +
                              g.arrows[b].id + ")");
            } else if (composable &&
                       (g.arrows[c].source != g.arrows[a].source || g.arrows[c].target != g.arrows[b].target)) {
                out.push_back("composite of (" + g.arrows[a].id + "," + g.arrows[b].id + ") has wrong source or target");
                closed = false;
            }
        }
    if (!closed) return out;

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (g.arrows[a].target != g.arrows[b].source) continue;
            int ab = table(a, b);
            for (int c = 0; c < n; ++c) {
                if (g.arrows[b].target != g.arrows[c].source) continue;
                if (table(ab, c) != table(a, table(b, c)))
                    out.push_back("associativity violated at (" + g.arrows[a].id + "," + g.arrows[b].id + "," +
                                  g.arrows[c].id + ")");
            }
        }

    bool identities_ok = g.identity.size() == static_cast<std::size_t>(m);
    for (int x = 0; identities_ok && x < m; ++x) {
        int e = g.identity[x];
        bool ok = e >= 0 && e < n && g.arrows[e].source == x && g.arrows[e].target == x;
        for (int h = 0; ok && h < n; ++h) {
            if (g.arrows[h].source == x && table(e, h) != h) ok = false;
            if (g.arrows[h].target == x && table(h, e) != h) ok = false;
        }
        if (!ok) {
            out.push_back("identity law violated at object " + g.objects[x]);
            identities_ok = false;
        }
    }
    if (!identities_ok) {
        if (g.identity.size() != static_cast<std::size_t>(m)) out.push_back("identity map has the wrong size");
        return out;
    }
    for (int a = 0; a < n; ++a) {
        int inv = a < static_cast<int>(g.inverse.size()) ? g.inverse[a] : -1;
        int s = g.arrows[a].source, t = g.arrows[a].target;
        bool ok = inv >= 0 && inv < n && g.arrows[inv].source == t && g.arrows[inv].target == s &&
                  table(a, inv) == g.identity[s] && table(inv, a) == g.identity[t];
        if (!ok) out.push_back("inverse law violated for arrow " + g.arrows[a].id);
    }
    return out;
}

int NerveLevel::index_of(const std::vector<int>& cell) const {
    auto it = lookup.find(cell);
    if (it == lookup.end()) throw std::out_of_range("cell not present in nerve level");
    return it->second;
}

std::vector<int> face_of(const FiniteGroupoid& g, const std::vector<int>& cell, int p, int i) {
    if (p < 1 || i < 0 || i > p) throw std::out_of_range("face index out of range");
    if (p == 1) return {i == 0 ? g.target(cell[0]) : g.source(cell[0])};
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p - 1));
    if (i == 0) {
        out.assign(cell.begin() + 1, cell.end());
    } else if (i == p) {
        out.assign(cell.begin(), cell.end() - 1);
    } else {
        for (int k = 0; k < p; ++k) {
            if (k == i - 1) {
                out.push_back(g.compose(cell[k], cell[k + 1]));
                ++k;
            } else {
                out.push_back(cell[k]);
            }
        }
    }
    return out;
}

std::vector<NerveLevel> build_nerve(const FiniteGroupoid& g, int p_max,
                                    const std::function<bool(const std::vector<int>&)>& keep) {
    std::vector<NerveLevel> levels;
    NerveLevel zero;
    zero.p = 0;
    for (int x = 0; x < g.num_objects(); ++x) {
        zero.cells.push_back({x});
        zero.lookup[{x}] = x;
    }
    levels.push_back(std::move(zero));
    for (int p = 1; p <= p_max; ++p) {
        NerveLevel level;
        level.p = p;
        const auto& prev = levels.back();
        if (p == 1) {
            for (int a = 0; a < g.num_arrows(); ++a)
                if (!keep || keep({a})) level.cells.push_back({a});
        } else {
            for (const auto& cell : prev.cells) {
                int last = cell.back();
                for (int a = 0; a < g.num_arrows(); ++a) {
                    if (!g.composable(last, a)) continue;
                    std::vector<int> next = cell;
                    next.push_back(a);
                    if (!keep || keep(next)) level.cells.push_back(std::move(next));
                }
            }
        }
        for (int c = 0; c < level.size(); ++c) level.lookup[level.cells[c]] = c;
        level.faces.assign(static_cast<std::size_t>(p + 1), std::vector<int>(level.cells.size()));
        for (int i = 0; i <= p; ++i)
            for (int c = 0; c < level.size(); ++c) level.faces[i][c] = prev.index_of(face_of(g, level.cells[c], p, i));
        levels.push_back(std::move(level));
    }
    return levels;
}

NerveLevel nerve(const FiniteGroupoid& g, int p) {
    if (p < 0) throw InputError("nerve degree must be nonnegative");
    return std::move(build_nerve(g, p).back());
}

std::vector<std::string> check_simplicial_identities(const std::vector<NerveLevel>& levels) {
    std::vector<std::string> out;
    for (std::size_t p = 2; p < levels.size(); ++p) {
        const auto& top = levels[p];
        const auto& mid = levels[p - 1];
        for (int c = 0; c < top.size(); ++c)
            for (int j = 1; j <= static_cast<int>(p); ++j)
                for (int i = 0; i < j; ++i) {
                    int lhs = mid.faces[i][top.faces[j][c]];
                    int rhs = mid.faces[j - 1][top.faces[i][c]];
                    if (lhs != rhs)
                        out.push_back("d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" +
                                      std::to_string(j - 1) + " d_" + std::to_string(i) + " at level " +
                                      std::to_string(p) + " cell " + std::to_string(c));
                }
    }
    return out;
}

std::vector<std::string> validate_morphism(const FiniteGroupoid& source, const FiniteGroupoid& target,
                                           const GroupoidMorphism& f) {
    std::vector<std::string> out;
    if (f.object_map.size() != source.objects.size() || f.arrow_map.size() != source.arrows.size()) {
        out.push_back("morphism maps have the wrong size");
        return out;
    }
    for (int x = 0; x < source.num_objects(); ++x)
        if (f.object_map[x] < 0 || f.object_map[x] >= target.num_objects())
            out.push_back("object " + source.objects[x] + " maps outside the target");
    for (int a = 0; a < source.num_arrows(); ++a)
        if (f.arrow_map[a] < 0 || f.arrow_map[a] >= target.num_arrows())
            out.push_back("arrow " + source.arrows[a].id + " maps outside the target");
    if (!out.empty()) return out;
    for (int a = 0; a < source.num_arrows(); ++a) {
        int fa = f.arrow_map[a];
        if (target.source(fa) != f.object_map[source.source(a)] || target.target(fa) != f.object_map[source.target(a)])
            out.push_back("arrow " + source.arrows[a].id + " does not commute with source/target");
    }
    if (!out.empty()) return out;
    for (int x = 0; x < source.num_objects(); ++x)
        if (f.arrow_map[source.identity[x]] != target.identity[f.object_map[x]])
            out.push_back("identity of " + source.objects[x] + " not preserved");
    for (int a = 0; a < source.num_arrows(); ++a)
        for (int b = 0; b < source.num_arrows(); ++b) {
            if (!source.composable(a, b)) continue;
            if (f.arrow_map[source.compose(a, b)] != target.compose(f.arrow_map[a], f.arrow_map[b]))
                out.push_back("composition of (" + source.arrows[a].id + "," + source.arrows[b].id + ") not preserved");
        }
    return out;
}

GroupoidMorphism identity_morphism(const FiniteGroupoid& g) {
    GroupoidMorphism f;
    f.object_map.resize(g.objects.size());
    f.arrow_map.resize(g.arrows.size());
    std::iota(f.object_map.begin(), f.object_map.end(), 0);
    std::iota(f.arrow_map.begin(), f.arrow_map.end(), 0);
    return f;
}

std::vector<int> map_cell(const GroupoidMorphism& f, const std::vector<int>& cell, int p) {
    std::vector<int> out;
    out.reserve(cell.size());
    for (int x : cell) out.push_back(p == 0 ? f.object_map.at(x) : f.arrow_map.at(x));
    return out;
}

FiniteGroupoid group_from_table(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table) {
    std::vector<Arrow> arrows;
    for (const auto& name : names) arrows.push_back({name, 0, 0});
    return make_groupoid({"*"}, std::move(arrows), [&](int a, int b) { return table.at(a).at(b); });
}

FiniteGroupoid trivial_groupoid() { return group_from_table({"e"}, {{0}}); }

FiniteGroupoid cyclic_group(int n) {
    if (n < 1) throw InputError("cyclic group order must be positive");
    std::vector<std::string> names;
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return group_from_table(names, table);
}

FiniteGroupoid klein_four() {
    std::vector<std::string> names{"00", "10", "01", "11"};
    std::vector<std::vector<int>> table(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) table[a][b] = a ^ b;
    return group_from_table(names, table);
}

FiniteGroupoid symmetric_group3() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> names;
    for (const auto& q : perms) names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> composite(3);
            for (int x = 0; x < 3; ++x) composite[x] = perms[b][perms[a][x]];  // first a, then b
            table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), composite) - perms.begin());
        }
    return group_from_table(names, table);
}

FiniteGroupoid pair_groupoid(int m) {
    if (m < 1) throw InputError("pair groupoid needs at least one object");
    std::vector<std::string> objects;
    for (int i = 0; i < m; ++i) objects.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) arrows.push_back({objects[i] + "|" + objects[j], i, j});
    return make_groupoid(objects, arrows, [m](int a, int b) { return (a / m) * m + (b % m); });
}

std::vector<std::string> validate_action(const FiniteGroupoid& group, const std::vector<std::string>& points,
                                         const std::vector<std::vector<int>>& act) {
    std::vector<std::string> out;
    int np = static_cast<int>(points.size());
    if (!group.is_one_object()) out.push_back("acting groupoid must have exactly one object");
    if (act.size() != group.arrows.size()) {
        out.push_back("action table needs one row per group element");
        return out;
    }
    for (int h = 0; h < group.num_arrows(); ++h) {
        if (static_cast<int>(act[h].size()) != np) {
            out.push_back("action row for " + group.arrows[h].id + " has the wrong length");
            return out;
        }
        for (int x : act[h])
            if (x < 0 || x >= np) {
                out.push_back("action of " + group.arrows[h].id + " leaves the point set");
                return out;
            }
    }
    if (!out.empty()) return out;
    int e = group.identity.at(0);
    for (int x = 0; x < np; ++x)
        if (act[e][x] != x) out.push_back("identity does not act trivially on " + points[x]);
    for (int h = 0; h < group.num_arrows(); ++h)
        for (int k = 0; k < group.num_arrows(); ++k)
            for (int x = 0; x < np; ++x)
                if (act[group.compose(h, k)][x] != act[k][act[h][x]])
                    out.push_back("action law violated for (" + group.arrows[h].id + "," + group.arrows[k].id +
                                  ") at " + points[x]);
    return out;
}

FiniteGroupoid action_groupoid(const FiniteGroupoid& group, const std::vector<std::string>& points,
                               const std::vector<std::vector<int>>& act) {
    auto problems = validate_action(group, points, act);
    if (!problems.empty()) throw InputError("invalid group action: " + problems.front());
    int np = static_cast<int>(points.size());
    std::vector<Arrow> arrows;
    for (int h = 0; h < group.num_arrows(); ++h)
        for (int x = 0; x < np; ++x) arrows.push_back({group.arrows[h].id + "@" + points[x], x, act[h][x]});
    return make_groupoid(points, arrows, [&](int a, int b) {
        int h = a / np, x = a % np, k = b / np;
        return group.compose(h, k) * np + x;
    });
}

std::vector<ComponentSummary> skeleton(const FiniteGroupoid& g) {
    std::vector<int> comp(g.objects.size(), -1);
    std::vector<ComponentSummary> out;
    for (int x = 0; x < g.num_objects(); ++x) {
        if (comp[x] >= 0) continue;
        ComponentSummary summary;
        int id = static_cast<int>(out.size());
        for (const auto& a : g.arrows)
            if (a.source == x) comp[a.target] = id;
        comp[x] = id;
        for (int y = 0; y < g.num_objects(); ++y)
            if (comp[y] == id) summary.objects.push_back(y);
        for (const auto& a : g.arrows)
            if (a.source == x && a.target == x) ++summary.isotropy_order;
        out.push_back(std::move(summary));
    }
    return out;
}

}  // namespace gcoh
