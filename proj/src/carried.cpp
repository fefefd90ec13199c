#include "gcoh/carried.hpp"

#include "gcoh/error.hpp"

#include <algorithm>
#include <map>

namespace gcoh {

namespace {

bool contains(const Subcomplex& big, const Subcomplex& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

int CarriedGroupoid::pair_arrow(int a, int b) const {
    if (regime != Regime::Cech) throw InputError("patch arrows only exist in the Cech regime");
    int m = groupoid.num_objects();
    return a * m + b;
}

std::string CarriedGroupoid::regime_name() const {
    switch (regime) {
        case Regime::Finite: return "finite";
        case Regime::Cech: return "cech";
        case Regime::Constant: return "constant";
    }
    return "?";
}

CarriedGroupoid carried_finite(const FiniteGroupoid& g) {
    CarriedGroupoid cg;
    cg.regime = CarriedGroupoid::Regime::Finite;
    cg.groupoid = g;
    cg.complex = SimplicialComplex::point();
    cg.object_carrier.assign(g.objects.size(), Subcomplex{0});
    cg.arrow_carrier.assign(g.arrows.size(), Subcomplex{0});
    return cg;
}

CarriedGroupoid cech_groupoid(const Cover& cover) {
    auto problems = validate_cover(cover);
    if (!problems.empty()) throw InputError("invalid cover: " + problems.front());
    CarriedGroupoid cg;
    cg.regime = CarriedGroupoid::Regime::Cech;
    int m = cover.size();
    std::vector<std::string> objects;
    for (const auto& p : cover.patches) objects.push_back(p.name);
    std::vector<Arrow> arrows;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) arrows.push_back({objects[a] + "|" + objects[b], a, b});
    cg.groupoid = make_groupoid(objects, arrows, [m](int x, int y) { return (x / m) * m + (y % m); });
    cg.complex = cover.complex;
    for (const auto& p : cover.patches) cg.object_carrier.push_back(p.simplices);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            cg.arrow_carrier.push_back(intersect(cover.patches[a].simplices, cover.patches[b].simplices));
    cg.cover = cover;
    return cg;
}

CarriedGroupoid constant_product(const FiniteGroupoid& g, const SimplicialComplex& k) {
    CarriedGroupoid cg;
    cg.regime = CarriedGroupoid::Regime::Constant;
    cg.groupoid = g;
    cg.complex = k;
    cg.object_carrier.assign(g.objects.size(), k.all());
    cg.arrow_carrier.assign(g.arrows.size(), k.all());
    return cg;
}

std::vector<std::string> validate_carriers(const CarriedGroupoid& cg) {
    std::vector<std::string> out = validate_groupoid(cg.groupoid);
    if (!out.empty()) return out;
    const auto& g = cg.groupoid;
    if (cg.object_carrier.size() != g.objects.size() || cg.arrow_carrier.size() != g.arrows.size()) {
        out.push_back("carrier lists have the wrong size");
        return out;
    }
    for (int x = 0; x < g.num_objects(); ++x) {
        if (!cg.complex.is_subcomplex(cg.object_carrier[x])) out.push_back("carrier of " + g.objects[x] + " is not a subcomplex");
        if (cg.object_carrier[x].empty()) out.push_back("carrier of " + g.objects[x] + " is empty");
        if (cg.arrow_carrier[g.identity[x]] != cg.object_carrier[x])
            out.push_back("identity of " + g.objects[x] + " is not carried like its object");
    }
    for (int a = 0; a < g.num_arrows(); ++a) {
        const auto& c = cg.arrow_carrier[a];
        if (!cg.complex.is_subcomplex(c)) out.push_back("carrier of " + g.arrows[a].id + " is not a subcomplex");
        if (!contains(cg.object_carrier[g.source(a)], c) || !contains(cg.object_carrier[g.target(a)], c))
            out.push_back("carrier of " + g.arrows[a].id + " leaves its source or target carrier");
        if (cg.arrow_carrier[g.inverse[a]] != c) out.push_back("inverse of " + g.arrows[a].id + " carried differently");
    }
    for (int a = 0; a < g.num_arrows(); ++a)
        for (int b = 0; b < g.num_arrows(); ++b) {
            if (!g.composable(a, b)) continue;
            if (!contains(cg.arrow_carrier[g.compose(a, b)], intersect(cg.arrow_carrier[a], cg.arrow_carrier[b])))
                out.push_back("composite of (" + g.arrows[a].id + "," + g.arrows[b].id + ") not carried on the overlap");
        }
    return out;
}

std::vector<std::string> check_banal(const CarriedGroupoid& cg) {
    std::vector<std::string> out;
    const auto& g = cg.groupoid;
    for (int s = 0; s < cg.complex.num_simplices(); ++s) {
        std::map<std::pair<int, int>, int> count;
        for (int a = 0; a < g.num_arrows(); ++a)
            if (std::binary_search(cg.arrow_carrier[a].begin(), cg.arrow_carrier[a].end(), s))
                ++count[{g.source(a), g.target(a)}];
        for (int x = 0; x < g.num_objects(); ++x) {
            if (!std::binary_search(cg.object_carrier[x].begin(), cg.object_carrier[x].end(), s)) continue;
            for (int y = 0; y < g.num_objects(); ++y) {
                if (!std::binary_search(cg.object_carrier[y].begin(), cg.object_carrier[y].end(), s)) continue;
                int c = count[{x, y}];
                if (c != 1)
                    out.push_back("over simplex " + cg.complex.simplex_name(s) + ": " + std::to_string(c) + " arrows " +
                                  g.objects[x] + " -> " + g.objects[y]);
            }
        }
    }
    return out;
}

CarriedNerve carried_nerve(const CarriedGroupoid& cg, int p_max, std::size_t cell_budget) {
    const auto& g = cg.groupoid;
    std::size_t seen = static_cast<std::size_t>(g.num_objects());
    std::map<std::vector<int>, Subcomplex> carrier_of;
    auto keep = [&](const std::vector<int>& cell) {
        Subcomplex c;
        if (cell.size() == 1) {
            c = cg.arrow_carrier[cell[0]];
        } else {
            std::vector<int> prefix(cell.begin(), cell.end() - 1);
            auto it = carrier_of.find(prefix);
            if (it == carrier_of.end()) return false;
            c = intersect(it->second, cg.arrow_carrier[cell.back()]);
        }
        if (c.empty()) return false;
        if (++seen > cell_budget) throw SizeGuardExceeded(seen, cell_budget);
        carrier_of.emplace(cell, std::move(c));
        return true;
    };
    CarriedNerve out;
    out.levels = build_nerve(g, p_max, keep);
    out.carriers.resize(out.levels.size());
    for (int x = 0; x < g.num_objects(); ++x) out.carriers[0].push_back(cg.object_carrier[x]);
    for (std::size_t p = 1; p < out.levels.size(); ++p)
        for (const auto& cell : out.levels[p].cells) out.carriers[p].push_back(carrier_of.at(cell));
    return out;
}

}  // namespace gcoh
