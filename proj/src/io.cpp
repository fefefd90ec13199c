#include "gcoh/io.hpp"

#include "gcoh/error.hpp"
#include "gcoh/fixtures.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace gcoh {

namespace fs = std::filesystem;

namespace {

const Json& field(const Json& doc, const char* name) {
    if (!doc.is_object() || !doc.contains(name)) throw InputError(std::string("missing field '") + name + "'");
    return doc.at(name);
}

std::string text(const Json& v, const char* what) {
    if (!v.is_string()) throw InputError(std::string(what) + " must be a string");
    return v.get<std::string>();
}

int integer(const Json& v, const char* what) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return v.get<int>();
}

std::vector<std::string> strings(const Json& v, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : v) out.push_back(text(e, what));
    return out;
}

void expect_kind(const Json& doc, const std::string& kind) {
    if (!doc.is_object()) throw InputError("expected a JSON object of kind '" + kind + "'");
    if (doc.contains("kind") && doc.at("kind") != kind)
        throw InputError("expected kind '" + kind + "', got " + doc.at("kind").dump());
}

Rational value_of(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (!v.is_string()) throw InputError("values must be integers or strings \"a/b\" / \"a/b mod 1\"");
    auto s = v.get<std::string>();
    if (s.find("mod") != std::string::npos) return parse_circle(s);
    return parse_rational(s);
}

int parse_suffix(const std::string& s, const std::string& prefix) {
    try {
        return std::stoi(s.substr(prefix.size()));
    } catch (const std::exception&) {
        throw InputError("bad builtin '" + s + "'");
    }
}

FiniteGroupoid builtin_groupoid(const std::string& name) {
    if (name == "trivial") return trivial_groupoid();
    if (name == "klein" || name == "V4") return klein_four();
    if (name == "S3") return symmetric_group3();
    if (name.rfind("cyclic:", 0) == 0) return cyclic_group(parse_suffix(name, "cyclic:"));
    if (name.rfind("pair:", 0) == 0) return pair_groupoid(parse_suffix(name, "pair:"));
    throw InputError("unknown builtin groupoid '" + name + "'");
}

std::vector<int> simplex_vertices(const SimplicialComplex& k, const Json& v) {
    std::vector<int> out;
    for (const auto& name : strings(v, "simplex")) {
        int i = k.vertex_index(name);
        if (i < 0) throw InputError("unknown vertex '" + name + "'");
        out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Json simplex_json(const SimplicialComplex& k, int id) {
    Json out = Json::array();
    for (int v : k.simplex(id)) out.push_back(k.vertex_names()[v]);
    return out;
}

int arrow_by_id(const FiniteGroupoid& g, const std::string& id) {
    int a = g.arrow_index(id);
    if (a < 0) throw InputError("unknown arrow '" + id + "'");
    return a;
}

int object_by_id(const FiniteGroupoid& g, const std::string& id) {
    int x = g.object_index(id);
    if (x < 0) throw InputError("unknown object '" + id + "'");
    return x;
}

}  // namespace

Json load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Json resolve(const Json& f, const fs::path& dir) {
    if (f.is_string()) return load_json(dir / f.get<std::string>());
    return f;
}

FiniteGroupoid groupoid_from_json(const Json& doc, const fs::path& dir) {
    expect_kind(doc, "groupoid");
    FiniteGroupoid g;
    if (doc.contains("fixture")) {
        auto cg = fixture(text(doc.at("fixture"), "fixture"));
        if (cg.regime != CarriedGroupoid::Regime::Finite) throw InputError("fixture is not a finite groupoid");
        g = cg.groupoid;
    } else if (doc.contains("builtin")) {
        g = builtin_groupoid(text(doc.at("builtin"), "builtin"));
    } else if (doc.contains("table")) {
        const auto& t = doc.at("table");
        auto names = strings(field(t, "elements"), "elements");
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> rows;
        for (const auto& row : field(t, "rows")) {
            std::vector<int> r;
            for (const auto& name : strings(row, "rows")) {
                auto it = index.find(name);
                if (it == index.end()) throw InputError("unknown element '" + name + "'");
                r.push_back(it->second);
            }
            if (r.size() != names.size()) throw InputError("table rows must list every element");
            rows.push_back(r);
        }
        if (rows.size() != names.size()) throw InputError("table must have one row per element");
        g = group_from_table(names, rows);
    } else if (doc.contains("action")) {
        const auto& a = doc.at("action");
        auto group = groupoid_from_json(resolve(field(a, "group"), dir), dir);
        auto points = strings(field(a, "points"), "points");
        std::map<std::string, int> pindex;
        for (std::size_t i = 0; i < points.size(); ++i) pindex[points[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> act(static_cast<std::size_t>(group.num_arrows()));
        const auto& table = field(a, "act");
        for (int h = 0; h < group.num_arrows(); ++h) {
            const auto& id = group.arrows[h].id;
            if (!table.contains(id)) throw InputError("action misses group element '" + id + "'");
            for (const auto& name : strings(table.at(id), "act")) {
                auto it = pindex.find(name);
                if (it == pindex.end()) throw InputError("unknown point '" + name + "'");
                act[h].push_back(it->second);
            }
            if (act[h].size() != points.size()) throw InputError("action of '" + id + "' must move every point");
        }
        g = action_groupoid(group, points, act);
    } else {
        auto objects = strings(field(doc, "objects"), "objects");
        std::map<std::string, int> oindex;
        for (std::size_t i = 0; i < objects.size(); ++i) oindex[objects[i]] = static_cast<int>(i);
        std::vector<Arrow> arrows;
        std::map<std::string, int> aindex;
        for (const auto& a : field(doc, "arrows")) {
            auto id = text(field(a, "id"), "arrow id");
            auto s = oindex.find(text(field(a, "source"), "source"));
            auto t = oindex.find(text(field(a, "target"), "target"));
            if (s == oindex.end() || t == oindex.end()) throw InputError("arrow '" + id + "' has an unknown endpoint");
            if (aindex.count(id)) throw InputError("duplicate arrow id '" + id + "'");
            aindex[id] = static_cast<int>(arrows.size());
            arrows.push_back({id, s->second, t->second});
        }
        std::map<std::pair<int, int>, int> law;
        for (const auto& triple : field(doc, "composition")) {
            auto ids = strings(triple, "composition");
            if (ids.size() != 3) throw InputError("composition entries are [g, h, g then h]");
            int x[3];
            for (int i = 0; i < 3; ++i) {
                auto it = aindex.find(ids[i]);
                if (it == aindex.end()) throw InputError("unknown arrow '" + ids[i] + "' in composition");
                x[i] = it->second;
            }
            law[{x[0], x[1]}] = x[2];
        }
        g = make_groupoid(objects, arrows, [&](int a, int b) {
            auto it = law.find({a, b});
            return it == law.end() ? -1 : it->second;
        });
    }
    auto problems = validate_groupoid(g);
    if (!problems.empty()) throw InputError("invalid groupoid: " + problems.front());
    return g;
}

Json groupoid_to_json(const FiniteGroupoid& g) {
    Json arrows = Json::array();
    for (const auto& a : g.arrows)
        arrows.push_back({{"id", a.id}, {"source", g.objects[a.source]}, {"target", g.objects[a.target]}});
    Json comp = Json::array();
    for (int a = 0; a < g.num_arrows(); ++a)
        for (int b = 0; b < g.num_arrows(); ++b)
            if (g.composable(a, b)) comp.push_back({g.arrows[a].id, g.arrows[b].id, g.arrows[g.compose(a, b)].id});
    return {{"kind", "groupoid"}, {"objects", g.objects}, {"arrows", arrows}, {"composition", comp}};
}

SimplicialComplex complex_from_json(const Json& doc, const fs::path& dir) {
    expect_kind(doc, "complex");
    SimplicialComplex k;
    if (doc.contains("builtin")) {
        auto name = text(doc.at("builtin"), "builtin");
        if (name == "point") k = SimplicialComplex::point();
        else if (name == "triangle") k = triangle_boundary();
        else if (name == "tetrahedron") k = tetrahedron_boundary();
        else if (name.rfind("simplex-boundary:", 0) == 0) k = simplex_boundary(parse_suffix(name, "simplex-boundary:"));
        else if (name.rfind("simplex:", 0) == 0) k = full_simplex(parse_suffix(name, "simplex:"));
        else throw InputError("unknown builtin complex '" + name + "'");
    } else if (doc.contains("subdivide")) {
        k = barycentric_subdivision(complex_from_json(resolve(doc.at("subdivide"), dir), dir));
    } else {
        auto vertices = strings(field(doc, "vertices"), "vertices");
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (index.count(vertices[i])) throw InputError("duplicate vertex '" + vertices[i] + "'");
            index[vertices[i]] = static_cast<int>(i);
        }
        std::vector<std::vector<int>> facets;
        for (const auto& f : field(doc, "facets")) {
            std::vector<int> s;
            for (const auto& name : strings(f, "facet")) {
                auto it = index.find(name);
                if (it == index.end()) throw InputError("unknown vertex '" + name + "'");
                s.push_back(it->second);
            }
            if (s.empty()) throw InputError("empty facet");
            facets.push_back(s);
        }
        k = SimplicialComplex::from_facets(vertices, facets);
    }
    return k;
}

Json complex_to_json(const SimplicialComplex& k) {
    Json facets = Json::array();
    for (int s = 0; s < k.num_simplices(); ++s) {
        bool maximal = true;
        for (int t = 0; t < k.num_simplices() && maximal; ++t)
            if (k.simplex_dim(t) == k.simplex_dim(s) + 1)
                for (int j = 0; j <= k.simplex_dim(t); ++j)
                    if (k.face(t, j) == s) maximal = false;
        if (maximal) facets.push_back(simplex_json(k, s));
    }
    return {{"kind", "complex"}, {"vertices", k.vertex_names()}, {"facets", facets}};
}

Cover cover_from_json(const Json& doc, const fs::path& dir) {
    expect_kind(doc, "cover");
    Cover c;
    if (doc.contains("fixture")) {
        c = fixture_cover(text(doc.at("fixture"), "fixture"));
    } else {
        auto k = complex_from_json(resolve(field(doc, "complex"), dir), dir);
        if (doc.contains("construction")) {
            auto how = text(doc.at("construction"), "construction");
            if (how == "vertex-stars") c = vertex_star_cover(k);
            else if (how == "facets") c = facet_cover(k);
            else if (how == "single") c = single_patch_cover(k);
            else throw InputError("unknown cover construction '" + how + "'");
        } else {
            c.complex = k;
            for (const auto& p : field(doc, "patches")) {
                std::vector<int> ids;
                for (const auto& s : field(p, "simplices")) {
                    int id = k.find(simplex_vertices(k, s));
                    if (id < 0) throw InputError("patch lists a simplex that is not in the complex");
                    ids.push_back(id);
                }
                c.patches.push_back({text(field(p, "name"), "patch name"), k.closure(ids)});
            }
        }
    }
    auto problems = validate_cover(c);
    if (!problems.empty()) throw InputError("invalid cover: " + problems.front());
    return c;
}

Json cover_to_json(const Cover& c) {
    Json patches = Json::array();
    for (const auto& p : c.patches) {
        Json simplices = Json::array();
        for (int s : p.simplices) {
            bool maximal = true;
            for (int t : p.simplices)
                if (c.complex.simplex_dim(t) == c.complex.simplex_dim(s) + 1)
                    for (int j = 0; j <= c.complex.simplex_dim(t); ++j)
                        if (c.complex.face(t, j) == s) maximal = false;
            if (maximal) simplices.push_back(simplex_json(c.complex, s));
        }
        patches.push_back({{"name", p.name}, {"simplices", simplices}});
    }
    return {{"kind", "cover"}, {"complex", complex_to_json(c.complex)}, {"patches", patches}};
}

CarriedGroupoid base_from_json(const Json& doc, const fs::path& dir) {
    if (!doc.is_object() || !doc.contains("kind")) throw InputError("base document needs a 'kind'");
    auto kind = doc.at("kind").get<std::string>();
    if (kind == "cover") return cech_groupoid(cover_from_json(doc, dir));
    if (kind != "groupoid") throw InputError("expected a groupoid or cover document, got '" + kind + "'");
    if (doc.contains("fixture")) return fixture(text(doc.at("fixture"), "fixture"));
    auto g = groupoid_from_json(doc, dir);
    if (doc.contains("times")) return constant_product(g, complex_from_json(resolve(doc.at("times"), dir), dir));
    return carried_finite(g);
}

MorphismInput morphism_from_json(const Json& doc, const fs::path& dir) {
    expect_kind(doc, "morphism");
    MorphismInput m;
    if (doc.contains("refinement")) {
        const auto& r = doc.at("refinement");
        auto fine = cover_from_json(resolve(field(r, "fine"), dir), dir);
        auto coarse = cover_from_json(resolve(field(r, "coarse"), dir), dir);
        std::vector<int> assignment;
        if (r.contains("assignment")) {
            const auto& a = r.at("assignment");
            for (const auto& p : fine.patches) {
                if (!a.contains(p.name)) throw InputError("assignment misses patch '" + p.name + "'");
                int target = coarse.patch_index(text(a.at(p.name), "assignment"));
                if (target < 0) throw InputError("unknown coarse patch " + a.at(p.name).dump());
                assignment.push_back(target);
            }
        } else {
            assignment = containment_assignment(fine, coarse);
        }
        m.map = refinement_morphism(fine, coarse, assignment);
        m.source = cech_groupoid(fine);
        m.target = cech_groupoid(coarse);
        return m;
    }
    m.source = base_from_json(resolve(field(doc, "source"), dir), dir);
    m.target = base_from_json(resolve(field(doc, "target"), dir), dir);
    const auto& g = m.source.groupoid;
    const auto& h = m.target.groupoid;
    const auto& objects = field(doc, "objects");
    const auto& arrows = field(doc, "arrows");
    for (const auto& x : g.objects) {
        if (!objects.contains(x)) throw InputError("object map misses '" + x + "'");
        m.map.object_map.push_back(object_by_id(h, text(objects.at(x), "object image")));
    }
    for (const auto& a : g.arrows) {
        if (!arrows.contains(a.id)) throw InputError("arrow map misses '" + a.id + "'");
        m.map.arrow_map.push_back(arrow_by_id(h, text(arrows.at(a.id), "arrow image")));
    }
    return m;
}

Json morphism_to_json(const CarriedGroupoid& source, const CarriedGroupoid& target, const GroupoidMorphism& f,
                      const Json& source_doc, const Json& target_doc) {
    Json objects = Json::object(), arrows = Json::object();
    for (int x = 0; x < source.groupoid.num_objects(); ++x)
        objects[source.groupoid.objects[x]] = target.groupoid.objects[f.object_map[x]];
    for (int a = 0; a < source.groupoid.num_arrows(); ++a)
        arrows[source.groupoid.arrows[a].id] = target.groupoid.arrows[f.arrow_map[a]].id;
    return {{"kind", "morphism"}, {"source", source_doc}, {"target", target_doc}, {"objects", objects}, {"arrows", arrows}};
}

int cochain_degree(const Json& doc) {
    expect_kind(doc, "cochain");
    return integer(field(doc, "degree"), "degree");
}

RationalVector cochain_from_json(const Json& doc, const TotalComplex& t) {
    int n = cochain_degree(doc);
    t.check_degree(n);
    auto x = t.zero(n);
    if (doc.contains("dense")) {
        const auto& d = doc.at("dense");
        if (!d.is_array() || static_cast<int>(d.size()) != t.dim(n))
            throw InputError("dense cochain must have " + std::to_string(t.dim(n)) + " values");
        for (std::size_t i = 0; i < d.size(); ++i) x[i] = value_of(d[i]);
        return x;
    }
    const auto& base = t.base();
    const auto& g = base.groupoid;
    const auto& k = base.complex;
    for (const auto& e : field(doc, "values")) {
        int p = integer(field(e, "p"), "p");
        if (p < 0 || p > n) throw InputError("p out of range in cochain entry");
        auto ids = strings(field(e, "cell"), "cell");
        std::vector<int> cell;
        if (p == 0) {
            if (ids.size() != 1) throw InputError("a p = 0 cell names one object");
            cell.push_back(object_by_id(g, ids[0]));
        } else if (static_cast<int>(ids.size()) == p) {
            for (const auto& id : ids) cell.push_back(arrow_by_id(g, id));
        } else if (static_cast<int>(ids.size()) == p + 1) {
            for (int i = 0; i < p; ++i) cell.push_back(arrow_by_id(g, ids[i] + "|" + ids[i + 1]));
        } else {
            throw InputError("a cell at level p lists p arrows or p+1 patches");
        }
        int simplex = 0;
        if (e.contains("simplex")) {
            simplex = k.find(simplex_vertices(k, e.at("simplex")));
            if (simplex < 0) throw InputError("unknown simplex " + e.at("simplex").dump());
        }
        if (k.simplex_dim(simplex) != n - p) throw InputError("simplex dimension must be degree - p");
        const auto& level = t.nerve().levels.at(p);
        auto it = level.lookup.find(cell);
        int index = it == level.lookup.end() ? -1 : t.index_of(p, it->second, simplex);
        if (index < 0) throw InputError("cell " + e.at("cell").dump() + " is not carried on that simplex");
        x[index] += value_of(field(e, "value"));
    }
    return x;
}

Json cochain_to_json(const TotalComplex& t, int n, const RationalVector& x, bool circle) {
    const auto& base = t.base();
    bool point = base.complex.num_simplices() == 1;
    Json values = Json::array();
    for (int i = 0; i < t.dim(n); ++i) {
        Rational v = circle ? mod_one(x[i]) : x[i];
        if (v == 0) continue;
        const auto& c = t.cells(n)[i];
        Json cell = Json::array();
        const auto& tuple = t.nerve().levels[c.p].cells[c.nerve];
        if (c.p == 0) cell.push_back(base.groupoid.objects[tuple[0]]);
        else
            for (int a : tuple) cell.push_back(base.groupoid.arrows[a].id);
        Json e{{"p", c.p}, {"cell", cell}};
        if (!point) e["simplex"] = simplex_json(base.complex, c.simplex);
        e["value"] = circle ? circle_to_string(v) : to_string(v);
        values.push_back(e);
    }
    return {{"kind", "cochain"}, {"degree", n}, {"values", values}};
}

RationalVector simplicial_cochain_from_json(const Json& doc, const SimplicialComplex& k) {
    int n = cochain_degree(doc);
    if (n < 0 || n > k.dimension()) throw InputError("degree outside the complex");
    const auto& ids = k.simplices_of_dim(n);
    RationalVector x(ids.size());
    for (const auto& e : field(doc, "values")) {
        int s = k.find(simplex_vertices(k, field(e, "simplex")));
        if (s < 0 || k.simplex_dim(s) != n) throw InputError("unknown " + std::to_string(n) + "-simplex " + e.at("simplex").dump());
        // Simplices are stored with ascending vertices; a listed order that differs by an odd permutation flips the sign.
        auto listed = strings(e.at("simplex"), "simplex");
        std::vector<int> order;
        for (const auto& name : listed) order.push_back(k.vertex_index(name));
        int inversions = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j)
                if (order[i] > order[j]) ++inversions;
        Rational v = value_of(field(e, "value"));
        x[k.position(s)] += inversions % 2 ? -v : v;
    }
    return x;
}

ExtensionGroupoid extension_from_json(const Json& doc, const fs::path& dir) {
    if (!doc.is_object() || !doc.contains("extension")) throw InputError("document carries no extension data");
    const auto& e = doc.at("extension");
    ExtensionGroupoid r;
    r.groupoid = groupoid_from_json(doc, dir);
    r.base = groupoid_from_json(resolve(field(e, "base"), dir), dir);
    r.order = integer(field(e, "order"), "order");
    auto projection = strings(field(e, "projection"), "projection");
    const auto& fiber = field(e, "fiber");
    if (static_cast<int>(projection.size()) != r.groupoid.num_arrows() || !fiber.is_array() ||
        static_cast<int>(fiber.size()) != r.groupoid.num_arrows())
        throw InputError("projection and fiber must list every arrow");
    for (std::size_t i = 0; i < projection.size(); ++i) {
        r.projection.push_back(arrow_by_id(r.base, projection[i]));
        r.fiber.push_back(integer(fiber[i], "fiber"));
    }
    for (int a = 0; a < r.groupoid.num_arrows(); ++a)
        if (r.arrow(r.projection[a], r.fiber[a]) != a)
            throw InputError("arrows must be listed base-major with fiber coordinates 0..N-1");
    return r;
}

Json extension_to_json(const ExtensionGroupoid& r) {
    Json out = groupoid_to_json(r.groupoid);
    Json projection = Json::array();
    for (int p : r.projection) projection.push_back(r.base.arrows[p].id);
    out["extension"] = {{"base", groupoid_to_json(r.base)}, {"order", r.order}, {"projection", projection}, {"fiber", r.fiber}};
    return out;
}

Json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return to_string(v);
}

std::string free_symbol(const Coeff& coeff) {
    switch (coeff.kind) {
        case Coeff::Kind::Z: return "Z";
        case Coeff::Kind::Q: return "Q";
        case Coeff::Kind::QmodZ: return "Q/Z";
        case Coeff::Kind::Zmod: return "Z/" + to_string(coeff.modulus);
    }
    return "?";
}

Json presentation_to_json(const AbelianGroupPresentation& p, const Coeff& coeff) {
    Json torsion = Json::array();
    for (const auto& d : p.torsion) torsion.push_back(integer_json(d));
    return {{"rank", p.rank}, {"torsion", torsion}, {"text", p.to_string(free_symbol(coeff))}};
}

Json class_to_json(const TotalComplex& t, const CohomologyClass& c) {
    Json torsion = Json::array(), free = Json::array();
    for (const auto& v : c.coordinates.torsion) torsion.push_back(integer_json(v));
    for (const auto& v : c.coordinates.free)
        free.push_back(c.coeff.kind == Coeff::Kind::QmodZ ? circle_to_string(v) : to_string(v));
    return {{"degree", c.degree},
            {"coefficients", c.coeff.name()},
            {"group", presentation_to_json(c.group, c.coeff)},
            {"coordinates", {{"torsion", torsion}, {"free", free}}},
            {"trivial", c.trivial},
            {"representative", cochain_to_json(t, c.degree, c.representative, c.coeff.kind == Coeff::Kind::QmodZ)}};
}

}  // namespace gcoh
