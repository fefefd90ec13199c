#include "gcoh/cli.hpp"

#include "gcoh/bundles.hpp"
#include "gcoh/error.hpp"
#include "gcoh/gerbes.hpp"
#include "gcoh/morita.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace gcoh {

namespace fs = std::filesystem;

namespace {

struct Doc {
    Json json;
    fs::path dir;
};

class Context {
public:
    explicit Context(const JobSpec& job) : job(job), coeff(Coeff::parse(job.coeff)) {}

    const JobSpec& job;
    Coeff coeff;

    std::size_t count() const { return job.inputs.size(); }

    const Doc& doc(std::size_t i) {
        if (i >= job.inputs.size())
            throw InputError(job.command + " needs at least " + std::to_string(i + 1) + " input document(s)");
        auto it = cache_.find(i);
        if (it == cache_.end()) {
            const auto& path = job.inputs[i];
            it = cache_.emplace(i, Doc{load_json(path), path.parent_path()}).first;
        }
        return it->second;
    }

    std::string kind(std::size_t i) {
        const auto& j = doc(i).json;
        if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
            throw InputError(job.inputs[i].string() + ": missing 'kind'");
        return j.at("kind").get<std::string>();
    }

    int degree_or(int fallback) const { return job.max_degree >= 0 ? job.max_degree : fallback; }

    int fiber_order(int fallback) const {
        int n = job.fiber_order > 0 ? job.fiber_order : fallback;
        if (n < 1) throw InputError(job.command + " needs --fiber-order N >= 1");
        return n;
    }

    TotalComplex total(const CarriedGroupoid& base, int degree) const {
        return TotalComplex(base, TotalOptions::for_degree(degree, base.complex.dimension(), job.cell_cap));
    }

private:
    std::map<std::size_t, Doc> cache_;
};

using Handler = std::function<Json(Context&)>;

Json base_summary(const CarriedGroupoid& b) {
    return {{"regime", b.regime_name()},
            {"objects", b.groupoid.num_objects()},
            {"arrows", b.groupoid.num_arrows()},
            {"complex_dimension", b.complex.dimension()}};
}

// Base from input i, or from the "base" field of the cochain document at input i.
std::pair<CarriedGroupoid, std::size_t> base_at(Context& ctx, std::size_t i) {
    auto k = ctx.kind(i);
    const auto& d = ctx.doc(i);
    if (k == "groupoid" || k == "cover") return {base_from_json(d.json, d.dir), i + 1};
    if (k == "cochain" && d.json.contains("base"))
        return {base_from_json(resolve(d.json.at("base"), d.dir), d.dir), i};
    throw InputError(ctx.job.inputs[i].string() + ": expected a groupoid or cover document (or a cochain with a 'base')");
}

RationalVector cochain_at(Context& ctx, std::size_t i, const TotalComplex& t, int expected) {
    const auto& d = ctx.doc(i);
    int n = cochain_degree(d.json);
    if (expected >= 0 && n != expected)
        throw InputError(ctx.job.inputs[i].string() + ": expected a degree " + std::to_string(expected) + " cochain");
    return cochain_from_json(d.json, t);
}

int degree_at(Context& ctx, std::size_t i) { return cochain_degree(ctx.doc(i).json); }

Json vector_of_strings(const std::vector<std::string>& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(s);
    return out;
}

Json rational_class(const TotalComplex& t, int n, const RationalVector& x) {
    auto c = make_class(t, n, x, Coeff::Q());
    return {{"coefficients", "Q"}, {"trivial", c.trivial}, {"group", presentation_to_json(c.group, c.coeff)}};
}

bool nonabelian(const FiniteGroupoid& g) {
    for (int a = 0; a < g.num_arrows(); ++a)
        for (int b = 0; b < g.num_arrows(); ++b)
            if (g.composable(a, b) && g.composable(b, a) && g.compose(a, b) != g.compose(b, a)) return true;
    return false;
}

Json bundle_json(const TotalComplex& t, const BundleDatum& b) {
    RationalVector x = b.c;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += b.A[i];
    return cochain_to_json(t, 1, x);
}

BundleDatum bundle_from(const TotalComplex& t, const RationalVector& x) {
    return {t.component(1, 1, x), t.component(1, 0, x)};
}

GerbeDatum gerbe_from(const TotalComplex& t, const RationalVector& x) {
    return {t.component(2, 2, x), t.component(2, 1, x), t.component(2, 0, x)};
}

Json gerbe_json(const TotalComplex& t, const GerbeDatum& g) {
    RationalVector x = g.sigma;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += g.A[i] + g.B[i];
    return cochain_to_json(t, 2, x);
}

Json groups_json(const std::vector<AbelianGroupPresentation>& groups, const Coeff& coeff) {
    Json out = Json::array();
    for (std::size_t n = 0; n < groups.size(); ++n) {
        auto g = presentation_to_json(groups[n], coeff);
        Json row{{"degree", static_cast<int>(n)}};
        for (auto& [k, v] : g.items()) row[k] = v;
        out.push_back(row);
    }
    return out;
}

Json cmd_validate(Context& ctx) {
    auto k = ctx.kind(0);
    const auto& d = ctx.doc(0);
    Json r{{"kind", k}};
    if (k == "groupoid") {
        if (d.json.contains("extension")) {
            auto e = extension_from_json(d.json, d.dir);
            auto problems = validate_extension(e);
            r["objects"] = e.groupoid.num_objects();
            r["arrows"] = e.groupoid.num_arrows();
            r["extension_order"] = e.order;
            r["problems"] = vector_of_strings(problems);
            r["valid"] = problems.empty();
            return r;
        }
        auto b = base_from_json(d.json, d.dir);
        r["base"] = base_summary(b);
        Json comps = Json::array();
        for (const auto& c : skeleton(b.groupoid)) {
            Json objs = Json::array();
            for (int x : c.objects) objs.push_back(b.groupoid.objects[x]);
            comps.push_back({{"objects", objs}, {"isotropy_order", c.isotropy_order}});
        }
        r["components"] = comps;
        auto problems = validate_carriers(b);
        r["problems"] = vector_of_strings(problems);
        r["valid"] = problems.empty();
    } else if (k == "complex") {
        auto c = complex_from_json(d.json, d.dir);
        Json counts = Json::array();
        for (int q = 0; q <= c.dimension(); ++q) counts.push_back(c.simplices_of_dim(q).size());
        r["dimension"] = c.dimension();
        r["simplices"] = counts;
        r["valid"] = true;
    } else if (k == "cover") {
        auto b = base_from_json(d.json, d.dir);
        r["base"] = base_summary(b);
        r["patches"] = b.cover->size();
        auto banal = check_banal(b);
        r["banal"] = banal.empty();
        r["problems"] = vector_of_strings(validate_carriers(b));
        r["valid"] = r["problems"].empty();
    } else if (k == "morphism") {
        auto m = morphism_from_json(d.json, d.dir);
        auto problems = validate_morphism(m.source.groupoid, m.target.groupoid, m.map);
        r["problems"] = vector_of_strings(problems);
        r["valid"] = problems.empty();
    } else if (k == "cochain") {
        auto [b, next] = base_at(ctx, 0);
        int n = degree_at(ctx, next);
        auto t = ctx.total(b, n);
        auto x = cochain_at(ctx, next, t, n);
        r["degree"] = n;
        r["closed"] = n >= t.top_degree() || is_zero(t.apply_delta(n, x));
        r["integral"] = is_integral(x);
        r["valid"] = true;
    } else if (k == "job") {
        auto j = job_from_json(d.json, d.dir);
        r["command"] = j.command;
        r["inputs"] = j.inputs.size();
        r["valid"] = true;
    } else {
        throw InputError("unknown kind '" + k + "'");
    }
    return r;
}

Json cmd_nerve(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    (void)next;
    int p_max = ctx.degree_or(2);
    auto nerve = carried_nerve(b, p_max, ctx.job.cell_cap);
    Json levels = Json::array();
    for (std::size_t p = 0; p < nerve.levels.size(); ++p) {
        const auto& level = nerve.levels[p];
        Json cells = Json::array();
        for (int c = 0; c < level.size(); ++c) {
            Json ids = Json::array();
            if (p == 0) ids.push_back(b.groupoid.objects[level.cells[c][0]]);
            else
                for (int a : level.cells[c]) ids.push_back(b.groupoid.arrows[a].id);
            cells.push_back({{"cell", ids}, {"carrier_simplices", nerve.carriers[p][c].size()}});
        }
        levels.push_back({{"p", static_cast<int>(p)}, {"count", level.size()}, {"cells", cells}});
    }
    return {{"base", base_summary(b)}, {"levels", levels}};
}

Json cmd_cohomology(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    (void)next;
    int top = ctx.degree_or(3);
    auto t = ctx.total(b, top);
    std::vector<AbelianGroupPresentation> groups;
    for (int n = 0; n <= top; ++n) groups.push_back(cohomology(t, n, ctx.coeff));
    return {{"base", base_summary(b)}, {"coefficients", ctx.coeff.name()}, {"groups", groups_json(groups, ctx.coeff)}};
}

Json cmd_homology(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    (void)next;
    int top = ctx.degree_or(3);
    auto t = ctx.total(b, top);
    std::vector<AbelianGroupPresentation> groups;
    for (int n = 0; n <= top; ++n) groups.push_back(homology(t, n));
    return {{"base", base_summary(b)}, {"coefficients", "Z"}, {"groups", groups_json(groups, Coeff::Z())}};
}

Json cmd_pair(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    int n = degree_at(ctx, next);
    auto t = ctx.total(b, n);
    auto x = cochain_at(ctx, next, t, n);
    RationalVector chain;
    std::string against = "fundamental cycle";
    if (ctx.count() > next + 1) {
        auto doc = ctx.doc(next + 1).json;
        if (doc.value("kind", "") != "chain") throw InputError("the third input must be a {\"kind\":\"chain\"} document");
        doc["kind"] = "cochain";
        if (cochain_degree(doc) != n) throw InputError("chain and cochain degrees differ");
        chain = cochain_from_json(doc, t);
        against = "chain";
    } else {
        if (n != b.complex.dimension()) throw InputError("without a chain the cochain degree must equal dim K");
        chain = fundamental_cycle(t);
    }
    return {{"degree", n}, {"against", against}, {"value", to_string(pair_checked(t, n, chain, x))}};
}

Json cmd_integrality(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    int n = degree_at(ctx, next);
    auto t = ctx.total(b, n);
    auto x = cochain_at(ctx, next, t, n);
    bool lift = is_integer_class(t, n, x);
    auto report = integrality_by_pairing(t, n, x);
    Json values = Json::array();
    for (const auto& v : report.values) values.push_back(to_string(v));
    return {{"degree", n},
            {"integer_class", lift},
            {"pairings", values},
            {"pairings_integral", report.integral},
            {"agree", lift == report.integral}};
}

Json cmd_chern(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 2);
    auto datum = bundle_from(t, cochain_at(ctx, next, t, 1));
    auto problems = validate_bundle(t, datum.c);
    if (!problems.empty()) throw MathError(MathErrorKind::InvalidCocycle, problems.front());
    auto c = chern_class(t, datum.c);
    return {{"chern_class", class_to_json(t, c)}, {"rational_image", rational_class(t, 2, c.representative)}};
}

Json cmd_pseudo_curvature(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 2);
    auto datum = bundle_from(t, cochain_at(ctx, next, t, 1));
    auto pc = pseudo_curvature(t, datum);
    Json r{{"omega", cochain_to_json(t, 2, pc.omega)},
           {"Omega", cochain_to_json(t, 2, pc.Omega)},
           {"total", cochain_to_json(t, 2, pc.total())},
           {"total_class", rational_class(t, 2, pc.total())}};
    if (ctx.count() > next + 1) {
        auto other = bundle_from(t, cochain_at(ctx, next + 1, t, 1));
        r["difference_class"] = class_to_json(t, difference_class(t, datum, other));
    }
    return r;
}

Json cmd_realize_bundle(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 2);
    auto psi = cochain_at(ctx, next, t, 2);
    auto datum = realize_bundle(t, psi);
    Json r{{"datum", bundle_json(t, datum)},
           {"round_trip", pseudo_curvature(t, datum).total() == psi},
           {"chern_class", class_to_json(t, chern_class(t, datum.c))}};
    if (ctx.count() > next + 1) {
        auto x = cochain_at(ctx, next + 1, t, 1);
        auto twisted = twist(t, datum, x);
        r["twisted"] = bundle_json(t, twisted);
        r["difference_class"] = class_to_json(t, difference_class(t, datum, twisted));
    }
    return r;
}

Json cmd_extension_build(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 3);
    auto sigma = cochain_at(ctx, next, t, 2);
    auto r = extension_from_cocycle(t, sigma, ctx.fiber_order(0));
    auto problems = validate_extension(r);
    return {{"order", r.order},
            {"arrows", r.groupoid.num_arrows()},
            {"valid", problems.empty()},
            {"problems", vector_of_strings(problems)},
            {"nonabelian", nonabelian(r.groupoid)},
            {"extension", extension_to_json(r)}};
}

Json cmd_extension_cocycle(Context& ctx) {
    const auto& d = ctx.doc(0);
    auto r = extension_from_json(d.json, d.dir);
    auto problems = validate_extension(r);
    if (!problems.empty()) throw InputError("invalid extension: " + problems.front());
    auto t = ctx.total(carried_finite(r.base), 3);
    auto sigma = cocycle_from_extension(t, r);
    return {{"cocycle", cochain_to_json(t, 2, sigma, true)}, {"dd_class", class_to_json(t, dd_class(t, sigma))}};
}

Json cmd_tensor(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 3);
    auto s1 = cochain_at(ctx, next, t, 2);
    auto s2 = cochain_at(ctx, next + 1, t, 2);
    auto s = tensor(t, s1, s2);
    auto d1 = dd_class(t, s1), d2 = dd_class(t, s2), d = dd_class(t, s);
    RationalVector sum = d1.representative;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += d2.representative[i];
    return {{"tensor", cochain_to_json(t, 2, s)},
            {"dd_class", class_to_json(t, d)},
            {"additive", same_class(t, 3, d.representative, sum, Coeff::Z())}};
}

Json cmd_pullback(Context& ctx) {
    const auto& d = ctx.doc(0);
    if (ctx.kind(0) != "morphism") throw InputError("pullback expects a morphism document first");
    auto m = morphism_from_json(d.json, d.dir);
    int n = degree_at(ctx, 1);
    auto tt = ctx.total(m.target, n);
    auto ts = ctx.total(m.source, n);
    auto x = cochain_at(ctx, 1, tt, n);
    auto maps = pullback_map(tt, ts, m.map);
    auto violations = check_chain_map(tt, ts, maps);
    return {{"degree", n},
            {"chain_map", violations.empty()},
            {"pullback", cochain_to_json(ts, n, maps.at(n).apply(x))}};
}

Json cmd_dd_class(Context& ctx) {
    const auto& d = ctx.doc(0);
    if (ctx.kind(0) == "groupoid" && d.json.contains("extension")) {
        auto r = extension_from_json(d.json, d.dir);
        auto problems = validate_extension(r);
        if (!problems.empty()) throw InputError("invalid extension: " + problems.front());
        auto t = ctx.total(carried_finite(r.base), 3);
        auto sigma = cocycle_from_extension(t, r);
        return {{"source", "extension"}, {"dd_class", class_to_json(t, dd_class(t, sigma))}};
    }
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 3);
    auto sigma = cochain_at(ctx, next, t, 2);
    return {{"source", "cocycle"}, {"dd_class", class_to_json(t, dd_class(t, sigma))}};
}

Json cmd_gerbe_curvature(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 3);
    auto g = gerbe_from(t, cochain_at(ctx, next, t, 2));
    auto pc = pseudo_curvature_gerbe(t, g);
    return {{"eta", cochain_to_json(t, 3, pc.eta)},
            {"omega", cochain_to_json(t, 3, pc.omega)},
            {"Omega", cochain_to_json(t, 3, pc.Omega)},
            {"total_class", rational_class(t, 3, pc.total())},
            {"connective", connective_check(t, g)},
            {"flat", is_flat(t, g)}};
}

Json cmd_curving(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 3);
    auto A = t.component(2, 1, cochain_at(ctx, next, t, 2));
    auto B = find_curving(t, A);
    if (!B) throw MathError(MathErrorKind::Unsolvable, "no curving B with del B = dA");
    return {{"B", cochain_to_json(t, 2, *B)}, {"curvature", cochain_to_json(t, 3, curvature(t, *B))}};
}

Json cmd_flat_check(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 3);
    auto g = gerbe_from(t, cochain_at(ctx, next, t, 2));
    bool flat = is_flat(t, g);
    Json r{{"flat", flat}};
    if (flat) r["flat_class"] = class_to_json(t, flat_class(t, g));
    if (ctx.count() > next + 1) {
        auto other = gerbe_from(t, cochain_at(ctx, next + 1, t, 2));
        auto diff = difference_flat(t, g, other);
        r["difference"] = gerbe_json(t, diff);
        r["difference_class"] = class_to_json(t, flat_class(t, diff));
    }
    return r;
}

Json cmd_realize_gerbe(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    auto t = ctx.total(b, 3);
    auto psi = cochain_at(ctx, next, t, 3);
    auto g = realize_gerbe(t, psi);
    return {{"datum", gerbe_json(t, g)},
            {"round_trip", pseudo_curvature_gerbe(t, g).total() == psi},
            {"dd_class", class_to_json(t, dd_class(t, g.sigma))}};
}

Json cmd_holonomy(Context& ctx) {
    const auto& d = ctx.doc(0);
    SimplicialComplex k;
    auto kind = ctx.kind(0);
    if (kind == "complex") k = complex_from_json(d.json, d.dir);
    else if (kind == "cover") k = cover_from_json(d.json, d.dir).complex;
    else throw InputError("holonomy expects a complex or cover document first");
    auto a = simplicial_cochain_from_json(ctx.doc(1).json, k);
    if (cochain_degree(ctx.doc(1).json) != 1) throw InputError("holonomy expects a degree 1 cochain");
    Json r{{"holonomy_free", holonomy_free(k, a)}};
    if (ctx.count() > 2) {
        auto loop_doc = ctx.doc(2).json;
        if (loop_doc.value("kind", "") != "chain") throw InputError("the third input must be a {\"kind\":\"chain\"} document");
        loop_doc["kind"] = "cochain";
        auto loop = simplicial_cochain_from_json(loop_doc, k);
        r["holonomy"] = circle_to_string(holonomy(k, a, loop));
    }
    return r;
}

Json cmd_enumerate_extensions(Context& ctx) {
    auto [b, next] = base_at(ctx, 0);
    (void)next;
    int order = ctx.fiber_order(2);
    auto t = ctx.total(b, 3);
    auto classes = enumerate_extension_classes(t, order);
    Json list = Json::array();
    for (const auto& sigma : classes) {
        auto r = extension_from_cocycle(t, sigma, order);
        bool trivial = static_cast<bool>(is_coboundary(t, 2, sigma, Coeff::QmodZ()));
        list.push_back({{"cocycle", cochain_to_json(t, 2, sigma, true)},
                        {"trivial", trivial},
                        {"extension_valid", validate_extension(r).empty()},
                        {"nonabelian", nonabelian(r.groupoid)}});
    }
    return {{"order", order}, {"count", classes.size()}, {"classes", list}};
}

Json cmd_morita_validate(Context& ctx) {
    const auto& d = ctx.doc(0);
    auto m = morphism_from_json(d.json, d.dir);
    auto problems = validate_morita(m.source, m.target, m.map);
    return {{"morita", problems.empty()}, {"problems", vector_of_strings(problems)}};
}

Json cmd_morita_verify(Context& ctx) {
    const auto& d = ctx.doc(0);
    auto m = morphism_from_json(d.json, d.dir);
    int top = ctx.degree_or(3);
    auto tt = ctx.total(m.target, top);
    auto ts = ctx.total(m.source, top);
    auto verdicts = verify_invariance(tt, ts, m.map, ctx.coeff, top);
    Json rows = Json::array();
    bool all = true;
    for (const auto& v : verdicts) {
        all = all && v.isomorphism;
        rows.push_back({{"degree", v.degree},
                        {"target", presentation_to_json(v.target_group, ctx.coeff)},
                        {"source", presentation_to_json(v.source_group, ctx.coeff)},
                        {"isomorphism", v.isomorphism},
                        {"reason", v.reason}});
    }
    return {{"coefficients", ctx.coeff.name()},
            {"morita", validate_morita(m.source, m.target, m.map).empty()},
            {"all_isomorphisms", all},
            {"verdicts", rows}};
}

Json cmd_refine(Context& ctx) {
    const auto& f = ctx.doc(0);
    const auto& c = ctx.doc(1);
    auto fine = cover_from_json(f.json, f.dir);
    auto coarse = cover_from_json(c.json, c.dir);
    auto map = refinement_morphism(fine, coarse, containment_assignment(fine, coarse));
    auto source = cech_groupoid(fine);
    auto target = cech_groupoid(coarse);
    auto problems = validate_morita(source, target, map);
    return {{"morita", problems.empty()},
            {"problems", vector_of_strings(problems)},
            {"morphism", morphism_to_json(source, target, map, cover_to_json(fine), cover_to_json(coarse))}};
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"validate", cmd_validate},
        {"nerve", cmd_nerve},
        {"cohomology", cmd_cohomology},
        {"homology", cmd_homology},
        {"pair", cmd_pair},
        {"integrality", cmd_integrality},
        {"chern", cmd_chern},
        {"pseudo-curvature", cmd_pseudo_curvature},
        {"realize-bundle", cmd_realize_bundle},
        {"extension-build", cmd_extension_build},
        {"extension-cocycle", cmd_extension_cocycle},
        {"tensor", cmd_tensor},
        {"pullback", cmd_pullback},
        {"dd-class", cmd_dd_class},
        {"gerbe-curvature", cmd_gerbe_curvature},
        {"curving", cmd_curving},
        {"flat-check", cmd_flat_check},
        {"realize-gerbe", cmd_realize_gerbe},
        {"holonomy", cmd_holonomy},
        {"enumerate-extensions", cmd_enumerate_extensions},
        {"morita-validate", cmd_morita_validate},
        {"morita-verify", cmd_morita_verify},
        {"refine", cmd_refine},
    };
    return table;
}

Json error_report(const std::string& type, const std::string& message) {
    return {{"type", type}, {"message", message}};
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v, int indent);

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 2, ' '); }

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_cochain(std::ostringstream& out, const std::string& key, const Json& c, int indent) {
    out << pad(indent) << key << " (degree " << c.at("degree").dump() << ", " << c.at("values").size() << " nonzero)\n";
    for (const auto& e : c.at("values")) {
        std::string cell, simplex;
        for (const auto& id : e.at("cell")) cell += (cell.empty() ? "" : " ") + id.get<std::string>();
        if (e.contains("simplex"))
            for (const auto& v : e.at("simplex")) simplex += (simplex.empty() ? "" : ",") + v.get<std::string>();
        out << pad(indent + 1) << "p=" << e.at("p").dump() << "  (" << cell << ")";
        if (!simplex.empty()) out << "  [" << simplex << "]";
        out << "  " << e.at("value").get<std::string>() << "\n";
    }
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
    if (v.is_object() && v.value("kind", "") == "cochain" && v.contains("values")) {
        render_cochain(out, key, v, indent);
    } else if (v.is_object() && v.contains("text") && v.contains("rank")) {
        out << pad(indent) << key << "  " << v.at("text").get<std::string>() << "\n";
    } else if (v.is_object()) {
        out << pad(indent) << key << "\n";
        for (const auto& [k, x] : v.items()) render_value(out, k, x, indent + 1);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        if (key == "groups") {
            std::string line;
            for (const auto& g : v) {
                out << pad(indent) << "degree " << g.at("degree").dump() << "  " << g.at("text").get<std::string>() << "\n";
                line += (line.empty() ? "" : ",") + g.at("text").get<std::string>();
            }
            out << pad(indent) << "table  " << line << "\n";
            return;
        }
        out << pad(indent) << key << "\n";
        for (std::size_t i = 0; i < v.size(); ++i) render_value(out, "[" + std::to_string(i) + "]", v[i], indent + 1);
    } else if (v.is_array()) {
        std::string line;
        for (const auto& x : v) line += (line.empty() ? "" : ", ") + scalar(x);
        out << pad(indent) << key << "  " << (line.empty() ? "-" : line) << "\n";
    } else {
        out << pad(indent) << key << "  " << scalar(v) << "\n";
    }
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, h] : handlers()) out.push_back(name);
        return out;
    }();
    return names;
}

JobSpec job_from_json(const Json& doc, const fs::path& dir) {
    if (!doc.is_object() || doc.value("kind", "") != "job") throw InputError("expected a {\"kind\":\"job\"} document");
    JobSpec job;
    if (!doc.contains("command") || !doc.at("command").is_string()) throw InputError("job needs a 'command'");
    job.command = doc.at("command").get<std::string>();
    if (!doc.contains("inputs") || !doc.at("inputs").is_array()) throw InputError("job needs an 'inputs' array");
    for (const auto& p : doc.at("inputs")) {
        if (!p.is_string()) throw InputError("job inputs are paths");
        fs::path path = p.get<std::string>();
        job.inputs.push_back(path.is_absolute() ? path : dir / path);
    }
    if (doc.contains("options")) {
        const auto& o = doc.at("options");
        if (!o.is_object()) throw InputError("job options must be an object");
        for (const auto& [k, v] : o.items()) {
            if (k == "coeff" && v.is_string()) job.coeff = v.get<std::string>();
            else if (k == "max_degree" && v.is_number_integer()) job.max_degree = v.get<int>();
            else if (k == "fiber_order" && v.is_number_integer()) job.fiber_order = v.get<int>();
            else if (k == "cell_cap" && v.is_number_unsigned()) job.cell_cap = v.get<std::size_t>();
            else if (k == "out" && v.is_string()) {
                fs::path out = v.get<std::string>();
                job.out = (out.is_absolute() ? out : dir / out).string();
            } else if (k == "format" && v.is_string()) job.format = v.get<std::string>();
            else throw InputError("bad job option '" + k + "'");
        }
    }
    return job;
}

JobResult run(const JobSpec& job) {
    JobResult result;
    Json& r = result.report;
    r["command"] = job.command;
    Json inputs = Json::array();
    for (const auto& p : job.inputs) inputs.push_back(p.filename().string());
    r["inputs"] = inputs;
    try {
        auto it = handlers().find(job.command);
        if (it == handlers().end()) throw InputError("unknown command '" + job.command + "'");
        if (job.format != "json" && job.format != "table") throw InputError("--format is json or table");
        Context ctx(job);
        auto body = it->second(ctx);
        r["status"] = "ok";
        r["result"] = body;
        result.exit_code = 0;
    } catch (const InputError& e) {
        r["status"] = "error";
        r["error"] = error_report("InputError", e.what());
        result.exit_code = 1;
    } catch (const MathError& e) {
        r["status"] = "error";
        auto err = error_report("MathError", e.what());
        err["obstruction"] = to_string(e.kind());
        auto detail = Json::parse(e.detail(), nullptr, false);
        err["detail"] = detail.is_discarded() ? Json(e.detail()) : detail;
        r["error"] = err;
        result.exit_code = 2;
    } catch (const SizeGuardExceeded& e) {
        r["status"] = "error";
        auto err = error_report("SizeGuardExceeded", e.what());
        err["cells"] = e.cells();
        err["cap"] = e.cap();
        r["error"] = err;
        result.exit_code = 3;
    } catch (const Json::exception& e) {
        r["status"] = "error";
        r["error"] = error_report("InputError", e.what());
        result.exit_code = 1;
    } catch (const std::exception& e) {
        r["status"] = "error";
        r["error"] = error_report("InputError", e.what());
        result.exit_code = 1;
    }
    r["exit_code"] = result.exit_code;
    return result;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

std::string render_table(const Json& report) {
    std::ostringstream out;
    out << report.at("command").get<std::string>() << "  " << report.at("status").get<std::string>() << "\n";
    if (report.contains("result"))
        for (const auto& [k, v] : report.at("result").items()) render_value(out, k, v, 1);
    if (report.contains("error"))
        for (const auto& [k, v] : report.at("error").items()) render_value(out, k, v, 1);
    return out.str();
}

}  // namespace gcoh
