#include "gcoh/gerbes.hpp"

#include "gcoh/error.hpp"

#include "json.hpp"

namespace gcoh {

namespace {

RationalVector add(RationalVector a, const RationalVector& b, const Rational& scale = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
    return a;
}

void require_pure(const TotalComplex& t, int n, int p, const RationalVector& x, const std::string& what) {
    if (static_cast<int>(x.size()) != t.dim(n))
        throw InputError(what + " must have " + std::to_string(t.dim(n)) + " entries, got " + std::to_string(x.size()));
    if (!t.is_pure(n, p, x))
        throw InputError(what + " must live in bidegree (" + std::to_string(p) + "," + std::to_string(n - p) + ")");
}

void require_valid(const TotalComplex& t, const RationalVector& sigma) {
    auto problems = validate_extension_cocycle(t, sigma);
    if (!problems.empty()) throw MathError(MathErrorKind::InvalidCocycle, problems.front());
}

void require_finite(const TotalComplex& t) {
    if (t.base().regime != CarriedGroupoid::Regime::Finite)
        throw InputError("extension groupoids are only built over finite groupoids");
    if (t.top_degree() < 3) throw InputError("extension groupoids need the complex up to degree 3");
}

int pair_cell(const TotalComplex& t, int g, int h) {
    int cell = t.nerve().levels.at(2).index_of({g, h});
    return t.index_of(2, cell, 0);
}

CohomologyEngine simplicial_engine(const SimplicialComplex& k) {
    std::vector<SparseMatrix> d;
    std::vector<int> dims;
    for (int q = 0; q <= k.dimension(); ++q) dims.push_back(static_cast<int>(k.simplices_of_dim(q).size()));
    for (int q = 0; q < k.dimension(); ++q) d.push_back(k.coboundary(q));
    return CohomologyEngine(d, dims);
}

}  // namespace

RationalVector GerbeCurvature::total() const { return add(add(eta, omega), Omega); }

std::vector<std::string> validate_extension_cocycle(const TotalComplex& t, const RationalVector& sigma) {
    std::vector<std::string> out;
    if (t.top_degree() < 3) {
        out.push_back("the complex must reach degree 3 to check the cocycle identity");
        return out;
    }
    if (static_cast<int>(sigma.size()) != t.dim(2)) {
        out.push_back("cocycle must have " + std::to_string(t.dim(2)) + " entries");
        return out;
    }
    if (!t.is_pure(2, 2, sigma)) out.push_back("cocycle has entries outside bidegree (2,0)");
    auto ds = t.apply_horizontal(2, t.component(2, 2, sigma));
    auto [lo, hi] = t.block(3, 3);
    for (int i = lo; i < hi; ++i)
        if (!is_integral(ds[i])) out.push_back("cocycle identity fails mod Z on " + t.cell_label(3, i));
    if (out.empty() && t.top_degree() >= 4 && !is_zero(t.apply_vertical(3, ds)))
        out.push_back("integer jump del sigma is not locally constant");
    return out;
}

CohomologyClass dd_class(const TotalComplex& t, const RationalVector& sigma) {
    require_valid(t, sigma);
    return make_class(t, 3, t.apply_horizontal(2, sigma), Coeff::Z());
}

GerbeCurvature pseudo_curvature_gerbe(const TotalComplex& t, const GerbeDatum& g) {
    require_valid(t, g.sigma);
    require_pure(t, 2, 1, g.A, "A");
    require_pure(t, 2, 0, g.B, "B");
    GerbeCurvature out;
    out.eta = t.component(3, 2, add(t.apply_horizontal(2, g.A), t.apply_vertical(2, g.sigma), -1));
    out.omega = t.component(3, 1, add(t.apply_horizontal(2, g.B), t.apply_vertical(2, g.A), -1));
    out.Omega = t.component(3, 0, t.apply_vertical(2, g.B));
    if (t.top_degree() >= 4 && !is_zero(t.apply_delta(3, out.total())))
        throw std::logic_error("gerbe pseudo-curvature is not closed");
    return out;
}

bool connective_check(const TotalComplex& t, const GerbeDatum& g) {
    return is_zero(pseudo_curvature_gerbe(t, g).eta);
}

std::optional<RationalVector> find_curving(const TotalComplex& t, const RationalVector& A) {
    require_pure(t, 2, 1, A, "A");
    auto m = block_matrix(t, t.horizontal(2), 3, {1}, 2, {0});
    auto rhs = gather(t, 3, {1}, t.apply_vertical(2, A));
    auto b = solve_rational(m, rhs);
    if (!b) return std::nullopt;
    return scatter(t, 2, {0}, *b);
}

RationalVector curvature(const TotalComplex& t, const RationalVector& B) {
    require_pure(t, 2, 0, B, "B");
    return t.component(3, 0, t.apply_vertical(2, B));
}

bool is_flat(const TotalComplex& t, const GerbeDatum& g) {
    auto c = pseudo_curvature_gerbe(t, g);
    return is_zero(c.eta) && is_zero(c.omega) && is_zero(c.Omega);
}

GerbeDatum realize_gerbe(const TotalComplex& t, const RationalVector& psi) {
    require_exact_degree(t, 3);
    if (static_cast<int>(psi.size()) != t.dim(3)) throw InputError("curvature has the wrong length");
    if (!is_zero(t.component(3, 3, psi))) throw InputError("curvature must vanish in bidegree (3,0)");
    if (!is_zero(t.apply_delta(3, psi))) throw MathError(MathErrorKind::NotClosed, "eta + omega + Omega is not closed");

    auto Omega = gather(t, 3, {0}, psi);
    auto d0 = block_matrix(t, t.delta(2), 3, {0}, 2, {0});
    if (!solve_rational(d0, Omega)) {
        nlohmann::json cells = nlohmann::json::array();
        auto [lo, hi] = t.block(3, 0);
        for (int i = lo; i < hi; ++i)
            if (psi[i] != 0) cells.push_back({{"cell", t.cell_label(3, i)}, {"value", to_string(psi[i])}});
        throw MathError(MathErrorKind::OmegaNotExact, "Omega is not exact on the objects",
                        nlohmann::json{{"Omega", cells}}.dump());
    }

    auto lift = t.engine().integral_lift(3, psi);
    if (!lift) {
        auto report = integrality_by_pairing(t, 3, psi);
        nlohmann::json pairings = nlohmann::json::array();
        for (const auto& v : report.values) pairings.push_back(to_string(v));
        throw MathError(MathErrorKind::NotIntegral, "the class of eta + omega + Omega is not integral",
                        nlohmann::json{{"pairings", pairings}}.dump());
    }
    const auto& z = lift->first;
    std::vector<int> low{0, 1, 2};
    auto m = block_matrix(t, t.delta(2), 3, low, 2, low);
    auto target = gather(t, 3, low, z);
    for (auto& v : target) v = -v;
    auto y = solve_integral(m, target);
    if (!y)
        throw MathError(MathErrorKind::NeedsRefinement,
                        "no integral representative concentrated on triple overlaps; refine the cover");
    auto n = add(z, t.apply_delta(2, scatter(t, 2, low, *y)));
    auto b = t.engine().solve_coboundary(3, add(psi, n, -1), Coeff::Q());
    if (!b) throw std::logic_error("rational solve failed after integral lift");
    GerbeDatum out;
    out.B = t.component(2, 0, *b);
    out.A = t.component(2, 1, *b);
    out.sigma = t.component(2, 2, *b);
    for (auto& v : out.sigma) v = -v;
    return out;
}

GerbeDatum difference_flat(const TotalComplex& t, const GerbeDatum& a, const GerbeDatum& b) {
    if (pseudo_curvature_gerbe(t, a).total() != pseudo_curvature_gerbe(t, b).total())
        throw MathError(MathErrorKind::CurvatureMismatch, "pseudo-curvatures differ");
    return {add(a.sigma, b.sigma, -1), add(a.A, b.A, -1), add(a.B, b.B, -1)};
}

GerbeDatum add_data(const GerbeDatum& a, const GerbeDatum& b) {
    return {add(a.sigma, b.sigma), add(a.A, b.A), add(a.B, b.B)};
}

CohomologyClass flat_class(const TotalComplex& t, const GerbeDatum& flat) {
    if (!is_flat(t, flat)) throw MathError(MathErrorKind::NotFlat, "datum is not flat");
    return make_class(t, 2, add(add(flat.sigma, flat.A, -1), flat.B, -1), Coeff::QmodZ());
}

RationalVector tensor(const TotalComplex& t, const RationalVector& s1, const RationalVector& s2) {
    require_valid(t, s1);
    require_valid(t, s2);
    return add(s1, s2);
}

int ExtensionGroupoid::arrow(int g, int s) const {
    return g * order + static_cast<int>(((s % order) + order) % order);
}

ExtensionGroupoid extension_from_cocycle(const TotalComplex& t, const RationalVector& sigma, int order) {
    require_finite(t);
    if (order < 1) throw InputError("fiber order must be positive");
    auto problems = validate_extension_cocycle(t, sigma);
    if (!problems.empty()) throw MathError(MathErrorKind::NotClosed, problems.front());
    const auto& base = t.base().groupoid;
    int m = base.num_arrows();
    std::vector<int> twist(static_cast<std::size_t>(m) * m, 0);
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h) {
            if (!base.composable(g, h)) continue;
            Rational scaled = sigma[pair_cell(t, g, h)] * order;
            if (!is_integral(scaled))
                throw MathError(MathErrorKind::InvalidCocycle,
                                "value " + to_string(sigma[pair_cell(t, g, h)]) + " on (" + base.arrows[g].id + "," +
                                    base.arrows[h].id + ") is outside (1/" + std::to_string(order) + ")Z/Z");
            twist[g * m + h] = static_cast<int>(mod(as_integer(scaled), order));
        }
    ExtensionGroupoid r;
    r.base = base;
    r.order = order;
    std::vector<Arrow> arrows;
    for (int g = 0; g < m; ++g)
        for (int s = 0; s < order; ++s) {
            arrows.push_back({base.arrows[g].id + ":" + std::to_string(s), base.source(g), base.target(g)});
            r.projection.push_back(g);
            r.fiber.push_back(s);
        }
    int n = order;
    r.groupoid = make_groupoid(base.objects, arrows, [&](int x, int y) {
        int g = x / n, s = x % n, h = y / n, u = y % n;
        return base.compose(g, h) * n + (s + u + twist[g * m + h]) % n;
    });
    return r;
}

std::vector<std::string> validate_extension(const ExtensionGroupoid& r) {
    auto out = validate_groupoid(r.groupoid);
    if (!out.empty()) return out;
    const auto& g = r.groupoid;
    GroupoidMorphism pi;
    for (int x = 0; x < g.num_objects(); ++x) pi.object_map.push_back(x);
    pi.arrow_map = r.projection;
    for (const auto& p : validate_morphism(g, r.base, pi)) out.push_back("projection: " + p);
    int n = r.order;
    for (int a = 0; a < r.base.num_arrows(); ++a)
        for (int s = 0; s < n; ++s)
            if (r.projection[r.arrow(a, s)] != a || r.fiber[r.arrow(a, s)] != s)
                out.push_back("fiber action is not free and transitive over " + r.base.arrows[a].id);
    auto act = [&](int s, int x) { return r.arrow(r.projection[x], r.fiber[x] + s); };
    for (int x = 0; x < g.num_arrows(); ++x)
        for (int y = 0; y < g.num_arrows(); ++y) {
            if (!g.composable(x, y)) continue;
            for (int s = 0; s < n; ++s)
                for (int u = 0; u < n; ++u)
                    if (g.compose(act(s, x), act(u, y)) != act(s + u, g.compose(x, y))) {
                        out.push_back("centrality fails at (" + g.arrows[x].id + "," + g.arrows[y].id + ")");
                        s = n;
                        break;
                    }
        }
    return out;
}

RationalVector cocycle_from_extension(const TotalComplex& t, const ExtensionGroupoid& r, const std::vector<int>& section) {
    require_finite(t);
    const auto& base = t.base().groupoid;
    if (base.num_arrows() != r.base.num_arrows() || base.num_objects() != r.base.num_objects())
        throw InputError("extension lives over a different groupoid");
    std::vector<int> s = section;
    if (s.empty())
        for (int g = 0; g < base.num_arrows(); ++g) s.push_back(r.arrow(g, 0));
    if (static_cast<int>(s.size()) != base.num_arrows()) throw MathError(MathErrorKind::NotASection, "section has the wrong size");
    for (int g = 0; g < base.num_arrows(); ++g)
        if (s[g] < 0 || s[g] >= r.groupoid.num_arrows() || r.projection[s[g]] != g)
            throw MathError(MathErrorKind::NotASection, "section does not lie over " + base.arrows[g].id);
    auto sigma = t.zero(2);
    for (int g = 0; g < base.num_arrows(); ++g)
        for (int h = 0; h < base.num_arrows(); ++h) {
            if (!base.composable(g, h)) continue;
            int prod = r.groupoid.compose(s[g], s[h]);
            int diff = r.fiber[prod] - r.fiber[s[base.compose(g, h)]];
            sigma[pair_cell(t, g, h)] = mod_one(Rational(diff, r.order));
        }
    return sigma;
}

std::vector<RationalVector> enumerate_extension_classes(const TotalComplex& t, int order) {
    require_finite(t);
    require_exact_degree(t, 2);
    if (order < 1) throw InputError("fiber order must be positive");
    const auto& e = t.engine();
    auto torsion = e.circle_torsion_generators(2);
    auto orders = e.cohomology(2, Coeff::QmodZ()).torsion;
    auto free = e.circle_free_generators(2);
    // Each summand contributes a cyclic subgroup: (step * generator, count elements).
    std::vector<std::pair<RationalVector, int>> factors;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        Integer g = gcd(Integer(order), orders[i]);
        RationalVector step = torsion[i];
        for (auto& v : step) v *= Rational(orders[i] / g);
        factors.push_back({step, static_cast<int>(g)});
    }
    for (const auto& f : free) {
        RationalVector step = f;
        for (auto& v : step) v /= order;
        factors.push_back({step, order});
    }
    std::size_t total = 1;
    for (const auto& f : factors) {
        total *= static_cast<std::size_t>(f.second);
        if (total > 100000) throw SizeGuardExceeded(total, 100000);
    }
    std::vector<RationalVector> out;
    std::vector<int> digits(factors.size(), 0);
    for (std::size_t k = 0; k < total; ++k) {
        auto x = t.zero(2);
        for (std::size_t i = 0; i < factors.size(); ++i) x = add(x, factors[i].first, digits[i]);
        for (auto& v : x) v = mod_one(v);
        out.push_back(std::move(x));
        for (std::size_t i = factors.size(); i-- > 0;) {
            if (++digits[i] < factors[i].second) break;
            digits[i] = 0;
        }
    }
    return out;
}

Rational holonomy(const SimplicialComplex& k, const RationalVector& a, const RationalVector& loop) {
    auto edges = k.simplices_of_dim(1).size();
    if (a.size() != edges || loop.size() != edges) throw InputError("cochain and loop must be indexed by the edges");
    if (k.dimension() >= 2 && !is_integral(k.coboundary(1).apply(a)))
        throw MathError(MathErrorKind::NotFlat, "the 1-cochain is not flat");
    if (!is_zero(k.coboundary(0).apply_transpose(loop))) throw MathError(MathErrorKind::NotClosed, "the loop is not closed");
    Rational total = 0;
    for (std::size_t i = 0; i < edges; ++i) total += a[i] * loop[i];
    return mod_one(total);
}

bool holonomy_free(const SimplicialComplex& k, const RationalVector& a) {
    if (a.size() != k.simplices_of_dim(1).size()) throw InputError("cochain must be indexed by the edges");
    if (k.dimension() >= 2 && !is_integral(k.coboundary(1).apply(a)))
        throw MathError(MathErrorKind::NotFlat, "the 1-cochain is not flat");
    if (k.dimension() < 1) return true;
    return simplicial_engine(k).solve_coboundary(1, a, Coeff::QmodZ()).has_value();
}

RationalVector theorem_connection(const TotalComplex& t, const GerbeDatum& g, int object) {
    const auto& base = t.base();
    if (object < 0 || object >= base.groupoid.num_objects()) throw InputError("object out of range");
    auto eta = pseudo_curvature_gerbe(t, g).eta;
    const auto& k = base.complex;
    RationalVector a(k.simplices_of_dim(1).size());
    if (k.dimension() < 1) return a;
    int id = base.groupoid.identity[object];
    int c1 = t.nerve().levels.at(1).index_of({id});
    int c2 = t.nerve().levels.at(2).index_of({id, id});
    for (int e : base.object_carrier[object]) {
        if (k.simplex_dim(e) != 1) continue;
        a[k.position(e)] = g.A[t.index_of(1, c1, e)] - eta[t.index_of(2, c2, e)];
    }
    return a;
}

}  // namespace gcoh
