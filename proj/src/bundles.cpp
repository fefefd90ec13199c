#include "gcoh/bundles.hpp"

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

}  // namespace

RationalVector PseudoCurvature::total() const { return add(omega, Omega); }

std::vector<std::string> validate_bundle(const TotalComplex& t, const RationalVector& c) {
    std::vector<std::string> out;
    if (static_cast<int>(c.size()) != t.dim(1)) {
        out.push_back("cocycle must have " + std::to_string(t.dim(1)) + " entries");
        return out;
    }
    if (!t.is_pure(1, 1, c)) out.push_back("cocycle has entries outside bidegree (1,0)");
    auto dc = t.apply_horizontal(1, t.component(1, 1, c));
    auto [lo, hi] = t.block(2, 2);
    for (int i = lo; i < hi; ++i)
        if (!is_integral(dc[i])) out.push_back("multiplicativity fails mod Z on " + t.cell_label(2, i));
    if (out.empty() && t.top_degree() >= 3 && !is_zero(t.apply_vertical(2, dc)))
        out.push_back("integer jump del c is not locally constant");
    return out;
}

CohomologyClass chern_class(const TotalComplex& t, const RationalVector& c) {
    auto problems = validate_bundle(t, c);
    if (!problems.empty()) throw MathError(MathErrorKind::InvalidCocycle, problems.front());
    return make_class(t, 2, t.apply_horizontal(1, c), Coeff::Z());
}

PseudoCurvature pseudo_curvature(const TotalComplex& t, const BundleDatum& b) {
    auto problems = validate_bundle(t, b.c);
    if (!problems.empty()) throw MathError(MathErrorKind::InvalidCocycle, problems.front());
    require_pure(t, 1, 0, b.A, "connection");
    PseudoCurvature out;
    out.omega = t.component(2, 1, add(t.apply_horizontal(1, b.A), t.apply_vertical(1, b.c)));
    out.Omega = t.component(2, 0, t.apply_vertical(1, b.A));
    if (t.top_degree() >= 3 && !is_zero(t.apply_delta(2, out.total())))
        throw std::logic_error("pseudo-curvature is not closed");
    return out;
}

BundleDatum realize_bundle(const TotalComplex& t, const RationalVector& psi) {
    require_exact_degree(t, 2);
    if (static_cast<int>(psi.size()) != t.dim(2)) throw InputError("curvature has the wrong length");
    if (!is_zero(t.component(2, 2, psi))) throw InputError("curvature must vanish in bidegree (2,0)");
    if (!is_zero(t.apply_delta(2, psi))) throw MathError(MathErrorKind::NotClosed, "omega + Omega is not closed");
    auto lift = t.engine().integral_lift(2, psi);
    if (!lift) {
        auto report = integrality_by_pairing(t, 2, psi);
        nlohmann::json pairings = nlohmann::json::array();
        for (const auto& v : report.values) pairings.push_back(to_string(v));
        throw MathError(MathErrorKind::NotIntegral, "the class of omega + Omega is not integral",
                        nlohmann::json{{"pairings", pairings}}.dump());
    }
    const auto& z = lift->first;
    // Move the integral representative into bidegree (2,0).
    std::vector<int> low{0, 1}, all{0, 1};
    auto m = block_matrix(t, t.delta(1), 2, low, 1, all);
    auto target = gather(t, 2, low, z);
    for (auto& v : target) v = -v;
    auto y = solve_integral(m, target);
    if (!y)
        throw MathError(MathErrorKind::NeedsRefinement,
                        "no integral representative concentrated on double overlaps; refine the cover");
    auto n = add(z, t.apply_delta(1, scatter(t, 1, all, *y)));
    auto b = t.engine().solve_coboundary(2, add(psi, n, -1), Coeff::Q());
    if (!b) throw std::logic_error("rational solve failed after integral lift");
    BundleDatum out;
    out.A = t.component(1, 0, *b);
    out.c = t.component(1, 1, *b);
    for (auto& v : out.c) v = -v;
    return out;
}

CohomologyClass difference_class(const TotalComplex& t, const BundleDatum& a, const BundleDatum& b) {
    auto pa = pseudo_curvature(t, a).total();
    auto pb = pseudo_curvature(t, b).total();
    if (pa != pb) throw MathError(MathErrorKind::CurvatureMismatch, "pseudo-curvatures differ");
    auto x = add(add(a.c, b.c, -1), add(a.A, b.A, -1), -1);
    return make_class(t, 1, std::move(x), Coeff::QmodZ());
}

BundleDatum twist(const TotalComplex& t, const BundleDatum& b, const RationalVector& x) {
    if (static_cast<int>(x.size()) != t.dim(1)) throw InputError("twist has the wrong length");
    auto dx = t.apply_delta(1, x);
    if (!is_integral(dx)) throw MathError(MathErrorKind::NotClosed, "twist is not a Q/Z cocycle");
    if (!t.is_pure(2, 2, dx))
        throw MathError(MathErrorKind::InvalidCocycle, "twist must have its coboundary in bidegree (2,0)");
    BundleDatum out;
    out.c = add(b.c, t.component(1, 1, x));
    out.A = add(b.A, t.component(1, 0, x), -1);
    return out;
}

}  // namespace gcoh
