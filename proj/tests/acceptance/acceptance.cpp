// One PASS/FAIL line per acceptance criterion. Usage: gcoh_acceptance <gcoh binary> <fixture dir>

#include "gcoh/bundles.hpp"
#include "gcoh/error.hpp"
#include "gcoh/fixtures.hpp"
#include "gcoh/gerbes.hpp"
#include "gcoh/morita.hpp"
#include "support/oracles.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>

using namespace gcoh;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    // Set when the criterion cannot hold for mathematical reasons that the run itself confirms.
    bool unattainable = false;
};

class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass_ = false;
            if (failures_.size() < 3) failures_.push_back(what);
        }
        ++count_;
    }
    Outcome outcome(const std::string& summary) const {
        Outcome o;
        o.pass = pass_;
        o.detail = summary + " (" + std::to_string(count_) + " checks)";
        for (const auto& f : failures_) o.detail += "; failed: " + f;
        return o;
    }
    bool ok() const { return pass_; }

private:
    bool pass_ = true;
    int count_ = 0;
    std::vector<std::string> failures_;
};

TotalComplex total(const CarriedGroupoid& base, int degree) {
    return TotalComplex(base, TotalOptions::for_degree(degree, base.complex.dimension()));
}

std::string group_text(const oracle::Group& g, const std::string& free) {
    AbelianGroupPresentation p;
    p.rank = g.rank;
    p.torsion = g.torsion;
    return p.to_string(free);
}

RationalVector add(RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

RationalVector sub(RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

RationalVector scaled(RationalVector v, const Rational& f) {
    for (auto& e : v) e *= f;
    return v;
}

RationalVector random_block(const TotalComplex& t, int n, int p, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 6);
    auto x = t.zero(n);
    auto [lo, hi] = t.block(n, p);
    for (int i = lo; i < hi; ++i) x[i] = Rational(num(rng), den(rng));
    return x;
}

bool nonabelian(const FiniteGroupoid& g) {
    for (int a = 0; a < g.num_arrows(); ++a)
        for (int b = 0; b < g.num_arrows(); ++b)
            if (g.composable(a, b) && g.composable(b, a) && g.compose(a, b) != g.compose(b, a)) return true;
    return false;
}

// Group homomorphism between one-object groupoids from an element map.
GroupoidMorphism hom(const FiniteGroupoid& g, const std::function<int(int)>& image) {
    GroupoidMorphism f{{0}, {}};
    for (int a = 0; a < g.num_arrows(); ++a) f.arrow_map.push_back(image(a));
    return f;
}

int parity(const std::string& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2;
}

Outcome criterion1() {
    Check c;
    for (const auto& name : fixture_names()) {
        auto t = total(fixture(name), 3);
        auto problems = t.check_identities();
        c.expect(problems.empty(), name + ": " + (problems.empty() ? "" : problems.front()));
    }
    return c.outcome("d^2, del^2, d del = del d, delta^2 vanish on every fixture up to degree 4");
}

Outcome criterion2() {
    Check c;
    for (int n : {2, 3, 4}) {
        auto t = total(carried_finite(cyclic_group(n)), 4);
        std::string pattern;
        for (int k = 0; k <= 4; ++k) {
            auto got = cohomology(t, k, Coeff::Z()).to_string("Z");
            auto want = group_text(oracle::group_cohomology(oracle::cyclic_table(n), k), "Z");
            c.expect(got == want, "Z/" + std::to_string(n) + " H^" + std::to_string(k) + ": " + got + " vs " + want);
            pattern += (k ? "," : "") + got;
        }
        std::string z = "Z/" + std::to_string(n);
        c.expect(pattern == "Z,0," + z + ",0," + z, "pattern " + pattern);
    }
    return c.outcome("H^k(Z/n, Z), n = 2,3,4, k <= 4 equals the bar-complex oracle and Z,0,Z/n,0,Z/n");
}

Outcome criterion3() {
    Check c;
    auto t = total(fixture("V4"), 3);
    auto h2 = cohomology(t, 2, Coeff::QmodZ());
    c.expect(h2.rank == 0 && h2.torsion_order() == 2, "H^2(V4, Q/Z) = " + h2.to_string("Q/Z"));
    auto classes = enumerate_extension_classes(t, 2);
    c.expect(classes.size() == 2, "class count " + std::to_string(classes.size()));
    c.expect(oracle::count_half_valued_extension_classes({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}) == 2,
             "oracle count");
    int nontrivial = 0;
    for (const auto& sigma : classes) {
        if (is_coboundary(t, 2, sigma, Coeff::QmodZ())) continue;
        ++nontrivial;
        auto r = extension_from_cocycle(t, sigma, 2);
        c.expect(r.groupoid.num_arrows() == 8, "order 8");
        c.expect(validate_groupoid(r.groupoid).empty(), "groupoid axioms");
        c.expect(validate_extension(r).empty(), "extension axioms");
        c.expect(nonabelian(r.groupoid), "nonabelian");
    }
    c.expect(nontrivial == 1, "exactly one nontrivial class");
    return c.outcome("|H^2(V4,Q/Z)| = 2, two classes, nontrivial one is a nonabelian group of order 8");
}

Outcome criterion4() {
    Check c;
    struct Case {
        std::string cover;
        std::vector<std::string> expected;
    };
    for (const Case& k : {Case{"triangle", {"Z", "Z"}}, Case{"triangle-halves", {"Z", "Z"}},
                          Case{"tetrahedron", {"Z", "0", "Z"}}, Case{"tetrahedron-split", {"Z", "0", "Z"}}}) {
        auto base = fixture(k.cover);
        auto t = total(base, 3);
        for (std::size_t q = 0; q < k.expected.size(); ++q) {
            auto got = cohomology(t, static_cast<int>(q), Coeff::Z()).to_string("Z");
            auto space = group_text(oracle::simplicial_cohomology(base.complex, static_cast<int>(q)), "Z");
            c.expect(got == space && got == k.expected[q], k.cover + " H^" + std::to_string(q) + " " + got);
        }
    }
    struct Map {
        std::string name;
        CarriedGroupoid source, target;
        GroupoidMorphism f;
    };
    std::vector<Map> maps;
    for (auto [fine, coarse] : {std::pair{"triangle-halves", "triangle"}, std::pair{"tetrahedron-split", "tetrahedron"}}) {
        auto fc = fixture_cover(fine), cc = fixture_cover(coarse);
        maps.push_back({std::string(fine) + " -> " + coarse, cech_groupoid(fc), cech_groupoid(cc),
                        refinement_morphism(fc, cc, containment_assignment(fc, cc))});
    }
    for (const auto& name : fixture_names()) {
        auto b = fixture(name);
        maps.push_back({name + " identity", b, b, identity_morphism(b.groupoid)});
    }
    maps.push_back({"pair(3) -> point", carried_finite(pair_groupoid(3)), fixture("trivial"),
                    GroupoidMorphism{{0, 0, 0}, std::vector<int>(9, 0)}});
    int validated = 0;
    for (const auto& m : maps) {
        if (!validate_morita(m.source, m.target, m.f).empty()) continue;
        ++validated;
        auto tt = total(m.target, 3), ts = total(m.source, 3);
        for (const auto& v : verify_invariance(tt, ts, m.f, Coeff::Z(), 3))
            c.expect(v.isomorphism, m.name + " degree " + std::to_string(v.degree) + ": " + v.reason);
    }
    c.expect(validated == static_cast<int>(maps.size()), "every listed morphism validates as Morita");
    return c.outcome("Cech cohomology matches S^1 / S^2; " + std::to_string(validated) +
                     " Morita morphisms induce isomorphisms in degrees <= 3");
}

Outcome criterion5() {
    Check c;
    auto t = total(fixture("tetrahedron"), 2);
    auto psi = de_rham_representative(t, 2, t.engine().integral_generators(2).at(0));
    c.expect(psi.has_value(), "generator curvature");
    if (!psi) return c.outcome("no generator");
    auto d = realize_bundle(t, *psi);
    auto chern = chern_class(t, d.c);
    auto cycle = fundamental_cycle(t);
    auto value = pair(cycle, chern.representative);
    c.expect(value == 1 || value == -1, "pairing " + to_string(value));
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 20; ++trial) {
        BundleDatum other{d.c, random_block(t, 1, 0, rng)};
        auto curv = pseudo_curvature(t, other).total();
        c.expect(is_coboundary(t, 2, sub(curv, chern.representative), Coeff::Q()).has_value(),
                 "trial " + std::to_string(trial) + " difference not a rational coboundary");
        c.expect(pair(cycle, curv) == value, "trial " + std::to_string(trial) + " pairing");
    }
    return c.outcome("generator bundle and 20 random pseudo-connections: [omega + Omega] = chern in Q, pairing " +
                     to_string(value));
}

Outcome criterion6() {
    Check c;
    {
        auto t = total(fixture("tetrahedron"), 2);
        auto psi = *de_rham_representative(t, 2, t.engine().integral_generators(2).at(0));
        std::mt19937 rng(7);
        for (int trial = 0; trial < 5; ++trial) {
            auto target = add(scaled(psi, trial - 2), t.apply_delta(1, random_block(t, 1, 0, rng)));
            auto d = realize_bundle(t, target);
            c.expect(pseudo_curvature(t, d).total() == target, "tetrahedron round trip " + std::to_string(trial));
        }
    }
    auto t = total(fixture("Z2"), 2);
    auto d0 = realize_bundle(t, t.zero(2));
    c.expect(is_zero(pseudo_curvature(t, d0).total()), "Z2 round trip");
    auto h1 = cohomology(t, 1, Coeff::QmodZ());
    std::set<std::vector<Integer>> classes;
    std::vector<std::pair<BundleDatum, std::vector<Integer>>> solutions;
    auto [lo, hi] = t.block(1, 1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto x = t.zero(1);
            x[lo] = Rational(a, 4);
            x[lo + 1] = Rational(b, 4);
            BundleDatum twisted;
            try {
                twisted = twist(t, d0, x);
            } catch (const Error&) {
                continue;
            }
            c.expect(pseudo_curvature(t, twisted).total() == pseudo_curvature(t, d0).total(), "twist keeps curvature");
            auto diff = difference_class(t, d0, twisted);
            classes.insert(diff.coordinates.torsion);
            solutions.push_back({twisted, diff.coordinates.torsion});
        }
    c.expect(h1.rank == 0 && h1.torsion_order() == 2, "H^1(Z/2, Q/Z) = " + h1.to_string("Q/Z"));
    c.expect(classes.size() == 2, "twisted classes " + std::to_string(classes.size()));
    for (const auto& [a, ca] : solutions)
        for (const auto& [b, cb] : solutions)
            c.expect(difference_class(t, a, b).trivial == (ca == cb), "difference_class separates solutions");
    return c.outcome("realize_bundle round-trips; Z/2 twists give " + std::to_string(classes.size()) +
                     " classes = |H^1(Z/2,Q/Z)|");
}

// sigma on G, copied onto every vertex of K for the constant groupoid G x K.
RationalVector constant_cocycle(const TotalComplex& finite, const TotalComplex& product, const RationalVector& sigma) {
    auto x = product.zero(2);
    const auto& k = product.base().complex;
    for (int cell = 0; cell < finite.nerve().levels[2].size(); ++cell) {
        int from = finite.index_of(2, cell, 0);
        for (int v : k.simplices_of_dim(0)) x[product.index_of(2, cell, v)] = sigma[from];
    }
    return x;
}

Outcome criterion7() {
    Check c;
    auto tf = total(fixture("V4"), 3);
    auto classes = enumerate_extension_classes(tf, 2);
    RationalVector sigma_f;
    for (const auto& s : classes)
        if (!is_coboundary(tf, 2, s, Coeff::QmodZ())) sigma_f = s;
    c.expect(!sigma_f.empty(), "nontrivial V4 cocycle");
    if (sigma_f.empty()) return c.outcome("no V4 cocycle");
    auto tp = total(constant_product(klein_four(), full_simplex(2)), 3);
    auto sigma = constant_cocycle(tf, tp, sigma_f);
    c.expect(validate_extension_cocycle(tp, sigma).empty(), "V4 x simplex cocycle");
    auto dd = dd_class(tp, sigma);
    c.expect(!dd.trivial && dd.group.rank == 0 && !dd.group.torsion.empty(), "dd nonzero torsion " + dd.group.to_string("Z"));
    c.expect(is_coboundary(tp, 3, dd.representative, Coeff::Q()).has_value(), "dd rationally trivial");
    std::mt19937 rng(99);
    RationalVector first;
    for (int trial = 0; trial < 20; ++trial) {
        GerbeDatum g{sigma, random_block(tp, 2, 1, rng), random_block(tp, 2, 0, rng)};
        auto psi = pseudo_curvature_gerbe(tp, g).total();
        c.expect(make_class(tp, 3, psi, Coeff::Q()).trivial, "pseudo-curvature rationally trivial");
        c.expect(same_class(tp, 3, psi, dd.representative, Coeff::Q()), "equals Q-image of dd");
        if (trial == 0) first = psi;
        else c.expect(same_class(tp, 3, psi, first, Coeff::Q()), "constant class");
    }
    bool v4_leg = c.ok();

    // Z/2 leg: a nontrivial sigma needs H^3(Z/2, Z) != 0.
    auto tz = total(fixture("Z2"), 3);
    auto h3 = cohomology(tz, 3, Coeff::Z());
    bool z2_empty = h3.is_trivial();
    bool every_z2_trivial = true;
    for (const auto& s : enumerate_extension_classes(tz, 4)) every_z2_trivial = every_z2_trivial && dd_class(tz, s).trivial;
    auto half = tz.zero(2);
    auto [lo, hi] = tz.block(2, 2);
    for (int i = lo; i < hi; ++i) {
        const auto& cell = tz.nerve().levels[2].cells[tz.cells(2)[i].nerve];
        if (cell[0] != tz.base().groupoid.identity[0] && cell[1] != tz.base().groupoid.identity[0]) half[i] = Rational(1, 2);
    }
    every_z2_trivial = every_z2_trivial && dd_class(tz, half).trivial;

    Outcome o = c.outcome("V4 leg: dd nonzero Z/2 torsion, 20 random (A,B) give a constant rational class equal to dd");
    if (v4_leg && z2_empty && every_z2_trivial) {
        o.pass = false;
        o.unattainable = true;
        o.detail = "V4 leg holds; Z/2 leg unattainable: H^3(Z/2, Z) = " + h3.to_string("Z") +
                   ", so every sigma over Z/2 (incl. sigma(t,t) = 1/2) has trivial dd class (see README)";
    }
    return o;
}

Outcome criterion8() {
    Check c;
    int pairs = 0;
    struct Base {
        std::string name;
        int order;
    };
    for (const Base& b : {Base{"Z2", 4}, Base{"Z4", 4}, Base{"V4", 2}, Base{"S3", 2}}) {
        auto t = total(fixture(b.name), 3);
        auto cocycles = enumerate_extension_classes(t, b.order);
        std::mt19937 rng(static_cast<unsigned>(b.order * 31 + b.name.size()));
        for (std::size_t i = 0, n = cocycles.size(); i < n; ++i)
            cocycles.push_back(add(cocycles[i], t.apply_delta(1, random_block(t, 1, 1, rng))));
        for (const auto& s1 : cocycles)
            for (const auto& s2 : cocycles) {
                auto d = dd_class(t, tensor(t, s1, s2));
                auto sum = add(dd_class(t, s1).representative, dd_class(t, s2).representative);
                c.expect(same_class(t, 3, d.representative, sum, Coeff::Z()), b.name + " additivity");
                ++pairs;
            }
    }
    struct Map {
        std::string name;
        CarriedGroupoid source, target;
        GroupoidMorphism f;
        int order;
    };
    auto z2 = fixture("Z2"), z4 = fixture("Z4"), v4 = fixture("V4"), s3 = fixture("S3"), e = fixture("trivial");
    std::vector<Map> maps{
        {"Z4 -> Z2", z4, z2, hom(z4.groupoid, [](int a) { return a % 2; }), 2},
        {"Z2 -> Z4", z2, z4, hom(z2.groupoid, [](int a) { return 2 * a; }), 4},
        {"V4 -> Z2", v4, z2, hom(v4.groupoid, [&](int a) { return v4.groupoid.arrows[a].id[0] - '0'; }), 2},
        {"Z2 -> V4", z2, v4, hom(z2.groupoid, [](int a) { return a == 0 ? 0 : 3; }), 2},
        {"S3 -> Z2", s3, z2, hom(s3.groupoid, [&](int a) { return parity(s3.groupoid.arrows[a].id); }), 2},
        {"e -> V4", e, v4, GroupoidMorphism{{0}, {0}}, 2},
        {"V4 identity", v4, v4, identity_morphism(v4.groupoid), 2},
    };
    for (auto [fine, coarse] : {std::pair{"triangle-halves", "triangle"}, std::pair{"tetrahedron-split", "tetrahedron"}}) {
        auto fc = fixture_cover(fine), cc = fixture_cover(coarse);
        maps.push_back({std::string(fine) + " -> " + coarse, cech_groupoid(fc), cech_groupoid(cc),
                        refinement_morphism(fc, cc, containment_assignment(fc, cc)), 0});
    }
    int morphisms = 0;
    for (const auto& m : maps) {
        c.expect(validate_morphism(m.source.groupoid, m.target.groupoid, m.f).empty(), m.name + " is a morphism");
        auto tt = total(m.target, 3), ts = total(m.source, 3);
        auto f = pullback_map(tt, ts, m.f);
        c.expect(check_chain_map(tt, ts, f).empty(), m.name + " chain map");
        std::vector<RationalVector> cocycles;
        if (m.order > 0) {
            cocycles = enumerate_extension_classes(tt, m.order);
        } else {
            cocycles.push_back(tt.zero(2));
            for (const auto& z : tt.engine().integral_generators(2)) {
                auto pure = de_rham_representative(tt, 2, z);
                if (pure && tt.is_pure(2, 2, *pure)) cocycles.push_back(scaled(*pure, Rational(1, 3)));
            }
        }
        for (const auto& sigma : cocycles) {
            auto pulled = f.at(2).apply(sigma);
            auto before = dd_class(tt, sigma);
            auto after = dd_class(ts, pulled);
            c.expect(same_class(ts, 3, after.representative, f.at(3).apply(before.representative), Coeff::Z()),
                     m.name + " naturality");
        }
        ++morphisms;
    }
    return c.outcome(std::to_string(pairs) + " tensor pairs additive; dd natural along " + std::to_string(morphisms) +
                     " fixture morphisms");
}

Outcome criterion9() {
    Check c;
    // Simple transitivity of difference_flat on solution sets of realize_gerbe.
    auto tv = total(fixture("V4"), 3);
    auto classes = enumerate_extension_classes(tv, 2);
    for (const auto& s : classes) {
        GerbeDatum flat{s, tv.zero(2), tv.zero(2)};
        auto base = realize_gerbe(tv, tv.zero(3));
        auto other = add_data(base, flat);
        auto back = difference_flat(tv, other, base);
        c.expect(same_class(tv, 2, flat_class(tv, back).representative, flat_class(tv, flat).representative, Coeff::QmodZ()),
                 "difference recovers the acting flat datum");
        c.expect(flat_class(tv, back).trivial == flat_class(tv, flat).trivial, "free action");
    }
    {
        auto tt = total(fixture("tetrahedron"), 3);
        std::mt19937 rng(5);
        GerbeDatum g{tt.zero(2), random_block(tt, 2, 1, rng), random_block(tt, 2, 0, rng)};
        auto psi = pseudo_curvature_gerbe(tt, g).total();
        auto a = realize_gerbe(tt, psi);
        c.expect(pseudo_curvature_gerbe(tt, a).total() == psi, "tetrahedron round trip");
        auto diff = difference_flat(tt, g, a);
        c.expect(is_flat(tt, diff), "difference of equal-curvature solutions is flat");
        auto moved = add_data(a, diff);
        c.expect(pseudo_curvature_gerbe(tt, moved).total() == psi, "acting keeps the curvature");
        c.expect(flat_class(tt, difference_flat(tt, g, moved)).trivial, "transitive: the action reaches g");
    }
    bool action_ok = c.ok();

    auto tz = total(fixture("Z2"), 3);
    auto h2 = cohomology(tz, 2, Coeff::QmodZ());
    std::set<std::vector<Integer>> flat_classes;
    auto [lo, hi] = tz.block(2, 2);
    int span = hi - lo;
    int combos = 1;
    for (int i = 0; i < span; ++i) combos *= 4;
    for (int code = 0; code < combos; ++code) {
        auto sigma = tz.zero(2);
        int rest = code;
        for (int i = lo; i < hi; ++i) {
            sigma[i] = Rational(rest % 4, 4);
            rest /= 4;
        }
        GerbeDatum g{sigma, tz.zero(2), tz.zero(2)};
        if (!validate_extension_cocycle(tz, sigma).empty() || !is_flat(tz, g)) continue;
        flat_classes.insert(flat_class(tz, g).coordinates.torsion);
    }
    Outcome o = c.outcome("difference_flat acts simply transitively");
    if (action_ok && flat_classes.size() == 1 && h2.is_trivial()) {
        o.pass = false;
        o.unattainable = true;
        o.detail = "difference_flat acts simply transitively (V4, tetrahedron); order-2 claim unattainable: flat data over "
                   "Z/2 form " + std::to_string(flat_classes.size()) + " class = |H^2(Z/2, Q/Z)| = |" +
                   h2.to_string("Q/Z") + "| (see README)";
    } else if (flat_classes.size() != 2 || h2.torsion_order() != 2) {
        o.pass = false;
        o.detail += "; flat classes over Z/2: " + std::to_string(flat_classes.size());
    }
    return o;
}

Outcome criterion10() {
    Check c;
    auto t = total(fixture("tetrahedron"), 2);
    auto g = *de_rham_representative(t, 2, t.engine().integral_generators(2).at(0));
    std::string values;
    for (auto [label, f] : {std::pair{"generator", Rational(1)}, std::pair{"negative", Rational(-1)},
                            std::pair{"double", Rational(2)}, std::pair{"half", Rational(1, 2)}}) {
        auto x = scaled(g, f);
        bool lift = is_integer_class(t, 2, x);
        auto report = integrality_by_pairing(t, 2, x);
        c.expect(lift == report.integral, std::string(label) + " disagreement");
        c.expect(lift == is_integral(f), std::string(label) + " verdict");
        c.expect(report.values.size() == 1, "one free generator");
        if (!report.values.empty()) values += std::string(values.empty() ? "" : ", ") + label + " " + to_string(report.values[0]);
        if (f == Rational(1, 2) && !report.values.empty())
            c.expect(report.values[0] == Rational(1, 2) || report.values[0] == Rational(-1, 2), "half pairs to 1/2");
    }
    return c.outcome("is_integer_class and pairings agree; pairings " + values);
}

Outcome criterion11() {
    Check c;
    std::mt19937 rng(3);
    for (const auto& k : {triangle_boundary(), tetrahedron_boundary(), full_simplex(3)}) {
        std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
        RationalVector f(k.simplices_of_dim(0).size()), z(k.simplices_of_dim(1).size());
        for (auto& v : f) v = Rational(num(rng), den(rng));
        for (auto& v : z) v = Rational(num(rng));
        auto a = add(k.coboundary(0).apply(f), z);
        if (k.dimension() >= 2) {
            auto boundary = k.coboundary(1);
            for (int row = 0; row < static_cast<int>(k.simplices_of_dim(2).size()); ++row) {
                RationalVector unit(k.simplices_of_dim(2).size());
                unit[row] = 1;
                c.expect(holonomy(k, a, boundary.apply_transpose(unit)) == 0, "boundary holonomy");
            }
            c.expect(holonomy_free(k, k.coboundary(0).apply(f)), "exact cochain is holonomy free");
        }
    }
    auto k = triangle_boundary();
    RationalVector half(k.simplices_of_dim(1).size());
    half[0] = Rational(1, 2);
    // Fundamental loop v0 -> v1 -> v2 -> v0 on ascending-vertex edges.
    RationalVector loop;
    for (int e : k.simplices_of_dim(1)) {
        const auto& s = k.simplex(e);
        loop.push_back(s[0] == 0 && s[1] == 2 ? Rational(-1) : Rational(1));
    }
    auto h = holonomy(k, half, loop);
    c.expect(h == Rational(1, 2), "triangle loop holonomy " + to_string(h));
    c.expect(!holonomy_free(k, half), "half-weight cochain is not holonomy free");
    return c.outcome("zero on all boundaries; triangle fundamental loop gives " + circle_to_string(h));
}

std::string capture(const std::string& command, int& status) {
    std::string out;
    std::array<char, 4096> buf{};
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

Outcome criterion12(const std::string& gcoh, const std::string& dir) {
    Check c;
    std::vector<std::string> jobs{
        "cohomology --max-degree 4 z2.groupoid.json",
        "cohomology --max-degree 4 z4.groupoid.json",
        "cohomology --coeff QmodZ v4.groupoid.json",
        "cohomology s3.groupoid.json",
        "cohomology trivial.groupoid.json",
        "cohomology triangle.cover.json",
        "cohomology triangle-halves.cover.json",
        "cohomology --max-degree 2 tetrahedron.cover.json",
        "cohomology --max-degree 2 tetrahedron-split.cover.json",
        "homology z2-times-circle.groupoid.json",
        "nerve --max-degree 2 v4.groupoid.json",
        "validate v4-extension.groupoid.json",
        "dd-class v4-extension.groupoid.json",
        "extension-cocycle v4-extension.groupoid.json",
        "enumerate-extensions --fiber-order 2 v4.groupoid.json",
        "extension-build --fiber-order 2 v4-sigma.cochain.json",
        "tensor v4-sigma.cochain.json v4-sigma.cochain.json",
        "gerbe-curvature v4-sigma.cochain.json",
        "flat-check z2-sigma.cochain.json",
        "chern tetrahedron-bundle.cochain.json",
        "realize-bundle tetrahedron-psi.cochain.json",
        "realize-bundle z2-zero-curvature.cochain.json z2-twist.cochain.json",
        "integrality tetrahedron-half-psi.cochain.json",
        "pair tetrahedron-psi.cochain.json",
        "holonomy triangle.complex.json triangle-half.cochain.json triangle-loop.chain.json",
        "morita-validate tetrahedron-refinement.morphism.json",
        "morita-verify triangle-refinement.morphism.json",
        "refine triangle-halves.cover.json triangle.cover.json",
        "pullback triangle-refinement.morphism.json triangle-potential.cochain.json",
    };
    int runs = 0;
    for (const auto& job : jobs)
        for (const std::string format : {"json", "table"}) {
            std::string cmd = "cd '" + dir + "' && '" + gcoh + "' --format " + format + " " + job + " 2>&1";
            int s1 = 0, s2 = 0;
            auto first = capture(cmd, s1);
            auto second = capture(cmd, s2);
            c.expect(!first.empty() && first == second && s1 == s2, job + " (" + format + ")");
            c.expect(s1 == 0, job + " exit status");
            runs += 2;
        }
    return c.outcome(std::to_string(runs) + " CLI runs over " + std::to_string(jobs.size()) +
                     " fixture jobs are byte-identical in pairs");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: gcoh_acceptance <gcoh binary> <fixture dir>\n";
        return 2;
    }
    std::string gcoh = std::filesystem::absolute(argv[1]).string(), dir = argv[2];
    std::vector<std::function<Outcome()>> criteria{
        criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
        criterion7, criterion8, criterion9, criterion10, criterion11,
        [&] { return criterion12(gcoh, dir); },
    };
    int hard_failures = 0, unattainable = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << ": " << o.detail
                  << (o.unattainable ? " [unattainable]" : "") << std::endl;
        if (!o.pass) (o.unattainable ? unattainable : hard_failures)++;
    }
    std::cout << "summary: " << (12 - hard_failures - unattainable) << " passed, " << unattainable
              << " unattainable, " << hard_failures << " failed" << std::endl;
    return hard_failures == 0 ? 0 : 1;
}
