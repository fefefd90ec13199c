#pragma once

// Test-only reference computations. Nothing here calls into the engine's reduction or Smith code.

#include "gcoh/numeric.hpp"
#include "gcoh/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using gcoh::Integer;
using gcoh::Rational;
using Dense = std::vector<std::vector<Integer>>;

// Elementary divisors of an integer matrix by plain Euclidean diagonalization (no transforms kept),
// followed by a gcd/lcm pass to put them in divisibility order.
inline std::vector<Integer> elementary_divisors(Dense a) {
    std::vector<Integer> diag;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
                    pr = r;
                    pc = c;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool again = false;
        for (std::size_t r = t + 1; r < rows; ++r) {
            Integer q = a[r][t] / a[t][t];
            for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
            if (a[r][t] != 0) again = true;
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
            Integer q = a[t][c] / a[t][t];
            for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
            if (a[t][c] != 0) again = true;
        }
        if (again) continue;
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    // Normalize to a divisibility chain: repeatedly replace (x, y) by (gcd, lcm).
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            Integer g = gcd(diag[i], diag[j]);
            Integer l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

struct Group {
    int rank = 0;
    std::vector<Integer> torsion;
};

// Cohomology of a cochain complex given by dense coboundaries d[k]: C^k -> C^{k+1}.
inline Group cohomology_from(const std::vector<Dense>& d, const std::vector<int>& dims, int k) {
    auto divisors = [&](int i) -> std::vector<Integer> {
        if (i < 0 || i >= static_cast<int>(d.size()) || d[i].empty() || d[i][0].empty()) return {};
        return elementary_divisors(d[i]);
    };
    auto out_div = divisors(k);
    auto in_div = divisors(k - 1);
    Group g;
    g.rank = dims[k] - static_cast<int>(out_div.size()) - static_cast<int>(in_div.size());
    for (const auto& e : in_div)
        if (e > 1) g.torsion.push_back(e);
    return g;
}

// Normalized bar complex of a finite group given by a multiplication table with unit 0.
// C^k = functions on (G \ {e})^k.
inline Group group_cohomology(const std::vector<std::vector<int>>& mult, int k) {
    int n = static_cast<int>(mult.size());
    auto tuples = [&](int len) {
        std::vector<std::vector<int>> out{{}};
        for (int i = 0; i < len; ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& t : out)
                for (int g = 1; g < n; ++g) {
                    auto u = t;
                    u.push_back(g);
                    next.push_back(u);
                }
            out = next;
        }
        return out;
    };
    std::vector<Dense> d;
    std::vector<int> dims;
    for (int len = 0; len <= k + 1; ++len) dims.push_back(static_cast<int>(tuples(len).size()));
    for (int len = 0; len <= k; ++len) {
        auto src = tuples(len);
        auto dst = tuples(len + 1);
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < src.size(); ++i) index[src[i]] = static_cast<int>(i);
        Dense m(dst.size(), std::vector<Integer>(src.size()));
        for (std::size_t r = 0; r < dst.size(); ++r) {
            const auto& g = dst[r];
            auto add = [&](const std::vector<int>& t, int sign) {
                if (std::find(t.begin(), t.end(), 0) != t.end()) return;  // normalized: vanishes on identities
                m[r][index.at(t)] += sign;
            };
            add(std::vector<int>(g.begin() + 1, g.end()), 1);
            for (int i = 0; i < len; ++i) {
                std::vector<int> t;
                for (int j = 0; j <= len; ++j) {
                    if (j == i) {
                        t.push_back(mult[g[j]][g[j + 1]]);
                        ++j;
                    } else {
                        t.push_back(g[j]);
                    }
                }
                add(t, (i % 2 == 0) ? -1 : 1);
            }
            add(std::vector<int>(g.begin(), g.end() - 1), (len % 2 == 0) ? -1 : 1);
        }
        d.push_back(m);
    }
    return cohomology_from(d, dims, k);
}

inline std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

// Simplicial cohomology of K computed from scratch (own coboundary assembly).
inline Group simplicial_cohomology(const gcoh::SimplicialComplex& k, int degree) {
    int top = k.dimension();
    std::vector<Dense> d;
    std::vector<int> dims;
    for (int q = 0; q <= top + 1; ++q) dims.push_back(static_cast<int>(k.simplices_of_dim(q).size()));
    for (int q = 0; q <= top; ++q) {
        const auto& src = k.simplices_of_dim(q);
        const auto& dst = k.simplices_of_dim(q + 1);
        Dense m(dst.size(), std::vector<Integer>(src.size()));
        for (std::size_t r = 0; r < dst.size(); ++r) {
            const auto& verts = k.simplex(dst[r]);
            for (std::size_t j = 0; j < verts.size(); ++j) {
                auto face = verts;
                face.erase(face.begin() + static_cast<long>(j));
                int id = k.find(face);
                auto pos = std::find(src.begin(), src.end(), id) - src.begin();
                m[r][static_cast<std::size_t>(pos)] += (j % 2 == 0) ? 1 : -1;
            }
        }
        d.push_back(m);
    }
    if (degree > top) return {};
    return cohomology_from(d, dims, degree);
}

// Counts classes of normalized 2-cocycles on a group with values in (1/2)Z/Z, modulo coboundaries of
// normalized 1-cochains with values in (1/4)Z/Z. Values are stored as multiples of 1/4 mod 4.
inline int count_half_valued_extension_classes(const std::vector<std::vector<int>>& mult) {
    int n = static_cast<int>(mult.size());
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) pairs.push_back({a, b});
    auto value = [&](const std::vector<int>& sigma, int a, int b) {
        if (a == 0 || b == 0) return 0;
        return sigma[static_cast<std::size_t>((a - 1) * (n - 1) + (b - 1))];
    };
    std::vector<std::vector<int>> cocycles;
    std::size_t count = pairs.size();
    for (unsigned long mask = 0; mask < (1ul << count); ++mask) {
        std::vector<int> sigma(count);
        for (std::size_t i = 0; i < count; ++i) sigma[i] = (mask >> i & 1ul) ? 2 : 0;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c) {
                    int s = value(sigma, b, c) - value(sigma, mult[a][b], c) + value(sigma, a, mult[b][c]) -
                            value(sigma, a, b);
                    if (((s % 4) + 4) % 4 != 0) ok = false;
                }
        if (ok) cocycles.push_back(sigma);
    }
    std::vector<std::vector<int>> boundaries;
    int taus = 1;
    for (int i = 1; i < n; ++i) taus *= 4;
    for (int code = 0; code < taus; ++code) {
        std::vector<int> tau(static_cast<std::size_t>(n), 0);
        int rest = code;
        for (int g = 1; g < n; ++g) {
            tau[g] = rest % 4;
            rest /= 4;
        }
        std::vector<int> db(count);
        bool half_valued = true;
        for (std::size_t i = 0; i < count; ++i) {
            auto [a, b] = pairs[i];
            int v = ((tau[b] - tau[mult[a][b]] + tau[a]) % 4 + 4) % 4;
            if (v % 2 != 0) half_valued = false;
            db[i] = v;
        }
        if (half_valued) boundaries.push_back(db);
    }
    std::set<std::vector<int>> seen;
    int classes = 0;
    for (const auto& s : cocycles) {
        if (seen.count(s)) continue;
        ++classes;
        for (const auto& b : boundaries) {
            std::vector<int> t(count);
            for (std::size_t i = 0; i < count; ++i) t[i] = (s[i] + b[i]) % 4;
            seen.insert(t);
        }
    }
    return classes;
}

}  // namespace oracle
