#include "gcoh/total_complex.hpp"

#include "gcoh/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

namespace gcoh {

TotalOptions TotalOptions::for_degree(int max_degree, int complex_dimension, std::size_t cell_cap) {
    if (max_degree < 0) throw InputError("maximal degree must be nonnegative");
    TotalOptions o;
    o.p_max = max_degree + 1;
    o.k_max = std::min(max_degree + 1, complex_dimension);
    o.total_max = max_degree + 1;
    o.cell_cap = cell_cap;
    return o;
}

TotalComplex::TotalComplex(std::shared_ptr<const CarriedGroupoid> base, TotalOptions options)
    : base_(std::move(base)), options_(options) {
    build();
}

TotalComplex::TotalComplex(const CarriedGroupoid& base, TotalOptions options)
    : TotalComplex(std::make_shared<const CarriedGroupoid>(base), options) {}

void TotalComplex::build() {
    if (options_.p_max < 0 || options_.k_max < 0 || options_.total_max < 0)
        throw InputError("total complex bounds must be nonnegative");
    const auto& k = base_->complex;
    int dim_k = k.dimension();
    int k_top = std::min(options_.k_max, dim_k);
    int big = std::numeric_limits<int>::max();
    int k_bound = options_.k_max >= dim_k ? big : options_.k_max;
    valid_max_ = std::min({options_.p_max, options_.total_max, k_bound}) - 1;

    nerve_ = carried_nerve(*base_, std::min(options_.p_max, options_.total_max), options_.cell_cap);
    int p_top = static_cast<int>(nerve_.levels.size()) - 1;

    simplices_.resize(static_cast<std::size_t>(p_top + 1));
    offsets_.resize(static_cast<std::size_t>(p_top + 1));
    for (int p = 0; p <= p_top; ++p) {
        int count = nerve_.levels[p].size();
        simplices_[p].resize(static_cast<std::size_t>(count));
        offsets_[p].resize(static_cast<std::size_t>(count));
        for (int c = 0; c < count; ++c) {
            auto& lists = simplices_[p][c];
            lists.resize(static_cast<std::size_t>(k_top + 1));
            for (int s : nerve_.carriers[p][c]) {
                int d = k.simplex_dim(s);
                if (d <= k_top) lists[d].push_back(s);
            }
            offsets_[p][c].assign(static_cast<std::size_t>(k_top + 1), -1);
        }
    }

    int top = options_.total_max;
    cells_.assign(static_cast<std::size_t>(top + 1), {});
    std::size_t total = 0;
    for (int n = 0; n <= top; ++n) {
        for (int p = 0; p <= std::min(n, p_top); ++p) {
            int kk = n - p;
            if (kk > k_top) continue;
            for (int c = 0; c < nerve_.levels[p].size(); ++c) {
                offsets_[p][c][kk] = static_cast<int>(cells_[n].size());
                for (int s : simplices_[p][c][kk]) cells_[n].push_back({p, kk, c, s});
            }
        }
        total += cells_[n].size();
        if (total > options_.cell_cap) throw SizeGuardExceeded(total, options_.cell_cap);
    }

    for (int n = 0; n < top; ++n) {
        std::vector<Triplet> vert, horiz, tot;
        const auto& targets = cells_[n + 1];
        for (int row = 0; row < static_cast<int>(targets.size()); ++row) {
            const Cell& t = targets[row];
            if (t.k >= 1) {
                for (int j = 0; j <= t.k; ++j) {
                    int col = index_of(t.p, t.nerve, k.face(t.simplex, j));
                    std::int64_t sign = (j % 2 == 0) ? 1 : -1;
                    vert.push_back({row, col, sign});
                    tot.push_back({row, col, (t.p % 2 == 0) ? sign : -sign});
                }
            }
            if (t.p >= 1) {
                for (int i = 0; i <= t.p; ++i) {
                    int f = nerve_.levels[t.p].faces[i][t.nerve];
                    int col = index_of(t.p - 1, f, t.simplex);
                    std::int64_t sign = (i % 2 == 0) ? 1 : -1;
                    horiz.push_back({row, col, sign});
                    tot.push_back({row, col, sign});
                }
            }
        }
        int rows = dim(n + 1), cols = dim(n);
        vertical_.push_back(SparseMatrix::from_triplets(rows, cols, vert));
        horizontal_.push_back(SparseMatrix::from_triplets(rows, cols, horiz));
        delta_.push_back(SparseMatrix::from_triplets(rows, cols, tot));
    }

    std::vector<int> dims;
    for (int n = 0; n <= top; ++n) dims.push_back(dim(n));
    engine_ = std::make_unique<CohomologyEngine>(delta_, dims);
}

std::size_t TotalComplex::total_cells() const {
    std::size_t total = 0;
    for (const auto& c : cells_) total += c.size();
    return total;
}

int TotalComplex::index_of(int p, int nerve_cell, int simplex) const {
    if (p < 0 || p >= static_cast<int>(simplices_.size())) return -1;
    if (nerve_cell < 0 || nerve_cell >= static_cast<int>(simplices_[p].size())) return -1;
    int kk = base_->complex.simplex_dim(simplex);
    const auto& lists = simplices_[p][nerve_cell];
    if (kk >= static_cast<int>(lists.size())) return -1;
    int base = offsets_[p][nerve_cell][kk];
    if (base < 0) return -1;
    const auto& list = lists[kk];
    auto it = std::lower_bound(list.begin(), list.end(), simplex);
    if (it == list.end() || *it != simplex) return -1;
    return base + static_cast<int>(it - list.begin());
}

std::pair<int, int> TotalComplex::block(int n, int p) const {
    check_degree(n);
    const auto& cs = cells_[n];
    auto lo = std::lower_bound(cs.begin(), cs.end(), p, [](const Cell& c, int v) { return c.p < v; });
    auto hi = std::upper_bound(cs.begin(), cs.end(), p, [](int v, const Cell& c) { return v < c.p; });
    return {static_cast<int>(lo - cs.begin()), static_cast<int>(hi - cs.begin())};
}

bool TotalComplex::has_bidegree(int p, int k) const {
    return p >= 0 && k >= 0 && p + k <= options_.total_max && p < static_cast<int>(simplices_.size()) &&
           k <= std::min(options_.k_max, base_->complex.dimension());
}

void TotalComplex::check_degree(int n) const {
    if (n < 0 || n > options_.total_max)
        throw InputError("degree " + std::to_string(n) + " outside the materialized range 0.." +
                         std::to_string(options_.total_max));
}

RationalVector TotalComplex::apply_delta(int n, const RationalVector& x) const { return delta_.at(n).apply(x); }
RationalVector TotalComplex::apply_vertical(int n, const RationalVector& x) const { return vertical_.at(n).apply(x); }
RationalVector TotalComplex::apply_horizontal(int n, const RationalVector& x) const {
    return horizontal_.at(n).apply(x);
}

RationalVector TotalComplex::component(int n, int p, const RationalVector& x) const {
    auto [lo, hi] = block(n, p);
    RationalVector out = zero(n);
    for (int i = lo; i < hi; ++i) out[i] = x.at(i);
    return out;
}

bool TotalComplex::is_pure(int n, int p, const RationalVector& x) const {
    auto [lo, hi] = block(n, p);
    for (int i = 0; i < dim(n); ++i)
        if ((i < lo || i >= hi) && x.at(i) != 0) return false;
    return true;
}

RationalVector TotalComplex::pullback_along_face(int p, int k, int i, const RationalVector& c) const {
    if (p < 1 || i < 0 || i > p) throw InputError("face index out of range");
    if (!has_bidegree(p, k) || !has_bidegree(p - 1, k)) throw InputError("bidegree outside the materialized range");
    int n = p + k;
    if (static_cast<int>(c.size()) != dim(n - 1)) throw InputError("cochain has the wrong length for its degree");
    RationalVector out = zero(n);
    auto [lo, hi] = block(n, p);
    for (int idx = lo; idx < hi; ++idx) {
        const Cell& cell = cells_[n][idx];
        int f = nerve_.levels[p].faces[i][cell.nerve];
        out[idx] = c[index_of(p - 1, f, cell.simplex)];
    }
    return out;
}

std::string TotalComplex::cell_label(int n, int index) const {
    const Cell& c = cells_.at(n).at(index);
    const auto& g = base_->groupoid;
    const auto& tuple = nerve_.levels[c.p].cells[c.nerve];
    std::string out = "(";
    if (c.p == 0) {
        out += g.objects[tuple[0]];
    } else {
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) out += ",";
            out += g.arrows[tuple[i]].id;
        }
    }
    out += ")";
    if (base_->regime != CarriedGroupoid::Regime::Finite) out += base_->complex.simplex_name(c.simplex);
    return out;
}

std::vector<std::string> TotalComplex::check_identities() const {
    std::vector<std::string> out;
    int top = options_.total_max;
    for (int n = 0; n + 2 <= top; ++n) {
        std::string at = " from degree " + std::to_string(n);
        if (!(vertical_[n + 1] * vertical_[n]).is_zero()) out.push_back("d^2 != 0" + at);
        if (!(horizontal_[n + 1] * horizontal_[n]).is_zero()) out.push_back("horizontal^2 != 0" + at);
        if (!(vertical_[n + 1] * horizontal_[n] + (horizontal_[n + 1] * vertical_[n]).scaled(-1)).is_zero())
            out.push_back("d and horizontal do not commute" + at);
        if (!(delta_[n + 1] * delta_[n]).is_zero()) out.push_back("delta^2 != 0" + at);
    }
    return out;
}

std::vector<int> orient_pseudomanifold(const SimplicialComplex& k) {
    int n = k.dimension();
    if (n < 1) throw InputError("fundamental cycle needs a complex of dimension >= 1");
    const auto& tops = k.simplices_of_dim(n);
    std::map<int, std::vector<std::pair<int, int>>> cofaces;  // face id -> (top position, j)
    for (int pos = 0; pos < static_cast<int>(tops.size()); ++pos)
        for (int j = 0; j <= n; ++j) cofaces[k.face(tops[pos], j)].push_back({pos, j});
    for (int f : k.simplices_of_dim(n - 1)) {
        auto it = cofaces.find(f);
        if (it == cofaces.end() || it->second.size() != 2)
            throw InputError("complex is not a closed pseudomanifold at " + k.simplex_name(f));
    }
    std::vector<int> sign(tops.size(), 0);
    for (std::size_t start = 0; start < tops.size(); ++start) {
        if (sign[start]) continue;
        sign[start] = 1;
        std::queue<int> queue;
        queue.push(static_cast<int>(start));
        while (!queue.empty()) {
            int pos = queue.front();
            queue.pop();
            for (int j = 0; j <= n; ++j) {
                for (const auto& [other, jj] : cofaces[k.face(tops[pos], j)]) {
                    if (other == pos) continue;
                    // Boundary coefficients on the shared face must cancel.
                    int want = -sign[pos] * ((j % 2) ? -1 : 1) * ((jj % 2) ? -1 : 1);
                    if (sign[other] == 0) {
                        sign[other] = want;
                        queue.push(other);
                    } else if (sign[other] != want) {
                        throw InputError("complex is not orientable");
                    }
                }
            }
        }
    }
    return sign;
}

RationalVector fundamental_cycle(const TotalComplex& t) {
    const auto& base = t.base();
    if (base.regime != CarriedGroupoid::Regime::Cech)
        throw InputError("fundamental cycle needs a Cech groupoid of a cover");
    const auto& k = base.complex;
    int n = k.dimension();
    if (t.top_degree() < n || !t.has_bidegree(n, 0) || !t.has_bidegree(0, n))
        throw InputError("total complex too small for the fundamental cycle (need degree " + std::to_string(n) + ")");
    auto sign = orient_pseudomanifold(k);
    int m = base.groupoid.num_objects();
    std::vector<int> alpha(static_cast<std::size_t>(k.num_simplices()), -1);
    for (int s = 0; s < k.num_simplices(); ++s)
        for (int a = 0; a < m && alpha[s] < 0; ++a)
            if (std::binary_search(base.object_carrier[a].begin(), base.object_carrier[a].end(), s)) alpha[s] = a;

    using Key = std::pair<std::vector<int>, int>;  // patch sequence, simplex
    std::vector<std::map<Key, Rational>> pieces(static_cast<std::size_t>(n + 1));
    const auto& tops = k.simplices_of_dim(n);
    for (std::size_t i = 0; i < tops.size(); ++i) pieces[0][{{alpha[tops[i]]}, tops[i]}] += sign[i];
    for (int p = 0; p < n; ++p) {
        std::map<Key, Rational> w;
        Rational outer = (p % 2 == 0) ? -1 : 1;
        for (const auto& [key, coeff] : pieces[p]) {
            if (coeff == 0) continue;
            int dim = k.simplex_dim(key.second);
            for (int j = 0; j <= dim; ++j) w[{key.first, k.face(key.second, j)}] += outer * ((j % 2) ? -coeff : coeff);
        }
        for (const auto& [key, coeff] : w) {
            if (coeff == 0) continue;
            std::vector<int> seq{alpha[key.second]};
            seq.insert(seq.end(), key.first.begin(), key.first.end());
            pieces[p + 1][{seq, key.second}] += coeff;
        }
    }
    RationalVector chain = t.zero(n);
    const auto& levels = t.nerve().levels;
    for (int p = 0; p <= n; ++p)
        for (const auto& [key, coeff] : pieces[p]) {
            if (coeff == 0) continue;
            std::vector<int> cell;
            if (p == 0) {
                cell = key.first;
            } else {
                for (int i = 0; i < p; ++i) cell.push_back(base.pair_arrow(key.first[i], key.first[i + 1]));
            }
            int idx = t.index_of(p, levels[p].index_of(cell), key.second);
            if (idx < 0) throw std::logic_error("fundamental cycle cell missing from the total complex");
            chain[idx] += coeff;
        }
    if (n >= 1 && !is_zero(t.delta(n - 1).apply_transpose(chain)))
        throw std::logic_error("assembled fundamental cycle has nonzero boundary");
    return chain;
}

Rational pair(const RationalVector& chain, const RationalVector& cochain) {
    if (chain.size() != cochain.size()) throw InputError("pairing needs a chain and a cochain of the same degree");
    Rational sum = 0;
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (chain[i] != 0 && cochain[i] != 0) sum += chain[i] * cochain[i];
    return sum;
}

}  // namespace gcoh
