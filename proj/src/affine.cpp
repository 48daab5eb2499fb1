#include "krc/affine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace krc {

namespace {

// ---------------------------------------------------------------- promotion

// grid[i][c] = column c at height i; letters grow with i, so the largest
// letters sit at i = R-1 and slides move holes toward index 0.
std::vector<std::vector<int>> to_grid(const Tableau& t) {
    int R = (int)t.cols[0].size(), S = t.width();
    std::vector<std::vector<int>> grid(R, std::vector<int>(S));
    for (int c = 0; c < S; ++c)
        for (int h = 0; h < R; ++h) grid[h][c] = t.cols[c][h];
    return grid;
}

Tableau from_grid(ClassicalType type, const std::vector<std::vector<int>>& grid) {
    int R = (int)grid.size(), S = (int)grid[0].size();
    Tableau t{type, false, {}};
    t.cols.assign(S, {});
    for (int c = 0; c < S; ++c)
        for (int h = 0; h < R; ++h) t.cols[c].push_back((Letter)grid[h][c]);
    return t;
}

}  // namespace

Tableau promotion(const Tableau& t) {
    if (t.cols.empty()) return t;
    const int m = t.type.rank + 1;
    auto grid = to_grid(t);
    const int R = (int)grid.size(), S = (int)grid[0].size();
    const int HOLE = 0;
    // in a rectangle every letter m lives in the bottom row
    std::vector<int> holes;
    for (int c = 0; c < S; ++c)
        if (grid[R - 1][c] == m) { grid[R - 1][c] = HOLE; holes.push_back(c); }
    // reverse jeu de taquin, leftmost hole first; ties slide the upper cell
    for (int c : holes) {
        int i = R - 1, j = c;
        while (true) {
            bool has_up = i > 0 && grid[i - 1][j] != HOLE;
            bool has_left = j > 0 && grid[i][j - 1] != HOLE;
            if (!has_up && !has_left) break;
            if (has_up && (!has_left || grid[i - 1][j] >= grid[i][j - 1])) {
                grid[i][j] = grid[i - 1][j];
                grid[i - 1][j] = HOLE;
                --i;
            } else {
                grid[i][j] = grid[i][j - 1];
                grid[i][j - 1] = HOLE;
                --j;
            }
        }
    }
    for (auto& row : grid)
        for (int& x : row) x = x == HOLE ? 1 : x + 1;
    return from_grid(t.type, grid);
}

Tableau promotion_inverse(const Tableau& t) {
    Tableau out = t;
    for (int k = 0; k < t.type.rank; ++k) out = promotion(out);
    return out;
}

// ------------------------------------------------------------ decomposition

std::vector<Partition> classical_decomposition_shapes(const KRIndex& idx) {
    const int n = idx.type.rank, r = idx.r, s = idx.s;
    auto fam = idx.type.family;
    std::vector<Partition> shapes;
    auto push_heights = [&](const std::vector<int>& heights) {
        Partition h;
        for (int x : heights)
            if (x) h.push_back(x);
        shapes.push_back(rows_from_column_heights(h));
    };
    switch (fam) {
        case Family::A1:
            shapes.push_back(Partition(r, s));
            return shapes;
        case Family::B1:
        case Family::D1:
        case Family::A2odd: {
            bool vertical = (fam == Family::B1 && r <= n - 1) ||
                            (fam == Family::D1 && r <= n - 2) || fam == Family::A2odd;
            if (!vertical) {  // spin cases
                shapes.push_back(Partition(n, s));
                return shapes;
            }
            // all height vectors h_1 >= ... >= h_s with h_i <= r, h_i == r mod 2
            std::vector<int> h(s, r);
            std::function<void(int, int)> rec = [&](int c, int maxh) {
                if (c == s) { push_heights(h); return; }
                for (int v = maxh; v >= (r % 2 ? 1 : 0); v -= 2) {
                    h[c] = v;
                    rec(c + 1, v);
                }
            };
            rec(0, r);
            return shapes;
        }
        case Family::C1: {
            if (r == n) {
                shapes.push_back(Partition(n, s));
                return shapes;
            }
            // all row vectors l_1 >= ... >= l_r with l_i <= s, l_i == s mod 2
            std::vector<int> rows(r, s);
            std::function<void(int, int)> rec = [&](int i, int maxl) {
                if (i == r) {
                    Partition p;
                    for (int x : rows)
                        if (x) p.push_back(x);
                    shapes.push_back(p);
                    return;
                }
                for (int v = maxl; v >= (s % 2 ? 1 : 0); v -= 2) {
                    rows[i] = v;
                    rec(i + 1, v);
                }
            };
            rec(0, s);
            return shapes;
        }
        case Family::A2even:
        case Family::D2: {
            if (fam == Family::D2 && r == n) {
                shapes.push_back(Partition(n, s));
                return shapes;
            }
            // all partitions inside the r x s rectangle
            std::vector<int> rows(r, s);
            std::function<void(int, int)> rec = [&](int i, int maxl) {
                if (i == r) {
                    Partition p;
                    for (int x : rows)
                        if (x) p.push_back(x);
                    shapes.push_back(p);
                    return;
                }
                for (int v = maxl; v >= 0; --v) {
                    rows[i] = v;
                    rec(i + 1, v);
                }
            };
            rec(0, s);
            return shapes;
        }
    }
    throw std::logic_error("bad family");
}

std::vector<Weight> classical_decomposition(const KRIndex& idx) {
    std::vector<Weight> out;
    bool spin_case = (idx.type.family == Family::D1 && idx.r >= idx.type.rank - 1) ||
                     (idx.type.family == Family::B1 && idx.r == idx.type.rank) ||
                     (idx.type.family == Family::C1 && idx.r == idx.type.rank) ||
                     (idx.type.family == Family::D2 && idx.r == idx.type.rank);
    for (auto& shape : classical_decomposition_shapes(idx)) {
        Weight w(idx.type);
        if (spin_case) {
            w[idx.r] = idx.s;
        } else {
            for (int h : column_heights(shape)) ++w.coeffs[h];
        }
        out.push_back(w);
    }
    return out;
}

// ------------------------------------------------------------- eps/phi/wt

Weight AffineCrystal::eps(int v) const {
    if (!has_affine())
        throw std::runtime_error("eps: affine structure out of scope for " +
                                 idx.type.to_string() + " r=" + std::to_string(idx.r));
    Weight w(idx.type);
    for (int i = 0; i <= idx.type.rank; ++i) w[i] = g.eps(i, v);
    return w;
}

Weight AffineCrystal::phi(int v) const {
    if (!has_affine())
        throw std::runtime_error("phi: affine structure out of scope");
    Weight w(idx.type);
    for (int i = 0; i <= idx.type.rank; ++i) w[i] = g.phi(i, v);
    return w;
}

Weight AffineCrystal::wt(int v) const {
    if (is_virtual) {
        Weight aw = ambient->wt(to_ambient[v]);
        Weight w(idx.type);
        for (int i = 0; i <= idx.type.rank; ++i) {
            if (aw[i] % m_embed[i] != 0)
                throw std::logic_error("virtual weight not divisible by m");
            w[i] = aw[i] / m_embed[i];
        }
        return w;
    }
    return g.weight(v);
}

int AffineCrystal::min_eps_level() const {
    long best = -1;
    for (int v = 0; v < size(); ++v) {
        long lev = eps(v).level();
        if (best < 0 || lev < best) best = lev;
    }
    return (int)best;
}

// --------------------------------------------------------------- builders

namespace {

ClassicalType classical_of(AffineType t) { return {t.classical_family(), t.rank}; }

// inner shape of a {2..n}-highest element: content over letters 2..n
Partition inner_shape_of(const Tableau& t) {
    auto c2 = t.content2();
    Partition rows;
    int n = (int)c2.size();
    for (int j = 1; j < n; ++j) {
        if (c2[j] % 2 != 0) throw std::logic_error("odd inner content");
        rows.push_back(c2[j] / 2);
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1]) throw std::logic_error("inner content not a partition");
    return rows;
}

// intermediate shape: unbarred letters per row (bottom row first)
Partition inter_shape_of(const Tableau& t) {
    Partition rows;
    for (auto& col : t.cols)
        for (size_t h = 0; h < col.size(); ++h) {
            if (rows.size() <= h) rows.push_back(0);
            if (col[h] > 0) ++rows[h];
        }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1]) throw std::logic_error("inter counts not a partition");
    return rows;
}

std::vector<int> classical_ops(int n) {
    std::vector<int> J(n);
    for (int i = 0; i < n; ++i) J[i] = i + 1;
    return J;
}

// pair two {2..n}-isomorphic components by BFS, matching op i in g with
// op i+shift in h; writes into map (own id -> other id)
void pair_components(const CrystalGraph& g, int gv, const CrystalGraph& h, int hv,
                     const std::vector<int>& ops, int shift, std::vector<int>& map) {
    if (map[gv] >= 0) return;
    std::deque<std::pair<int, int>> queue{{gv, hv}};
    map[gv] = hv;
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int i : ops) {
            int fx = g.f(i, x), fy = h.f(i + shift, y);
            if ((fx < 0) != (fy < 0)) throw std::logic_error("component pairing mismatch");
            if (fx >= 0 && map[fx] < 0) {
                map[fx] = fy;
                queue.push_back({fx, fy});
            }
            int ex = g.e(i, x), ey = h.e(i + shift, y);
            if ((ex < 0) != (ey < 0)) throw std::logic_error("component pairing mismatch");
            if (ex >= 0 && map[ex] < 0) {
                map[ex] = ey;
                queue.push_back({ex, ey});
            }
        }
    }
}

std::shared_ptr<AffineCrystal> build_typeA(const KRIndex& idx) {
    auto ct = classical_of(idx.type);
    auto g = generate_classical(idx.type,
                                {highest_weight_tableau(ct, Partition(idx.r, idx.s))});
    auto c = std::make_shared<AffineCrystal>(idx, std::move(g));
    auto& gr = c->g;
    gr.fop[0].assign(gr.size(), -1);
    gr.eop[0].assign(gr.size(), -1);
    for (int v = 0; v < gr.size(); ++v) {
        auto p = promotion(gr.elements[v]);
        if (auto fp = tab_f(p, 1)) {
            int w = gr.find(promotion_inverse(*fp));
            if (w < 0) throw std::logic_error("promotion left the crystal");
            gr.fop[0][v] = w;
            gr.eop[0][w] = v;
        }
    }
    gr.has_affine = true;
    return c;
}

std::shared_ptr<AffineCrystal> build_vertical(const KRIndex& idx) {
    const int n = idx.type.rank;
    auto ct = classical_of(idx.type);
    std::vector<Tableau> seeds;
    for (auto& shape : classical_decomposition_shapes(idx))
        seeds.push_back(highest_weight_tableau(ct, shape));
    auto c = std::make_shared<AffineCrystal>(idx, generate_classical(idx.type, seeds));
    auto& gr = c->g;

    std::vector<int> J2n;
    for (int i = 2; i <= n; ++i) J2n.push_back(i);
    c->hw2n = subalgebra_highest(gr, J2n);
    for (int v : c->hw2n) {
        PMDiagram p{inner_shape_of(gr.elements[v]), inter_shape_of(gr.elements[v]),
                    gr.elements[v].shape_rows()};
        if (!p.valid())
            throw std::logic_error("element branching data is not a +/- diagram");
        c->hw_diagram.push_back(p);
        if (!c->diagram_to_hw.emplace(p.key(), v).second)
            throw std::logic_error("duplicate +/- diagram among {2..n}-highest elements");
    }

    // sigma: diagram involution transported to the whole crystal
    c->sigma.assign(gr.size(), -1);
    for (size_t k = 0; k < c->hw2n.size(); ++k) {
        auto img = pm_sigma(c->hw_diagram[k], idx.r, idx.s);
        auto it = c->diagram_to_hw.find(img.key());
        if (it == c->diagram_to_hw.end())
            throw std::logic_error("sigma image diagram not realized: " + img.key());
        pair_components(gr, c->hw2n[k], gr, it->second, J2n, 0, c->sigma);
    }
    for (int v = 0; v < gr.size(); ++v)
        if (c->sigma[v] < 0 || c->sigma[c->sigma[v]] != v)
            throw std::logic_error("sigma is not an involution");

    gr.fop[0].assign(gr.size(), -1);
    gr.eop[0].assign(gr.size(), -1);
    for (int v = 0; v < gr.size(); ++v) {
        int w = gr.f(1, c->sigma[v]);
        if (w >= 0) {
            gr.fop[0][v] = c->sigma[w];
            gr.eop[0][c->sigma[w]] = v;
        }
    }
    gr.has_affine = true;
    return c;
}

std::shared_ptr<AffineCrystal> build_fixed_point_C(const KRIndex& idx) {
    const int n = idx.type.rank;
    KRIndex amb_idx{{Family::A2odd, n + 1}, idx.r, idx.s};
    auto ambient = build_kr(amb_idx);

    auto ct = classical_of(idx.type);
    std::vector<Tableau> seeds;
    for (auto& shape : classical_decomposition_shapes(idx))
        seeds.push_back(highest_weight_tableau(ct, shape));
    auto c = std::make_shared<AffineCrystal>(idx, generate_classical(idx.type, seeds));
    auto& gr = c->g;
    c->ambient = ambient;

    // sigma-fixed ambient {2..n+1}-highest elements, keyed by inner shape
    std::map<Partition, int> fixed_by_inner;
    for (size_t k = 0; k < ambient->hw2n.size(); ++k) {
        int v = ambient->hw2n[k];
        if (ambient->sigma[v] != v) continue;
        if (!fixed_by_inner.emplace(ambient->hw_diagram[k].inner, v).second)
            throw std::logic_error("two sigma-fixed diagrams share an inner shape");
    }
    auto shapes = classical_decomposition_shapes(idx);
    if (fixed_by_inner.size() != shapes.size())
        throw std::logic_error("fixed-point component count mismatch");

    c->to_ambient.assign(gr.size(), -1);
    for (auto& shape : shapes) {
        int own_hw = gr.find(highest_weight_tableau(ct, shape));
        auto it = fixed_by_inner.find(shape);
        if (own_hw < 0 || it == fixed_by_inner.end())
            throw std::logic_error("no sigma-fixed component for shape");
        pair_components(gr, own_hw, ambient->g, it->second, classical_ops(n), 1,
                        c->to_ambient);
    }
    c->from_ambient.assign(ambient->size(), -1);
    for (int v = 0; v < gr.size(); ++v) c->from_ambient[c->to_ambient[v]] = v;

    gr.fop[0].assign(gr.size(), -1);
    gr.eop[0].assign(gr.size(), -1);
    for (int v = 0; v < gr.size(); ++v) {
        int x = ambient->g.f(0, c->to_ambient[v]);
        if (x < 0) continue;
        x = ambient->g.f(1, x);
        if (x < 0) continue;
        int w = c->from_ambient[x];
        if (w < 0) throw std::logic_error("affine step left the fixed-point set");
        gr.fop[0][v] = w;
        gr.eop[0][w] = v;
    }
    gr.has_affine = true;
    return c;
}

std::shared_ptr<AffineCrystal> build_virtual(const KRIndex& idx, const KRIndex& amb_idx,
                                             std::vector<int> m,
                                             const Partition& seed_shape) {
    auto ambient = build_kr(amb_idx);
    const int n = idx.type.rank;

    int seed =
        ambient->g.find(highest_weight_tableau(classical_of(amb_idx.type), seed_shape));
    if (seed < 0) throw std::logic_error("virtual seed not found in ambient");

    auto power = [&](const std::vector<std::vector<int>>& op, int i, int v) {
        for (int k = 0; k < m[i] && v >= 0; ++k) v = op[i][v];
        return v;
    };

    // closure of the seed under e_i^{m_i}, f_i^{m_i}
    std::vector<int> verts{seed};
    std::map<int, int> own_of{{seed, 0}};
    std::deque<int> queue{seed};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int i = 0; i <= n; ++i) {
            for (auto* op : {&ambient->g.fop, &ambient->g.eop}) {
                int w = power(*op, i, v);
                if (w >= 0 && !own_of.count(w)) {
                    own_of[w] = (int)verts.size();
                    verts.push_back(w);
                    queue.push_back(w);
                }
            }
        }
    }

    CrystalGraph gg(idx.type);
    gg.has_affine = ambient->has_affine();
    gg.fop.assign(n + 1, std::vector<int>(verts.size(), -1));
    gg.eop.assign(n + 1, std::vector<int>(verts.size(), -1));
    for (int v = 0; v < (int)verts.size(); ++v) {
        gg.elements.push_back(ambient->g.elements[verts[v]]);
        gg.index_of.emplace(gg.elements.back().one_line(), v);
    }
    for (int v = 0; v < (int)verts.size(); ++v)
        for (int i = 0; i <= n; ++i) {
            int w = power(ambient->g.fop, i, verts[v]);
            if (w >= 0) {
                auto it = own_of.find(w);
                if (it == own_of.end())
                    throw std::logic_error("virtual set not closed under f^m");
                gg.fop[i][v] = it->second;
                gg.eop[i][it->second] = v;
            }
        }

    auto c = std::make_shared<AffineCrystal>(idx, std::move(gg));
    c->ambient = ambient;
    c->is_virtual = true;
    c->m_embed = std::move(m);
    c->to_ambient = verts;
    c->from_ambient.assign(ambient->size(), -1);
    for (int v = 0; v < (int)verts.size(); ++v) c->from_ambient[verts[v]] = v;
    return c;
}

// spin cases without affine structure
std::shared_ptr<AffineCrystal> build_classical_spin(const KRIndex& idx) {
    const int n = idx.type.rank;
    auto fam = idx.type.family;
    if (fam != Family::D1 && fam != Family::D2)
        throw std::logic_error("not a spin family");
    bool minus_last = fam == Family::D1 && idx.r == n - 1;
    auto hw = highest_weight_spin(classical_of(idx.type), idx.s, minus_last);
    return std::make_shared<AffineCrystal>(idx, generate_classical(idx.type, {hw}));
}

std::shared_ptr<AffineCrystal> build_classical_C_spin(const KRIndex& idx) {
    auto ct = classical_of(idx.type);
    auto hw = highest_weight_tableau(ct, Partition(idx.type.rank, idx.s));
    return std::make_shared<AffineCrystal>(idx, generate_classical(idx.type, {hw}));
}

std::map<std::string, CrystalPtr>& cache() {
    static std::map<std::string, CrystalPtr> c;
    return c;
}
std::mutex cache_mutex;

}  // namespace

CrystalPtr build_kr(const KRIndex& idx) {
    std::string key = idx.type.to_string() + "/" + std::to_string(idx.r) + "/" +
                      std::to_string(idx.s);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find(key);
        if (it != cache().end()) return it->second;
    }
    const int n = idx.type.rank;
    CrystalPtr built;
    switch (idx.type.family) {
        case Family::A1:
            built = build_typeA(idx);
            break;
        case Family::B1:
            if (idx.r <= n - 1) built = build_vertical(idx);
            else {
                std::vector<int> m(n + 1, 2);
                m[n] = 1;
                built = build_virtual(idx, {{Family::A2odd, n}, idx.r, idx.s}, m,
                                      Partition(n, idx.s));
            }
            break;
        case Family::D1:
            if (idx.r <= n - 2) built = build_vertical(idx);
            else built = build_classical_spin(idx);
            break;
        case Family::A2odd:
            built = build_vertical(idx);
            break;
        case Family::C1:
            if (idx.r < n) built = build_fixed_point_C(idx);
            else built = build_classical_C_spin(idx);
            break;
        case Family::A2even: {
            std::vector<int> m(n + 1, 2);
            m[0] = 1;
            built = build_virtual(idx, {{Family::C1, n}, idx.r, 2 * idx.s}, m,
                                  Partition(idx.r, 2 * idx.s));
            break;
        }
        case Family::D2:
            if (idx.r < n) {
                std::vector<int> m(n + 1, 2);
                m[0] = 1;
                m[n] = 1;
                built = build_virtual(idx, {{Family::C1, n}, idx.r, 2 * idx.s}, m,
                                      Partition(idx.r, 2 * idx.s));
            } else {
                built = build_classical_spin(idx);
            }
            break;
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache().emplace(key, built);
    return built;
}

int phi_of_diagram(const AffineCrystal& c, const PMDiagram& p) {
    auto it = c.diagram_to_hw.find(p.key());
    if (it == c.diagram_to_hw.end())
        throw std::invalid_argument("inadmissible +/- diagram for this crystal");
    return it->second;
}

PMDiagram diagram_of_element(const AffineCrystal& c, int v) {
    for (size_t k = 0; k < c.hw2n.size(); ++k)
        if (c.hw2n[k] == v) return c.hw_diagram[k];
    throw std::invalid_argument("element is not {2..n}-highest");
}

std::vector<int> derive_operator_string(const AffineCrystal& c, int source, int target,
                                        const std::vector<int>& J) {
    if (source == target) return {};
    std::vector<int> prev(c.size(), -1), via(c.size(), -1);
    std::deque<int> queue{source};
    prev[source] = source;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int i : J) {
            int w = c.g.f(i, v);
            if (w >= 0 && prev[w] < 0) {
                prev[w] = v;
                via[w] = i;
                if (w == target) {
                    std::vector<int> ops;
                    for (int x = target; x != source; x = prev[x]) ops.push_back(via[x]);
                    std::reverse(ops.begin(), ops.end());
                    return ops;
                }
                queue.push_back(w);
            }
        }
    }
    throw std::runtime_error("no f-path between the given elements");
}

int apply_f_string(const AffineCrystal& c, int v, const std::vector<int>& ops) {
    for (int i : ops) {
        if (v < 0) return -1;
        v = c.g.f(i, v);
    }
    return v;
}

Tableau tableau_of_fundamental(const KRIndex& idx, int k) {
    const int n = idx.type.rank, r = idx.r;
    auto fam = idx.type.family;
    auto ct = ClassicalType{idx.type.classical_family(), n};
    auto col = [&](std::vector<int> v) {
        std::vector<Letter> c(v.begin(), v.end());
        return c;
    };
    if (fam == Family::C1 && r == n) {
        // column with entries k+1,...,n,nbar,...,(n-k+1)bar bottom to top
        std::vector<int> entries;
        for (int x = k + 1; x <= n; ++x) entries.push_back(x);
        for (int x = n; x >= n - k + 1; --x) entries.push_back(-x);
        return Tableau{ct, false, {col(entries)}};
    }
    if (fam != Family::B1 && fam != Family::D1 && fam != Family::A2odd)
        throw std::invalid_argument("tableau_of_fundamental: unsupported type");
    int plain_max = fam == Family::D1 ? n - 2 : (fam == Family::B1 ? n - 1 : n);
    if (k == 0) {
        if (r % 2 == 0) return Tableau{ct, false, {}};  // u
        return Tableau{ct, false, {col({1})}};
    }
    if (k == 1) {
        if (r % 2 == 0) return Tableau{ct, false, {col({2, -2})}};
        return Tableau{ct, false, {col({-1})}};
    }
    if (k <= r) {
        if (k % 2 != r % 2) {
            // columns (2,...,k+1,-(k+1)) and (-k,...,-2) bottom to top
            std::vector<int> c1, c2;
            for (int x = 2; x <= k + 1; ++x) c1.push_back(x);
            c1.push_back(-(k + 1));
            for (int x = k; x >= 2; --x) c2.push_back(-x);
            return Tableau{ct, false, {col(c1), col(c2)}};
        }
        std::vector<int> c1, c2;
        for (int x = 1; x <= k; ++x) c1.push_back(x);
        for (int x = k; x >= 1; --x) c2.push_back(-x);
        return Tableau{ct, false, {col(c1), col(c2)}};
    }
    if (k <= plain_max) {
        std::vector<int> c1, c2;
        for (int x = k - r + 1; x <= k; ++x) c1.push_back(x);
        for (int x = k; x >= k - r + 1; --x) c2.push_back(-x);
        return Tableau{ct, false, {col(c1), col(c2)}};
    }
    if (fam == Family::D1 && (k == n - 1 || k == n)) {
        std::vector<int> c1;
        for (int i = 0; i < r; ++i) {
            bool even_pos = i % 2 == 0;
            if (k == n - 1) c1.push_back(even_pos ? n : -n);
            else c1.push_back(even_pos ? -n : n);
        }
        return Tableau{ct, false, {col(c1)}};
    }
    if (fam == Family::B1 && k == n) {
        std::vector<int> c1(r, 0);
        return Tableau{ct, false, {col(c1)}};
    }
    throw std::invalid_argument("tableau_of_fundamental: k out of range");
}

}  // namespace krc
