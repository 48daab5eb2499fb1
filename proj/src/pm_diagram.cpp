#include "krc/pm_diagram.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace krc {

std::vector<std::array<int, 3>> PMDiagram::column_triples() const {
    auto li = column_heights(inner), lm = column_heights(inter), lo = column_heights(outer);
    int w = width();
    std::vector<std::array<int, 3>> cols(w);
    for (int c = 0; c < w; ++c)
        cols[c] = {c < (int)li.size() ? li[c] : 0, c < (int)lm.size() ? lm[c] : 0,
                   c < (int)lo.size() ? lo[c] : 0};
    return cols;
}

bool PMDiagram::valid() const {
    if (!contains(inter, inner) || !contains(outer, inter)) return false;
    for (auto [a, b, c] : column_triples()) {
        if (b - a > 1 || c - b > 1) return false;  // horizontal strips
    }
    return true;
}

std::string PMDiagram::key() const {
    std::ostringstream os;
    for (auto& p : {inner, inter, outer}) {
        for (int r : p)
            if (r) os << r << ".";
        os << "/";
    }
    return os.str();
}

std::string PMDiagram::render() const {
    if (outer.empty()) return "(empty)";
    auto cols = column_triples();
    int h = cols[0][2];
    std::string s;
    for (int row = h; row >= 1; --row) {
        for (auto [a, b, c] : cols) {
            if (row > c) { s += ' '; continue; }
            if (row > b) s += '-';
            else if (row > a) s += '+';
            else s += '.';
        }
        if (row > 1) s += '\n';
    }
    return s;
}

PMDiagram PMDiagram::from_column_triples(std::vector<std::array<int, 3>> cols) {
    std::sort(cols.begin(), cols.end(),
              [](const auto& a, const auto& b) { return a > b; });
    Partition li, lm, lo;
    for (auto [a, b, c] : cols) {
        if (c == 0) continue;
        li.push_back(a);
        lm.push_back(b);
        lo.push_back(c);
    }
    PMDiagram p{rows_from_column_heights(li), rows_from_column_heights(lm),
                rows_from_column_heights(lo)};
    if (!p.valid()) throw std::invalid_argument("columns do not form a +/- diagram");
    return p;
}

PMDiagram pm_sigma(const PMDiagram& p, int r, int s) {
    // counts per inner height: plus[h], minus[h], pm[h], blank[h]
    std::map<int, std::array<int, 4>> cnt;
    for (auto [a, b, c] : p.column_triples()) {
        if (b == a + 1 && c == b + 1) ++cnt[a][2];
        else if (b == a + 1 && c == b) ++cnt[a][0];
        else if (b == a && c == b + 1) ++cnt[a][1];
        else ++cnt[a][3];
    }
    cnt[0][3] += s - p.width();  // virtual height-0 blanks
    std::vector<std::array<int, 3>> cols;
    for (auto& [h, c] : cnt) {
        int plus = c[1], minus = c[0];  // swapped
        int both = c[2], blank = c[3];
        if (h + 2 <= r) std::swap(both, blank);  // (-+) pairs <-> blanks
        for (int k = 0; k < plus; ++k) cols.push_back({h, h + 1, h + 1});
        for (int k = 0; k < minus; ++k) cols.push_back({h, h, h + 1});
        for (int k = 0; k < both; ++k) cols.push_back({h, h + 1, h + 2});
        if (h > 0)
            for (int k = 0; k < blank; ++k) cols.push_back({h, h, h});
    }
    auto out = PMDiagram::from_column_triples(cols);
    if (out.width() > s || (int)out.outer.size() > r)
        throw std::logic_error("sigma image escapes the r x s rectangle");
    return out;
}

PMDiagram diagram_of_fundamental(const KRIndex& idx, int k) {
    const int n = idx.type.rank, r = idx.r;
    auto fam = idx.type.family;
    if (fam != Family::B1 && fam != Family::D1 && fam != Family::A2odd)
        throw std::invalid_argument("diagram_of_fundamental: vertical family only");
    int plain_max = fam == Family::D1 ? n - 2 : (fam == Family::B1 ? n - 1 : n);
    auto make = [](std::vector<std::array<int, 3>> cols) {
        return PMDiagram::from_column_triples(std::move(cols));
    };
    if (k == 0) return r % 2 == 0 ? PMDiagram{} : make({{0, 1, 1}});
    if (k == 1) return r % 2 == 0 ? make({{0, 1, 2}}) : make({{0, 0, 1}});
    if (k <= r) {
        if (k % 2 != r % 2) return make({{k - 1, k, k + 1}, {k - 1, k - 1, k - 1}});
        return make({{k - 1, k, k}, {k - 1, k - 1, k}});
    }
    if (k <= plain_max) return make({{r, r, r}, {r, r, r}});
    bool spin_node = (fam == Family::D1 && (k == n - 1 || k == n)) ||
                     (fam == Family::B1 && k == n);
    if (spin_node) return make({{r, r, r}});
    throw std::invalid_argument("diagram_of_fundamental: k out of range");
}

PMDiagram diagram_of_weight(const KRIndex& idx, const Weight& w) {
    if (!w.dominant()) throw std::invalid_argument("diagram_of_weight: not dominant");
    std::vector<std::array<int, 3>> cols;
    for (int k = 0; k <= idx.type.rank; ++k) {
        if (w[k] == 0) continue;
        auto piece = diagram_of_fundamental(idx, k).column_triples();
        for (int copy = 0; copy < w[k]; ++copy)
            cols.insert(cols.end(), piece.begin(), piece.end());
    }
    auto p = PMDiagram::from_column_triples(std::move(cols));
    if (p.width() > idx.s || (int)p.outer.size() > idx.r)
        throw std::invalid_argument("diagram_of_weight: exceeds the r x s rectangle");
    return p;
}

std::vector<PMDiagram> enumerate_pm(const Partition& outer) {
    auto strips_below = [](const Partition& lam) {
        // all mu <= lam with lam/mu a horizontal strip (mu_i >= lam_{i+1})
        std::vector<Partition> out;
        size_t m = lam.size();
        if (m == 0) return std::vector<Partition>{{}};
        Partition cur(m);
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == m) {
                Partition trimmed;
                for (int x : cur)
                    if (x) trimmed.push_back(x);
                out.push_back(trimmed);
                return;
            }
            int lo = i + 1 < m ? lam[i + 1] : 0;
            int hi = lam[i];
            if (i > 0) hi = std::min(hi, cur[i - 1]);
            for (int v = hi; v >= lo; --v) {
                cur[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
        return out;
    };
    std::vector<PMDiagram> out;
    for (auto& mu : strips_below(outer))
        for (auto& lam : strips_below(mu)) {
            PMDiagram p{lam, mu, outer};
            if (p.valid()) out.push_back(p);
        }
    return out;
}

}  // namespace krc
