#include "krc/crystal.hpp"

#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace krc {

int CrystalGraph::eps(int i, int v) const {
    int k = 0;
    while ((v = eop[i][v]) >= 0) ++k;
    return k;
}

int CrystalGraph::phi(int i, int v) const {
    int k = 0;
    while ((v = fop[i][v]) >= 0) ++k;
    return k;
}

Weight CrystalGraph::eps_wt(int v) const {
    if (!has_affine) throw std::runtime_error("affine structure out of scope for this crystal");
    Weight w(type);
    for (int i = 0; i <= type.rank; ++i) w[i] = eps(i, v);
    return w;
}

Weight CrystalGraph::phi_wt(int v) const {
    if (!has_affine) throw std::runtime_error("affine structure out of scope for this crystal");
    Weight w(type);
    for (int i = 0; i <= type.rank; ++i) w[i] = phi(i, v);
    return w;
}

Weight CrystalGraph::weight(int v) const {
    Weight w(type);
    ClassicalType ct{type.classical_family(), type.rank};
    auto c2 = elements[v].content2();
    auto labels = type.dual_kac_labels();
    long lev = 0;
    for (int i = 1; i <= type.rank; ++i) {
        w[i] = content2_pairing(ct, c2, i);
        lev += (long)labels[i] * w[i];
    }
    w[0] = (int)(-lev / labels[0]);
    if (-lev % labels[0] != 0) throw std::logic_error("level-zero weight not integral");
    return w;
}

int CrystalGraph::find(const Tableau& t) const {
    auto it = index_of.find(t.one_line());
    return it == index_of.end() ? -1 : it->second;
}

CrystalGraph generate_classical(AffineType type, const std::vector<Tableau>& seeds) {
    CrystalGraph g(type);
    g.has_affine = false;
    const int n = type.rank;
    g.fop.assign(n + 1, {});
    g.eop.assign(n + 1, {});

    auto add = [&](const Tableau& t) -> int {
        auto key = t.one_line();
        auto it = g.index_of.find(key);
        if (it != g.index_of.end()) return it->second;
        int id = (int)g.elements.size();
        g.elements.push_back(t);
        g.index_of.emplace(std::move(key), id);
        for (int i = 0; i <= n; ++i) {
            g.fop[i].push_back(-2);  // -2 = not yet computed
            g.eop[i].push_back(-2);
        }
        return id;
    };

    std::deque<int> queue;
    for (auto& s : seeds) queue.push_back(add(s));
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            if (g.fop[i][v] == -2) {
                auto t = tab_f(g.elements[v], i);
                if (t) {
                    int w = add(*t);
                    g.fop[i][v] = w;
                    g.eop[i][w] = v;
                    queue.push_back(w);
                } else {
                    g.fop[i][v] = -1;
                }
            }
            if (g.eop[i][v] == -2) {
                auto t = tab_e(g.elements[v], i);
                if (t) {
                    int w = add(*t);
                    g.eop[i][v] = w;
                    g.fop[i][w] = v;
                    queue.push_back(w);
                } else {
                    g.eop[i][v] = -1;
                }
            }
        }
    }
    // ops 0 unresolved markers -> -1
    for (auto& row : g.fop)
        for (auto& x : row)
            if (x == -2) x = -1;
    for (auto& row : g.eop)
        for (auto& x : row)
            if (x == -2) x = -1;
    return g;
}

bool TensorSquare::connected() const {
    const auto& g = *base;
    const int N = g.size();
    if (N == 0) return true;
    const int nops = g.n_ops();
    const int start_op = g.has_affine ? 0 : 1;

    // cache string data
    std::vector<std::vector<int>> E(nops, std::vector<int>(N)), P(nops, std::vector<int>(N));
    for (int i = start_op; i < nops; ++i)
        for (int v = 0; v < N; ++v) { E[i][v] = g.eps(i, v); P[i][v] = g.phi(i, v); }

    auto fpair = [&](int i, int x, int y) -> long {
        // f_i(x (x) y), display order x (x) y: acts on x iff phi(x) > eps(y)
        if (P[i][x] > E[i][y]) {
            int fx = g.f(i, x);
            return fx < 0 ? -1 : (long)fx * N + y;
        }
        int fy = g.f(i, y);
        return fy < 0 ? -1 : (long)x * N + fy;
    };
    auto epair = [&](int i, int x, int y) -> long {
        if (P[i][x] >= E[i][y]) {
            int ex = g.e(i, x);
            return ex < 0 ? -1 : (long)ex * N + y;
        }
        int ey = g.e(i, y);
        return ey < 0 ? -1 : (long)x * N + ey;
    };

    std::vector<char> seen((size_t)N * N, 0);
    std::deque<long> queue;
    seen[0] = 1;
    queue.push_back(0);
    size_t count = 1;
    while (!queue.empty()) {
        long v = queue.front();
        queue.pop_front();
        int x = (int)(v / N), y = (int)(v % N);
        for (int i = start_op; i < nops; ++i) {
            for (long w : {fpair(i, x, y), epair(i, x, y)}) {
                if (w >= 0 && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    queue.push_back(w);
                }
            }
        }
    }
    return count == (size_t)N * N;
}

std::vector<int> subalgebra_highest(const CrystalGraph& g, const std::vector<int>& J) {
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v) {
        bool hw = true;
        for (int j : J)
            if (g.e(j, v) >= 0) { hw = false; break; }
        if (hw) out.push_back(v);
    }
    return out;
}

std::string CrystalGraph::dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontname=monospace];\n";
    for (int v = 0; v < size(); ++v) {
        std::string label = elements[v].to_string();
        std::string esc;
        for (char c : label) {
            if (c == '\n') esc += "\\n";
            else esc += c;
        }
        os << "  v" << v << " [label=\"" << esc << "\"];\n";
    }
    for (int i = has_affine ? 0 : 1; i < n_ops(); ++i)
        for (int v = 0; v < size(); ++v)
            if (fop[i][v] >= 0) {
                os << "  v" << v << " -> v" << fop[i][v] << " [label=\"" << i << "\"";
                if (i == 0) os << ", style=bold, color=red";
                os << "];\n";
            }
    os << "}\n";
    return os.str();
}

std::string CrystalGraph::json() const {
    std::ostringstream os;
    os << "{\n  \"type\": \"" << type.to_string() << "\",\n  \"vertices\": [";
    for (int v = 0; v < size(); ++v) {
        if (v) os << ", ";
        os << "[";
        for (size_t c = 0; c < elements[v].cols.size(); ++c) {
            if (c) os << ", ";
            os << "[";
            for (size_t h = 0; h < elements[v].cols[c].size(); ++h)
                os << (h ? ", " : "") << (int)elements[v].cols[c][h];
            os << "]";
        }
        os << "]";
    }
    os << "],\n  \"edges\": [";
    bool first = true;
    for (int i = has_affine ? 0 : 1; i < n_ops(); ++i)
        for (int v = 0; v < size(); ++v)
            if (fop[i][v] >= 0) {
                if (!first) os << ", ";
                first = false;
                os << "{\"src\": " << v << ", \"dst\": " << fop[i][v]
                   << ", \"label\": " << i << "}";
            }
    os << "]\n}\n";
    return os.str();
}

}  // namespace krc
