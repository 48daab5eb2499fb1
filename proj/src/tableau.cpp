#include "krc/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace krc {

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition c(p[0], 0);
    for (int r : p)
        for (int j = 0; j < r; ++j) ++c[j];
    return c;
}

bool contains(const Partition& outer, const Partition& inner) {
    for (size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == 0) continue;
        if (i >= outer.size() || outer[i] < inner[i]) return false;
    }
    return true;
}

Partition column_heights(const Partition& rows) { return conjugate(rows); }
Partition rows_from_column_heights(const Partition& cols) { return conjugate(cols); }

Partition Tableau::shape_cols() const {
    Partition p;
    for (auto& c : cols) p.push_back((int)c.size());
    return p;
}

Partition Tableau::shape_rows() const { return conjugate(shape_cols()); }

Word Tableau::reading_word() const {
    Word w{type, {}};
    for (int c = width() - 1; c >= 0; --c)
        for (Letter x : cols[c]) w.letters.push_back(x);
    return w;
}

std::vector<int> Tableau::content2() const {
    int m = type.rank + (type.family == ClassicalFamily::A ? 1 : 0);
    std::vector<int> c(m, 0);
    int unit = spin ? 1 : 2;  // spin letters carry half a box
    for (auto& col : cols)
        for (Letter x : col) {
            if (x > 0) c[x - 1] += unit;
            else if (x < 0) c[-x - 1] -= unit;
        }
    if (!spin)
        return c;
    return c;
}

std::string Tableau::to_string() const {
    if (cols.empty()) return "u";
    int h = (int)cols[0].size();
    std::string s;
    for (int row = h - 1; row >= 0; --row) {
        for (auto& col : cols) {
            if (row < (int)col.size()) {
                s += letter_str(col[row]);
                s += ' ';
            }
        }
        if (row > 0) s += '\n';
    }
    return s;
}

std::string Tableau::one_line() const {
    if (cols.empty()) return "u";
    std::string s;
    for (auto& col : cols) {
        if (!s.empty()) s += ";";
        std::string cs;
        for (Letter x : col) {
            if (!cs.empty()) cs += ",";
            cs += letter_str(x);
        }
        s += cs;
    }
    return "[" + s + "]";
}

Tableau tableau_from_word(ClassicalType t, const Word& w, const Partition& heights) {
    Tableau out{t, false, {}};
    out.cols.resize(heights.size());
    size_t pos = 0;
    for (int c = (int)heights.size() - 1; c >= 0; --c)
        for (int h = 0; h < heights[c]; ++h) out.cols[c].push_back(w.letters[pos++]);
    if (pos != w.letters.size()) throw std::invalid_argument("word/shape mismatch");
    return out;
}

namespace {

// scan positions of a spin tableau are whole columns, right to left
std::vector<std::pair<int, int>> spin_eps_phi(const Tableau& t, int i) {
    std::vector<std::pair<int, int>> ep;
    for (int c = t.width() - 1; c >= 0; --c) {
        SpinColumn col{std::vector<int8_t>()};
        for (Letter x : t.cols[c]) col.signs.push_back(x > 0 ? 1 : -1);
        // signs indexed by position k-1; reconstruct from letters
        SpinColumn sc{std::vector<int8_t>(t.type.rank, 0)};
        for (Letter x : t.cols[c]) sc.signs[std::abs(x) - 1] = x > 0 ? 1 : -1;
        ep.push_back({spin_eps(t.type, sc, i), spin_phi(t.type, sc, i)});
    }
    return ep;
}

SpinColumn column_as_spin(const Tableau& t, int c) {
    SpinColumn sc{std::vector<int8_t>(t.type.rank, 0)};
    for (Letter x : t.cols[c]) sc.signs[std::abs(x) - 1] = x > 0 ? 1 : -1;
    return sc;
}

std::vector<Letter> spin_to_column(ClassicalType t, const SpinColumn& sc) {
    std::vector<Letter> letters;
    for (int k = 1; k <= t.rank; ++k)
        letters.push_back(sc.signs[k - 1] > 0 ? (Letter)k : (Letter)(-k));
    std::sort(letters.begin(), letters.end(), [&](Letter a, Letter b) {
        return letter_order(t, a) < letter_order(t, b);
    });
    return letters;
}

}  // namespace

int tab_eps(const Tableau& t, int i) {
    if (t.spin) return signature_scan(spin_eps_phi(t, i)).eps;
    return word_eps(t.reading_word(), i);
}

int tab_phi(const Tableau& t, int i) {
    if (t.spin) return signature_scan(spin_eps_phi(t, i)).phi;
    return word_phi(t.reading_word(), i);
}

std::optional<Tableau> tab_f(const Tableau& t, int i) {
    if (t.spin) {
        auto sig = signature_scan(spin_eps_phi(t, i));
        if (sig.f_pos < 0) return std::nullopt;
        int c = t.width() - 1 - sig.f_pos;
        Tableau out = t;
        out.cols[c] = spin_to_column(t.type, *spin_f(t.type, column_as_spin(t, c), i));
        return out;
    }
    auto w = t.reading_word();
    auto sig = word_signature(w, i);
    if (sig.f_pos < 0) return std::nullopt;
    // map scan position back to (column, height)
    int pos = sig.f_pos;
    for (int c = t.width() - 1; c >= 0; --c) {
        if (pos < (int)t.cols[c].size()) {
            Tableau out = t;
            out.cols[c][pos] = *letter_f(t.type, t.cols[c][pos], i);
            return out;
        }
        pos -= (int)t.cols[c].size();
    }
    throw std::logic_error("bad scan position");
}

std::optional<Tableau> tab_e(const Tableau& t, int i) {
    if (t.spin) {
        auto sig = signature_scan(spin_eps_phi(t, i));
        if (sig.e_pos < 0) return std::nullopt;
        int c = t.width() - 1 - sig.e_pos;
        Tableau out = t;
        out.cols[c] = spin_to_column(t.type, *spin_e(t.type, column_as_spin(t, c), i));
        return out;
    }
    auto w = t.reading_word();
    auto sig = word_signature(w, i);
    if (sig.e_pos < 0) return std::nullopt;
    int pos = sig.e_pos;
    for (int c = t.width() - 1; c >= 0; --c) {
        if (pos < (int)t.cols[c].size()) {
            Tableau out = t;
            out.cols[c][pos] = *letter_e(t.type, t.cols[c][pos], i);
            return out;
        }
        pos -= (int)t.cols[c].size();
    }
    throw std::logic_error("bad scan position");
}

Tableau highest_weight_tableau(ClassicalType t, const Partition& rows) {
    Tableau out{t, false, {}};
    for (int h : column_heights(rows)) {
        std::vector<Letter> col;
        for (int k = 1; k <= h; ++k) col.push_back((Letter)k);
        out.cols.push_back(col);
    }
    return out;
}

Tableau highest_weight_spin(ClassicalType t, int s, bool minus_last) {
    Tableau out{t, true, {}};
    SpinColumn sc{std::vector<int8_t>(t.rank, 1)};
    if (minus_last) sc.signs[t.rank - 1] = -1;
    auto col = [&]() {
        std::vector<Letter> letters;
        for (int k = 1; k <= t.rank; ++k)
            letters.push_back(sc.signs[k - 1] > 0 ? (Letter)k : (Letter)(-k));
        std::sort(letters.begin(), letters.end(), [&](Letter a, Letter b) {
            return letter_order(t, a) < letter_order(t, b);
        });
        return letters;
    }();
    for (int c = 0; c < s; ++c) out.cols.push_back(col);
    return out;
}

int content2_pairing(ClassicalType t, const std::vector<int>& c2, int i) {
    const int n = t.rank;
    long v = 0;
    switch (t.family) {
        case ClassicalFamily::A:
            v = c2[i - 1] - c2[i];
            break;
        case ClassicalFamily::B:
            v = i < n ? c2[i - 1] - c2[i] : 2L * c2[n - 1];
            break;
        case ClassicalFamily::C:
            v = i < n ? c2[i - 1] - c2[i] : c2[n - 1];
            break;
        case ClassicalFamily::D:
            v = i < n ? c2[i - 1] - c2[i] : c2[n - 2] + c2[n - 1];
            break;
    }
    if (v % 2 != 0) throw std::logic_error("non-integral weight pairing");
    return (int)(v / 2);
}

Tableau tableau_from_rows(ClassicalType t, bool spin,
                          const std::vector<std::vector<Letter>>& rows) {
    std::vector<std::vector<Letter>> sorted = rows;
    for (auto& r : sorted)
        std::sort(r.begin(), r.end(), [&](Letter a, Letter b) {
            return letter_order(t, a) < letter_order(t, b);
        });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].size() > sorted[i - 1].size())
            throw std::invalid_argument("row lengths must weakly decrease upward");
    Tableau out{t, spin, {}};
    if (sorted.empty()) return out;
    out.cols.resize(sorted[0].size());
    for (size_t c = 0; c < sorted[0].size(); ++c)
        for (auto& r : sorted)
            if (c < r.size()) out.cols[c].push_back(r[c]);
    return out;
}

}  // namespace krc
