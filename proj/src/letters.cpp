#include "krc/letters.hpp"

#include <stdexcept>

namespace krc {

bool letter_valid(ClassicalType t, Letter x) {
    const int n = t.rank;
    switch (t.family) {
        case ClassicalFamily::A: return x >= 1 && x <= n + 1;
        case ClassicalFamily::B: return x == 0 || (x >= -n && x <= n);
        case ClassicalFamily::C:
        case ClassicalFamily::D: return x != 0 && x >= -n && x <= n;
    }
    return false;
}

int letter_order(ClassicalType t, Letter x) {
    const int n = t.rank;
    if (x > 0 && t.family == ClassicalFamily::A) return x;
    if (x > 0) return x;
    if (x == 0) return n + 1;                       // type B: between n and nbar
    int base = t.family == ClassicalFamily::B ? 2 : 1;
    int v = 2 * n + base + x;                       // -n -> n+base, ..., -1 -> 2n+base-1
    if (t.family == ClassicalFamily::D && x == -n) return n;  // n, nbar incomparable
    return v;
}

std::string letter_str(Letter x) { return std::to_string((int)x); }

namespace {

// f_i target of letter x, or 0x7f when undefined (0 is a real letter in B).
constexpr int8_t NONE = 0x7f;

int8_t f_target(ClassicalType t, Letter x, int i) {
    const int n = t.rank;
    switch (t.family) {
        case ClassicalFamily::A:
            return x == i ? (int8_t)(i + 1) : NONE;
        case ClassicalFamily::C:
            if (i < n) {
                if (x == i) return (int8_t)(i + 1);
                if (x == -(i + 1)) return (int8_t)(-i);
                return NONE;
            }
            return x == n ? (int8_t)(-n) : NONE;
        case ClassicalFamily::B:
            if (i < n) {
                if (x == i) return (int8_t)(i + 1);
                if (x == -(i + 1)) return (int8_t)(-i);
                return NONE;
            }
            if (x == n) return 0;
            if (x == 0) return (int8_t)(-n);
            return NONE;
        case ClassicalFamily::D:
            if (i < n - 1) {
                if (x == i) return (int8_t)(i + 1);
                if (x == -(i + 1)) return (int8_t)(-i);
                return NONE;
            }
            if (i == n - 1) {
                if (x == n - 1) return (int8_t)n;
                if (x == -n) return (int8_t)(-(n - 1));
                return NONE;
            }
            if (x == n - 1) return (int8_t)(-n);
            if (x == n) return (int8_t)(-(n - 1));
            return NONE;
    }
    return NONE;
}

}  // namespace

std::optional<Letter> letter_f(ClassicalType t, Letter x, int i) {
    int8_t y = f_target(t, x, i);
    if (y == NONE) return std::nullopt;
    return y;
}

std::optional<Letter> letter_e(ClassicalType t, Letter x, int i) {
    // invert f: scan candidates (alphabets are tiny)
    const int n = t.rank;
    for (int v = -n; v <= n + 1; ++v) {
        if (v == 0 && t.family != ClassicalFamily::B) continue;
        if (!letter_valid(t, (Letter)v)) continue;
        if (f_target(t, (Letter)v, i) == x) return (Letter)v;
    }
    return std::nullopt;
}

std::vector<std::tuple<Letter, int, Letter>> letter_crystal_edges(ClassicalType t) {
    std::vector<std::tuple<Letter, int, Letter>> edges;
    const int n = t.rank;
    for (int v = -n; v <= n + 1; ++v) {
        if (!letter_valid(t, (Letter)v)) continue;
        for (int i = 1; i <= n; ++i)
            if (auto y = letter_f(t, (Letter)v, i)) edges.push_back({(Letter)v, i, *y});
    }
    return edges;
}

int letter_phi(ClassicalType t, Letter x, int i) {
    int k = 0;
    for (int8_t y = f_target(t, x, i); y != NONE; y = f_target(t, y, i)) ++k;
    return k;
}

int letter_eps(ClassicalType t, Letter x, int i) {
    int k = 0;
    for (auto y = letter_e(t, x, i); y; y = letter_e(t, *y, i)) ++k;
    return k;
}

Signature signature_scan(const std::vector<std::pair<int, int>>& eps_phi) {
    Signature sig;
    std::vector<int> plus_stack;
    for (int pos = 0; pos < (int)eps_phi.size(); ++pos) {
        auto [eps, phi] = eps_phi[pos];
        for (int k = 0; k < eps; ++k) {
            if (!plus_stack.empty()) plus_stack.pop_back();
            else { ++sig.eps; sig.e_pos = pos; }
        }
        for (int k = 0; k < phi; ++k) plus_stack.push_back(pos);
    }
    sig.phi = (int)plus_stack.size();
    if (!plus_stack.empty()) sig.f_pos = plus_stack.front();
    return sig;
}

Signature word_signature(const Word& w, int i) {
    std::vector<std::pair<int, int>> ep(w.letters.size());
    for (size_t p = 0; p < w.letters.size(); ++p)
        ep[p] = {letter_eps(w.type, w.letters[p], i), letter_phi(w.type, w.letters[p], i)};
    return signature_scan(ep);
}

int word_eps(const Word& w, int i) { return word_signature(w, i).eps; }
int word_phi(const Word& w, int i) { return word_signature(w, i).phi; }

std::optional<Word> word_f(const Word& w, int i) {
    auto sig = word_signature(w, i);
    if (sig.f_pos < 0) return std::nullopt;
    Word out = w;
    out.letters[sig.f_pos] = *letter_f(w.type, w.letters[sig.f_pos], i);
    return out;
}

std::optional<Word> word_e(const Word& w, int i) {
    auto sig = word_signature(w, i);
    if (sig.e_pos < 0) return std::nullopt;
    Word out = w;
    out.letters[sig.e_pos] = *letter_e(w.type, w.letters[sig.e_pos], i);
    return out;
}

std::vector<int> word_content(const Word& w) {
    int m = w.type.rank + (w.type.family == ClassicalFamily::A ? 1 : 0);
    std::vector<int> c(m, 0);
    for (Letter x : w.letters) {
        if (x > 0) ++c[x - 1];
        else if (x < 0) --c[-x - 1];
    }
    return c;
}

std::string Word::to_string() const {
    // display in tensor order = reverse of scan order
    std::string s;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (!s.empty()) s += ",";
        s += letter_str(*it);
    }
    return "(" + s + ")";
}

int spin_phi(ClassicalType t, const SpinColumn& c, int i) {
    const int n = t.rank;
    if (i < n) return c.signs[i - 1] > 0 && c.signs[i] < 0 ? 1 : 0;
    if (t.family == ClassicalFamily::B) return c.signs[n - 1] > 0 ? 1 : 0;
    return c.signs[n - 2] > 0 && c.signs[n - 1] > 0 ? 1 : 0;  // type D
}

int spin_eps(ClassicalType t, const SpinColumn& c, int i) {
    const int n = t.rank;
    if (i < n) return c.signs[i - 1] < 0 && c.signs[i] > 0 ? 1 : 0;
    if (t.family == ClassicalFamily::B) return c.signs[n - 1] < 0 ? 1 : 0;
    return c.signs[n - 2] < 0 && c.signs[n - 1] < 0 ? 1 : 0;
}

std::optional<SpinColumn> spin_f(ClassicalType t, const SpinColumn& c, int i) {
    if (!spin_phi(t, c, i)) return std::nullopt;
    SpinColumn out = c;
    const int n = t.rank;
    if (i < n) { out.signs[i - 1] = -1; out.signs[i] = 1; }
    else if (t.family == ClassicalFamily::B) out.signs[n - 1] = -1;
    else { out.signs[n - 2] = -1; out.signs[n - 1] = -1; }
    return out;
}

std::optional<SpinColumn> spin_e(ClassicalType t, const SpinColumn& c, int i) {
    if (!spin_eps(t, c, i)) return std::nullopt;
    SpinColumn out = c;
    const int n = t.rank;
    if (i < n) { out.signs[i - 1] = 1; out.signs[i] = -1; }
    else if (t.family == ClassicalFamily::B) out.signs[n - 1] = 1;
    else { out.signs[n - 2] = 1; out.signs[n - 1] = 1; }
    return out;
}

}  // namespace krc
