#include "krc/cartan.hpp"

#include <algorithm>
#include <functional>

namespace krc {

AffineType::AffineType(Family f, int n) : family(f), rank(n) {
    int min_rank = 1;
    switch (f) {
        case Family::A1: min_rank = 1; break;
        case Family::C1:
        case Family::A2even:
        case Family::D2: min_rank = 2; break;
        case Family::B1:
        case Family::A2odd: min_rank = 3; break;
        case Family::D1: min_rank = 4; break;
    }
    if (n < min_rank)
        throw std::invalid_argument("rank " + std::to_string(n) +
                                    " too small for family");
}

ClassicalFamily AffineType::classical_family() const {
    switch (family) {
        case Family::A1: return ClassicalFamily::A;
        case Family::B1: return ClassicalFamily::B;
        case Family::C1:
        case Family::A2odd:
        case Family::A2even: return ClassicalFamily::C;
        case Family::D1: return ClassicalFamily::D;
        case Family::D2: return ClassicalFamily::B;
    }
    throw std::logic_error("bad family");
}

std::vector<std::vector<int>> AffineType::cartan_matrix() const {
    const int n = rank;
    std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    // chain on the classical nodes, shared by every family
    for (int i = 1; i < n; ++i) edge(i, i + 1);
    switch (family) {
        case Family::A1:
            if (n == 1) { a[0][1] = a[1][0] = -2; }
            else { edge(0, 1); edge(0, n); }
            break;
        case Family::B1:  // fork 0,1 -> 2; double edge n-1 => n
            edge(0, 2);
            a[n - 1][n] = -1; a[n][n - 1] = -2;
            break;
        case Family::C1:  // 0 => 1, n-1 <= n
            a[0][1] = -1; a[1][0] = -2;
            a[n - 1][n] = -2; a[n][n - 1] = -1;
            break;
        case Family::D1:  // forks at both ends
            edge(0, 2);
            a[n - 1][n] = a[n][n - 1] = 0;
            edge(n - 2, n);
            break;
        case Family::A2even:
            a[0][1] = -2; a[1][0] = -1;
            a[n - 1][n] = -2; a[n][n - 1] = -1;
            break;
        case Family::A2odd:
            edge(0, 2);
            a[n - 1][n] = -2; a[n][n - 1] = -1;
            break;
        case Family::D2:
            a[0][1] = -2; a[1][0] = -1;
            a[n - 1][n] = -1; a[n][n - 1] = -2;
            break;
    }
    return a;
}

std::vector<int> AffineType::dual_kac_labels() const {
    const int n = rank;
    std::vector<int> a(n + 1, 1);
    switch (family) {
        case Family::A1: break;  // all ones
        case Family::B1:
            for (int i = 2; i <= n - 1; ++i) a[i] = 2;
            break;
        case Family::C1: break;
        case Family::D1:
            for (int i = 2; i <= n - 2; ++i) a[i] = 2;
            break;
        case Family::A2odd:
            for (int i = 2; i <= n; ++i) a[i] = 2;
            break;
        case Family::A2even:
            for (int i = 1; i <= n; ++i) a[i] = 2;
            break;
        case Family::D2:
            for (int i = 1; i <= n - 1; ++i) a[i] = 2;
            break;
    }
    return a;
}

AffineType AffineType::parse(const std::string& s) {
    auto tilde = s.find('~');
    if (tilde == std::string::npos || tilde < 2 || tilde + 1 >= s.size())
        throw std::invalid_argument("bad affine type string: " + s);
    char letter = s[0];
    int sub = std::stoi(s.substr(1, tilde - 1));
    int twist = std::stoi(s.substr(tilde + 1));
    if (twist == 1) {
        switch (letter) {
            case 'A': return {Family::A1, sub};
            case 'B': return {Family::B1, sub};
            case 'C': return {Family::C1, sub};
            case 'D': return {Family::D1, sub};
        }
    } else if (twist == 2) {
        if (letter == 'A' && sub % 2 == 0) return {Family::A2even, sub / 2};
        if (letter == 'A') return {Family::A2odd, (sub + 1) / 2};
        if (letter == 'D') return {Family::D2, sub - 1};
    }
    throw std::invalid_argument("bad affine type string: " + s);
}

std::string AffineType::to_string() const {
    switch (family) {
        case Family::A1: return "A" + std::to_string(rank) + "~1";
        case Family::B1: return "B" + std::to_string(rank) + "~1";
        case Family::C1: return "C" + std::to_string(rank) + "~1";
        case Family::D1: return "D" + std::to_string(rank) + "~1";
        case Family::A2even: return "A" + std::to_string(2 * rank) + "~2";
        case Family::A2odd: return "A" + std::to_string(2 * rank - 1) + "~2";
        case Family::D2: return "D" + std::to_string(rank + 1) + "~2";
    }
    throw std::logic_error("bad family");
}

Weight::Weight(AffineType t, std::vector<int> c) : coeffs(std::move(c)), type(t) {
    if ((int)coeffs.size() != t.nodes())
        throw std::invalid_argument("weight coefficient count != n+1");
}

long Weight::level() const {
    auto a = type.dual_kac_labels();
    long lev = 0;
    for (int i = 0; i < (int)coeffs.size(); ++i) lev += (long)a[i] * coeffs[i];
    return lev;
}

bool Weight::dominant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
    Weight w = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) w.coeffs[i] += o.coeffs[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const {
    Weight w = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) w.coeffs[i] -= o.coeffs[i];
    return w;
}

std::string Weight::to_string() const {
    std::string s;
    for (int i = 0; i < (int)coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!s.empty()) s += coeffs[i] > 0 ? "+" : "";
        if (coeffs[i] != 1) s += std::to_string(coeffs[i]) + "*";
        s += "L" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

Weight fundamental(AffineType t, int i) {
    Weight w(t);
    w[i] = 1;
    return w;
}

KRIndex::KRIndex(AffineType t, int r_, int s_) : type(t), r(r_), s(s_) {
    if (r < 1 || r > t.rank) throw std::invalid_argument("r out of range");
    if (s < 1) throw std::invalid_argument("s must be positive");
}

int c_r(const KRIndex& idx) {
    switch (idx.type.family) {
        case Family::B1: return idx.r == idx.type.rank ? 2 : 1;
        case Family::C1: return idx.r == idx.type.rank ? 1 : 2;
        default: return 1;
    }
}

std::vector<Weight> enumerate_dominant(AffineType t, int ell) {
    if (ell < 0) throw std::invalid_argument("negative level");
    auto labels = t.dual_kac_labels();
    std::vector<Weight> out;
    Weight w(t);
    // lexicographically decreasing: explore large l_0 first
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == t.nodes()) {
            if (remaining == 0) out.push_back(w);
            return;
        }
        for (int c = remaining / labels[i]; c >= 0; --c) {
            w[i] = c;
            rec(i + 1, remaining - c * labels[i]);
        }
        w[i] = 0;
    };
    rec(0, ell);
    return out;
}

Weight simple_root_in_lambda_coords(AffineType t, int i) {
    auto a = t.cartan_matrix();
    Weight w(t);
    for (int j = 0; j < t.nodes(); ++j) w[j] = a[j][i];
    return w;
}

Weight tau(const KRIndex& idx, const Weight& w) {
    if (!w.dominant()) throw std::invalid_argument("tau: weight not dominant");
    if (idx.s % c_r(idx) != 0)
        throw std::invalid_argument("tau: B^{r,s} with s/c_r non-integral is not perfect");
    const int n = idx.type.rank;
    const int r = idx.r;
    Weight out(idx.type);
    auto swap01 = [&](Weight v) {
        std::swap(v.coeffs[0], v.coeffs[1]);
        return v;
    };
    switch (idx.type.family) {
        case Family::A1:
            for (int i = 0; i <= n; ++i) out[(((i - r) % (n + 1)) + n + 1) % (n + 1)] += w[i];
            return out;
        case Family::B1:
            if (r == n)  // spin column case
                return n % 2 == 0 ? w : swap01(w);
            return r % 2 == 0 ? w : swap01(w);
        case Family::A2odd:
            return r % 2 == 0 ? w : swap01(w);
        case Family::D1:
            if (r >= n - 1) {
                // spin cases; B^{n-1,s} related to B^{n,s} by swapping nodes n-1,n
                Weight v = w;
                if (r == n - 1) std::swap(v.coeffs[n - 1], v.coeffs[n]);
                if (n % 2 == 0) {
                    for (int i = 0; i <= n; ++i) out[n - i] += v[i];
                } else {
                    out[n - 1] += v[0];
                    out[n] += v[1];
                    for (int i = 2; i <= n - 2; ++i) out[n - i] += v[i];
                    out[1] += v[n - 1];
                    out[0] += v[n];
                }
                if (r == n - 1) std::swap(out.coeffs[n - 1], out.coeffs[n]);
                return out;
            }
            if (r % 2 == 0) return w;
            out = swap01(w);
            std::swap(out.coeffs[n - 1], out.coeffs[n]);
            return out;
        case Family::C1:
            if (r == n) {
                for (int i = 0; i <= n; ++i) out[n - i] = w[i];
                return out;
            }
            return w;  // r < n, s even: identity
        case Family::A2even:
            return w;
        case Family::D2:
            if (r == n) {
                for (int i = 0; i <= n; ++i) out[n - i] = w[i];
                return out;
            }
            return w;
    }
    throw std::logic_error("bad family");
}

}  // namespace krc
