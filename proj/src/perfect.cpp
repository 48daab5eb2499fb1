#include "krc/perfect.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace krc {

bool check_condition_2(const AffineCrystal& c) {
    TensorSquare ts{&c.g};
    return ts.connected();
}

namespace {

// exact rational x = num/den with small denominators
struct Frac {
    long long num = 0, den = 1;
    void reduce() {
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g) { num /= g; den /= g; }
        if (den < 0) { num = -num; den = -den; }
    }
};

// solve A x = b over rationals (A square, invertible); returns x
std::vector<Frac> solve(std::vector<std::vector<long long>> A, std::vector<long long> b) {
    const int n = (int)A.size();
    std::vector<std::vector<Frac>> M(n, std::vector<Frac>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = {A[i][j], 1};
        M[i][n] = {b[i], 1};
    }
    auto sub_mul = [](Frac& a, const Frac& m, const Frac& x) {
        // a -= m * x
        a.num = a.num * m.den * x.den - m.num * x.num * a.den;
        a.den = a.den * m.den * x.den;
        a.reduce();
    };
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (M[i][col].num != 0) { pivot = i; break; }
        if (pivot < 0) throw std::logic_error("singular classical Cartan matrix");
        std::swap(M[col], M[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i == col || M[i][col].num == 0) continue;
            Frac m{M[i][col].num * M[col][col].den, M[i][col].den * M[col][col].num};
            m.reduce();
            for (int j = col; j <= n; ++j) sub_mul(M[i][j], m, M[col][j]);
        }
    }
    std::vector<Frac> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = {M[i][n].num * M[i][i].den, M[i][n].den * M[i][i].num};
        x[i].reduce();
    }
    return x;
}

}  // namespace

bool check_condition_3(const AffineCrystal& c) {
    const int n = c.idx.type.rank;
    // lambda = s(Lambda_r - lev(Lambda_r) Lambda_0) in level-zero coordinates
    Weight lambda(c.idx.type);
    lambda[c.idx.r] = c.idx.s;
    lambda[0] = -(int)(fundamental(c.idx.type, c.idx.r).level() * c.idx.s);

    auto cm = c.idx.type.cartan_matrix();
    std::vector<std::vector<long long>> A(n, std::vector<long long>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) A[i - 1][j - 1] = cm[i][j];
    // A_{2n}^(2) has the non-reduced classical system BC_n: its short simple
    // root is alpha_n / 2
    if (c.idx.type.family == Family::A2even)
        for (int i = 0; i < n; ++i) A[i][n - 1] /= 2;

    int extremal = 0;
    for (int v = 0; v < c.size(); ++v) {
        Weight d = lambda - c.wt(v);
        std::vector<long long> b(n);
        for (int i = 1; i <= n; ++i) b[i - 1] = d[i];
        bool zero = true;
        for (int i = 1; i <= n; ++i) zero = zero && d[i] == 0;
        if (zero) ++extremal;
        // d must lie in the nonnegative integer span of classical simple roots
        for (auto& f : solve(A, b))
            if (f.den != 1 || f.num < 0) return false;
    }
    return extremal == 1;
}

std::pair<int, std::vector<std::pair<Weight, std::vector<int>>>> classify_minimal(
    const AffineCrystal& c) {
    long best = -1;
    std::vector<Weight> eps_of;
    for (int v = 0; v < c.size(); ++v) {
        eps_of.push_back(c.eps(v));
        long lev = eps_of.back().level();
        if (best < 0 || lev < best) best = lev;
    }
    std::vector<std::pair<Weight, std::vector<int>>> classes;
    for (auto& w : enumerate_dominant(c.idx.type, (int)best))
        classes.push_back({w, {}});
    for (int v = 0; v < c.size(); ++v) {
        if (eps_of[v].level() != best) continue;
        bool placed = false;
        for (auto& [w, elems] : classes)
            if (w == eps_of[v]) { elems.push_back(v); placed = true; break; }
        if (!placed) throw std::logic_error("eps weight not dominant");
    }
    return {(int)best, classes};
}

PerfectnessReport verdict(const KRIndex& idx) {
    auto c = build_kr(idx);
    PerfectnessReport rep(idx);
    rep.conjecture_predicts_perfect = idx.s % c_r(idx) == 0;
    if (!c->has_affine()) {
        rep.verdict = "partial";
        rep.agrees_with_conjecture = true;  // nothing checkable refutes it
        return rep;
    }
    auto [minlev, classes] = classify_minimal(*c);
    rep.min_eps_level = minlev;
    rep.minimal_classes = classes;

    rep.cond2 = check_condition_2(*c);
    rep.cond3 = check_condition_3(*c);
    int target = rep.conjecture_predicts_perfect ? idx.s / c_r(idx) : -1;
    rep.cond4 = target >= 0 && minlev >= target;

    // condition 5 at the observed minimal level: eps and phi both biject
    // minimal elements onto P^+_minlev
    bool eps_bij = true;
    for (auto& [w, elems] : classes) eps_bij = eps_bij && elems.size() == 1;
    std::map<std::string, int> phi_count;
    for (auto& [w, elems] : classes)
        for (int v : elems) ++phi_count[c->phi(v).to_string()];
    bool phi_bij = true;
    {
        auto dom = enumerate_dominant(idx.type, minlev);
        phi_bij = phi_count.size() == dom.size();
        for (auto& [k, cnt] : phi_count) phi_bij = phi_bij && cnt == 1;
        for (auto& w : dom) phi_bij = phi_bij && phi_count.count(w.to_string());
    }
    rep.cond5 = eps_bij && phi_bij;

    bool perfect = rep.cond2 && rep.cond3 && rep.cond4 && rep.cond5 &&
                   rep.conjecture_predicts_perfect && minlev == target;
    if (perfect) {
        rep.verdict = "perfect";
        rep.level = minlev;
        rep.tau_perm = tau_empirical(*c, rep);
    } else {
        rep.verdict = "not_perfect";
    }
    rep.agrees_with_conjecture = (rep.verdict == "perfect") == rep.conjecture_predicts_perfect;
    return rep;
}

std::vector<int> tau_empirical(const AffineCrystal& c, const PerfectnessReport& report) {
    auto dom = enumerate_dominant(c.idx.type, report.min_eps_level);
    std::vector<int> perm(dom.size(), -1);
    for (size_t j = 0; j < dom.size(); ++j) {
        // b^Lambda: the minimal element with phi = dom[j]; tau(dom[j]) = eps(b^Lambda)
        int found = -1;
        for (auto& [w, elems] : report.minimal_classes)
            for (int v : elems)
                if (c.phi(v) == dom[j]) found = v;
        if (found < 0) throw std::logic_error("tau_empirical: phi not surjective");
        auto img = c.eps(found);
        for (size_t i = 0; i < dom.size(); ++i)
            if (dom[i] == img) perm[j] = (int)i;
    }
    return perm;
}

std::string PerfectnessReport::to_json(const AffineCrystal& c) const {
    std::ostringstream os;
    os << "{\n";
    os << "  \"crystal\": \"" << idx.type.to_string() << " B^{" << idx.r << ","
       << idx.s << "}\",\n";
    os << "  \"verdict\": \"" << verdict << "\",\n";
    if (verdict == "perfect") os << "  \"level\": " << level << ",\n";
    os << "  \"size\": " << c.size() << ",\n";
    if (verdict != "partial") {
        os << "  \"min_eps_level\": " << min_eps_level << ",\n";
        os << "  \"conditions\": {\"c1\": \"by construction\", \"c2\": " << cond2
           << ", \"c3\": " << cond3 << ", \"c4\": " << cond4 << ", \"c5\": " << cond5
           << "},\n";
        os << "  \"minimal_classes\": [";
        for (size_t k = 0; k < minimal_classes.size(); ++k) {
            auto& [w, elems] = minimal_classes[k];
            if (k) os << ", ";
            os << "{\"eps\": \"" << w.to_string() << "\", \"elements\": [";
            for (size_t i = 0; i < elems.size(); ++i) {
                if (i) os << ", ";
                os << "\"" << c.g.elements[elems[i]].one_line() << "\"";
            }
            os << "]}";
        }
        os << "],\n";
        {
            // witness renderings: eps-classes with more than one element
            os << "  \"witnesses\": [";
            bool first = true;
            for (auto& [w, elems] : minimal_classes) {
                if (elems.size() < 2) continue;
                for (int v : elems) {
                    if (!first) os << ", ";
                    first = false;
                    os << "\"" << c.g.elements[v].one_line() << "\"";
                }
            }
            os << "],\n";
        }
        if (!tau_perm.empty()) {
            os << "  \"tau\": [";
            for (size_t i = 0; i < tau_perm.size(); ++i)
                os << (i ? ", " : "") << tau_perm[i];
            os << "],\n";
        }
    }
    os << "  \"conjecture_predicts_perfect\": " << conjecture_predicts_perfect << ",\n";
    os << "  \"agrees_with_conjecture\": " << agrees_with_conjecture << "\n}\n";
    return os.str();
}

}  // namespace krc
