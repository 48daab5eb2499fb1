#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "krc/affine.hpp"
#include "krc/golden_data.hpp"

using namespace krc;

TEST_CASE("promotion basics") {
    ClassicalType a2{ClassicalFamily::A, 2};
    Tableau one{a2, false, {{1}}};
    CHECK(promotion(one).cols[0][0] == 2);
    Tableau three{a2, false, {{3}}};
    CHECK(promotion(three).cols[0][0] == 1);

    // order n+1 on all of B^{2,2} for A_2^(1)
    auto c = build_kr({{Family::A1, 2}, 2, 2});
    for (int v = 0; v < c->size(); ++v) {
        Tableau t = c->g.elements[v];
        for (int k = 0; k < 3; ++k) t = promotion(t);
        CHECK(t == c->g.elements[v]);
    }
    // content rotation
    for (int v = 0; v < c->size(); ++v) {
        auto before = c->g.elements[v].content2();
        auto after = promotion(c->g.elements[v]).content2();
        for (int j = 0; j < 3; ++j) CHECK(after[(j + 1) % 3] == before[j]);
    }
}

TEST_CASE("type A affine operators") {
    // A_2^(1) B^{1,1}: f_0([3]) = [1]
    auto c = build_kr({{Family::A1, 2}, 1, 1});
    int v3 = c->g.find(Tableau{{ClassicalFamily::A, 2}, false, {{3}}});
    int v1 = c->g.find(Tableau{{ClassicalFamily::A, 2}, false, {{1}}});
    REQUIRE(v3 >= 0);
    CHECK(c->g.f(0, v3) == v1);

    // eps_0(highest-weight rectangle) = s
    for (int s = 1; s <= 3; ++s) {
        auto cs = build_kr({{Family::A1, 2}, 1, s});
        int hw = cs->g.find(highest_weight_tableau({ClassicalFamily::A, 2}, {s}));
        REQUIRE(hw >= 0);
        CHECK(cs->g.eps(0, hw) == s);
    }
}

TEST_CASE("regularity: wt(f_i b) = wt(b) - alpha_i including i = 0") {
    std::vector<KRIndex> idxs = {
        {{Family::A1, 2}, 1, 2},   {{Family::A1, 3}, 2, 2},
        {{Family::A2odd, 3}, 1, 1}, {{Family::A2odd, 3}, 2, 1},
        {{Family::A2odd, 3}, 2, 2}, {{Family::D1, 4}, 1, 1},
        {{Family::D1, 4}, 2, 1},    {{Family::B1, 3}, 1, 2},
    };
    for (auto idx : idxs) {
        auto c = build_kr(idx);
        REQUIRE(c->has_affine());
        for (int v = 0; v < c->size(); ++v)
            for (int i = 0; i <= idx.type.rank; ++i) {
                int w = c->g.f(i, v);
                if (w >= 0) {
                    auto diff = c->wt(v) - c->wt(w);
                    CHECK(diff == simple_root_in_lambda_coords(idx.type, i));
                }
            }
    }
}

TEST_CASE("sigma properties on vertical family crystals") {
    for (auto idx : {KRIndex{{Family::A2odd, 3}, 2, 1}, KRIndex{{Family::A2odd, 3}, 2, 2},
                     KRIndex{{Family::D1, 4}, 1, 2}, KRIndex{{Family::B1, 3}, 2, 1}}) {
        auto c = build_kr(idx);
        REQUIRE(!c->sigma.empty());
        for (int v = 0; v < c->size(); ++v) {
            CHECK(c->sigma[c->sigma[v]] == v);
            for (int i = 2; i <= idx.type.rank; ++i) {
                int fv = c->g.f(i, v);
                int fs = c->g.f(i, c->sigma[v]);
                if (fv >= 0) CHECK(c->sigma[fv] == fs);
                else CHECK(fs == -1);
            }
        }
    }
}

TEST_CASE("the C_3^(1) B^{2,1} crystal graph matches the fixture exactly") {
    auto c = build_kr({{Family::C1, 3}, 2, 1});
    REQUIRE(c->size() == 14);
    ClassicalType ct{ClassicalFamily::C, 3};

    std::set<std::tuple<int, int, int>> expected, actual;
    for (auto& e : golden::b21_graph) {
        int s = c->g.find(parse_tableau(ct, e.src));
        int d = c->g.find(parse_tableau(ct, e.dst));
        REQUIRE(s >= 0);
        REQUIRE(d >= 0);
        expected.insert({s, e.label, d});
    }
    for (int i = 0; i <= 3; ++i)
        for (int v = 0; v < c->size(); ++v)
            if (c->g.f(i, v) >= 0) actual.insert({v, i, c->g.f(i, v)});
    CHECK(expected == actual);

    // exactly four 0-arrows
    int zeros = 0;
    for (int v = 0; v < c->size(); ++v)
        if (c->g.f(0, v) >= 0) ++zeros;
    CHECK(zeros == 4);
}

TEST_CASE("B^{2,2} zero-arrows on the {2,3}-highest elements match the fixture") {
    // The fixture's arrow column is stored in the raising orientation
    // (weight + alpha_0); regularity fixes the lowering one, so each row
    // (b -> c) is checked as e_0(b) = c.
    auto c = build_kr({{Family::C1, 3}, 2, 2});
    ClassicalType ct{ClassicalFamily::C, 3};
    auto hw = subalgebra_highest(c->g, {2, 3});
    CHECK(hw.size() == golden::b22_zero_arrows.size());
    for (auto& row : golden::b22_zero_arrows) {
        int v = c->g.find(parse_tableau(ct, row.b));
        REQUIRE(v >= 0);
        int ev = c->g.e(0, v);
        if (row.f0 == nullptr) {
            CHECK(ev == -1);
        } else {
            REQUIRE(ev >= 0);
            int want = c->g.find(parse_tableau(ct, row.f0));
            CHECK(ev == want);
        }
    }
}

TEST_CASE("embeddings intertwine: S(f_i b) = f_i^{m_i} S(b)") {
    // B_3^(1) B^{3,1} inside A_5^(2) B^{3,1}
    auto c = build_kr({{Family::B1, 3}, 3, 1});
    REQUIRE(c->is_virtual);
    auto amb = c->ambient;
    for (int v = 0; v < c->size(); ++v)
        for (int i = 0; i <= 3; ++i) {
            int fv = c->g.f(i, v);
            int target = c->to_ambient[v];
            for (int k = 0; k < c->m_embed[i] && target >= 0; ++k)
                target = amb->g.f(i, target);
            if (fv >= 0) CHECK(c->to_ambient[fv] == target);
            else CHECK(target == -1);
        }
    // weight map doubles the level for the spin embedding
    for (int v = 0; v < c->size(); ++v)
        CHECK(amb->wt(c->to_ambient[v]).level() == 2 * c->wt(v).level());

    // eps is m-aligned
    for (int v = 0; v < c->size(); ++v)
        for (int i = 0; i <= 3; ++i) {
            CHECK(amb->g.eps(i, c->to_ambient[v]) == c->m_embed[i] * c->g.eps(i, v));
            CHECK(amb->g.phi(i, c->to_ambient[v]) == c->m_embed[i] * c->g.phi(i, v));
        }
}

TEST_CASE("embedding weight maps scale levels as stated") {
    // Def 3.2 style: S(Lambda_i) = m_i Lambda_i doubles the level
    {
        AffineType b{Family::B1, 3}, amb{Family::A2odd, 3};
        std::vector<int> m{2, 2, 2, 1};
        for (int i = 0; i <= 3; ++i) {
            Weight img(amb);
            img[i] = m[i];
            CHECK(img.level() == 2 * fundamental(b, i).level());
        }
    }
    // Def 3.4: the embeddings into C_n^(1) preserve the level
    {
        AffineType a2{Family::A2even, 3}, amb{Family::C1, 3};
        std::vector<int> m{1, 2, 2, 2};
        for (int i = 0; i <= 3; ++i) {
            Weight img(amb);
            img[i] = m[i];
            CHECK(img.level() == fundamental(a2, i).level());
        }
    }
    {
        AffineType d2{Family::D2, 3}, amb{Family::C1, 3};
        std::vector<int> m{1, 2, 2, 1};
        for (int i = 0; i <= 3; ++i) {
            Weight img(amb);
            img[i] = m[i];
            CHECK(img.level() == fundamental(d2, i).level());
        }
    }
    // Def 3.3: the fixed-point weight map doubles the level
    {
        AffineType c{Family::C1, 3}, amb{Family::A2odd, 4};
        for (int i = 0; i <= 3; ++i) {
            Weight img(amb);
            if (i == 0) { img[0] = 1; img[1] = 1; }
            else img[i + 1] = 1;
            CHECK(img.level() == 2 * fundamental(c, i).level());
        }
    }
}

TEST_CASE("doubled-diagram membership for the spin embedding") {
    // an ambient {2..n}-highest element lies in the image iff its diagram is
    // a doubling: columns below height n occur in identical pairs and the
    // height-n column count has the parity of s (those columns map one-to-one
    // since m_n = 1)
    for (auto [n, s] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}}) {
        auto virt = build_kr({{Family::B1, n}, n, s});
        auto amb = virt->ambient;
        for (size_t k = 0; k < amb->hw2n.size(); ++k) {
            int v = amb->hw2n[k];
            auto cols = amb->hw_diagram[k].column_triples();
            int spin_cols = 0, lone_pm = 0;
            bool doubled = true;
            for (size_t c = 0; c < cols.size();) {
                if (cols[c][2] == n) {
                    ++spin_cols;
                    bool pm = cols[c][1] == cols[c][0] + 1 && cols[c][2] == cols[c][1] + 1;
                    if (pm && c + 1 < cols.size() && cols[c + 1] == cols[c]) {
                        ++spin_cols;
                        c += 2;
                    } else {
                        lone_pm += pm;
                        ++c;
                    }
                    continue;
                }
                if (c + 1 < cols.size() && cols[c] == cols[c + 1] && cols[c + 1][2] != n)
                    c += 2;
                else { doubled = false; break; }
            }
            // (-+)-decorated height-n columns must themselves pair up
            doubled = doubled && lone_pm == 0 && spin_cols % 2 == s % 2;
            CHECK(doubled == (virt->from_ambient[v] >= 0));
        }
    }
}

TEST_CASE("T(Lambda_k) identities: T = f(Lambda_k) Phi(diagram(Lambda_k))") {
    for (auto idx : {KRIndex{{Family::A2odd, 3}, 2, 2}, KRIndex{{Family::D1, 4}, 2, 2},
                     KRIndex{{Family::B1, 3}, 2, 2}}) {
        auto c = build_kr(idx);
        for (int k = 0; k <= idx.type.rank; ++k) {
            bool in_range = true;
            try { diagram_of_fundamental(idx, k); } catch (...) { in_range = false; }
            if (!in_range) continue;
            int src = phi_of_diagram(*c, diagram_of_fundamental(idx, k));
            int dst = c->g.find(tableau_of_fundamental(idx, k));
            REQUIRE(dst >= 0);
            if (k <= 1) {
                CHECK(src == dst);  // f(Lambda_0) = f(Lambda_1) = identity
            } else {
                std::vector<int> J;
                for (int i = 2; i <= idx.type.rank; ++i) J.push_back(i);
                CHECK_NOTHROW(derive_operator_string(*c, src, dst, J));
            }
        }
    }
}
