#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krc/golden_data.hpp"
#include "krc/minimal.hpp"
#include "krc/perfect.hpp"

using namespace krc;

TEST_CASE("condition 2: B (x) B connectivity") {
    CHECK(check_condition_2(*build_kr({{Family::A1, 2}, 1, 1})));
    CHECK(check_condition_2(*build_kr({{Family::C1, 3}, 2, 2})));
    CHECK(check_condition_2(*build_kr({{Family::A2odd, 3}, 1, 1})));
}

TEST_CASE("condition 3: extremal weight") {
    CHECK(check_condition_3(*build_kr({{Family::C1, 3}, 2, 2})));
    CHECK(check_condition_3(*build_kr({{Family::A1, 2}, 2, 1})));
    CHECK(check_condition_3(*build_kr({{Family::D1, 4}, 2, 1})));
}

TEST_CASE("classify_minimal on the section-5 examples") {
    {
        auto c = build_kr({{Family::C1, 3}, 2, 1});
        auto [lev, classes] = classify_minimal(*c);
        CHECK(lev == 1);
        std::vector<size_t> sizes;
        for (auto& [w, elems] : classes) sizes.push_back(elems.size());
        CHECK(sizes == std::vector<size_t>({1, 2, 2, 1}));
        // Lambda_1 has the two preimages {2,3} and {2,2bar}
        ClassicalType ct{ClassicalFamily::C, 3};
        auto& l1 = classes[1].second;
        REQUIRE(l1.size() == 2);
        std::set<std::string> got{c->g.elements[l1[0]].one_line(),
                                  c->g.elements[l1[1]].one_line()};
        CHECK(got == std::set<std::string>({"[2,3]", "[2,-2]"}));
    }
    {
        auto c = build_kr({{Family::C1, 3}, 2, 2});
        auto [lev, classes] = classify_minimal(*c);
        CHECK(lev == 1);
        for (auto& [w, elems] : classes) CHECK(elems.size() == 1);
        // exact table
        ClassicalType ct{ClassicalFamily::C, 3};
        for (auto& row : golden::b22_minimal) {
            int v = c->g.find(parse_tableau(ct, row.b));
            REQUIRE(v >= 0);
            CHECK(c->eps(v) == fundamental(c->idx.type, row.eps_node));
        }
    }
    {
        auto c = build_kr({{Family::C1, 3}, 2, 3});
        auto [lev, classes] = classify_minimal(*c);
        CHECK(lev == 2);
        std::vector<size_t> sizes;
        for (auto& [w, elems] : classes) sizes.push_back(elems.size());
        CHECK(sizes == std::vector<size_t>({1, 3, 5, 3, 3, 5, 5, 3, 3, 1}));
    }
}

TEST_CASE("verdicts agree with the conjecture at desk scale") {
    struct Case {
        KRIndex idx;
        bool perfect;
        int level;
    };
    std::vector<Case> cases = {
        {{{Family::C1, 3}, 2, 2}, true, 1},  {{{Family::C1, 3}, 2, 1}, false, -1},
        {{{Family::C1, 3}, 2, 3}, false, -1}, {{{Family::A1, 2}, 1, 2}, true, 2},
        {{{Family::A2odd, 3}, 1, 1}, true, 1}, {{{Family::D1, 4}, 1, 1}, true, 1},
        {{{Family::B1, 3}, 1, 1}, true, 1},   {{{Family::A2even, 2}, 1, 1}, true, 1},
        {{{Family::D2, 3}, 1, 1}, true, 1},  {{{Family::D2, 3}, 2, 1}, true, 1},
        {{{Family::A2even, 2}, 1, 2}, true, 2}, {{{Family::B1, 3}, 3, 2}, true, 1},
        {{{Family::C1, 2}, 1, 2}, true, 1},  {{{Family::C1, 3}, 1, 2}, true, 1},
        {{{Family::C1, 3}, 1, 1}, false, -1}, {{{Family::C1, 3}, 1, 3}, false, -1},
        {{{Family::A2odd, 4}, 2, 1}, true, 1}, {{{Family::D2, 2}, 1, 2}, true, 2},
        {{{Family::A2even, 3}, 2, 1}, true, 1}, {{{Family::D2, 3}, 2, 2}, true, 2},
    };
    for (auto& cs : cases) {
        auto rep = verdict(cs.idx);
        CHECK(rep.agrees_with_conjecture);
        if (cs.perfect) {
            CHECK(rep.verdict == "perfect");
            CHECK(rep.level == cs.level);
        } else {
            CHECK(rep.verdict == "not_perfect");
        }
    }
    // out-of-scope affine structure reports partial
    CHECK(verdict({{Family::D1, 4}, 4, 1}).verdict == "partial");
    CHECK(verdict({{Family::C1, 3}, 3, 1}).verdict == "partial");
    // A_{2n}^(2) r=n realizes inside the out-of-scope C-spin ambient
    CHECK(verdict({{Family::A2even, 2}, 2, 1}).verdict == "partial");
}

TEST_CASE("empirical tau matches the case-table tau") {
    struct Case {
        KRIndex idx;
    };
    for (auto idx : {KRIndex{{Family::C1, 3}, 2, 2}, KRIndex{{Family::A1, 2}, 1, 1},
                     KRIndex{{Family::A1, 2}, 2, 2}, KRIndex{{Family::A2odd, 3}, 2, 1},
                     KRIndex{{Family::A2odd, 3}, 3, 1}, KRIndex{{Family::D1, 4}, 1, 1},
                     KRIndex{{Family::B1, 3}, 1, 1}, KRIndex{{Family::A2even, 2}, 1, 1},
                     KRIndex{{Family::D2, 3}, 1, 1}, KRIndex{{Family::B1, 3}, 3, 2},
                     KRIndex{{Family::A2even, 2}, 1, 2}, KRIndex{{Family::D2, 2}, 1, 2}}) {
        auto rep = verdict(idx);
        REQUIRE(rep.verdict == "perfect");
        auto dom = enumerate_dominant(idx.type, rep.level);
        for (size_t j = 0; j < dom.size(); ++j) {
            auto expect = tau(idx, dom[j]);
            CHECK(dom[rep.tau_perm[j]] == expect);
        }
    }
}

TEST_CASE("level lower bounds for C_3^(1) B^{2,s}") {
    for (int s : {1, 2, 3}) {
        auto c = build_kr({{Family::C1, 3}, 2, s});
        CHECK(c->min_eps_level() == (s + 1) / 2);
    }
}
