#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krc/cartan.hpp"

using namespace krc;

TEST_CASE("affine type parsing round-trips") {
    for (auto s : {"A2~1", "B3~1", "C3~1", "D4~1", "A4~2", "A5~2", "D4~2"}) {
        auto t = AffineType::parse(s);
        CHECK(t.to_string() == s);
    }
    CHECK(AffineType::parse("A4~2").family == Family::A2even);
    CHECK(AffineType::parse("A4~2").rank == 2);
    CHECK(AffineType::parse("A5~2").family == Family::A2odd);
    CHECK(AffineType::parse("A5~2").rank == 3);
    CHECK(AffineType::parse("D4~2").family == Family::D2);
    CHECK(AffineType::parse("D4~2").rank == 3);
    CHECK_THROWS(AffineType::parse("E6~1"));
    CHECK_THROWS((AffineType{Family::D1, 3}));
    CHECK_THROWS((AffineType{Family::B1, 2}));
}

TEST_CASE("cartan matrices satisfy generalized Cartan axioms") {
    std::vector<AffineType> types = {
        {Family::A1, 1}, {Family::A1, 2}, {Family::A1, 3},
        {Family::B1, 3}, {Family::B1, 4},
        {Family::C1, 2}, {Family::C1, 3},
        {Family::D1, 4}, {Family::D1, 5},
        {Family::A2even, 2}, {Family::A2even, 3},
        {Family::A2odd, 3}, {Family::A2odd, 4},
        {Family::D2, 2}, {Family::D2, 3}};
    for (auto t : types) {
        auto a = t.cartan_matrix();
        const int m = t.nodes();
        for (int i = 0; i < m; ++i) {
            CHECK(a[i][i] == 2);
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                CHECK(a[i][j] <= 0);
                CHECK(((a[i][j] == 0) == (a[j][i] == 0)));
            }
        }
        // dual Kac labels are a left null vector: level(alpha_i) = 0
        for (int i = 0; i < m; ++i)
            CHECK(simple_root_in_lambda_coords(t, i).level() == 0);
    }
}

TEST_CASE("levels match the per-type linear formulas") {
    AffineType c3{Family::C1, 3};
    Weight w = fundamental(c3, 0) + fundamental(c3, 2);
    CHECK(w.level() == 2);

    AffineType b3{Family::B1, 3};
    CHECK(fundamental(b3, 2).level() == 2);
    CHECK(fundamental(b3, 3).level() == 1);
    CHECK(Weight(b3).level() == 0);

    AffineType d2{Family::D2, 3};  // D_4^(2)
    CHECK(fundamental(d2, 0).level() == 1);
    CHECK(fundamental(d2, 1).level() == 2);
    CHECK(fundamental(d2, 3).level() == 1);

    AffineType a4{Family::A2even, 2};
    CHECK(fundamental(a4, 0).level() == 1);
    CHECK(fundamental(a4, 1).level() == 2);
    CHECK(fundamental(a4, 2).level() == 2);

    for (auto t : {c3, b3, d2, a4}) CHECK(fundamental(t, 0).level() == 1);
}

TEST_CASE("c_r table") {
    AffineType c3{Family::C1, 3}, b3{Family::B1, 3};
    CHECK(c_r({c3, 2, 1}) == 2);
    CHECK(c_r({c3, 3, 1}) == 1);
    CHECK(c_r({b3, 3, 1}) == 2);
    CHECK(c_r({b3, 1, 1}) == 1);
    CHECK(c_r({{Family::A1, 3}, 2, 1}) == 1);
    CHECK(c_r({{Family::D2, 3}, 3, 1}) == 1);
}

TEST_CASE("dominant weight enumeration") {
    AffineType c3{Family::C1, 3};
    auto lvl1 = enumerate_dominant(c3, 1);
    REQUIRE(lvl1.size() == 4);
    CHECK(lvl1[0] == fundamental(c3, 0));
    CHECK(lvl1[3] == fundamental(c3, 3));
    CHECK(enumerate_dominant(c3, 2).size() == 10);

    // B_3^(1) level 1: solve l0 + l1 + 2 l2 + l3 = 1
    AffineType b3{Family::B1, 3};
    auto b1 = enumerate_dominant(b3, 1);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0] == fundamental(b3, 0));
    CHECK(b1[1] == fundamental(b3, 1));
    CHECK(b1[2] == fundamental(b3, 3));

    for (auto t : {c3, b3})
        for (int ell = 0; ell <= 3; ++ell) {
            auto v = enumerate_dominant(t, ell);
            for (size_t i = 0; i < v.size(); ++i) {
                CHECK(v[i].level() == ell);
                CHECK(v[i].dominant());
                for (size_t j = i + 1; j < v.size(); ++j) CHECK(!(v[i] == v[j]));
            }
        }
}

TEST_CASE("simple roots in Lambda coordinates") {
    AffineType a2{Family::A1, 2};
    auto a0 = simple_root_in_lambda_coords(a2, 0);
    CHECK(a0.coeffs == std::vector<int>({2, -1, -1}));

    // C_n^(1): the 0 => 1 double arrow gives a_{01} = -1, a_{10} = -2
    // (forced by level(alpha_0) = 0 with all dual labels 1).
    AffineType c3{Family::C1, 3};
    auto c0 = simple_root_in_lambda_coords(c3, 0);
    CHECK(c0.coeffs == std::vector<int>({2, -2, 0, 0}));
    // alpha_1 of C_3^(1): a_{01} = -1 (0 => 1 arrow)
    auto c1 = simple_root_in_lambda_coords(c3, 1);
    CHECK(c1.coeffs == std::vector<int>({-1, 2, -1, 0}));
}

TEST_CASE("tau case table") {
    // A_2^(1), r=1: rotation by -1
    AffineType a2{Family::A1, 2};
    CHECK(tau({a2, 1, 1}, fundamental(a2, 0)) == fundamental(a2, 2));

    // C_3^(1), r=2 even s: identity
    AffineType c3{Family::C1, 3};
    Weight w = fundamental(c3, 1) + fundamental(c3, 2);
    CHECK(tau({c3, 2, 2}, w) == w);
    CHECK_THROWS(tau({c3, 2, 1}, w));  // s/c_r not integral

    // D_4^(2) (n=3), r=3: Lambda_i -> Lambda_{n-i}
    AffineType d2{Family::D2, 3};
    CHECK(tau({d2, 3, 1}, fundamental(d2, 1)) == fundamental(d2, 2));

    // involution + level preservation across the case table
    std::vector<KRIndex> idxs = {{a2, 1, 2}, {c3, 2, 2}, {c3, 3, 2}, {d2, 3, 2},
                                 {d2, 1, 2}, {{Family::B1, 3}, 1, 1},
                                 {{Family::B1, 3}, 3, 2}, {{Family::D1, 4}, 1, 1},
                                 {{Family::D1, 4}, 4, 1}, {{Family::D1, 4}, 3, 1},
                                 {{Family::A2odd, 3}, 3, 1}, {{Family::A2even, 2}, 1, 1}};
    for (auto idx : idxs) {
        int ell = idx.s / c_r(idx);
        for (auto& w2 : enumerate_dominant(idx.type, ell)) {
            auto t1 = tau(idx, w2);
            CHECK(t1.level() == ell);
            if (idx.type.family != Family::A1) CHECK(tau(idx, t1) == w2);
        }
        // tau is a bijection on P^+_ell
        auto dom = enumerate_dominant(idx.type, ell);
        std::vector<std::string> images;
        for (auto& w2 : dom) images.push_back(tau(idx, w2).to_string());
        std::sort(images.begin(), images.end());
        CHECK(std::unique(images.begin(), images.end()) == images.end());
    }
}
