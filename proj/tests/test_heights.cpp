#include <doctest.h>

#include "hlcluster/heights.hpp"
#include "hlcluster/hl.hpp"

using namespace hlc;

namespace {

YMonomial Y(int i, int s, int e = 1) { return YMonomial::var(i, s, e); }

const HeightFunction kFig2({-3, -2, -3, -4, -5, -4});

}  // namespace

TEST_CASE("validity and extension") {
    CHECK_THROWS_AS(HeightFunction({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(HeightFunction({}), std::invalid_argument);
    CHECK(kFig2(0) == kFig2(2));
    CHECK(kFig2(7) == kFig2(5));
    const HeightFunction one({4});
    CHECK(one(0) == 5);
    CHECK(one(2) == 5);
    CHECK_THROWS_AS(kFig2(8), std::out_of_range);
}

TEST_CASE("diamond, bullet and d on the running example") {
    CHECK(kFig2.diamond(1) == 1);
    CHECK(kFig2.bullet(1) == 0);
    CHECK(kFig2.d(1) == 1);
    CHECK(kFig2.diamond(2) == 4);
    CHECK(kFig2.bullet(2) == 1);
    CHECK(kFig2.d(2) == 0);
    CHECK(kFig2.diamond(3) == 4);
    CHECK(kFig2.diamond(5) == 5);
    CHECK(kFig2.diamond(6) == 6);
    CHECK(kFig2.bullet(5) == 4);
    CHECK(kFig2.d(0) == 0);
    CHECK(kFig2.d(7) == 0);
    auto dv = derived(kFig2, 2);
    CHECK(dv.diamond == 4);
    CHECK(dv.bullet == 1);
    CHECK(dv.d == 0);
}

TEST_CASE("derived is consistent for every small height function") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& xi : all_height_functions(n)) {
            CHECK(xi.diamond(n) == n);
            CHECK(xi.d(n) == 1);
            for (int j = 1; j <= n; ++j) {
                CHECK((xi.d(j) == 1) == (xi.diamond(j) == j));
                CHECK(xi.diamond(j) >= j);
                int b = xi.bullet(j);
                CHECK(b < j);
                if (b > 0) CHECK(xi.diamond(b) == b);
            }
        }
}

TEST_CASE("all_height_functions counts 2^(n-1)") {
    CHECK(all_height_functions(1).size() == 1);
    CHECK(all_height_functions(4).size() == 8);
    CHECK(all_height_functions(6).size() == 32);
    for (const auto& xi : all_height_functions(3)) CHECK(xi(1) == 0);
}

TEST_CASE("hat") {
    // witnesses x in [1,4] with xi(x-1) = xi(x+1) are 1 and 2
    CHECK(hat(kFig2, 5, 1) == 2);
    // j_bullet = j-1 = i1
    const HeightFunction xi({0, 1, 0, 1, 0});
    REQUIRE(xi.bullet(4) == 3);
    CHECK(hat(xi, 4, 3) == 3);
    // j > i1 and j_bullet = (i1)_bullet
    CHECK(hat(kFig2, 3, 2) == 2);
}

TEST_CASE("hat without a witness") {
    const HeightFunction xi({0, 1, 2, 3, 4});
    CHECK(hat(xi, 5, 2) == 2);
    CHECK_THROWS_AS(hat_strict(xi, 5, 2), std::domain_error);
}

TEST_CASE("omega fixtures") {
    CHECK(omega(kFig2, 1, 3) == Y(1, -4) * Y(2, -1) * Y(3, -4));
    const HeightFunction mono({0, 1, 2, 3, 2});
    CHECK(omega(mono, 1, 4) == Y(1, -1) * Y(4, 4));
    CHECK_THROWS_AS(omega(kFig2, 3, 3), std::invalid_argument);
}

TEST_CASE("omega satisfies the HL conditions") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& xi : all_height_functions(n))
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) CHECK(validate_hl(omega(xi, i, j)));
}

TEST_CASE("omega factorization lemmas") {
    int first = 0, second = 0;
    for (int n = 3; n <= 7; ++n)
        for (const auto& xi : all_height_functions(n))
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j <= n; ++j) {
                    if (!(xi.diamond(i) < j - 1)) continue;
                    for (int r = 1; r <= 3; ++r) {
                        const YMonomial whole = lift_r(omega(xi, i, j), r);
                        if (j - 1 != xi.diamond(j - 1)) {
                            const int b = xi.bullet(j) + 1;
                            REQUIRE(b > i);
                            CHECK(whole == lift_r(omega(xi, i, b) * Y(j, xi(j + 1)), r));
                            ++first;
                        } else {
                            const int b = xi.bullet(j - 1) + 1;
                            if (b <= i) continue;
                            const int a = xi(j - 1) < xi(j) ? xi(j) + 1 : xi(j) - 1;
                            CHECK(whole == lift_r(omega(xi, i, b) * Y(j, a), r));
                            ++second;
                        }
                    }
                }
    CHECK(first > 0);
    CHECK(second > 0);
}

TEST_CASE("t profile") {
    auto t = t_profile({1, 3}, {2, 1});
    CHECK(t.at(1) == 2);
    CHECK(t.at(2) == 3);
    CHECK(t.at(3) == 3);
    CHECK(t.at(4) == 1);
    CHECK(t.at(0) == 0);
    auto z = t_profile({2, 4, 6}, {0, 0, 0});
    for (int p = 2; p <= 6; ++p) CHECK(z.at(p) == 0);
    auto u = t_profile({1, 2}, {0, -1});
    CHECK(u.at(1) == 0);
    CHECK(u.at(2) == -1);
    CHECK_THROWS_AS(t_profile({2, 2}, {0, 0}), std::invalid_argument);
}

TEST_CASE("step functions") {
    CHECK(step_p(0, 3) == 1);
    CHECK(step_q(0, 3) == 0);
    CHECK(step_p(2, 2) == 1);
    CHECK(step_q(2, 2) == 1);
}

TEST_CASE("build_from_hlr fixtures") {
    auto k1 = build_from_hlr({1}, {-4});
    CHECK(k1(1) == -3);
    CHECK(k1(1) == k1(3));
    auto k2 = build_from_hlr({1, 3}, {-4, 0});
    CHECK(k2.n() == 5);
    CHECK(k2(1) < k2(2));
    CHECK(k2(2) < k2(3));
    CHECK(k2(3) > k2(4));
    CHECK(k2(4) < k2(5));
    CHECK_THROWS_AS(build_from_hlr({1, 3}, {-4, -1}), std::invalid_argument);
}

TEST_CASE("text and JSON forms") {
    CHECK(kFig2.str() == "-3,-2,-3,-4,-5,-4");
    CHECK(HeightFunction::parse("-3,-2,-3,-4,-5,-4") == kFig2);
    CHECK(HeightFunction::from_json(kFig2.to_json()) == kFig2);
    CHECK_THROWS(HeightFunction::parse("1,x"));
}
