#include "k3fm/pic1.hpp"

#include <doctest.h>

using namespace k3fm;

TEST_CASE("existence_test examples") {
    CHECK(pic1::existence_test(4) == Integer(0));
    CHECK_FALSE(pic1::existence_test(8).has_value());
    CHECK(pic1::existence_test(12) == Integer(1));
    CHECK_THROWS_AS(pic1::existence_test(0), InputError);
    CHECK_THROWS_AS(pic1::existence_test(-4), InputError);
    CHECK_THROWS_AS(pic1::existence_test(6 + 1), InputError);
}

TEST_CASE("solve_constraints examples") {
    auto [p0, m0] = pic1::solve_constraints(0);
    CHECK(p0.c == -1);
    CHECK(p0.x == 1);
    CHECK(m0.c == -2);
    CHECK(m0.x == 3);
    CHECK(p0.matrix == IntMatrix{{3, -4, 2}, {-1, 1, -1}, {-2, 4, -1}});
    CHECK(m0.matrix == IntMatrix{{3, -4, 2}, {-2, 3, -1}, {0, 0, -1}});

    auto [p1, m1] = pic1::solve_constraints(1);
    CHECK(p1.c == -2);
    CHECK(p1.x == 5);
    CHECK(p1.alpha == 0);
    CHECK(p1.y == 0);
    CHECK(p1.matrix == IntMatrix{{5, -12, 2}, {-2, 5, -1}, {0, 0, 1}});
    CHECK(p1.det == 1);
    CHECK(p1.matrix * std::vector<Integer>{2, 1, 1} == std::vector<Integer>{0, 0, 1});
    CHECK(m1.det == -1);

    CHECK_THROWS_AS(pic1::solve_constraints(-1), InputError);
}

TEST_CASE("select_physical examples") {
    auto s0 = pic1::select_physical(pic1::solve_constraints(0));
    CHECK(s0.selected.c == -1);
    CHECK(s0.selected.x == 1);
    CHECK(s0.excluded_slope_ratio == Rational(2, 3));
    CHECK(s0.obstruction_holds);
    auto s1 = pic1::select_physical(pic1::solve_constraints(1));
    CHECK(s1.selected.c == -2);
    CHECK(s1.selected.x == 5);
    // order of the pair does not matter
    auto [a, b] = pic1::solve_constraints(4);
    CHECK(pic1::select_physical({b, a}).selected == a);
}

TEST_CASE("brute_force_oracle examples") {
    auto r0 = pic1::brute_force_oracle(0, 20);
    auto [p0, m0] = pic1::solve_constraints(0);
    REQUIRE(r0.solutions.size() == 2);
    CHECK(r0.solutions[0] == m0);
    CHECK(r0.solutions[1] == p0);
    CHECK(r0.conclusive);

    auto r3 = pic1::brute_force_oracle(3, 40);
    REQUIRE(r3.solutions.size() == 2);
    CHECK(r3.solutions[0].c == -5);
    CHECK(r3.solutions[1].c == -4);

    CHECK(pic1::brute_force_oracle(0, 20, 3).solutions.empty());
    CHECK(pic1::brute_force_oracle(0, 20, 1).solutions.empty());
}

TEST_CASE("closed forms stay exact for large n") {
    for (const Integer n : {Integer(10001), Integer("123456789012345678901234567890")}) {
        auto [p, m] = pic1::solve_constraints(n);
        CHECK(pic1::residuals(p).all_zero());
        CHECK(pic1::residuals(m).all_zero());
        CHECK(p.det == 1);
        CHECK(m.det == -1);
    }
    // A constant beyond the machine-integer threshold takes the big-integer scan.
    CHECK(pic1::brute_force_oracle(0, 20, 10001).solutions.empty());
}

TEST_CASE("property: both solutions satisfy every equation and are isometries") {
    for (int n = 0; n <= 60; ++n) {
        auto [p, m] = pic1::solve_constraints(n);
        for (const auto& s : {p, m}) {
            CHECK(pic1::residuals(s).all_zero());
            CHECK(is_mukai_isometry(pic1::to_transform(s)));
        }
        CHECK(p.det == 1);
        CHECK(m.det == -1);
        // the excluded ratio exceeds one half for every n
        CHECK(pic1::select_physical({p, m}).obstruction_holds);
    }
}

TEST_CASE("residuals detect a perturbed matrix") {
    auto [p, m] = pic1::solve_constraints(2);
    p.alpha += 2;
    CHECK_FALSE(pic1::residuals(p).all_zero());
}
