#include "doctest.h"

#include "schubert/shapes.hpp"

using namespace schubert;

TEST_CASE("containment") {
    CHECK(contains(Partition{2, 1}, Partition{3, 2, 1}));
    CHECK_FALSE(contains(Partition{3, 1}, Partition{2, 2}));
    CHECK(contains(Partition{}, Partition{5, 1}));
    CHECK(Partition({2, 0, 0}) == Partition{2});
}

TEST_CASE("complement in a rectangle") {
    Rectangle r{2, 3};
    Partition nu{2, 1};
    CHECK(complement(nu, r) == Partition{2, 1});
    CHECK(complement(complement(nu, r), r) == nu);
    CHECK(complement(Partition{3, 3}, r) == Partition{});
    CHECK(complement(Partition{}, r) == Partition{3, 3});
    CHECK_THROWS(complement(Partition{4}, r));
    for (auto& p : partitions_in_rectangle(3, 4)) {
        Rectangle box{3, 4};
        CHECK(complement(complement(p, box), box) == p);
        CHECK(p.size() + complement(p, box).size() == 12);
    }
}

TEST_CASE("shifted complement") {
    CHECK(shifted_complement(staircase(3), 3) == StrictPartition{});
    CHECK(shifted_complement(StrictPartition{}, 3) == staircase(3));
    CHECK(shifted_complement(StrictPartition{2}, 3) == StrictPartition{3, 1});
    for (int n : {2, 3, 4})
        for (auto& p : strict_partitions_in(staircase(n))) {
            CHECK(shifted_complement(shifted_complement(p, n), n) == p);
            CHECK(p.size() + shifted_complement(p, n).size() == n * (n + 1) / 2);
        }
}

TEST_CASE("corners, addable and removable boxes") {
    auto added = with_box_added(Partition{2, 1});
    CHECK(added == std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
    auto sadded = with_box_added(StrictPartition{2, 1});
    CHECK(sadded == std::vector<StrictPartition>{{3, 1}});
    CHECK(with_box_removed(Partition{1}) == std::vector<Partition>{{}});
    CHECK(inner_corners(Partition{2, 2}) == std::vector<Cell>{{2, 2}});
    CHECK(inner_corners(Partition{3, 2, 1}) ==
          std::vector<Cell>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(inner_corners(StrictPartition{3, 1}) == std::vector<Cell>{{1, 3}, {2, 2}});
    // addable/removable are inverse relations on the staircase
    for (auto& p : strict_partitions_in(staircase(4)))
        for (auto& q : with_box_added(p)) {
            CHECK(q.size() == p.size() + 1);
            auto back = with_box_removed(q);
            CHECK(std::find(back.begin(), back.end(), p) != back.end());
        }
}

TEST_CASE("distance and box weight") {
    CHECK(dist({2, 1}, 2) == 1);
    CHECK(beta_box({2, 1}, 2) == Poly::parse("t_1-t_2"));
    CHECK(dist({1, 3}, 2) == 4);
    CHECK(beta_box({1, 3}, 2) == Poly::parse("t_4-t_5"));
    CHECK(dist({1, 2}, 2) - dist({2, 1}, 2) == 2);
    // the full 2x3 grid of box weights
    CHECK(beta_box({1, 1}, 2) == Poly::parse("t_2-t_3"));
    CHECK(beta_box({1, 2}, 2) == Poly::parse("t_3-t_4"));
    CHECK(beta_box({2, 2}, 2) == Poly::parse("t_2-t_3"));
    CHECK(beta_box({2, 3}, 2) == Poly::parse("t_3-t_4"));
}

TEST_CASE("diagonal weights") {
    CHECK(wt_YZ(StrictPartition{3, 2, 1}, WtFlavor::Y) == Poly::parse("3g_1+2g_2+g_3"));
    CHECK(wt_YZ(StrictPartition{3, 2, 1}, WtFlavor::Z) == Poly::parse("3a_1+4a_2+2a_3"));
    CHECK(wt_YZ_skew(StrictPartition{2}, StrictPartition{2}, WtFlavor::Y).is_zero());
    // half of wt_Z after a_1 -> 2 g_1, a_i -> g_i equals wt_Y, for every skew shape
    Substitution half;
    half[avar(1)] = Int(2) * Poly::variable(gvar(1));
    for (int i = 2; i <= 6; ++i) half[avar(i)] = Poly::variable(gvar(i));
    for (int n = 1; n <= 6; ++n)
        for (auto& nu : strict_partitions_in(staircase(n)))
            for (auto& la : strict_partitions_in(nu)) {
                Poly z = wt_YZ_skew(nu, la, WtFlavor::Z).substitute(half);
                CHECK(z == Int(2) * wt_YZ_skew(nu, la, WtFlavor::Y));
            }
}

TEST_CASE("horn subset maps") {
    CHECK(tau_of_subset({1, 2, 3}) == Partition{});
    CHECK(I_n_alpha(Partition{3, 2, 1}, 6, 3) == std::vector<int>{1, 3, 5});
    CHECK(ps_statistic(StrictPartition{6, 4, 3, 1}, Partition{3, 2, 1}, 6, 3) == 3);
    // the crossed set of the worked figure, cell for cell
    auto dead = crossed_cells({1, 3, 5}, 6);
    std::set<Cell> expect;
    for (int j = 1; j <= 6; ++j) expect.insert({1, j});
    expect.insert({2, 3});
    expect.insert({2, 5});
    for (int j = 3; j <= 6; ++j) expect.insert({3, j});
    expect.insert({4, 5});
    expect.insert({5, 5});
    expect.insert({5, 6});
    CHECK(dead == expect);
    CHECK(dead.size() == 15);
    // tau and I_n are mutually consistent: tau(I_n(alpha)) is the rotated complement
    for (int n : {4, 5, 6})
        for (int r = 1; r < n; ++r)
            for (auto& alpha : partitions_in_rectangle(r, n - r))
                CHECK(tau_of_subset(I_n_alpha(alpha, n, r)) ==
                      complement(alpha, Rectangle{r, n - r}));
}

TEST_CASE("partition text round trips") {
    CHECK(Partition::parse("3,2,1").str() == "3,2,1");
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("") == Partition{});
    CHECK(StrictPartition::parse("4,2,1").str() == "4,2,1");
}
