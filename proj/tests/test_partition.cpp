#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "charfact/partition.hpp"

using namespace charfact;

TEST_CASE("normalization and parsing")
{
    CHECK(Partition(std::vector<int>{3, 2, 0, 0}) == Partition{3, 2});
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition::parse("6,5,5,1") == Partition{6, 5, 5, 1});
    CHECK(Partition::parse("-") == Partition());
    CHECK(Partition::parse("") == Partition());
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK(Partition{6, 5, 5, 1}.to_string() == "6,5,5,1");
    CHECK(Partition().to_string() == "-");
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition{6, 5, 5, 1}) == Partition{4, 3, 3, 3, 3, 1});
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(Partition{3}) == Partition{1, 1, 1});
    for (const auto& p : partitions_up_to(25))
        if (p.size() == 25 || p.size() <= 12)
            CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("frobenius coordinates")
{
    FrobeniusCoords fc = frobenius(Partition{6, 5, 5, 1});
    CHECK(fc.arms == std::vector<int>{5, 3, 2});
    CHECK(fc.legs == std::vector<int>{3, 1, 0});
    CHECK(frobenius(Partition()).rank() == 0);
    CHECK(frobenius(Partition{2}).arms == std::vector<int>{1});
    CHECK(frobenius(Partition{2}).legs == std::vector<int>{0});
    for (const auto& p : partitions_up_to(14)) {
        CHECK(from_frobenius(frobenius(p)) == p);
        CHECK(frobenius(p).rank() == p.frobenius_rank());
    }
    // rank counts diagonal cells
    CHECK(Partition{6, 5, 5, 1}.frobenius_rank() == 3);
}

TEST_CASE("shifted rank")
{
    Partition p{6, 5, 5, 1};
    CHECK(shifted_rank(p, 2) == 1);
    CHECK(shifted_rank(p, -3) == 2);
    CHECK(shifted_rank(p, 0) == 3);
    CHECK(shifted_rank(Partition(), 5) == 0);
    CHECK(shifted_rank(p, 10) == 0);
    CHECK(shifted_rank(p, -10) == 0);
}

TEST_CASE("hook lengths")
{
    auto grid = hook_lengths(Partition{6, 5, 5, 1});
    CHECK(grid[0][0] == 9);
    CHECK(grid[0] == std::vector<int>{9, 7, 6, 5, 4, 1});
    CHECK(grid[3] == std::vector<int>{1});
    CHECK(hook_lengths(Partition{1})[0][0] == 1);
    auto g21 = hook_lengths(Partition{2, 1});
    CHECK(g21 == std::vector<std::vector<int>>{{3, 1}, {1}});
}

TEST_CASE("z-asymmetric classification")
{
    CHECK(is_z_asymmetric(Partition{6, 5, 5, 1}, 2));
    CHECK_FALSE(is_z_asymmetric(Partition{6, 5, 5, 1}, 0));
    CHECK(is_z_asymmetric(Partition{2}, 1));
    for (const auto& p : partitions_up_to(10)) {
        CHECK(is_z_asymmetric(p, 0) == (p == conjugate(p)));
        for (int z = -3; z <= 3; ++z) {
            CHECK(is_z_asymmetric(p, z) == is_z_asymmetric(conjugate(p), -z));
            CHECK(is_z_asymmetric(Partition(), z));
        }
    }
}

TEST_CASE("z-asymmetric enumeration matches the product expansion")
{
    // (-q^{1+|z|}; q^2)_infinity, expanded to order 30 as the oracle.
    for (int z = -2; z <= 5; ++z) {
        const int order = 30;
        std::vector<long long> product(order + 1, 0);
        product[0] = 1;
        for (int j = 0; 1 + std::abs(z) + 2 * j <= order; ++j) {
            int e = 1 + std::abs(z) + 2 * j;
            for (int d = order; d >= e; --d)
                product[d] += product[d - e];
        }
        std::vector<long long> counts(order + 1, 0);
        for (const auto& p : enumerate_z_asymmetric(z, order)) {
            ++counts[p.size()];
            CHECK(is_z_asymmetric(p, z));
        }
        CHECK(counts == product);
    }
    CHECK(enumerate_z_asymmetric(3, 0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_z_asymmetric(1, 2) == std::vector<Partition>{Partition(), Partition{2}});
}

TEST_CASE("ribbon recognition")
{
    auto info = ribbon_info({Partition{6, 5, 5, 1}, Partition{4, 4, 2, 1}});
    REQUIRE(info.has_value());
    CHECK(info->size == 6);
    CHECK(info->height == 2);

    CHECK(ribbon_info({Partition{1}, Partition()}) == RibbonInfo{1, 0});
    CHECK(ribbon_info({Partition{2, 2}, Partition{2}}) == RibbonInfo{2, 0});
    CHECK_FALSE(ribbon_info({Partition{2, 2}, Partition()}).has_value());  // 2x2 block
    CHECK_FALSE(ribbon_info({Partition{3, 1}, Partition{1}}).has_value()); // disconnected
    CHECK_FALSE(ribbon_info({Partition{2}, Partition{2}}).has_value());    // empty
    CHECK_FALSE(ribbon_info({Partition{1}, Partition{2}}).has_value());    // invalid
}

TEST_CASE("rectangle addition")
{
    CHECK(Partition{3, 2}.add_rectangle(2, 2) == Partition{5, 4});
    CHECK(Partition{3, 2}.add_rectangle(1, 4) == Partition{4, 3, 1, 1});
    CHECK_FALSE(Partition{3, 2}.add_rectangle(-2, 1).has_value());  // 1,2 not decreasing
    CHECK(Partition{3, 3}.add_rectangle(-3, 2) == Partition());
}

TEST_CASE("subpartition enumeration")
{
    auto subs = subpartitions(Partition{2, 1});
    CHECK(subs.size() == 5);  // -, 1, 1,1, 2, 2,1
    for (const auto& s : subs)
        CHECK(Partition{2, 1}.contains(s));
}
