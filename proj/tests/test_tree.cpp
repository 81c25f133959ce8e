#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "rkp/tree.hpp"

using namespace rkp;

TEST_CASE("fractions reduce and normalize") {
    CHECK(make_fraction(4, 2) == Fraction{2, 1});
    CHECK(make_fraction(3, -1) == Fraction{-3, 1});
    CHECK(make_fraction(5, 0) == Fraction{1, 0});
    CHECK(to_string(Fraction{1, 0}) == "∞");
    CHECK(to_string(Fraction{-3, 1}) == "-3/1");
    CHECK_THROWS_AS(make_fraction(0, 0), std::domain_error);
}

TEST_CASE("mediants") {
    CHECK(mediant({0, 1}, {1, 0}) == Fraction{1, 1});
    CHECK(mediant({1, 2}, {1, 1}) == Fraction{2, 3});
    CHECK(mediant({1, 1}, {1, 0}) == Fraction{2, 1});
    CHECK_THROWS_AS(mediant({1, 0}, {1, 0}), std::domain_error);
}

TEST_CASE("mediant tree levels") {
    CHECK(stern_brocot_level(0).nodes == std::vector<Fraction>{{1, 1}});
    CHECK(stern_brocot_level(1).nodes == std::vector<Fraction>{{1, 2}, {2, 1}});
    CHECK(stern_brocot_level(2).nodes ==
          std::vector<Fraction>{{1, 3}, {2, 3}, {3, 2}, {3, 1}});
    CHECK(stern_brocot_level(3).nodes ==
          std::vector<Fraction>{{1, 4}, {2, 5}, {3, 5}, {3, 4}, {4, 3}, {5, 3}, {5, 2}, {4, 1}});

    for (int n = 0; n <= 12; ++n) {
        TreeLevel level = stern_brocot_level(n);
        CHECK(level.nodes.size() == (1u << n));
        for (std::size_t i = 0; i < level.nodes.size(); ++i) {
            CHECK(std::gcd(level.nodes[i].num, level.nodes[i].den) == 1);
            if (i > 0)
                CHECK(level.nodes[i - 1].num * level.nodes[i].den <
                      level.nodes[i].num * level.nodes[i - 1].den);
        }
    }
    CHECK_THROWS_AS(stern_brocot_level(31), std::domain_error);
}

TEST_CASE("paths address tree nodes") {
    CHECK(node_at("") == Fraction{1, 1});
    CHECK(node_at("0") == Fraction{1, 2});
    CHECK(node_at("1") == Fraction{2, 1});
    CHECK(node_at("01") == Fraction{2, 3});
    for (int len = 1; len <= 10; ++len) {
        TreeLevel level = stern_brocot_level(len);
        for (std::size_t idx : {std::size_t{0}, level.nodes.size() / 2,
                                level.nodes.size() - 1}) {
            std::string path;
            for (int bit = len - 1; bit >= 0; --bit)
                path += ((idx >> bit) & 1) ? '1' : '0';
            CHECK(node_at(path) == level.nodes[idx]);
        }
    }
    CHECK_THROWS_AS(node_at("02"), std::domain_error);
    CHECK_THROWS_AS(node_at(std::string(61, '0')), std::domain_error);
    CHECK(node_at(std::string(60, '1')) == Fraction{61, 1});  // safe at the cap
}

TEST_CASE("slope relabeling") {
    CHECK(transform_node(1, 1) == Fraction{1, 0});
    CHECK(transform_node(1, 2) == Fraction{3, 1});
    CHECK(transform_node(2, 1) == Fraction{-3, 1});
    CHECK(transform_node(1, 3) == Fraction{2, 1});
    CHECK_THROWS_AS(transform_node(2, 4), std::invalid_argument);

    CHECK(new_tree_level(0).nodes == std::vector<Fraction>{{1, 0}});
    CHECK(new_tree_level(1).nodes == std::vector<Fraction>{{3, 1}, {-3, 1}});
    CHECK(new_tree_level(2).nodes ==
          std::vector<Fraction>{{2, 1}, {5, 1}, {-5, 1}, {-2, 1}});
    CHECK(new_tree_level(3).nodes ==
          std::vector<Fraction>{
              {5, 3}, {7, 3}, {4, 1}, {7, 1}, {-7, 1}, {-4, 1}, {-7, 3}, {-5, 3}});
}

TEST_CASE("slope identity against the boundary tangent") {
    CHECK(slope_cross_check(2, 1) == 0.0);
    CHECK(slope_cross_check(1, 2) == 0.0);
    CHECK(slope_cross_check(3, 2) == 0.0);
    CHECK(slope_cross_check(1, 1) == 0.0);  // both sides are the infinity node
    for (long long sum = 2; sum <= 50; ++sum)
        for (long long k = 1; k < sum; ++k)
            if (std::gcd(k, sum - k) == 1) CHECK(slope_cross_check(k, sum - k) == 0.0);
}

TEST_CASE("reduction of the relabeled fraction loses no information") {
    for (long long sum = 2; sum <= 50; ++sum) {
        for (long long k = 1; k < sum; ++k) {
            long long l = sum - k;
            if (std::gcd(k, l) != 1) continue;
            long long g = std::gcd(k + l, l > k ? l - k : k - l);
            bool ok = g == 1 || g == 2;
            CHECK(ok);
        }
    }
}
