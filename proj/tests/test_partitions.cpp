#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hecke/partitions.hpp"

using hecke::Bicomposition;
using hecke::Composition;
using hecke::Int;
using hecke::Partition;

TEST_CASE("partition construction validates shape") {
    Partition lambda{3, 2, 1};
    CHECK(lambda.size() == 6);
    CHECK(lambda.length() == 3);
    CHECK(lambda.part(1) == 3);
    CHECK(lambda.part(4) == 0);
    CHECK(Partition{}.size() == 0);
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(lambda.part(0), hecke::IndexOutOfRange);
}

TEST_CASE("partition containment compares row by row") {
    Partition outer{3, 2};
    CHECK(outer.contains(Partition{3, 2}));
    CHECK(outer.contains(Partition{2, 2}));
    CHECK(outer.contains(Partition{}));
    CHECK_FALSE(outer.contains(Partition{4}));
    CHECK_FALSE(outer.contains(Partition{1, 1, 1}));
}

TEST_CASE("partitions enumerate once each in decreasing lexicographic order") {
    CHECK(hecke::enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(hecke::enumerate_partitions(4) ==
          std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                 Partition{2, 1, 1}, Partition{1, 1, 1, 1}});

    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int r = 0; r <= 10; ++r) {
        auto all = hecke::enumerate_partitions(r);
        CHECK(static_cast<int>(all.size()) == counts[r]);
        std::set<Partition> seen;
        for (const Partition& p : all) {
            CHECK(p.size() == r);
            CHECK(seen.insert(p).second);
        }
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].parts() > all[i].parts());
    }
    CHECK_THROWS_AS(hecke::enumerate_partitions(-1), hecke::IndexOutOfRange);
}

TEST_CASE("compositions enumerate with first part descending") {
    CHECK(hecke::enumerate_compositions(0) == std::vector<Composition>{Composition{}});
    CHECK(hecke::enumerate_compositions(3) ==
          std::vector<Composition>{Composition{3}, Composition{2, 1}, Composition{1, 2},
                                   Composition{1, 1, 1}});
    for (int k = 1; k <= 10; ++k)
        CHECK(hecke::enumerate_compositions(k).size() == (1u << (k - 1)));
    CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
}

TEST_CASE("bicompositions enumerate with the even side shrinking") {
    using BC = Bicomposition;
    CHECK(hecke::enumerate_bicompositions(1) ==
          std::vector<BC>{{Composition{1}, Composition{}}, {Composition{}, Composition{1}}});
    CHECK(hecke::enumerate_bicompositions(2) ==
          std::vector<BC>{{Composition{2}, Composition{}},
                          {Composition{1, 1}, Composition{}},
                          {Composition{1}, Composition{1}},
                          {Composition{}, Composition{2}},
                          {Composition{}, Composition{1, 1}}});
    CHECK(hecke::enumerate_bicompositions(3).size() == 12);
    // 2^a singles plus split pairs collapse to (a + 3) 2^{a-2} for a >= 2.
    for (int a = 2; a <= 10; ++a)
        CHECK(hecke::enumerate_bicompositions(a).size() ==
              static_cast<std::size_t>(a + 3) << (a - 2));
    for (const auto& w : hecke::enumerate_bicompositions(5)) CHECK(w.size() == 5);
}

TEST_CASE("hook partitions cut rows past the arm at the leg height") {
    CHECK(hecke::hook_partitions(1, 1, 3) ==
          std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    CHECK(hecke::hook_partitions(2, 1, 4) ==
          std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                 Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
    CHECK(hecke::hook_partitions(1, 0, 6) == std::vector<Partition>{Partition{6}});
    CHECK(hecke::hook_partitions(0, 1, 4) == std::vector<Partition>{Partition{1, 1, 1, 1}});
    CHECK(hecke::hook_partitions(3, 3, 0) == std::vector<Partition>{Partition{}});
    CHECK(hecke::hook_partitions(3, 3, 3) == hecke::enumerate_partitions(3));
    CHECK_THROWS_AS(hecke::hook_partitions(0, 0, 2), hecke::IndexOutOfRange);

    // Growing either bound only adds shapes.
    for (int r = 0; r <= 8; ++r) {
        auto small = hecke::hook_partitions(1, 2, r);
        auto large = hecke::hook_partitions(2, 2, r);
        std::set<Partition> in_large(large.begin(), large.end());
        for (const Partition& p : small) CHECK(in_large.count(p) == 1);
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(hecke::binomial(4, 2) == 6);
    CHECK(hecke::binomial(0, 0) == 1);
    CHECK(hecke::binomial(3, 5) == 0);
    CHECK(hecke::binomial(5, -1) == 0);
    Int row_sum = 0;
    for (int k = 0; k <= 64; ++k) row_sum += hecke::binomial(64, k);
    CHECK(row_sum == Int(1) << 64);
}
