#include <doctest.h>

#include <random>

#include "oldset/vertex_set.hpp"

using oldset::VertexSet;

TEST_CASE("basic membership and size") {
    VertexSet s(5);
    CHECK(s.empty());
    s.add(0);
    s.add(3);
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    s.remove(3);
    CHECK(s == VertexSet(5, {0}));
    CHECK(VertexSet::full(5).size() == 5);
    CHECK(VertexSet::full(64).size() == 64);
}

TEST_CASE("set algebra") {
    const VertexSet a(6, {0, 1, 4});
    const VertexSet b(6, {1, 2});
    CHECK((a | b) == VertexSet(6, {0, 1, 2, 4}));
    CHECK((a & b) == VertexSet(6, {1}));
    CHECK((a - b) == VertexSet(6, {0, 4}));
    CHECK((a ^ b) == VertexSet(6, {0, 2, 4}));
    CHECK(a.complement() == VertexSet(6, {2, 3, 5}));
    CHECK(VertexSet(6, {1}).is_subset_of(a));
    CHECK(a.first() == 0);
    CHECK(VertexSet(6).first() == -1);
}

TEST_CASE("iteration is in increasing order") {
    const VertexSet s(10, {7, 2, 9});
    std::vector<int> got;
    for (int v : s) got.push_back(v);
    CHECK(got == std::vector<int>{2, 7, 9});
    CHECK(s.to_string() == "{2, 7, 9}");
}

TEST_CASE("symmetric difference is commutative and self-inverse") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        VertexSet a(n), b(n);
        for (int v = 0; v < n; ++v) {
            if (rng() & 1u) a.add(v);
            if (rng() & 1u) b.add(v);
        }
        CHECK((a ^ b) == (b ^ a));
        CHECK(((a ^ b) ^ b) == a);
        CHECK((a ^ a).empty());
    }
}

TEST_CASE("universe cap") {
    CHECK_THROWS_AS(VertexSet(65), std::length_error);
}
