#include <doctest.h>

#include "flagforge/combinatorics.hpp"
#include "flagforge/complex.hpp"

using namespace flagforge;

TEST_CASE("binom basics and zero conventions") {
    CHECK(binom(37, 2) == 666);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(1, -1) == 0);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(-2, 1) == 0);
    CHECK(binom(52, 5) == 2598960);
}

TEST_CASE("binom agrees with the Pascal recurrence") {
    for (int n = 1; n <= 40; ++n)
        for (int k = 0; k <= n + 2; ++k)
            CHECK(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
}

TEST_CASE("turan_parts balance") {
    auto p1 = turan_parts(37, 3);
    CHECK(p1.sizes == std::vector<Int>{13, 12, 12});
    auto p2 = turan_parts(54, 3);
    CHECK(p2.sizes == std::vector<Int>{18, 18, 18});
    auto p3 = turan_parts(5, 7);
    CHECK(p3.sizes == std::vector<Int>{1, 1, 1, 1, 1, 0, 0});
    CHECK(p1.total() == 37);

    // general invariants: sizes non-increasing, within 1 of each other
    for (int n = 0; n <= 50; ++n)
        for (int r = 1; r <= 8; ++r) {
            auto tp = turan_parts(n, r);
            REQUIRE(tp.count() == r);
            CHECK(tp.total() == n);
            for (int i = 1; i < r; ++i) {
                CHECK(tp.sizes[i - 1] >= tp.sizes[i]);
                CHECK(tp.sizes[i - 1] - tp.sizes[i] <= 1);
            }
        }
}

TEST_CASE("turan_count examples") {
    CHECK(turan_count(37, 3, 3) == 1872);
    CHECK(turan_count(22, 2, 2) == 121);
    CHECK(turan_count(45, 2, 2) == 506);
    CHECK(turan_count(54, 3, 3) == 5832);
    CHECK(turan_count(10, 4, 3) == 0);
    CHECK(turan_count(7, 0, 3) == 1);
    CHECK(turan_count(-1, 0, 3) == 0);
    CHECK(turan_count(1, -1, 1) == 0);
    CHECK(turan_count(3, 4, 5) == 0);  // n < k
}

TEST_CASE("multipartite_count examples") {
    CHECK(multipartite_count({27, 27, 8}, 3) == 5832);
    CHECK(multipartite_count({27, 27, 8}, 2) == 1161);
    for (int a = 0; a <= 10; ++a) CHECK(multipartite_count({Int(a)}, 1) == a);
    CHECK(multipartite_count({3, 2}, 0) == 1);
    CHECK(multipartite_count({3, 2, 0}, 3) == 0);  // only two nonzero parts
}

TEST_CASE("turan_count equals the multipartite count of its own parts") {
    for (int r = 1; r <= 6; ++r)
        for (int n = 0; n <= 40; ++n)
            for (int k = 0; k <= 6; ++k)
                CHECK(turan_count(n, k, r) ==
                      multipartite_count(turan_parts(n, r).sizes, k));
}

TEST_CASE("turan_count matches brute-force clique counts (sampled range)") {
    for (int r = 1; r <= 5; ++r)
        for (int n = 0; n <= 24; ++n) {
            VertexColoredGraph g = build_multipartite(turan_parts(n, r).sizes);
            FaceVector f = clique_f_vector(g, 6);
            for (int k = 1; k <= 6; ++k) CHECK(turan_count(n, k, r) == f.f(k));
        }
}

TEST_CASE("turan_count monotone in n; sandwich bound with degree-k envelope") {
    for (int r = 1; r <= 6; ++r)
        for (int k = 1; k <= 6; ++k)
            for (int n = 1; n <= 50; ++n) {
                CHECK(turan_count(n, k, r) >= turan_count(n - 1, k, r));
                Int p = Int(n) / r;
                CHECK(binom(r, k) * pow_int(p, k) <= turan_count(n, k, r));
                CHECK(turan_count(n, k, r) <= binom(r, k) * pow_int(p + 1, k));
            }
}

TEST_CASE("floor tops bracket their coefficient") {
    for (int k = 1; k <= 5; ++k)
        for (long long m = 0; m <= 500; m += 3) {
            Int g = binom_floor_top(m, k);
            CHECK(binom(g, k) <= m);
            CHECK(binom(g + 1, k) > m);
        }
    for (int r = 2; r <= 5; ++r)
        for (int k = 1; k <= r; ++k)
            for (long long m = 0; m <= 500; m += 7) {
                Int g = turan_floor_top(m, k, r);
                CHECK(turan_count(g, k, r) <= m);
                CHECK(turan_count(g + 1, k, r) > m);
            }
}
