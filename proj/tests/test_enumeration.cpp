#include <doctest.h>

#include "podq/enumeration.hpp"
#include "podq/qproducts.hpp"

using namespace podq;

namespace {

// Frozen from an independent run of the knapsack recurrence.
const i64 kPod2[41] = {1,     2,     3,     6,     11,    18,    28,    44,    69,
                       104,   152,   222,   323,   460,   645,   902,   1254,  1722,
                       2343,  3174,  4278,  5722,  7601,  10056, 13250, 17358, 22623,
                       29382, 38021, 48984, 62857, 80404, 102528, 130282, 165002,
                       208398, 262495, 329666, 412878, 515840, 642941};

BivariateSeries add_tables(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateSeries out = a;
    for (i64 n = 0; n <= b.order(); ++n)
        for (i64 m = -n; m <= n; ++m) out.add_to_coeff(m, n, b.coeff(m, n));
    return out;
}

}  // namespace

TEST_CASE("partitions of small weights, in order") {
    std::vector<Partition> p4 = enum_pod_partitions(4);
    REQUIRE(p4.size() == 3);
    CHECK(p4[0].parts == std::vector<i64>{4});
    CHECK(p4[1].parts == std::vector<i64>{3, 1});
    CHECK(p4[2].parts == std::vector<i64>{2, 2});

    std::vector<Partition> p5 = enum_pod_partitions(5);
    REQUIRE(p5.size() == 4);
    CHECK(p5[0].parts == std::vector<i64>{5});
    CHECK(p5[1].parts == std::vector<i64>{4, 1});
    CHECK(p5[2].parts == std::vector<i64>{3, 2});
    CHECK(p5[3].parts == std::vector<i64>{2, 2, 1});

    std::vector<Partition> p0 = enum_pod_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts.empty());

    for (const Partition& p : enum_pod_partitions(12)) {
        CHECK(p.odd_parts_distinct());
        CHECK(p.weight() == 12);
    }
}

TEST_CASE("odd_parts_distinct predicate") {
    CHECK(Partition{{4, 4, 3, 2, 1}}.odd_parts_distinct());
    CHECK_FALSE(Partition{{3, 3}}.odd_parts_distinct());
    CHECK_FALSE(Partition{{1, 2}}.odd_parts_distinct());   // not decreasing
    CHECK_FALSE(Partition{{2, 0}}.odd_parts_distinct());   // non-positive part
    CHECK(Partition{{}}.odd_parts_distinct());
}

TEST_CASE("bipartitions of 4") {
    std::vector<Bipartition> bps = enum_pod_bipartitions(4);
    REQUIRE(bps.size() == 11);
    // Ordered by decreasing first-component weight.
    CHECK(bps.front().first.parts == std::vector<i64>{4});
    CHECK(bps.front().second.parts.empty());
    CHECK(bps.back().first.parts.empty());
    CHECK(bps.back().second.parts == std::vector<i64>{2, 2});
    for (const Bipartition& bp : bps) {
        CHECK(bp.weight() == 4);
        CHECK(bp.first.odd_parts_distinct());
        CHECK(bp.second.odd_parts_distinct());
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enum_pod_partitions(kMaxEnumerationWeight + 1), std::invalid_argument);
    CHECK_THROWS_AS(enum_pod_partitions(-1), std::invalid_argument);
    CHECK_THROWS_AS(stat_table(StatTag::BirankB, kMaxEnumerationWeight + 1),
                    std::invalid_argument);
}

TEST_CASE("three independent counts agree") {
    Series gf = pod2_gf(30);
    std::vector<mpz_class> dp = pod2_count_table(30);
    for (i64 n = 0; n <= 30; ++n) {
        mpz_class enumerated(static_cast<i64>(enum_pod_bipartitions(n).size()));
        CHECK(dp[static_cast<size_t>(n)] == enumerated);
        CHECK(gf.coeff(n) == enumerated);
    }
}

TEST_CASE("pod2 counts match the frozen table") {
    std::vector<mpz_class> dp = pod2_count_table(40);
    for (i64 n = 0; n <= 40; ++n) CHECK(dp[static_cast<size_t>(n)] == kPod2[n]);
    CHECK(pod2_count(24) == 13250);
    CHECK(pod2_count_table(100)[100] == mpz_class("22341445785"));
}

TEST_CASE("statistics on explicit objects") {
    Bipartition bp{Partition{{3, 1}}, Partition{{2}}};
    CHECK(birank_b(bp) == 1);
    CHECK(birank_c(bp) == 1);
    CHECK(rank_d(bp) == 2);
    Bipartition swapped{bp.second, bp.first};
    CHECK(birank_b(swapped) == -birank_b(bp));
    CHECK(birank_c(swapped) == -birank_c(bp));
    CHECK(rank_d(swapped) == 1);

    Bipartition empty{};
    CHECK(birank_b(empty) == 0);
    CHECK(birank_c(empty) == 0);
    CHECK(rank_d(empty) == 0);

    CHECK(stat_name(StatTag::BirankB) == doctest::String("b"));
    CHECK(stat_name(StatTag::BirankC) == doctest::String("c"));
    CHECK(stat_name(StatTag::RankD) == doctest::String("d"));
}

TEST_CASE("stat tables: totals and symmetry") {
    for (StatTag tag : {StatTag::BirankB, StatTag::BirankC, StatTag::RankD}) {
        StatTable table = stat_table(tag, 14);
        for (i64 n = 0; n <= 14; ++n) CHECK(table.row_total(n) == kPod2[n]);
    }
    // Swapping the components negates b and c, so their tables are even in m.
    for (StatTag tag : {StatTag::BirankB, StatTag::BirankC}) {
        StatTable table = stat_table(tag, 14);
        for (const auto& [key, c] : table.counts)
            CHECK(table.count(-key.first, key.second) == c);
    }
    // d is one-sided.
    StatTable d = stat_table(StatTag::RankD, 14);
    for (const auto& [key, c] : d.counts) {
        CHECK(key.first >= 0);
        CHECK(c > 0);
    }
}

TEST_CASE("residue counts respect the swap symmetry") {
    StatTable table = stat_table(StatTag::BirankB, 14);
    for (i64 t : {2, 3, 4}) {
        for (i64 n = 0; n <= 14; ++n) {
            std::map<i64, i64> r = residue_counts(table, t, n);
            i64 total = 0;
            for (i64 k = 0; k < t; ++k) {
                CHECK(r.at(k) == r.at((t - k) % t));
                total += r.at(k);
            }
            CHECK(total == kPod2[n]);
        }
    }
    CHECK_THROWS_AS(residue_counts(table, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(residue_counts(table, 2, 15), std::invalid_argument);
}

TEST_CASE("product-form generating functions match the enumerated tables") {
    const i64 N = 12;
    for (StatTag tag : {StatTag::BirankB, StatTag::BirankC, StatTag::RankD}) {
        CAPTURE(stat_name(tag));
        StatTable table = stat_table(tag, N);
        BivariateSeries gf = bivar_gf_from_products(tag, N);
        for (i64 n = 0; n <= N; ++n)
            for (i64 m = -n; m <= n; ++m) CHECK(gf.coeff(m, n) == table.count(m, n));
        CHECK(collapse_z1(gf) == pod2_gf(N));
    }
}

TEST_CASE("largest-part parity generating functions") {
    const i64 N = 24;
    auto [a, b] = largest_part_parity_gfs(N);

    // B is qz A.
    BivariateSeries shifted = a;
    shifted.shift_monomial(1, 1);
    CHECK(b == shifted);

    // Parity of the z-degree: even in A, odd in B.
    for (i64 n = 0; n <= N; ++n) {
        for (i64 m = -n; m <= n; ++m) {
            if (m < 0 || m % 2 != 0) CHECK(a.coeff(m, n) == 0);
            if (m < 1 || m % 2 != 1) CHECK(b.coeff(m, n) == 0);
        }
    }

    // z = 1 recovers the single-component generating function.
    CHECK(add(collapse_z1(a), collapse_z1(b)) == pod1_gf(N));

    // z tracks the largest part, witnessed by enumeration.
    BivariateSeries total = add_tables(a, b);
    for (i64 n = 0; n <= 12; ++n) {
        std::map<i64, i64> by_largest;
        for (const Partition& p : enum_pod_partitions(n)) ++by_largest[p.largest_part()];
        for (i64 l = 0; l <= n; ++l) {
            i64 want = by_largest.contains(l) ? by_largest[l] : 0;
            CHECK(total.coeff(l, n) == want);
        }
    }

    // The c statistic is the difference of two largest parts.
    CHECK(bivar_mul(total, total.reflect_z()) ==
          bivar_gf_from_products(StatTag::BirankC, N));
}
