#pragma once

// Direct enumeration of bipartitions with odd parts distinct, the three
// statistics (biranks b and c, rank d), and their distribution tables.  This
// module is the combinatorial witness against which the product expansions
// are cross-checked: counts come from explicit object generation or from a
// convolution of knapsack tables, never from the series engine.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "podq/bivariate.hpp"
#include "podq/series.hpp"

namespace podq {

// Full enumeration is exponential; tables beyond this weight are refused.
inline constexpr i64 kMaxEnumerationWeight = 40;

struct Partition {
    std::vector<i64> parts;  // weakly decreasing

    i64 weight() const;
    i64 num_parts() const { return static_cast<i64>(parts.size()); }
    i64 largest_part() const { return parts.empty() ? 0 : parts.front(); }

    // Weakly decreasing, all parts positive, odd parts pairwise distinct.
    bool odd_parts_distinct() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

struct Bipartition {
    Partition first, second;

    i64 weight() const { return first.weight() + second.weight(); }

    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

// All partitions of n with odd parts distinct, parts in weakly decreasing
// order, emitted in lexicographically decreasing order of the part list.
std::vector<Partition> enum_pod_partitions(i64 n);

// All bipartitions of n with odd parts distinct in both components, ordered
// by decreasing first-component weight, then by the component orders above.
std::vector<Bipartition> enum_pod_bipartitions(i64 n);

// Streaming variant used by the table builders; visits the same objects in
// the same order without materializing them.
void for_each_pod_bipartition(i64 n, const std::function<void(const Partition&, const Partition&)>& visit);

// pod_{-2}(n) by convolving two single-component knapsack tables; shares no
// code with the series engine.
mpz_class pod2_count(i64 n);
std::vector<mpz_class> pod2_count_table(i64 max_n);
std::vector<mpz_class> pod1_count_table(i64 max_n);

// Statistics.  b and c are symmetric under swapping the components; d is
// one-sided and non-negative.
i64 birank_b(const Bipartition& bp);  // #parts(first) - #parts(second)
i64 birank_c(const Bipartition& bp);  // largest(first) - largest(second)
i64 rank_d(const Bipartition& bp);    // #parts(first)

enum class StatTag { BirankB, BirankC, RankD };
const char* stat_name(StatTag tag);  // "b", "c", "d"

struct StatTable {
    StatTag tag = StatTag::BirankB;
    i64 max_weight = 0;
    // (statistic value m, weight n) -> number of bipartitions, sparse.
    std::map<std::pair<i64, i64>, i64> counts;

    i64 count(i64 m, i64 n) const;
    i64 row_total(i64 n) const;
};

// Joint distribution of the statistic over all weights 0..max_weight
// (max_weight <= kMaxEnumerationWeight).
StatTable stat_table(StatTag tag, i64 max_weight);

// R(r, t, n): counts of weight-n bipartitions by statistic residue mod t,
// for every residue class 0 <= r < t.
std::map<i64, i64> residue_counts(const StatTable& table, i64 t, i64 n);

// The two-variable generating function of the statistic, built from its
// closed product form (z marks the statistic, q the weight).
BivariateSeries bivar_gf_from_products(StatTag tag, i64 order);

// A(z,q) and B(z,q): generating functions for single pod partitions whose
// largest part is even (tracked as z^{2k} for largest part 2k) resp. odd
// (z^{2k+1} for largest part 2k+1).  Both are computed twice, as q-binomial
// sums over the largest part and as closed products, and the two forms are
// asserted equal before returning the product form.
std::pair<BivariateSeries, BivariateSeries> largest_part_parity_gfs(i64 order);

}  // namespace podq
