#include "podq/enumeration.hpp"

#include <stdexcept>

namespace podq {

namespace {

void check_weight(i64 n) {
    if (n < 0) throw std::invalid_argument("weight must be non-negative");
    if (n > kMaxEnumerationWeight)
        throw std::invalid_argument("weight exceeds the enumeration cap");
}

// Parts are chosen in decreasing order.  After an odd part p the next part
// is at most p-1 (odd parts may not repeat); after an even part p the bound
// stays at p.
void rec_pod(i64 remaining, i64 max_part, std::vector<i64>& acc,
             const std::function<void(const std::vector<i64>&)>& emit) {
    if (remaining == 0) {
        emit(acc);
        return;
    }
    i64 top = std::min(remaining, max_part);
    for (i64 p = top; p >= 1; --p) {
        acc.push_back(p);
        rec_pod(remaining - p, (p % 2 != 0) ? p - 1 : p, acc, emit);
        acc.pop_back();
    }
}

std::vector<Partition> pod_partitions_uncached(i64 n) {
    std::vector<Partition> out;
    std::vector<i64> acc;
    rec_pod(n, n == 0 ? 1 : n, acc, [&](const std::vector<i64>& parts) {
        out.push_back(Partition{parts});
    });
    return out;
}

// Lists of pod partitions for every weight 0..n.  Rebuilt per call: the
// lists are tiny next to the pair loops they feed, and keeping them local
// leaves the module free of shared mutable state.
std::vector<std::vector<Partition>> pod_partition_lists(i64 n) {
    std::vector<std::vector<Partition>> lists;
    lists.reserve(static_cast<size_t>(n + 1));
    for (i64 w = 0; w <= n; ++w) lists.push_back(pod_partitions_uncached(w));
    return lists;
}

}  // namespace

i64 Partition::weight() const {
    i64 w = 0;
    for (i64 p : parts) w += p;
    return w;
}

bool Partition::odd_parts_distinct() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0) {
            if (parts[i] > parts[i - 1]) return false;
            if (parts[i] == parts[i - 1] && parts[i] % 2 != 0) return false;
        }
    }
    return true;
}

std::vector<Partition> enum_pod_partitions(i64 n) {
    check_weight(n);
    return pod_partitions_uncached(n);
}

void for_each_pod_bipartition(
    i64 n, const std::function<void(const Partition&, const Partition&)>& visit) {
    check_weight(n);
    std::vector<std::vector<Partition>> lists = pod_partition_lists(n);
    for (i64 w1 = n; w1 >= 0; --w1) {
        for (const Partition& p1 : lists[static_cast<size_t>(w1)])
            for (const Partition& p2 : lists[static_cast<size_t>(n - w1)]) visit(p1, p2);
    }
}

std::vector<Bipartition> enum_pod_bipartitions(i64 n) {
    std::vector<Bipartition> out;
    for_each_pod_bipartition(n, [&](const Partition& p1, const Partition& p2) {
        out.push_back(Bipartition{p1, p2});
    });
    return out;
}

std::vector<mpz_class> pod1_count_table(i64 max_n) {
    if (max_n < 0) throw std::invalid_argument("weight must be non-negative");
    std::vector<mpz_class> dp(static_cast<size_t>(max_n + 1), mpz_class(0));
    dp[0] = 1;
    // Odd parts: 0/1 knapsack (descending index); even parts: unbounded.
    for (i64 j = 1; j <= max_n; j += 2)
        for (i64 n = max_n; n >= j; --n) dp[static_cast<size_t>(n)] += dp[static_cast<size_t>(n - j)];
    for (i64 j = 2; j <= max_n; j += 2)
        for (i64 n = j; n <= max_n; ++n) dp[static_cast<size_t>(n)] += dp[static_cast<size_t>(n - j)];
    return dp;
}

std::vector<mpz_class> pod2_count_table(i64 max_n) {
    std::vector<mpz_class> single = pod1_count_table(max_n);
    std::vector<mpz_class> out(static_cast<size_t>(max_n + 1), mpz_class(0));
    for (i64 n = 0; n <= max_n; ++n)
        for (i64 k = 0; k <= n; ++k)
            out[static_cast<size_t>(n)] += single[static_cast<size_t>(k)] *
                                           single[static_cast<size_t>(n - k)];
    return out;
}

mpz_class pod2_count(i64 n) {
    if (n < 0) throw std::invalid_argument("weight must be non-negative");
    return pod2_count_table(n).back();
}

i64 birank_b(const Bipartition& bp) { return bp.first.num_parts() - bp.second.num_parts(); }

i64 birank_c(const Bipartition& bp) { return bp.first.largest_part() - bp.second.largest_part(); }

i64 rank_d(const Bipartition& bp) { return bp.first.num_parts(); }

const char* stat_name(StatTag tag) {
    switch (tag) {
        case StatTag::BirankB: return "b";
        case StatTag::BirankC: return "c";
        case StatTag::RankD: return "d";
    }
    throw std::logic_error("unknown statistic tag");
}

i64 StatTable::count(i64 m, i64 n) const {
    auto it = counts.find({m, n});
    return it == counts.end() ? 0 : it->second;
}

i64 StatTable::row_total(i64 n) const {
    i64 total = 0;
    for (const auto& [key, c] : counts)
        if (key.second == n) total += c;
    return total;
}

StatTable stat_table(StatTag tag, i64 max_weight) {
    check_weight(max_weight);
    StatTable table;
    table.tag = tag;
    table.max_weight = max_weight;
    for (i64 n = 0; n <= max_weight; ++n) {
        for_each_pod_bipartition(n, [&](const Partition& p1, const Partition& p2) {
            i64 m = 0;
            switch (tag) {
                case StatTag::BirankB: m = p1.num_parts() - p2.num_parts(); break;
                case StatTag::BirankC: m = p1.largest_part() - p2.largest_part(); break;
                case StatTag::RankD: m = p1.num_parts(); break;
            }
            ++table.counts[{m, n}];
        });
    }
    return table;
}

std::map<i64, i64> residue_counts(const StatTable& table, i64 t, i64 n) {
    if (t < 1) throw std::invalid_argument("residue modulus must be positive");
    if (n < 0 || n > table.max_weight)
        throw std::invalid_argument("weight outside the table range");
    std::map<i64, i64> out;
    for (i64 r = 0; r < t; ++r) out[r] = 0;
    for (const auto& [key, c] : table.counts) {
        if (key.second != n) continue;
        i64 r = key.first % t;
        if (r < 0) r += t;
        out[r] += c;
    }
    return out;
}

BivariateSeries bivar_gf_from_products(StatTag tag, i64 order) {
    BivariateSeries gf = BivariateSeries::one(order);
    switch (tag) {
        case StatTag::BirankB:
            // (-qz;q^2)(-q/z;q^2) / ((q^2 z;q^2)(q^2/z;q^2))
            for (i64 j = 1; j <= order; j += 2) {
                gf.mul_factor(-1, 1, j);
                gf.mul_factor(-1, -1, j);
            }
            for (i64 j = 2; j <= order; j += 2) {
                gf.div_factor(1, 1, j);
                gf.div_factor(1, -1, j);
            }
            break;
        case StatTag::BirankC:
            // (1+q/z)(1+qz) (-q^3 z^2;q^2)(-q^3/z^2;q^2)
            //              / ((q^2 z^2;q^2)(q^2/z^2;q^2))
            gf.mul_factor(-1, -1, 1);
            gf.mul_factor(-1, 1, 1);
            for (i64 j = 3; j <= order; j += 2) {
                gf.mul_factor(-1, 2, j);
                gf.mul_factor(-1, -2, j);
            }
            for (i64 j = 2; j <= order; j += 2) {
                gf.div_factor(1, 2, j);
                gf.div_factor(1, -2, j);
            }
            break;
        case StatTag::RankD:
            // (-qz;q^2)/(q^2 z;q^2) * (-q;q^2)/(q^2;q^2)
            for (i64 j = 1; j <= order; j += 2) {
                gf.mul_factor(-1, 1, j);
                gf.mul_factor(-1, 0, j);
            }
            for (i64 j = 2; j <= order; j += 2) {
                gf.div_factor(1, 1, j);
                gf.div_factor(1, 0, j);
            }
            break;
    }
    return gf;
}

std::pair<BivariateSeries, BivariateSeries> largest_part_parity_gfs(i64 order) {
    const i64 N = order;

    // Product forms: A = (-q^3 z^2;q^2)/(q^2 z^2;q^2), B = qz A.
    BivariateSeries a_prod = BivariateSeries::one(N);
    for (i64 j = 3; j <= N; j += 2) a_prod.mul_factor(-1, 2, j);
    for (i64 j = 2; j <= N; j += 2) a_prod.div_factor(1, 2, j);
    BivariateSeries b_prod = a_prod;
    b_prod.shift_monomial(1, 1);

    // Sum forms: run S_m = q^{2m} (-q;q^2)_m / (q^2;q^2)_m incrementally and
    // deposit it on the z^{2m} (resp. z^{2m+1}, shifted by q) diagonal.
    BivariateSeries a_sum(N);
    BivariateSeries b_sum(N);
    Series running = Series::one(N);  // (-q;q^2)_m / (q^2;q^2)_m
    for (i64 m = 0; 2 * m <= N; ++m) {
        if (m > 0) {
            running.mul_binomial(-1, 2 * m - 1);
            running.div_binomial(1, 2 * m);
        }
        for (i64 j = 0; 2 * m + j <= N; ++j) {
            mpz_class v = running.coeff(j);
            if (v == 0) continue;
            a_sum.add_to_coeff(2 * m, 2 * m + j, v);
            if (2 * m + 1 + j <= N) b_sum.add_to_coeff(2 * m + 1, 2 * m + 1 + j, v);
        }
    }

    if (a_sum != a_prod || b_sum != b_prod)
        throw std::logic_error("largest-part generating functions: sum and product forms disagree");
    return {a_prod, b_prod};
}

}  // namespace podq
