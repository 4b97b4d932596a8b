// counting.hpp
//
// Assembly of the per-weight labeling counts |F(k, l)| from equivalence
// classes, and the headline cover counts:
//
//   |C(N, k)| = sum over l of l! * s~(n, l) * |F(k, l)|,
//
// with l running from ell0(k) to min(2^k - 2, n). Ordered covers correspond
// bijectively to (ordered block sequence, labeling) pairs, which is where
// the l! * s~(n, l) factor comes from; dividing by k! yields unordered
// covers, and the division is always exact.
//
// |F(k, l)| itself is assembled without enumerating all of G(k): the
// assignments over a branching set T split into equivalence classes, one
// representative row |F_rep(k, .)| is counted per class, and every other
// member's row is the representative row shifted by its weight offset:
//
//   |F(k, l)| = sum_a sum_w |F_{rep_a}(k, l - w)| * multiplicity_{a, w}
//
// with out-of-range shifted indices contributing zero. Infeasible classes
// (structurally uncoverable pair) contribute nothing and are skipped.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "covercount/bigint.hpp"
#include "covercount/detail/parallel.hpp"
#include "covercount/enumerator.hpp"
#include "covercount/errors.hpp"
#include "covercount/labelings.hpp"
#include "covercount/stirling.hpp"
#include "covercount/symmetry.hpp"

namespace covercount {

inline constexpr int kMaxCoverN = 10000;

// Full per-class breakdown of a count_labelings run.
struct LabelingCounts {
    int k = 0;
    int l0 = 0;
    int max_ell = 0; // rows and totals cover l = 1..max_ell
    std::vector<EquivalenceClass> classes;
    // class_rows[i][l] = |F_rep(k, l)| for classes[i]'s representative;
    // infeasible classes carry all-zero rows.
    std::vector<std::map<int, Int>> class_rows;
    std::map<int, Int> totals; // l -> |F(k, l)|, all l in 1..max_ell
};

// Count |F(k, l)| for every l in 1..max_ell via the class decomposition.
// max_ell = -1 means the full range 2^k - 2. `threads` bounds the workers
// used for per-class rows; the result is identical for any thread count.
inline LabelingCounts
count_labelings_detailed(int k, const BranchingSet& T, int max_ell = -1,
                         unsigned threads = 1,
                         std::uint64_t cap = kDefaultSolutionCap) {
    if (k < 2) throw argument_error("count_labelings: k must be >= 2");
    if (k > 6)
        throw resource_error("count_labelings: k > 6 exceeds the pipeline cap");
    if (T.k != k) throw argument_error("count_labelings: T has wrong k");
    const int nbits = labeling_size(k);
    if (max_ell < 0) max_ell = nbits;
    if (max_ell > nbits)
        throw argument_error("count_labelings: max_ell beyond 2^k-2");

    LabelingCounts result;
    result.k = k;
    result.l0 = ell0(k);
    result.max_ell = max_ell;
    result.classes = partition_classes(T);
    result.class_rows.assign(result.classes.size(), {});

    // One representative row per class, over the full needed range. Offsets
    // only shift rows rightward, so the representative row is never needed
    // beyond max_ell.
    detail::parallel_for(
        result.classes.size(), threads, [&](std::size_t i) {
            const EquivalenceClass& cls = result.classes[i];
            std::map<int, Int>& row = result.class_rows[i];
            for (int l = 0; l <= max_ell; ++l)
                row[l] = cls.feasible ? count_fixed(k, l, T, cls.representative,
                                                    cap)
                                      : Int(0);
        });

    for (int l = 1; l <= max_ell; ++l) result.totals[l] = 0;
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        const EquivalenceClass& cls = result.classes[i];
        if (!cls.feasible) continue;
        const std::map<int, Int>& row = result.class_rows[i];
        for (const auto& [w, group] : cls.offsets)
            for (int l = 1; l <= max_ell; ++l)
                if (l - w >= 0)
                    result.totals[l] += row.at(l - w) * group.multiplicity;
    }
    return result;
}

// |F(k, l)| for every l in 1..2^k-2 (zero below ell0(k)).
inline std::map<int, Int> count_labelings(int k, const BranchingSet& T,
                                          unsigned threads = 1) {
    return count_labelings_detailed(k, T, -1, threads).totals;
}

// Convenience: the prefix branching set is the default pipeline choice.
inline std::map<int, Int> count_labelings(int k, unsigned threads = 1) {
    return count_labelings(k, prefix_branching_set(k), threads);
}

// Number of ordered constructive k-covers of an n-set.
inline Int count_ordered_covers(int n, int k, const BranchingSet& T,
                                unsigned threads = 1) {
    if (n < 1 || k < 1)
        throw argument_error("count_ordered_covers: n and k must be >= 1");
    if (k > n)
        throw argument_error(
            "count_ordered_covers: k > n admits no constructive cover "
            "(pairwise differences force k distinct nonempty regions)");
    if (n > kMaxCoverN)
        throw resource_error("count_ordered_covers: n exceeds the table cap");
    if (k == 1) return 1; // the single cover (A_1 = {1..n})
    const int max_ell = std::min(labeling_size(k), n);
    const LabelingCounts counts =
        count_labelings_detailed(k, T, max_ell, threads);
    Int total = 0;
    for (int l = counts.l0; l <= max_ell; ++l)
        total += factorial(static_cast<unsigned>(l)) *
                 isn(static_cast<unsigned>(n), static_cast<unsigned>(l)) *
                 counts.totals.at(l);
    return total;
}

inline Int count_ordered_covers(int n, int k, unsigned threads = 1) {
    if (k == 1 && n >= 1) return 1;
    return count_ordered_covers(n, k, prefix_branching_set(k), threads);
}

// Number of unordered constructive k-covers: |C(N, k)| / k!. The division
// is exact because reordering acts freely on ordered covers (all k sets in
// a cover are distinct); a remainder signals a pipeline bug.
inline Int count_unordered_covers(int n, int k, unsigned threads = 1) {
    const Int ordered = count_ordered_covers(n, k, threads);
    const Int kfact = factorial(static_cast<unsigned>(k));
    if (ordered % kfact != 0)
        throw consistency_error(
            "count_unordered_covers: ordered count not divisible by k!");
    return ordered / kfact;
}

inline Int count_unordered_covers(int n, int k, const BranchingSet& T,
                                  unsigned threads = 1) {
    const Int ordered = count_ordered_covers(n, k, T, threads);
    const Int kfact = factorial(static_cast<unsigned>(k));
    if (ordered % kfact != 0)
        throw consistency_error(
            "count_unordered_covers: ordered count not divisible by k!");
    return ordered / kfact;
}

} // namespace covercount
