// Acceptance gate: ten end-to-end criteria, one [PASS]/[FAIL] line each,
// nonzero exit when anything fails. Criteria with a stated time budget fail
// when they overrun it.
//
// Usage: acceptance [--long]
//   --long additionally sweeps all 2^30 k = 5 labelings with the brute-force
//   oracle inside criterion 4 (expected minutes; the budget is waived).

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covercount/covercount.hpp"

namespace {

using covercount::BranchingAssignment;
using covercount::BranchingSet;
using covercount::Int;

void check(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

std::string fmt_pair(int n, int l) {
    return "(" + std::to_string(n) + "," + std::to_string(l) + ")";
}

// ---- criterion 1: the two count triangles ----------------------------------

const std::vector<std::vector<std::int64_t>> kStirlingTriangle = {
    {1},
    {1, 1},
    {1, 3, 1},
    {1, 7, 6, 1},
    {1, 15, 25, 10, 1},
    {1, 31, 90, 65, 15, 1},
    {1, 63, 301, 350, 140, 21, 1},
    {1, 127, 966, 1701, 1050, 266, 28, 1},
    {1, 255, 3025, 7770, 6951, 2646, 462, 36, 1},
    {1, 511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1},
};

const std::vector<std::vector<std::int64_t>> kIsnTriangle = {
    {1},
    {3, 1},
    {7, 6, 1},
    {15, 25, 10, 1},
    {31, 90, 65, 15, 1},
    {63, 301, 350, 140, 21, 1},
    {127, 966, 1701, 1050, 266, 28, 1},
    {255, 3025, 7770, 6951, 2646, 462, 36, 1},
    {511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1},
    {1023, 28501, 145750, 246730, 179487, 63987, 11880, 1155, 55, 1},
};

void criterion_tables() {
    const covercount::CountTable st =
        covercount::build_table(covercount::TableKind::stirling, 10);
    const covercount::CountTable is =
        covercount::build_table(covercount::TableKind::isn, 10);
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned l = 1; l <= n; ++l) {
            check(st.at(n, l) == Int(kStirlingTriangle[n - 1][l - 1]),
                  "stirling" + fmt_pair(int(n), int(l)) + " off");
            check(is.at(n, l) == Int(kIsnTriangle[n - 1][l - 1]),
                  "isn" + fmt_pair(int(n), int(l)) + " off");
        }
    }
}

// ---- criterion 2: k = 3 ground truth ----------------------------------------

std::set<std::string> as_strings(const std::vector<covercount::Labeling>& xs) {
    std::set<std::string> out;
    for (const covercount::Labeling& x : xs) out.insert(x.to_string01());
    return out;
}

void criterion_k3() {
    const std::map<int, Int> expected = {{1, 0}, {2, 0}, {3, 2},
                                         {4, 9}, {5, 6}, {6, 1}};
    check(covercount::count_labelings(3) == expected, "k=3 totals off");

    const std::set<std::string> f33 = {"111000", "000111"};
    check(as_strings(covercount::enumerate_labelings(3, 3)) == f33,
          "weight-3 listing off");

    const std::set<std::string> f34 = {"100111", "010111", "001111",
                                       "111100", "111010", "111001",
                                       "110011", "101101", "011110"};
    check(as_strings(covercount::enumerate_labelings(3, 4)) == f34,
          "weight-4 listing off");
}

// ---- criteria 3 and 4: k = 4 / k = 5 end to end ------------------------------

const std::map<int, std::int64_t> kRowK4 = {
    {4, 25},   {5, 304}, {6, 1165}, {7, 2188}, {8, 2487}, {9, 1882},
    {10, 989}, {11, 364}, {12, 91},  {13, 14},  {14, 1}};

const std::map<int, std::int64_t> kRowK5 = {
    {4, 30},          {5, 2026},        {6, 41430},      {7, 376350},
    {8, 2003655},     {9, 7286000},     {10, 19794315},  {11, 42481630},
    {12, 74703675},   {13, 110336120},  {14, 139213315}, {15, 151755930},
    {16, 143939615},  {17, 119234250},  {18, 86346985},  {19, 54596500},
    {20, 30040395},   {21, 14306710},   {22, 5852905},   {23, 2035800},
    {24, 593775},     {25, 142506},     {26, 27405},     {27, 4060},
    {28, 435},        {29, 30},         {30, 1}};

void require_row(const std::map<int, Int>& totals,
                 const std::map<int, std::int64_t>& row, const char* label) {
    for (const auto& [l, value] : totals) {
        const auto it = row.find(l);
        const Int expected = (it == row.end()) ? Int(0) : Int(it->second);
        check(value == expected,
              std::string(label) + ": weight " + std::to_string(l) + " off");
    }
    for (const auto& [l, value] : row)
        check(totals.count(l) == 1,
              std::string(label) + ": weight " + std::to_string(l) + " missing");
}

void require_oracle_match(const std::map<int, Int>& totals,
                          const std::map<int, std::uint64_t>& sweep,
                          const char* label) {
    for (const auto& [l, value] : totals) {
        const auto it = sweep.find(l);
        const Int expected = (it == sweep.end()) ? Int(0) : Int(it->second);
        check(value == expected, std::string(label) + ": sweep differs at " +
                                     std::to_string(l));
    }
    for (const auto& [l, value] : sweep)
        check(totals.count(l) == 1, std::string(label) +
                                        ": sweep has extra weight " +
                                        std::to_string(l));
}

void criterion_k4() {
    const covercount::LabelingCounts counts =
        covercount::count_labelings_detailed(4,
                                             covercount::prefix_branching_set(4));
    int feasible = 0;
    for (const covercount::EquivalenceClass& c : counts.classes)
        if (c.feasible) ++feasible;
    check(feasible == 6, "k=4 prefix: expected 6 feasible classes, got " +
                             std::to_string(feasible));
    require_row(counts.totals, kRowK4, "k=4 totals");
    require_oracle_match(counts.totals, covercount::oracle::brute_force_labelings(4),
                         "k=4");
}

void criterion_k5(bool long_run) {
    const covercount::LabelingCounts counts = covercount::count_labelings_detailed(
        5, covercount::low_weight_branching_set(5));
    check(counts.classes.size() == 28, "k=5 low-weight: expected 28 classes, got " +
                                           std::to_string(counts.classes.size()));
    for (const covercount::EquivalenceClass& c : counts.classes)
        check(c.feasible, "k=5 low-weight: class " + std::to_string(c.index) +
                              " unexpectedly infeasible");
    require_row(counts.totals, kRowK5, "k=5 totals");
    if (long_run)
        require_oracle_match(counts.totals,
                             covercount::oracle::brute_force_labelings(5), "k=5");
}

// ---- criterion 5: worked design counts ---------------------------------------

void criterion_designs() {
    check(covercount::count_coherent_designs(7, 4) == Int(1868650),
          "(7,4) design count off");
    check(covercount::count_coherent_designs(9, 5) == Int(65691305652LL),
          "(9,5) design count off");
}

// ---- criterion 6: oracle equivalence grid ------------------------------------

void criterion_oracle_grid() {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= std::min(4, n); ++k) {
            const Int fast = covercount::count_ordered_covers(n, k);
            const Int slow = covercount::oracle::brute_force_covers(n, k);
            check(fast == slow, "pipeline and oracle disagree at " +
                                    fmt_pair(n, k) + ": " +
                                    covercount::to_decimal(fast) + " vs " +
                                    covercount::to_decimal(slow));
        }
    }
    check(covercount::count_ordered_covers(3, 2) == Int(12), "(3,2) off");
    check(covercount::count_ordered_covers(3, 3) == Int(12), "(3,3) off");
    check(covercount::count_ordered_covers(4, 3) == Int(336), "(4,3) off");
}

// ---- criterion 7: stabilizer invariance and shift identities ------------------

BranchingAssignment permuted(const std::shared_ptr<const BranchingSet>& T,
                             const BranchingAssignment& y,
                             const covercount::Permutation& pi) {
    std::vector<std::uint8_t> vals(static_cast<std::size_t>(T->size()));
    for (int p = 0; p < T->size(); ++p) {
        const covercount::IndexVector image = covercount::apply_permutation(
            T->members[static_cast<std::size_t>(p)], pi);
        const int q = T->index_of(image.mask);
        check(q >= 0, "stabilizer image left the branching set");
        vals[static_cast<std::size_t>(p)] =
            static_cast<std::uint8_t>(y.value(q) ? 1 : 0);
    }
    return BranchingAssignment(T, std::move(vals));
}

BranchingAssignment flipped(const std::shared_ptr<const BranchingSet>& T,
                            const BranchingAssignment& y) {
    std::vector<std::uint8_t> vals(static_cast<std::size_t>(T->size()));
    for (int p = 0; p < T->size(); ++p) {
        const covercount::IndexVector image = covercount::apply_complement(
            covercount::Complement::swap, T->members[static_cast<std::size_t>(p)]);
        const int q = T->index_of(image.mask);
        check(q >= 0, "flip image left the branching set");
        vals[static_cast<std::size_t>(p)] =
            static_cast<std::uint8_t>(y.value(q) ? 1 : 0);
    }
    return BranchingAssignment(T, std::move(vals));
}

void criterion_symmetry() {
    // Relabeling invariance, exhaustively over the k = 4 prefix set.
    const auto prefix =
        std::make_shared<const BranchingSet>(covercount::prefix_branching_set(4));
    const std::vector<covercount::Permutation> perms =
        covercount::stabilizer_permutations(*prefix);
    check(perms.size() == 2, "prefix k=4 stabilizer should have 2 relabelings");
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        const BranchingAssignment y(prefix, bits);
        for (const covercount::Permutation& pi : perms) {
            const BranchingAssignment ypi = permuted(prefix, y, pi);
            for (int ell = 0; ell <= 14; ++ell)
                check(covercount::count_fixed(4, ell, *prefix, y) ==
                          covercount::count_fixed(4, ell, *prefix, ypi),
                      "relabeling changed a fixed count at weight " +
                          std::to_string(ell));
        }
    }

    // Flip invariance, exhaustively over the flip-closed set T(4).
    const auto full = std::make_shared<const BranchingSet>(
        BranchingSet(4, covercount::full_index_space(4)));
    check(covercount::stabilizer_complements(*full).size() == 2,
          "T(4) should be flip-closed");
    for (std::uint32_t bits = 0; bits < (1u << 14); ++bits) {
        const BranchingAssignment y(full, bits);
        const BranchingAssignment ya = flipped(full, y);
        const int ell = y.weight(); // the only possibly-nonzero row
        check(covercount::count_fixed(4, ell, *full, y) ==
                  covercount::count_fixed(4, ell, *full, ya),
              "flip changed a fully-pinned count at weight " +
                  std::to_string(ell));
    }

    // Equal impact sets force weight-shifted count rows (prefix set, all
    // assignment pairs, all weights).
    std::map<std::vector<std::pair<int, int>>, std::vector<std::uint32_t>> groups;
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        const BranchingAssignment y(prefix, bits);
        groups[covercount::impact_set(*prefix, y).pairs].push_back(bits);
    }
    check(groups.size() < 16, "expected at least one nontrivial impact group");
    for (const auto& [pairs, members] : groups) {
        for (std::uint32_t b1 : members) {
            for (std::uint32_t b2 : members) {
                const BranchingAssignment y1(prefix, b1);
                const BranchingAssignment y2(prefix, b2);
                const int shift = y1.weight() - y2.weight();
                for (int ell = 0; ell <= 14; ++ell) {
                    const int target = ell - shift;
                    const Int rhs =
                        (target >= 0 && target <= 14)
                            ? covercount::count_fixed(4, target, *prefix, y2)
                            : Int(0);
                    check(covercount::count_fixed(4, ell, *prefix, y1) == rhs,
                          "shift identity failed at weight " +
                              std::to_string(ell));
                }
            }
        }
    }
}

// ---- criterion 8: labeling round-trip on fuzzed covers -------------------------

void criterion_roundtrip() {
    std::mt19937 rng(424242u);
    for (int round = 0; round < 10000; ++round) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const int n = k + static_cast<int>(rng() % (9 - k));
        const std::uint32_t uni = (std::uint32_t(1) << n) - 1;
        std::vector<std::uint32_t> sets(static_cast<std::size_t>(k));
        do {
            for (std::uint32_t& s : sets)
                s = static_cast<std::uint32_t>(rng()) & uni;
        } while (!covercount::is_constructive_masks(sets, n));
        const covercount::Cover cover(n, sets);

        const covercount::Labeling x = covercount::labeling_of_cover(cover);
        const std::vector<covercount::IndexVector> ts =
            covercount::full_index_space(k);
        std::vector<std::uint32_t> blocks;
        for (std::size_t pos = 0; pos < ts.size(); ++pos)
            if (x.test(static_cast<int>(pos)))
                blocks.push_back(covercount::region_of(cover, ts[pos]));

        const covercount::Cover back =
            covercount::reconstruct_cover(n, blocks, x);
        check(back == cover,
              "round " + std::to_string(round) + ": round-trip changed the cover");
    }
}

// ---- criterion 9: reliability duality on random systems ------------------------

std::vector<std::uint32_t> random_family(std::mt19937& rng, int* n_out) {
    for (;;) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const int k = 1 + static_cast<int>(rng() % 5);
        std::vector<std::uint32_t> sets;
        for (int i = 0; i < k; ++i) {
            const std::uint32_t m =
                static_cast<std::uint32_t>(rng()) & ((std::uint32_t(1) << n) - 1);
            if (m == 0) break;
            sets.push_back(m);
        }
        if (static_cast<int>(sets.size()) == k &&
            covercount::is_constructive_cover(sets, n)) {
            *n_out = n;
            return sets;
        }
    }
}

void criterion_reliability() {
    std::mt19937 rng(20260816u);
    for (int round = 0; round < 1000; ++round) {
        int n = 0;
        const std::vector<std::uint32_t> paths = random_family(rng, &n);
        const int s = 1 + static_cast<int>(rng() % 2);

        const std::vector<std::uint32_t> cuts =
            covercount::minimal_cut_sets(paths, n);
        check(cuts == covercount::oracle::brute_force_hitting_sets(paths, n),
              "round " + std::to_string(round) +
                  ": minimal cuts differ from the hitting-set oracle");

        // Every state vector z in {0..s}^n.
        std::vector<int> z(static_cast<std::size_t>(n), 0);
        for (;;) {
            check(covercount::phi_from_paths(z, paths, n) ==
                      covercount::phi_from_cuts(z, cuts, n),
                  "round " + std::to_string(round) +
                      ": path and cut formulas disagree");
            int i = 0;
            while (i < n && z[static_cast<std::size_t>(i)] == s) {
                z[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == n) break;
            ++z[static_cast<std::size_t>(i)];
        }
    }
}

// ---- criterion 10: branching-set independence ----------------------------------

void criterion_branching_independence() {
    const std::map<int, Int> ref =
        covercount::count_labelings(4, covercount::prefix_branching_set(4));
    check(covercount::count_labelings(4, covercount::low_weight_branching_set(4)) ==
              ref,
          "low-weight branching disagrees with prefix");

    const std::vector<covercount::IndexVector> space =
        covercount::full_index_space(4);
    std::mt19937 rng(31337u);
    for (int round = 0; round < 20; ++round) {
        const std::uint32_t sub = 1 + rng() % ((1u << 14) - 1);
        std::vector<covercount::IndexVector> members;
        for (int p = 0; p < 14; ++p)
            if ((sub >> p) & 1) members.push_back(space[static_cast<std::size_t>(p)]);
        check(covercount::count_labelings(4, BranchingSet(4, members)) == ref,
              "random branching set " + std::to_string(round) +
                  " changed the totals");
    }
}

struct Criterion {
    std::string description;
    double budget_seconds; // 0 = no enforced budget
    std::function<void()> run;
};

} // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--long") {
            long_run = true;
        } else {
            std::fprintf(stderr, "usage: %s [--long]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {"count triangles match the published tables (both kinds, n <= 10)",
         0.1, criterion_tables},
        {"k = 3 per-weight counts and the explicit weight-3/4 listings", 0.1,
         criterion_k3},
        {"k = 4 pipeline: 6 feasible classes, published row, full sweep", 1.0,
         criterion_k4},
        {std::string("k = 5 pipeline: 28 classes and the published row") +
             (long_run ? " + 2^30 sweep" : ""),
         long_run ? 0.0 : 300.0, [long_run] { criterion_k5(long_run); }},
        {"coherent-design counts for (n,k) = (7,4) and (9,5)", 0.0,
         criterion_designs},
        {"ordered-cover counts equal the brute-force oracle for k <= 4, n <= 5",
         30.0, criterion_oracle_grid},
        {"stabilizer invariance and weight-shift identities at k = 4", 0.0,
         criterion_symmetry},
        {"10,000 fuzzed covers survive the labeling round-trip", 0.0,
         criterion_roundtrip},
        {"1,000 random systems: path/cut duality and cut-oracle equality", 0.0,
         criterion_reliability},
        {"k = 4 totals identical across prefix, low-weight, and 20 random sets",
         0.0, criterion_branching_independence},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = true;
        std::string why;
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (ok && criteria[i].budget_seconds > 0 &&
            secs > criteria[i].budget_seconds) {
            ok = false;
            why = "exceeded the " + std::to_string(criteria[i].budget_seconds) +
                  "s budget";
        }
        std::printf("[%s] criterion %zu: %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                    i + 1, criteria[i].description.c_str(), secs);
        if (!ok) {
            std::fprintf(stderr, "        %s\n", why.c_str());
            all_ok = false;
        }
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
