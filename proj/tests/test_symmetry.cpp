// Tests for branching sets, assignments, impact sets, the combined
// stabilizer, and the equivalence-class partition with weight offsets.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "covercount/symmetry.hpp"

using covercount::are_equivalent;
using covercount::BranchingAssignment;
using covercount::BranchingSet;
using covercount::EquivalenceClass;
using covercount::ImpactSet;
using covercount::impact_set;
using covercount::IndexVector;
using covercount::partition_classes;

namespace {

std::shared_ptr<const BranchingSet> shared_prefix(int k) {
    return std::make_shared<const BranchingSet>(
        covercount::prefix_branching_set(k));
}

BranchingAssignment assign(const std::shared_ptr<const BranchingSet>& T,
                           std::uint32_t bits) {
    return BranchingAssignment(T, bits);
}

std::vector<std::string> member_strings(const BranchingSet& T) {
    std::vector<std::string> out;
    for (const IndexVector& t : T.members) out.push_back(t.to_string());
    return out;
}

} // namespace

TEST_CASE("preset branching sets") {
    const BranchingSet p4 = covercount::prefix_branching_set(4);
    REQUIRE(member_strings(p4) ==
            std::vector<std::string>{"ceee", "cece", "ceec", "cecc"});

    const BranchingSet p2 = covercount::prefix_branching_set(2);
    REQUIRE(member_strings(p2) == std::vector<std::string>{"ce"});

    const BranchingSet lw5 = covercount::low_weight_branching_set(5);
    REQUIRE(lw5.size() == 15);
    for (const IndexVector& t : lw5.members) REQUIRE(t.c_count() <= 2);
    // First the five singletons, then the ten pairs.
    REQUIRE(lw5.members[0].to_string() == "ceeee");
    REQUIRE(lw5.members[4].to_string() == "eeeec");
    REQUIRE(lw5.members[5].to_string() == "cceee");
    REQUIRE(lw5.members[14].to_string() == "eeecc");

    // For k = 2 the low-weight shell is all of T(2).
    const BranchingSet lw2 = covercount::low_weight_branching_set(2);
    REQUIRE(member_strings(lw2) == std::vector<std::string>{"ce", "ec"});

    REQUIRE(covercount::prefix_branching_set(6).size() == 16);
    REQUIRE(covercount::low_weight_branching_set(6).size() == 21);
}

TEST_CASE("branching set validation") {
    REQUIRE_THROWS_AS(covercount::prefix_branching_set(1),
                      covercount::argument_error);
    REQUIRE_THROWS_AS(BranchingSet(3, {}), covercount::argument_error);
    REQUIRE_THROWS_AS(BranchingSet(3, {IndexVector(3, 0)}),
                      covercount::argument_error); // all-e
    REQUIRE_THROWS_AS(BranchingSet(3, {IndexVector(3, 7)}),
                      covercount::argument_error); // all-c
    REQUIRE_THROWS_AS(BranchingSet(3, {IndexVector::parse("ceec")}),
                      covercount::argument_error); // wrong k
    REQUIRE_THROWS_AS(
        BranchingSet(3, {IndexVector::parse("cee"), IndexVector::parse("cee")}),
        covercount::argument_error); // duplicate
    REQUIRE_THROWS_AS(BranchingSet::from_strings(3, {"cee", "ceec"}),
                      covercount::argument_error);

    // Members are re-sorted into canonical order on construction.
    const BranchingSet b =
        BranchingSet::from_strings(3, {"ecc", "cee", "cce"});
    REQUIRE(member_strings(b) == std::vector<std::string>{"cee", "cce", "ecc"});
    REQUIRE(b == BranchingSet::from_strings(3, {"cee", "cce", "ecc"}));
    REQUIRE(b.index_of(IndexVector::parse("cce").mask) == 1);
    REQUIRE(b.index_of(IndexVector::parse("eec").mask) == -1);
}

TEST_CASE("branching assignment validation and accessors") {
    const auto T = shared_prefix(4);
    const BranchingAssignment y(T, std::vector<std::uint8_t>{1, 0, 1, 0});
    REQUIRE(y.weight() == 2);
    REQUIRE(y.value(0));
    REQUIRE_FALSE(y.value(1));
    REQUIRE(y.bits() == 0b0101u);
    REQUIRE(y.to_string01() == "1010");
    REQUIRE(y == assign(T, 0b0101u));

    REQUIRE_THROWS_AS(BranchingAssignment(nullptr, std::uint32_t(0)),
                      covercount::argument_error);
    REQUIRE_THROWS_AS(BranchingAssignment(T, std::vector<std::uint8_t>{1, 0}),
                      covercount::argument_error);
    REQUIRE_THROWS_AS(
        BranchingAssignment(T, std::vector<std::uint8_t>{2, 0, 0, 0}),
        covercount::argument_error);
    REQUIRE_THROWS_AS(y.value(4), covercount::argument_error);
}

TEST_CASE("impact sets") {
    const auto T = std::make_shared<const BranchingSet>(
        BranchingSet::from_strings(3, {"cee", "ece"}));
    using pairs = std::vector<std::pair<int, int>>;

    REQUIRE(impact_set(*T, assign(T, 0b01u)).pairs == pairs{{1, 2}, {1, 3}});
    REQUIRE(impact_set(*T, assign(T, 0b00u)).pairs.empty());
    REQUIRE(impact_set(*T, assign(T, 0b11u)).pairs ==
            pairs{{1, 2}, {1, 3}, {2, 1}, {2, 3}});

    const auto S = std::make_shared<const BranchingSet>(
        BranchingSet::from_strings(3, {"cce"}));
    REQUIRE(impact_set(*S, assign(S, 0b1u)).pairs == pairs{{1, 3}, {2, 3}});

    // Assignment over a different branching set is rejected.
    REQUIRE_THROWS_AS(impact_set(*S, assign(T, 0b01u)),
                      covercount::argument_error);
}

TEST_CASE("stabilizer permutations") {
    const auto perms4 =
        covercount::stabilizer_permutations(covercount::prefix_branching_set(4));
    REQUIRE(perms4.size() == 2);
    REQUIRE(perms4[0] == covercount::Permutation{1, 2, 3, 4});
    REQUIRE(perms4[1] == covercount::Permutation{1, 2, 4, 3});

    // The low-weight shell is invariant under every relabeling.
    REQUIRE(covercount::stabilizer_permutations(
                covercount::low_weight_branching_set(5))
                .size() == 120);

    // So is all of T(3).
    std::vector<IndexVector> all3 = covercount::full_index_space(3);
    REQUIRE(covercount::stabilizer_permutations(BranchingSet(3, all3)).size() ==
            6);

    // A one-member set keeps exactly the relabelings fixing that member.
    REQUIRE(covercount::stabilizer_permutations(
                BranchingSet::from_strings(3, {"cce"}))
                .size() == 2); // identity and the (1 2) swap
    REQUIRE(covercount::stabilizer_permutations(
                covercount::prefix_branching_set(2))
                .size() == 1);
}

TEST_CASE("stabilizer complements") {
    std::vector<IndexVector> all4 = covercount::full_index_space(4);
    const auto comps_full =
        covercount::stabilizer_complements(BranchingSet(4, all4));
    REQUIRE(comps_full.size() == 2);

    REQUIRE(covercount::stabilizer_complements(
                covercount::low_weight_branching_set(5))
                .size() == 1);
    REQUIRE(covercount::stabilizer_complements(
                covercount::low_weight_branching_set(2))
                .size() == 2); // {ce, ec} is closed under the flip
    REQUIRE(covercount::stabilizer_complements(
                covercount::prefix_branching_set(2))
                .size() == 1);
}

TEST_CASE("are_equivalent on the k = 4 prefix set") {
    const auto T = shared_prefix(4);
    const int pos_ceee = T->index_of(IndexVector::parse("ceee").mask);
    const int pos_cece = T->index_of(IndexVector::parse("cece").mask);
    const int pos_cecc = T->index_of(IndexVector::parse("cecc").mask);
    REQUIRE(pos_ceee == 0);
    REQUIRE(pos_cece == 1);
    REQUIRE(pos_cecc == 3);

    const auto mark = [&](int p) {
        return assign(T, std::uint32_t(1) << p);
    };
    // Marking (c,e,e,e) and marking (c,e,c,c) land in the same class: the
    // coordinate swap (3 4) composed with the complement flip carries one
    // assignment family onto the other.
    REQUIRE(are_equivalent(mark(pos_ceee), mark(pos_cecc), *T));
    // Marking (c,e,c,e) does not join them.
    REQUIRE_FALSE(are_equivalent(mark(pos_ceee), mark(pos_cece), *T));

    // Equal impact sets with different weights are equivalent: adding a
    // member whose pairs are already covered changes nothing.
    const BranchingAssignment y0110 = assign(T, 0b0110u);
    const BranchingAssignment y1110 = assign(T, 0b0111u);
    const BranchingAssignment y1111 = assign(T, 0b1111u);
    REQUIRE(impact_set(*T, y0110) == impact_set(*T, y1110));
    REQUIRE(are_equivalent(y0110, y1110, *T));
    REQUIRE(are_equivalent(y0110, y1111, *T));
    REQUIRE(y0110.weight() + 1 == y1110.weight());
}

TEST_CASE("are_equivalent is an equivalence relation") {
    std::mt19937 rng(5u);
    for (int k = 2; k <= 4; ++k) {
        const auto T = shared_prefix(k);
        const std::uint32_t total = std::uint32_t(1) << T->size();
        for (int round = 0; round < 60; ++round) {
            const auto a = assign(T, rng() % total);
            const auto b = assign(T, rng() % total);
            const auto c = assign(T, rng() % total);
            REQUIRE(are_equivalent(a, a, *T));
            REQUIRE(are_equivalent(a, b, *T) == are_equivalent(b, a, *T));
            if (are_equivalent(a, b, *T) && are_equivalent(b, c, *T))
                REQUIRE(are_equivalent(a, c, *T));
        }
    }
}

TEST_CASE("are_equivalent guard rails") {
    const auto T6 = std::make_shared<const BranchingSet>(
        BranchingSet(6, covercount::full_index_space(6)));
    const BranchingAssignment zero(
        T6, std::vector<std::uint8_t>(
                static_cast<std::size_t>(T6->size()), 0));
    REQUIRE_THROWS_AS(are_equivalent(zero, zero, *T6),
                      covercount::resource_error);

    const auto T = shared_prefix(4);
    const auto S = std::make_shared<const BranchingSet>(
        covercount::low_weight_branching_set(4));
    REQUIRE_THROWS_AS(are_equivalent(assign(T, 1), assign(T, 1), *S),
                      covercount::argument_error);
}

TEST_CASE("partition_classes on the k = 4 prefix set") {
    const BranchingSet T = covercount::prefix_branching_set(4);
    const auto classes = partition_classes(T);
    REQUIRE(classes.size() == 7);

    int feasible = 0;
    std::uint64_t members = 0;
    for (const EquivalenceClass& cls : classes) {
        if (cls.feasible) ++feasible;
        for (const auto& [off, grp] : cls.offsets) members += grp.multiplicity;
    }
    REQUIRE(feasible == 6);
    REQUIRE(members == 16);

    // Feasible classes first, each indexed 1..7 in order.
    for (std::size_t i = 0; i < classes.size(); ++i)
        REQUIRE(classes[i].index == static_cast<int>(i) + 1);
    for (std::size_t i = 1; i < classes.size(); ++i)
        REQUIRE((classes[i].feasible <= classes[i - 1].feasible));

    const auto rep01 = [&](int idx) {
        return classes[static_cast<std::size_t>(idx - 1)]
            .representative.to_string01();
    };
    REQUIRE(rep01(1) == "1000");
    REQUIRE(rep01(2) == "0100");
    REQUIRE(rep01(3) == "1100");
    REQUIRE(rep01(4) == "1001");
    REQUIRE(rep01(5) == "0110");
    REQUIRE(rep01(6) == "1101");
    REQUIRE(rep01(7) == "0000");
    REQUIRE_FALSE(classes[6].feasible);

    const auto mult_of = [&](int idx) {
        std::map<int, std::uint64_t> m;
        for (const auto& [off, grp] :
             classes[static_cast<std::size_t>(idx - 1)].offsets)
            m[off] = grp.multiplicity;
        return m;
    };
    using mmap = std::map<int, std::uint64_t>;
    REQUIRE(mult_of(1) == mmap{{0, 2}});
    REQUIRE(mult_of(2) == mmap{{0, 2}});
    REQUIRE(mult_of(3) == mmap{{0, 4}});
    REQUIRE(mult_of(4) == mmap{{0, 1}});
    REQUIRE(mult_of(5) == mmap{{0, 1}, {1, 2}, {2, 1}});
    REQUIRE(mult_of(6) == mmap{{0, 2}});
    REQUIRE(mult_of(7) == mmap{{0, 1}});

    // Offset-group representatives within class 5.
    const EquivalenceClass& c5 = classes[4];
    REQUIRE(c5.offsets.at(1).representative.to_string01() == "1110");
    REQUIRE(c5.offsets.at(2).representative.to_string01() == "1111");

    // Every offset-group representative really is equivalent to the class
    // representative, at the stated offset.
    for (const EquivalenceClass& cls : classes)
        for (const auto& [off, grp] : cls.offsets) {
            REQUIRE(are_equivalent(grp.representative, cls.representative, T));
            REQUIRE(covercount::weight_offset(grp.representative, cls) == off);
        }
}

TEST_CASE("partition_classes on the k = 5 low-weight set") {
    const BranchingSet T = covercount::low_weight_branching_set(5);
    const auto classes = partition_classes(T);
    REQUIRE(classes.size() == 28);

    std::uint64_t members = 0;
    for (const EquivalenceClass& cls : classes) {
        REQUIRE(cls.feasible);
        for (const auto& [off, grp] : cls.offsets) members += grp.multiplicity;
    }
    REQUIRE(members == std::uint64_t(1) << 15);

    // Class 1 is the empty assignment; no pair has its full support inside
    // the low-weight shell, so even the empty assignment stays feasible.
    REQUIRE(classes[0].representative.weight() == 0);
    using mmap = std::map<int, std::uint64_t>;
    {
        mmap m;
        for (const auto& [off, grp] : classes[0].offsets)
            m[off] = grp.multiplicity;
        REQUIRE(m == mmap{{0, 1}});
    }

    const auto mult_of = [&](int idx) {
        mmap m;
        for (const auto& [off, grp] :
             classes[static_cast<std::size_t>(idx - 1)].offsets)
            m[off] = grp.multiplicity;
        return m;
    };
    REQUIRE(classes[26].representative.to_string01() == "111110000000000");
    REQUIRE(mult_of(27) == mmap{{0, 38},
                                {1, 615},
                                {2, 2245},
                                {3, 3900},
                                {4, 4055},
                                {5, 2798},
                                {6, 1345},
                                {7, 455},
                                {8, 105},
                                {9, 15},
                                {10, 1}});
    REQUIRE(classes[27].representative.to_string01() == "111100000001000");
    REQUIRE(mult_of(28) == mmap{{0, 520},
                                {1, 2100},
                                {2, 3040},
                                {3, 2220},
                                {4, 900},
                                {5, 200},
                                {6, 20}});

    // Representative weights are non-decreasing across the feasible run.
    for (std::size_t i = 1; i < classes.size(); ++i)
        REQUIRE(classes[i - 1].representative.weight() <=
                classes[i].representative.weight());
}

TEST_CASE("partition_classes on T(2)") {
    const BranchingSet T = covercount::low_weight_branching_set(2);
    const auto classes = partition_classes(T);
    std::uint64_t members = 0;
    for (const EquivalenceClass& cls : classes)
        for (const auto& [off, grp] : cls.offsets) members += grp.multiplicity;
    REQUIRE(members == 4);
}

TEST_CASE("partition_classes guard rails") {
    REQUIRE_THROWS_AS(
        partition_classes(BranchingSet(5, covercount::full_index_space(5))),
        covercount::resource_error); // |T| = 30 > 24
}

TEST_CASE("weight_offset") {
    const auto T = shared_prefix(4);
    const auto classes = partition_classes(*T);
    const EquivalenceClass& c5 = classes[4];
    REQUIRE(covercount::weight_offset(c5.representative, c5) == 0);
    REQUIRE(covercount::weight_offset(assign(T, 0b1111u), c5) == 2);
    REQUIRE_THROWS_AS(covercount::weight_offset(assign(T, 0b0001u), c5),
                      covercount::membership_error);
}
