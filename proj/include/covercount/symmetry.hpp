// symmetry.hpp
//
// Branching sets, branching assignments, impact sets, the symmetry groups
// that act on them, and the partition of assignments into equivalence
// classes with weight offsets and multiplicities.
//
// Fixing the labeling coordinates on a branching set T splits F(k, l) into
// cells F_y(k, l), one per assignment y over T. Many cells have identical
// counts: permuting coordinates by pi with T o pi = T, or flipping e <-> c
// when that preserves T, maps cells onto cells. What a cell's count actually
// depends on is the impact set
//
//   D_T(y) = {(i, j) : some t in T has t_i = c, t_j = e, y_t = 1},
//
// together with the weight of y: assignments with equal impact sets have
// count rows that are plain shifts of each other (larger weight = shifted
// right), and transformed assignments have relabeled impact sets. Two
// assignments are equivalent when some symmetry makes their impact sets
// equal; each equivalence class is enumerated once, at its minimum weight,
// and every other member's row follows by shifting.
//
// The group used here is the combined stabilizer
//
//   Gamma^T = {(pi, alpha) : {alpha o t o pi : t in T} = T},
//
// which properly contains S_k^T x A^T (pairs whose factors each preserve T
// on their own). The prefix branching set is the motivating case: it is not
// flip-closed, yet flipping AND swapping coordinates 1, 2 together preserves
// it, and that combined symmetry is what pairs the weight-1 assignments on
// (c,e,e,e) and (c,e,c,c) into one class — as their identical count rows
// demand. Orbits under the larger group are unions of S_k^T x A^T orbits,
// so every shift identity the theory guarantees still applies within a
// class; the class count A and table layout reproduce the published k = 4
// and k = 5 tables exactly.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "covercount/errors.hpp"
#include "covercount/index_space.hpp"

namespace covercount {

// ---- branching sets -------------------------------------------------------

// A nonempty subset of T(k), kept in canonical order.
struct BranchingSet {
    int k = 0;
    std::vector<IndexVector> members;

    BranchingSet(int k_, std::vector<IndexVector> members_)
        : k(k_), members(std::move(members_)) {
        if (k < 2 || k > kMaxK)
            throw argument_error("BranchingSet: k outside 2..16");
        if (members.empty())
            throw argument_error("BranchingSet: must be nonempty");
        const std::uint32_t all = (std::uint32_t(1) << k) - 1;
        for (const IndexVector& t : members) {
            if (t.k != k)
                throw argument_error("BranchingSet: member has wrong k");
            if (t.mask == 0 || t.mask == all)
                throw argument_error("BranchingSet: constant vector not in T(k)");
        }
        std::sort(members.begin(), members.end(), canonical_less);
        for (std::size_t i = 1; i < members.size(); ++i)
            if (members[i] == members[i - 1])
                throw argument_error("BranchingSet: duplicate member");
    }

    static BranchingSet from_strings(int k, const std::vector<std::string>& rows) {
        std::vector<IndexVector> ms;
        ms.reserve(rows.size());
        for (const std::string& row : rows) {
            IndexVector t = IndexVector::parse(row);
            if (t.k != k)
                throw argument_error("BranchingSet: row length differs from k");
            ms.push_back(t);
        }
        return BranchingSet(k, std::move(ms));
    }

    int size() const { return static_cast<int>(members.size()); }

    // Position of a mask among the members, or -1.
    int index_of(std::uint32_t mask) const {
        for (std::size_t p = 0; p < members.size(); ++p)
            if (members[p].mask == mask) return static_cast<int>(p);
        return -1;
    }

    bool operator==(const BranchingSet&) const = default;
};

// All t with t_1 = c and t_2 = e: one fixed in-first-out-second corner of
// T(k). |T| = 2^(k-2).
inline BranchingSet prefix_branching_set(int k) {
    if (k < 2 || k > kMaxK)
        throw argument_error("prefix_branching_set: k outside 2..16");
    std::vector<IndexVector> ms;
    for (const IndexVector& t : full_index_space(k))
        if (t.is_c(1) && !t.is_c(2)) ms.push_back(t);
    return BranchingSet(k, std::move(ms));
}

// All t with one or two c-coordinates: the low-weight shell of T(k).
// |T| = k + k(k-1)/2 for k >= 3 (for k = 2 the shell is all of T(2)).
inline BranchingSet low_weight_branching_set(int k) {
    if (k < 2 || k > kMaxK)
        throw argument_error("low_weight_branching_set: k outside 2..16");
    std::vector<IndexVector> ms;
    for (const IndexVector& t : full_index_space(k))
        if (t.c_count() <= 2) ms.push_back(t);
    return BranchingSet(k, std::move(ms));
}

// ---- branching assignments --------------------------------------------------

// A 0/1 value per member of a branching set, in the set's canonical order.
struct BranchingAssignment {
    std::shared_ptr<const BranchingSet> branching;
    std::vector<std::uint8_t> values;

    BranchingAssignment(std::shared_ptr<const BranchingSet> branching_,
                        std::vector<std::uint8_t> values_)
        : branching(std::move(branching_)), values(std::move(values_)) {
        if (!branching)
            throw argument_error("BranchingAssignment: null branching set");
        if (values.size() != static_cast<std::size_t>(branching->size()))
            throw argument_error(
                "BranchingAssignment: value count differs from |T|");
        for (std::uint8_t v : values)
            if (v > 1)
                throw argument_error("BranchingAssignment: values must be 0/1");
    }

    // Unpack from a bit mask, bit p = member p. Requires |T| <= 32.
    BranchingAssignment(std::shared_ptr<const BranchingSet> branching_,
                        std::uint32_t bits)
        : BranchingAssignment(branching_, unpack(branching_, bits)) {}

    int weight() const {
        int w = 0;
        for (std::uint8_t v : values) w += v;
        return w;
    }

    bool value(int p) const {
        if (p < 0 || p >= static_cast<int>(values.size()))
            throw argument_error("BranchingAssignment: index out of range");
        return values[static_cast<std::size_t>(p)] != 0;
    }

    // Bit p = member p; valid because partitioning caps |T| at 24.
    std::uint32_t bits() const {
        std::uint32_t b = 0;
        for (std::size_t p = 0; p < values.size() && p < 32; ++p)
            if (values[p]) b |= std::uint32_t(1) << p;
        return b;
    }

    std::string to_string01() const {
        std::string s(values.size(), '0');
        for (std::size_t p = 0; p < values.size(); ++p)
            if (values[p]) s[p] = '1';
        return s;
    }

    bool operator==(const BranchingAssignment& other) const {
        return branching && other.branching &&
               *branching == *other.branching && values == other.values;
    }

private:
    static std::vector<std::uint8_t>
    unpack(const std::shared_ptr<const BranchingSet>& b, std::uint32_t bits) {
        if (!b) throw argument_error("BranchingAssignment: null branching set");
        if (b->size() > 32)
            throw argument_error(
                "BranchingAssignment: bit-mask form needs |T| <= 32");
        std::vector<std::uint8_t> vals(static_cast<std::size_t>(b->size()), 0);
        for (int p = 0; p < b->size(); ++p)
            vals[static_cast<std::size_t>(p)] =
                static_cast<std::uint8_t>((bits >> p) & 1u);
        return vals;
    }
};

// ---- impact sets ------------------------------------------------------------

// The ordered pairs (i, j) whose coverage constraint is already touched by
// the marked members of an assignment.
struct ImpactSet {
    std::vector<std::pair<int, int>> pairs; // sorted, i != j

    bool operator==(const ImpactSet&) const = default;
};

namespace detail {

// Pair (i, j), 1-based, packed as one bit among k*k; needs k <= 8.
inline std::uint64_t pair_bit(int k, int i, int j) {
    return std::uint64_t(1) << ((i - 1) * k + (j - 1));
}

// The pairs witnessed by a single index vector, as a packed mask.
inline std::uint64_t vector_pair_mask(const IndexVector& t) {
    std::uint64_t m = 0;
    for (int i = 1; i <= t.k; ++i)
        for (int j = 1; j <= t.k; ++j)
            if (i != j && t.is_c(i) && !t.is_c(j)) m |= pair_bit(t.k, i, j);
    return m;
}

inline ImpactSet unpack_pair_mask(int k, std::uint64_t mask) {
    ImpactSet d;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i != j && (mask & pair_bit(k, i, j))) d.pairs.emplace_back(i, j);
    return d;
}

inline void require_same_branching(const BranchingAssignment& y,
                                   const BranchingSet& T) {
    if (!y.branching || !(*y.branching == T))
        throw argument_error("assignment is not over the given branching set");
}

} // namespace detail

inline ImpactSet impact_set(const BranchingSet& T, const BranchingAssignment& y) {
    detail::require_same_branching(y, T);
    if (T.k > 8) throw argument_error("impact_set: k outside 2..8");
    std::uint64_t mask = 0;
    for (int p = 0; p < T.size(); ++p)
        if (y.value(p))
            mask |= detail::vector_pair_mask(T.members[static_cast<std::size_t>(p)]);
    return detail::unpack_pair_mask(T.k, mask);
}

// ---- stabilizer groups ------------------------------------------------------

namespace detail {

// One symmetry (pi, alpha) with T = {alpha o t o pi : t in T}, plus the two
// precomputed actions induced on assignments and on packed pair masks.
struct GroupElement {
    Permutation pi;
    Complement alpha = Complement::identity;
    // Transformed assignment: y'[p] = y[coord_perm[p]], because
    // (alpha y pi)_t = y_{alpha o t o pi}.
    std::vector<int> coord_perm;
    // Image of packed pair index q under D(y) -> D(y transformed):
    // (a,b) goes to (pi(a), pi(b)), reversed first when alpha = swap.
    std::vector<int> pair_perm;
};

inline std::vector<Permutation> all_permutations(int k) {
    Permutation base(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) base[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

// All elements of Gamma^T, identity first, ordered by (pi, alpha).
// The k! scan bounds k.
inline std::vector<GroupElement> combined_stabilizer(const BranchingSet& T) {
    if (T.k > 8)
        throw argument_error("combined_stabilizer: k > 8 exceeds the "
                             "permutation scan cap");
    const int k = T.k;
    std::vector<GroupElement> group;
    for (const Permutation& pi : all_permutations(k)) {
        for (Complement alpha : {Complement::identity, Complement::swap}) {
            std::vector<int> coord_perm(static_cast<std::size_t>(T.size()));
            bool in_group = true;
            for (int p = 0; p < T.size() && in_group; ++p) {
                const IndexVector image = apply_complement(
                    alpha,
                    apply_permutation(T.members[static_cast<std::size_t>(p)], pi));
                const int q = T.index_of(image.mask);
                if (q < 0)
                    in_group = false;
                else
                    coord_perm[static_cast<std::size_t>(p)] = q;
            }
            if (!in_group) continue;
            GroupElement g;
            g.pi = pi;
            g.alpha = alpha;
            g.coord_perm = std::move(coord_perm);
            g.pair_perm.assign(static_cast<std::size_t>(k) * k, 0);
            for (int a = 1; a <= k; ++a) {
                for (int b = 1; b <= k; ++b) {
                    if (a == b) continue;
                    const int src = (a - 1) * k + (b - 1);
                    const int ia = pi[static_cast<std::size_t>(a - 1)];
                    const int ib = pi[static_cast<std::size_t>(b - 1)];
                    // D of the transformed assignment contains (pi(a), pi(b))
                    // [alpha = id] or (pi(b), pi(a)) [alpha = swap] exactly
                    // when D(y) contains (a, b); record where bit src lands.
                    const int dst = alpha == Complement::identity
                                        ? (ia - 1) * k + (ib - 1)
                                        : (ib - 1) * k + (ia - 1);
                    g.pair_perm[static_cast<std::size_t>(src)] = dst;
                }
            }
            group.push_back(std::move(g));
        }
    }
    return group;
}

inline std::uint64_t apply_pair_perm(std::uint64_t mask,
                                     const std::vector<int>& pair_perm) {
    std::uint64_t out = 0;
    while (mask) {
        const int q = std::countr_zero(mask);
        out |= std::uint64_t(1) << pair_perm[static_cast<std::size_t>(q)];
        mask &= mask - 1;
    }
    return out;
}

// Packed impact mask of a raw assignment bit pattern.
inline std::uint64_t
impact_mask_of_bits(const std::vector<std::uint64_t>& member_pair_masks,
                    std::uint32_t bits) {
    std::uint64_t mask = 0;
    while (bits) {
        const int p = std::countr_zero(bits);
        mask |= member_pair_masks[static_cast<std::size_t>(p)];
        bits &= bits - 1;
    }
    return mask;
}

// Canonical key of an impact mask: the minimum packed mask over the group
// orbit. Assignments are equivalent iff their keys agree, because impact
// masks transform through pair_perm alone.
inline std::uint64_t canonical_impact_key(std::uint64_t mask,
                                          const std::vector<GroupElement>& group) {
    std::uint64_t best = ~std::uint64_t(0);
    for (const GroupElement& g : group)
        best = std::min(best, apply_pair_perm(mask, g.pair_perm));
    return best;
}

// Strict "marked positions earlier is smaller" order on equal-weight
// assignment patterns: compare the sorted tuples of marked member indices
// lexicographically. For bit patterns this is: a < b iff the lowest
// differing bit belongs to a.
inline bool tuple_lex_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    const std::uint32_t d = a ^ b;
    return (a & (d & (~d + 1))) != 0;
}

} // namespace detail

// All pi with {t o pi : t in T} = T, in lexicographic one-line order.
// Always contains the identity. The full-S_k scan caps k at 8.
inline std::vector<Permutation> stabilizer_permutations(const BranchingSet& T) {
    if (T.k > 8)
        throw argument_error("stabilizer_permutations: k > 8 exceeds the "
                             "permutation scan cap");
    std::vector<Permutation> out;
    for (const Permutation& pi : detail::all_permutations(T.k)) {
        bool preserves = true;
        for (int p = 0; p < T.size() && preserves; ++p)
            preserves =
                T.index_of(apply_permutation(T.members[static_cast<std::size_t>(p)],
                                             pi)
                               .mask) >= 0;
        if (preserves) out.push_back(pi);
    }
    return out;
}

// The complement stabilizer: {identity}, plus swap iff T is flip-closed.
inline std::vector<Complement> stabilizer_complements(const BranchingSet& T) {
    std::vector<Complement> out{Complement::identity};
    bool closed = true;
    for (int p = 0; p < T.size() && closed; ++p)
        closed = T.index_of(apply_complement(Complement::swap,
                                             T.members[static_cast<std::size_t>(p)])
                                .mask) >= 0;
    if (closed) out.push_back(Complement::swap);
    return out;
}

// Equivalence of branching assignments: some symmetry of T carries y to an
// assignment whose impact set equals z's.
inline bool are_equivalent(const BranchingAssignment& y,
                           const BranchingAssignment& z, const BranchingSet& T) {
    detail::require_same_branching(y, T);
    detail::require_same_branching(z, T);
    if (T.size() > 32)
        throw resource_error("are_equivalent: |T| > 32 unsupported");
    std::vector<std::uint64_t> member_masks;
    member_masks.reserve(static_cast<std::size_t>(T.size()));
    for (const IndexVector& t : T.members)
        member_masks.push_back(detail::vector_pair_mask(t));
    const std::uint64_t dy = detail::impact_mask_of_bits(member_masks, y.bits());
    const std::uint64_t dz = detail::impact_mask_of_bits(member_masks, z.bits());
    for (const detail::GroupElement& g : detail::combined_stabilizer(T))
        if (detail::apply_pair_perm(dy, g.pair_perm) == dz) return true;
    return false;
}

// ---- equivalence classes ----------------------------------------------------

// One weight level within a class: the members of the class whose weight
// exceeds the class minimum by the same offset w.
struct OffsetGroup {
    BranchingAssignment representative; // smallest member at this offset
    std::uint64_t multiplicity = 0;     // how many members share the offset
};

// One equivalence class of assignments over T.
struct EquivalenceClass {
    int index = 0;                      // 1-based, in the emitted order
    BranchingAssignment representative; // minimum weight, then earliest marks
    std::map<int, OffsetGroup> offsets; // w -> members at weight min + w
    // False when a pair (i, j) has all of its T(k) support inside T and the
    // class marks none of it: no completion can ever cover that pair, so
    // every count in the class is zero. The flag is class-invariant.
    bool feasible = true;
};

// Partition all 2^|T| assignments into equivalence classes. Feasible classes
// come first, ordered by (representative weight, earliest marked positions);
// infeasible ones follow in the same order. Multiplicities over all classes
// and offsets sum to 2^|T|.
inline std::vector<EquivalenceClass> partition_classes(const BranchingSet& T) {
    if (T.size() > 24)
        throw resource_error(
            "partition_classes: |T| > 24 exceeds the enumeration cap");
    const auto group = detail::combined_stabilizer(T); // enforces k <= 8
    const int k = T.k;
    const auto shared = std::make_shared<const BranchingSet>(T);

    std::vector<std::uint64_t> member_masks;
    member_masks.reserve(static_cast<std::size_t>(T.size()));
    for (const IndexVector& t : T.members)
        member_masks.push_back(detail::vector_pair_mask(t));

    // Pairs whose full T(k) support lies inside T: if a class marks none of
    // a constrained pair's support, the class is infeasible.
    std::uint64_t constrained = 0;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (i == j) continue;
            int in_T = 0;
            for (const IndexVector& t : T.members)
                if (t.is_c(i) && !t.is_c(j)) ++in_T;
            if (in_T == (1 << (k - 2)))
                constrained |= detail::pair_bit(k, i, j);
        }
    }

    struct ClassData {
        std::map<int, std::pair<std::uint32_t, std::uint64_t>>
            by_weight; // weight -> (best bits, count)
        std::uint64_t impact_of_best = 0;
    };
    std::vector<ClassData> data;
    std::unordered_map<std::uint64_t, std::size_t> impact_to_class;
    std::unordered_map<std::uint64_t, std::size_t> key_to_class;

    const std::uint32_t total = std::uint32_t(1) << T.size();
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        const std::uint64_t impact =
            detail::impact_mask_of_bits(member_masks, bits);
        std::size_t cls;
        if (auto hit = impact_to_class.find(impact);
            hit != impact_to_class.end()) {
            cls = hit->second;
        } else {
            const std::uint64_t key = detail::canonical_impact_key(impact, group);
            if (auto kit = key_to_class.find(key); kit != key_to_class.end()) {
                cls = kit->second;
            } else {
                cls = data.size();
                data.emplace_back();
                key_to_class.emplace(key, cls);
            }
            impact_to_class.emplace(impact, cls);
        }
        const int w = std::popcount(bits);
        auto [it, inserted] =
            data[cls].by_weight.try_emplace(w, bits, std::uint64_t(1));
        if (!inserted) {
            ++it->second.second;
            if (detail::tuple_lex_less(bits, it->second.first))
                it->second.first = bits;
        }
    }

    std::vector<EquivalenceClass> classes;
    classes.reserve(data.size());
    for (ClassData& cd : data) {
        const int w0 = cd.by_weight.begin()->first;
        const std::uint32_t rep_bits = cd.by_weight.begin()->second.first;
        EquivalenceClass cls{
            0, BranchingAssignment(shared, rep_bits), {}, true};
        for (const auto& [w, entry] : cd.by_weight)
            cls.offsets.emplace(
                w - w0,
                OffsetGroup{BranchingAssignment(shared, entry.first),
                            entry.second});
        const std::uint64_t impact =
            detail::impact_mask_of_bits(member_masks, rep_bits);
        cls.feasible = (constrained & ~impact) == 0;
        classes.push_back(std::move(cls));
    }

    std::sort(classes.begin(), classes.end(),
              [](const EquivalenceClass& a, const EquivalenceClass& b) {
                  if (a.feasible != b.feasible) return a.feasible;
                  const int wa = a.representative.weight();
                  const int wb = b.representative.weight();
                  if (wa != wb) return wa < wb;
                  return detail::tuple_lex_less(a.representative.bits(),
                                                b.representative.bits());
              });
    for (std::size_t i = 0; i < classes.size(); ++i)
        classes[i].index = static_cast<int>(i) + 1;
    return classes;
}

// Offset of y within its class: weight(y) - weight(representative).
inline int weight_offset(const BranchingAssignment& y,
                         const EquivalenceClass& cls) {
    if (!y.branching)
        throw argument_error("weight_offset: assignment without branching set");
    const BranchingSet& T = *y.branching;
    if (!are_equivalent(y, cls.representative, T))
        throw membership_error(
            "weight_offset: assignment does not belong to the class");
    return y.weight() - cls.representative.weight();
}

} // namespace covercount
