// Usage example: minimal cut sets and the structure function of a
// multi-state coherent system.
//
// A system is described by its minimal path sets: a constructive cover of
// the component set. The minimal cut sets are exactly the minimal
// transversals of the path family, and the structure function can be
// evaluated from either side:
//
//     phi(z) = max over paths of the weakest component inside
//            = min over cuts  of the strongest component inside.
//
// The example system is the classic five-component bridge.

#include <iostream>
#include <vector>

#include "covercount/covercount.hpp"

namespace {

void print_family(const char* label, const std::vector<std::uint32_t>& sets) {
    std::cout << label << ":";
    for (std::uint32_t s : sets) {
        std::cout << " {";
        bool first = true;
        for (int e = 1; s != 0; ++e, s >>= 1) {
            if (!(s & 1u)) continue;
            std::cout << (first ? "" : ",") << e;
            first = false;
        }
        std::cout << "}";
    }
    std::cout << "\n";
}

} // namespace

int main() {
    // Bridge network: source-to-sink routes over components 1..5, where
    // component 3 is the bridge element.
    const int n = 5;
    const int s = 2; // component states 0 (failed), 1 (degraded), 2 (full)
    const std::vector<std::uint32_t> paths = {
        0b01001u, // {1,4}
        0b10010u, // {2,5}
        0b10101u, // {1,3,5}
        0b01110u, // {2,3,4}
    };
    print_family("minimal path sets", paths);

    // The dual description. minimal_cut_sets computes the minimal
    // transversals; the result is again a constructive cover.
    const std::vector<std::uint32_t> cuts = covercount::minimal_cut_sets(paths, n);
    print_family("minimal cut sets ", cuts);

    // Bundle both into a validated system. The constructor rejects path
    // families that are not constructive covers and cut families that miss
    // a path.
    const covercount::CoherentSystem bridge(n, s, paths, cuts);

    // Evaluate the structure function on a few component-state vectors,
    // from both sides.
    const std::vector<std::vector<int>> states = {
        {2, 2, 2, 2, 2}, {2, 0, 1, 0, 2}, {1, 1, 0, 2, 2},
        {0, 2, 2, 2, 0}, {0, 0, 2, 2, 2}, {0, 0, 0, 0, 0},
    };
    std::cout << "\n z1 z2 z3 z4 z5 | phi (paths) | phi (cuts)\n";
    for (const std::vector<int>& z : states) {
        for (int zi : z) std::cout << "  " << zi;
        std::cout << " |           " << covercount::phi_from_paths(z, bridge)
                  << " |          " << covercount::phi_from_cuts(z, bridge)
                  << "\n";
    }

    // Cut-of-cuts is an involution: transversing the transversals gives
    // back the minimal path sets.
    print_family("\ncuts of the cuts ", covercount::minimal_cut_sets(cuts, n));
    return 0;
}
