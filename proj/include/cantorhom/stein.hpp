#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantorhom/homology.hpp"
#include "cantorhom/poset.hpp"
#include "cantorhom/signature.hpp"

namespace cantorhom {
namespace stein {

// A box partition of the s-cube reachable by single-colour splits with no
// colour repeated along any nesting path. Consequently each box extent is
// either the full interval (-1) or one cell index of the n_i-fold subdivision,
// so exact geometry reduces to small integers. Boxes are kept sorted.
struct SlotPartition {
    std::vector<std::vector<int>> boxes;

    long long cost() const { return static_cast<long long>(boxes.size()) - 1; }
    bool trivial() const { return boxes.size() == 1; }
    std::string label(const ColourSignature& sig) const;
    bool operator==(const SlotPartition&) const = default;
    bool operator<(const SlotPartition&) const = default;
};

// All elementary partitions of cost <= max_cost, deduplicated by geometric
// equality, in canonical (cost, box-list) order; index 0 is the trivial one.
std::vector<SlotPartition> enumerate_slot_partitions(const ColourSignature& sig,
                                                     long long max_cost);

// True iff every box of a is a union of boxes of b (b refines a, i.e. a <= b).
bool slot_refines(const SlotPartition& a, const SlotPartition& b);

// The colour set Omega if the partition is the full grid over Omega (all boxes
// subdivided in exactly the axes of Omega); 0 for the trivial partition;
// nothing for mixed partitions.
std::optional<std::uint32_t> full_grid_omega(const SlotPartition& p,
                                             const ColourSignature& sig);

// An H-orbit of expansions of a p-element basis: the multiset of nontrivial
// slot partitions (trivial slots pad the remaining basis elements).
struct ExpansionClass {
    std::vector<int> slots;  // nondecreasing partition indices
    long long cost = 0;

    long long leaf_count(int p) const { return p + cost; }
};

struct ZPoset {
    ColourSignature sig;
    int p = 0;
    long long delta = 0;
    std::vector<SlotPartition> partitions;
    std::vector<ExpansionClass> elements;  // sorted by (cost, slot count, slots)
    FinitePoset poset;
};

// The poset of proper expansion classes with at most p nontrivial slots and
// total cost in [1, delta]. Guarded at 100000 elements.
ZPoset build_z_poset(const ColourSignature& sig, int p, long long delta);

// Indices of the classes whose slots are all full grids.
std::vector<int> full_subposet_indices(const ZPoset& z);

// Indices of the full classes whose Omega sets are pairwise distinct.
std::vector<int> nonrepeating_subposet_indices(const ZPoset& z);

struct QuillenReport {
    BettiVector betti_z, betti_full, betti_nonrepeating;
    int count_z = 0, count_full = 0, count_nonrepeating = 0;
    bool match = false;
    std::string mismatch;  // empty when match
    json to_json() const;
};

// Compares the Betti vectors of Z, of its full-extension reduction, and of the
// abstract reduced poset built with matching parameters.
QuillenReport cross_validate_quillen(const ColourSignature& sig, int p, long long delta);

json summary_json(const ZPoset& z);

}  // namespace stein
}  // namespace cantorhom
