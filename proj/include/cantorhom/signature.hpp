#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantorhom/ints.hpp"

namespace cantorhom {

// A colour signature: s descending operations with arities n_1..n_s (each >= 2).
// Colour subsets are handled as bitmasks over {0..s-1}; the canonical order of
// subsets is lexicographic on their sorted 1-based index lists, which is the
// order used for all serialisation.
struct ColourSignature {
    int s = 0;
    std::vector<long long> arities;

    static ColourSignature create(int s, std::vector<long long> arities);

    bool operator==(const ColourSignature&) const = default;
};

struct DerivedConstants {
    Int N;                 // product of the arities
    Int N_hat;             // product of (n_i + 1)
    Int t;                 // N - 1
    Int D;                 // s * 2^(s-1), the maximal chain length in [0,beta]
    Int vanish_threshold;  // N_hat - 2^s
};

DerivedConstants derived_constants(const ColourSignature& sig);

// N_Omega = product of n_i over i in omega. Rejects the empty subset.
Int subset_weight(const ColourSignature& sig, std::uint32_t omega_mask);

// Expansion cost of a subset: N_Omega - 1.
Int subset_cost(const ColourSignature& sig, std::uint32_t omega_mask);

// Sorted 1-based colour indices of a mask.
std::vector<int> mask_indices(std::uint32_t mask);

// Canonical rendering, e.g. "{1,3}".
std::string mask_label(std::uint32_t mask);

// Canonical subset order: lexicographic on sorted index lists.
bool mask_lex_less(std::uint32_t a, std::uint32_t b);

// All nonempty subsets of {1..s} in canonical order. Requires s <= 20.
std::vector<std::uint32_t> nonempty_subsets(int s);

}  // namespace cantorhom
