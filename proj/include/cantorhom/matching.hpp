#pragma once

#include <cstdint>
#include <vector>

namespace cantorhom {

// Existence of an injective matching of every left item to a distinct right
// item. adj[i] is the bitmask of admissible right items for left item i
// (right side limited to 64 items). Two independent deciders, cross-tested:
// exhaustive backtracking for small instances and Kuhn augmenting paths.

bool injective_matching_exhaustive(const std::vector<std::uint64_t>& adj, int n_right);
bool injective_matching_augmenting(const std::vector<std::uint64_t>& adj, int n_right);

// Dispatch: exhaustive for <= 6 left items, augmenting paths above.
bool injective_matching(const std::vector<std::uint64_t>& adj, int n_right);

}  // namespace cantorhom
