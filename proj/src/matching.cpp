#include "cantorhom/matching.hpp"

namespace cantorhom {

namespace {

bool backtrack(const std::vector<std::uint64_t>& adj, std::size_t i, std::uint64_t used) {
    if (i == adj.size()) return true;
    std::uint64_t avail = adj[i] & ~used;
    while (avail) {
        std::uint64_t bit = avail & (~avail + 1);
        if (backtrack(adj, i + 1, used | bit)) return true;
        avail ^= bit;
    }
    return false;
}

}  // namespace

bool injective_matching_exhaustive(const std::vector<std::uint64_t>& adj, int n_right) {
    if (static_cast<int>(adj.size()) > n_right) return false;
    return backtrack(adj, 0, 0);
}

bool injective_matching_augmenting(const std::vector<std::uint64_t>& adj, int n_right) {
    int n_left = static_cast<int>(adj.size());
    if (n_left > n_right) return false;
    std::vector<int> match_right(n_right, -1);
    std::vector<char> visited(n_right, 0);

    auto try_augment = [&](auto&& self, int i) -> bool {
        for (int j = 0; j < n_right; ++j) {
            if (!(adj[i] >> j & 1) || visited[j]) continue;
            visited[j] = 1;
            if (match_right[j] < 0 || self(self, match_right[j])) {
                match_right[j] = i;
                return true;
            }
        }
        return false;
    };

    for (int i = 0; i < n_left; ++i) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!try_augment(try_augment, i)) return false;
    }
    return true;
}

bool injective_matching(const std::vector<std::uint64_t>& adj, int n_right) {
    if (adj.size() <= 6) return injective_matching_exhaustive(adj, n_right);
    return injective_matching_augmenting(adj, n_right);
}

}  // namespace cantorhom
