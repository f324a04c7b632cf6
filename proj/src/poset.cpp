#include "cantorhom/poset.hpp"

#include <algorithm>
#include <stdexcept>

#include "cantorhom/ints.hpp"

namespace cantorhom {

BitMatrix::BitMatrix(int n) : n_(n), wpr_((n + 63) / 64), words_(static_cast<std::size_t>(n) * wpr_) {}

void BitMatrix::set(int i, int j, bool v) {
    auto& w = words_[row_offset(i) + (j >> 6)];
    std::uint64_t bit = std::uint64_t(1) << (j & 63);
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

bool BitMatrix::or_row_from(int i, int j) {
    bool changed = false;
    for (int w = 0; w < wpr_; ++w) {
        std::uint64_t before = words_[row_offset(i) + w];
        std::uint64_t after = before | words_[row_offset(j) + w];
        if (after != before) {
            words_[row_offset(i) + w] = after;
            changed = true;
        }
    }
    return changed;
}

bool BitMatrix::row_subset(int j, int i) const {
    for (int w = 0; w < wpr_; ++w)
        if (words_[row_offset(j) + w] & ~words_[row_offset(i) + w]) return false;
    return true;
}

std::string OrderViolation::describe(const std::vector<std::string>& keys) const {
    auto k = [&](int i) { return i >= 0 && i < static_cast<int>(keys.size()) ? keys[i] : "#" + std::to_string(i); };
    switch (kind) {
        case Kind::None: return "ok";
        case Kind::Reflexivity: return "reflexivity violation at " + k(a);
        case Kind::Antisymmetry: return "antisymmetry violation (" + k(a) + ", " + k(b) + ")";
        case Kind::Transitivity:
            return "transitivity violation (" + k(a) + ", " + k(b) + ", " + k(c) + ")";
    }
    return "ok";
}

OrderViolation validate_order(const BitMatrix& leq) {
    int n = leq.size();
    for (int i = 0; i < n; ++i)
        if (!leq.get(i, i)) return {OrderViolation::Kind::Reflexivity, i, -1, -1};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (leq.get(i, j) && leq.get(j, i))
                return {OrderViolation::Kind::Antisymmetry, i, j, -1};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq.get(i, j)) continue;
            if (!leq.row_subset(j, i)) {
                for (int k = 0; k < n; ++k)
                    if (leq.get(j, k) && !leq.get(i, k))
                        return {OrderViolation::Kind::Transitivity, i, j, k};
            }
        }
    return {};
}

FinitePoset::FinitePoset(std::vector<std::string> keys, BitMatrix leq)
    : keys_(std::move(keys)), leq_(std::move(leq)) {
    if (leq_.size() != static_cast<int>(keys_.size()))
        throw std::invalid_argument("poset: relation size does not match element count");
    OrderViolation v = validate_order(leq_);
    if (!v.ok()) throw std::invalid_argument("poset: " + v.describe(keys_));
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> keys,
                                       const std::function<bool(int, int)>& leq) {
    int n = static_cast<int>(keys.size());
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i == j || leq(i, j)) m.set(i, j, true);
    return FinitePoset(std::move(keys), std::move(m));
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!less(i, j)) continue;
            bool is_cover = true;
            for (int k = 0; k < n && is_cover; ++k)
                if (less(i, k) && less(k, j)) is_cover = false;
            if (is_cover) covers.emplace_back(i, j);
        }
    return covers;
}

int FinitePoset::longest_chain() const {
    int n = size();
    if (n == 0) return -1;
    std::vector<int> memo(n, -1);
    auto depth = [&](auto&& self, int i) -> int {
        if (memo[i] >= 0) return memo[i];
        int best = 0;
        for (int j = 0; j < n; ++j)
            if (less(i, j)) best = std::max(best, 1 + self(self, j));
        return memo[i] = best;
    };
    int best = 0;
    for (int i = 0; i < n; ++i) best = std::max(best, depth(depth, i));
    return best;
}

std::uint64_t FinitePoset::chain_count() const {
    int n = size();
    std::vector<std::uint64_t> from(n, 0);  // chains starting at i
    std::vector<char> done(n, 0);
    auto count = [&](auto&& self, int i) -> std::uint64_t {
        if (done[i]) return from[i];
        std::uint64_t total = 1;
        for (int j = 0; j < n; ++j)
            if (less(i, j)) total += self(self, j);
        done[i] = 1;
        return from[i] = total;
    };
    std::uint64_t all = 0;
    for (int i = 0; i < n; ++i) all += count(count, i);
    return all;
}

std::optional<int> FinitePoset::cone_point() const {
    int n = size();
    for (int i = 0; i < n; ++i) {
        bool is_max = true;
        for (int j = 0; j < n && is_max; ++j)
            if (!leq(j, i)) is_max = false;
        if (is_max) return i;
    }
    for (int i = 0; i < n; ++i) {
        bool is_min = true;
        for (int j = 0; j < n && is_min; ++j)
            if (!leq(i, j)) is_min = false;
        if (is_min) return i;
    }
    return std::nullopt;
}

FinitePoset FinitePoset::induced(const std::vector<int>& indices) const {
    std::vector<std::string> keys;
    keys.reserve(indices.size());
    for (int i : indices) keys.push_back(keys_[i]);
    int m = static_cast<int>(indices.size());
    BitMatrix rel(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (leq(indices[a], indices[b])) rel.set(a, b, true);
    return FinitePoset(std::move(keys), std::move(rel));
}

FinitePoset FinitePoset::relabelled(const std::vector<int>& perm) const {
    return induced(perm);
}

FinitePoset FinitePoset::with_bottom(const std::string& bottom_key) const {
    int n = size();
    std::vector<std::string> keys;
    keys.reserve(n + 1);
    keys.push_back(bottom_key);
    for (const auto& k : keys_) keys.push_back(k);
    BitMatrix rel(n + 1);
    rel.set(0, 0, true);
    for (int i = 0; i < n; ++i) {
        rel.set(0, i + 1, true);
        for (int j = 0; j < n; ++j)
            if (leq(i, j)) rel.set(i + 1, j + 1, true);
    }
    return FinitePoset(std::move(keys), std::move(rel));
}

json FinitePoset::to_json() const {
    json j;
    j["elements"] = keys_;
    json covers = json::array();
    for (auto [a, b] : cover_pairs()) covers.push_back(json::array({a, b}));
    j["covers"] = covers;
    return j;
}

OrderComplex order_complex(const FinitePoset& p) {
    OrderComplex c;
    int n = p.size();
    if (n == 0) return c;
    if (std::uint64_t chains = p.chain_count(); chains > 5'000'000)
        throw ResourceError("order_complex: " + std::to_string(chains) +
                            " chains exceed the materialisation guard");

    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.less(i, j)) succ[i].push_back(j);

    std::vector<int> chain;
    auto emit = [&]() {
        int d = static_cast<int>(chain.size()) - 1;
        if (d >= static_cast<int>(c.simplices_by_dim.size())) c.simplices_by_dim.resize(d + 1);
        std::vector<int> simplex = chain;
        std::sort(simplex.begin(), simplex.end());
        c.simplices_by_dim[d].push_back(std::move(simplex));
    };
    auto dfs = [&](auto&& self, int v) -> void {
        chain.push_back(v);
        emit();
        for (int w : succ[v]) self(self, w);
        chain.pop_back();
    };
    // Every chain is a strictly increasing sequence, so the DFS rooted at its
    // least element generates it exactly once.
    for (int v = 0; v < n; ++v) dfs(dfs, v);

    c.dim = static_cast<int>(c.simplices_by_dim.size()) - 1;
    for (auto& level : c.simplices_by_dim) std::sort(level.begin(), level.end());
    return c;
}

json OrderComplex::to_json() const {
    json out = json::array();
    for (int d = 0; d <= dim; ++d) {
        json level;
        level["dim"] = d;
        level["simplices"] = simplices_by_dim[d];
        out.push_back(level);
    }
    return out;
}

}  // namespace cantorhom
