#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cantorhom {

using json = nlohmann::ordered_json;

// Dense boolean matrix with 64-bit row words; rows are order relations here,
// so row(i) = up-set of i.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n);

    int size() const { return n_; }
    bool get(int i, int j) const { return words_[row_offset(i) + (j >> 6)] >> (j & 63) & 1; }
    void set(int i, int j, bool v);

    // row(i) |= row(j); returns true if row(i) changed.
    bool or_row_from(int i, int j);
    // row(j) subset of row(i)?
    bool row_subset(int j, int i) const;

private:
    std::size_t row_offset(int i) const { return static_cast<std::size_t>(i) * wpr_; }
    int n_ = 0;
    int wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

struct OrderViolation {
    enum class Kind { None, Reflexivity, Antisymmetry, Transitivity };
    Kind kind = Kind::None;
    int a = -1, b = -1, c = -1;

    bool ok() const { return kind == Kind::None; }
    std::string describe(const std::vector<std::string>& keys) const;
};

// Checks reflexivity, antisymmetry, transitivity; deterministic scan order
// (reflexivity by index, then antisymmetry by (i,j), then transitivity by (i,j,k)).
OrderViolation validate_order(const BitMatrix& leq);

// A fully materialised finite poset. The element order is fixed at construction
// and is the global vertex order of all simplicial data built from the poset.
class FinitePoset {
public:
    FinitePoset() = default;
    // Validates the order axioms; throws std::invalid_argument naming the violation.
    FinitePoset(std::vector<std::string> keys, BitMatrix leq);

    static FinitePoset from_relation(std::vector<std::string> keys,
                                     const std::function<bool(int, int)>& leq);

    int size() const { return static_cast<int>(keys_.size()); }
    bool leq(int i, int j) const { return leq_.get(i, j); }
    bool less(int i, int j) const { return i != j && leq_.get(i, j); }
    const std::string& key(int i) const { return keys_[i]; }
    const std::vector<std::string>& keys() const { return keys_; }

    std::vector<std::pair<int, int>> cover_pairs() const;

    // Number of strict inequalities in a maximal chain; -1 for the empty poset.
    int longest_chain() const;

    // Total number of nonempty chains (simplices of the order complex).
    std::uint64_t chain_count() const;

    // A maximum element if one exists, else a minimum, else nothing.
    std::optional<int> cone_point() const;

    // Subposet on the given element indices (kept in the given order).
    FinitePoset induced(const std::vector<int>& indices) const;

    // Same poset with a new global element order: position k holds old element perm[k].
    FinitePoset relabelled(const std::vector<int>& perm) const;

    // Adjoins a unique minimum below everything.
    FinitePoset with_bottom(const std::string& bottom_key) const;

    json to_json() const;  // {"elements":[...],"covers":[[i,j],...]}

private:
    std::vector<std::string> keys_;
    BitMatrix leq_;
};

// Order complex: simplices in dimension d are the (d+1)-element chains, each
// stored with vertices ascending in the global element order, listed in
// lexicographic order within each dimension.
struct OrderComplex {
    int dim = -1;  // -1 for the empty complex
    std::vector<std::vector<std::vector<int>>> simplices_by_dim;

    bool empty() const { return dim < 0; }
    std::size_t count(int d) const {
        return d >= 0 && d <= dim ? simplices_by_dim[d].size() : 0;
    }
    json to_json() const;
};

OrderComplex order_complex(const FinitePoset& p);

}  // namespace cantorhom
