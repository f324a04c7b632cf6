#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cantorhom/ints.hpp"
#include "cantorhom/poset.hpp"

namespace cantorhom {

// Column-major sparse integer matrix; entries within a column sorted by row.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, Int>>> columns;

    static SparseIntMatrix zero(int rows, int cols) {
        SparseIntMatrix m;
        m.rows = rows;
        m.cols = cols;
        m.columns.resize(cols);
        return m;
    }
    void add_entry(int r, int c, Int v) { columns[c].emplace_back(r, std::move(v)); }
    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }
};

// Boundary matrices of an order complex. boundary[d] maps d-chains to
// (d-1)-chains with the usual alternating signs under the fixed global vertex
// order; boundary[0] is the augmentation row when `reduced` is set, the empty
// map otherwise. The composite of consecutive boundaries is checked to vanish
// at construction.
struct ChainComplexQ {
    bool reduced = true;
    std::vector<long long> chains_per_dim;      // chains_per_dim[d] = #d-simplices
    std::vector<SparseIntMatrix> boundary;      // boundary[d], d = 0..dim
};

ChainComplexQ boundary_matrices(const OrderComplex& c, bool reduced);

// Exact rank over Q via integer-preserving sparse elimination with Markowitz
// pivoting (ties broken by lowest row, then column index).
int rank_exact(const SparseIntMatrix& m);

// Rank over F_p; a lower bound for the rational rank, equal for almost all p.
int rank_mod_prime(const SparseIntMatrix& m, std::uint64_t prime);

// Fast-path rank: maximum rank modulo `count` primes drawn deterministically
// from `seed`. Must agree with rank_exact on every tested instance.
int rank_modular(const SparseIntMatrix& m, std::uint64_t seed, int count = 3);

struct BettiVector {
    std::map<int, long long> reduced_betti;  // degree -> dim, degrees 0..dim
    long long euler = 0;                     // alternating sum of face counts
    bool empty_complex = false;

    bool all_zero() const {
        for (const auto& [d, b] : reduced_betti)
            if (b != 0) return false;
        return true;
    }
    long long at(int degree) const {
        auto it = reduced_betti.find(degree);
        return it == reduced_betti.end() ? 0 : it->second;
    }
    bool operator==(const BettiVector&) const = default;
    json to_json() const;
};

// Reduced rational Betti numbers of an order complex. The empty complex is
// reported with the `empty_complex` flag set rather than as a (-1)-sphere.
// The Euler characteristic identity is verified on every call.
BettiVector betti_reduced(const OrderComplex& c);

}  // namespace cantorhom
