#include "cantorhom/homology.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace cantorhom {

namespace {

// Simplex -> column index lookup within one dimension.
std::map<std::vector<int>, int> index_of(const std::vector<std::vector<int>>& simplices) {
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < static_cast<int>(simplices.size()); ++i) idx[simplices[i]] = i;
    return idx;
}

void check_dd_zero(const SparseIntMatrix& outer, const SparseIntMatrix& inner) {
    // outer: C_{d-1} -> C_{d-2}, inner: C_d -> C_{d-1}; composite must vanish.
    for (int c = 0; c < inner.cols; ++c) {
        std::map<int, Int> acc;
        for (const auto& [mid, v] : inner.columns[c])
            for (const auto& [r, w] : outer.columns[mid]) acc[r] += v * w;
        for (const auto& [r, v] : acc)
            if (v != 0)
                throw std::logic_error("boundary_matrices: d(d(x)) != 0 at column " +
                                       std::to_string(c));
    }
}

}  // namespace

ChainComplexQ boundary_matrices(const OrderComplex& c, bool reduced) {
    ChainComplexQ cc;
    cc.reduced = reduced;
    if (c.empty()) return cc;

    cc.chains_per_dim.resize(c.dim + 1);
    for (int d = 0; d <= c.dim; ++d)
        cc.chains_per_dim[d] = static_cast<long long>(c.count(d));

    cc.boundary.resize(c.dim + 1);
    int n0 = static_cast<int>(c.count(0));
    cc.boundary[0] = SparseIntMatrix::zero(reduced ? 1 : 0, n0);
    if (reduced)
        for (int v = 0; v < n0; ++v) cc.boundary[0].add_entry(0, v, 1);

    for (int d = 1; d <= c.dim; ++d) {
        const auto& faces = c.simplices_by_dim[d - 1];
        const auto& cells = c.simplices_by_dim[d];
        auto face_index = index_of(faces);
        auto& m = cc.boundary[d];
        m = SparseIntMatrix::zero(static_cast<int>(faces.size()), static_cast<int>(cells.size()));
        std::vector<int> face;
        for (int col = 0; col < static_cast<int>(cells.size()); ++col) {
            const auto& simplex = cells[col];
            for (int k = 0; k <= d; ++k) {
                face.clear();
                for (int t = 0; t <= d; ++t)
                    if (t != k) face.push_back(simplex[t]);
                m.add_entry(face_index.at(face), col, (k % 2 == 0) ? 1 : -1);
            }
            std::sort(m.columns[col].begin(), m.columns[col].end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
    }

    for (int d = 1; d <= c.dim; ++d)
        if (cc.boundary[d - 1].rows > 0 || d > 1) check_dd_zero(cc.boundary[d - 1], cc.boundary[d]);
    return cc;
}

namespace {

Int row_content(const std::map<int, Int>& row) {
    Int g = 0;
    for (const auto& [c, v] : row) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

}  // namespace

int rank_exact(const SparseIntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::map<int, Int>> rows(m.rows);
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c])
            if (v != 0) rows[r][c] += v;
    for (auto& row : rows)
        for (auto it = row.begin(); it != row.end();)
            it = (it->second == 0) ? row.erase(it) : std::next(it);

    std::vector<std::set<int>> col_rows(m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);

    auto erase_entry = [&](int r, int c) {
        rows[r].erase(c);
        col_rows[c].erase(r);
    };
    auto put_entry = [&](int r, int c, Int v) {
        if (v == 0) {
            if (rows[r].count(c)) erase_entry(r, c);
        } else {
            if (!rows[r].count(c)) col_rows[c].insert(r);
            rows[r][c] = std::move(v);
        }
    };

    std::vector<char> row_done(m.rows, 0);
    int rank = 0;
    for (;;) {
        // Markowitz pivot: minimise (row_nnz-1)*(col_nnz-1), tie-break (row, col).
        long long best_score = -1;
        int pr = -1, pc = -1;
        for (int r = 0; r < m.rows; ++r) {
            if (row_done[r] || rows[r].empty()) continue;
            long long rn = static_cast<long long>(rows[r].size()) - 1;
            for (const auto& [c, v] : rows[r]) {
                long long score = rn * (static_cast<long long>(col_rows[c].size()) - 1);
                if (best_score < 0 || score < best_score ||
                    (score == best_score && (r < pr || (r == pr && c < pc)))) {
                    best_score = score;
                    pr = r;
                    pc = c;
                }
            }
        }
        if (pr < 0) break;
        ++rank;

        Int pivot = rows[pr][pc];
        std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : targets) {
            if (r == pr || row_done[r]) continue;
            Int factor = rows[r][pc];
            // row_r <- pivot*row_r - factor*row_pr, then divide out the content.
            std::map<int, Int> merged = rows[r];
            for (auto& [c, v] : merged) v *= pivot;
            for (const auto& [c, v] : rows[pr]) merged[c] -= factor * v;
            Int g = row_content(merged);
            for (const auto& [c, v] : merged) {
                Int nv = v;
                if (g > 1) nv /= g;
                put_entry(r, c, std::move(nv));
            }
        }
        row_done[pr] = 1;
        for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
        rows[pr].clear();
    }
    return rank;
}

int rank_mod_prime(const SparseIntMatrix& m, std::uint64_t prime) {
    if (m.rows == 0 || m.cols == 0) return 0;
    const std::uint64_t p = prime;
    auto reduce = [&](const Int& v) -> std::uint64_t {
        Int r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return r.convert_to<std::uint64_t>();
    };
    auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = mulmod(acc, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return acc;
    };

    std::vector<std::map<int, std::uint64_t>> rows(m.rows);
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c]) {
            std::uint64_t rv = (rows[r].count(c) ? rows[r][c] : 0) + reduce(v);
            rv %= p;
            if (rv)
                rows[r][c] = rv;
            else
                rows[r].erase(c);
        }

    int rank = 0;
    std::vector<char> row_done(m.rows, 0);
    for (;;) {
        int pr = -1, pc = -1;
        for (int r = 0; r < m.rows; ++r) {
            if (row_done[r] || rows[r].empty()) continue;
            if (pr < 0 || rows[r].size() < rows[pr].size()) pr = r;
        }
        if (pr < 0) break;
        pc = rows[pr].begin()->first;
        ++rank;
        std::uint64_t inv = powmod(rows[pr][pc], p - 2);
        for (int r = 0; r < m.rows; ++r) {
            if (r == pr || row_done[r]) continue;
            auto it = rows[r].find(pc);
            if (it == rows[r].end()) continue;
            std::uint64_t f = mulmod(it->second, inv);
            for (const auto& [c, v] : rows[pr]) {
                std::uint64_t sub = mulmod(f, v);
                std::uint64_t cur = rows[r].count(c) ? rows[r][c] : 0;
                std::uint64_t nv = (cur + p - sub) % p;
                if (nv)
                    rows[r][c] = nv;
                else
                    rows[r].erase(c);
            }
        }
        row_done[pr] = 1;
        rows[pr].clear();
    }
    return rank;
}

int rank_modular(const SparseIntMatrix& m, std::uint64_t seed, int count) {
    static const std::uint64_t primes[] = {
        1000000007ULL, 998244353ULL, 754974721ULL, 167772161ULL, 469762049ULL,
        1004535809ULL, 880803841ULL, 2013265921ULL, 2281701377ULL, 3221225473ULL,
    };
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> pool(std::begin(primes), std::end(primes));
    std::shuffle(pool.begin(), pool.end(), rng);
    int best = 0;
    for (int i = 0; i < count && i < static_cast<int>(pool.size()); ++i)
        best = std::max(best, rank_mod_prime(m, pool[i]));
    return best;
}

json BettiVector::to_json() const {
    json j;
    json b = json::object();
    for (const auto& [d, v] : reduced_betti) b[std::to_string(d)] = v;
    j["reduced_betti"] = b;
    j["euler"] = euler;
    j["empty"] = empty_complex;
    return j;
}

BettiVector betti_reduced(const OrderComplex& c) {
    BettiVector out;
    if (c.empty()) {
        out.empty_complex = true;
        return out;
    }
    ChainComplexQ cc = boundary_matrices(c, /*reduced=*/true);
    std::vector<int> ranks(c.dim + 2, 0);
    for (int d = 0; d <= c.dim; ++d) ranks[d] = rank_exact(cc.boundary[d]);
    long long euler = 0;
    for (int d = 0; d <= c.dim; ++d)
        euler += (d % 2 == 0 ? 1 : -1) * cc.chains_per_dim[d];
    out.euler = euler;
    long long alt = 0;
    for (int d = 0; d <= c.dim; ++d) {
        long long b = cc.chains_per_dim[d] - ranks[d] - ranks[d + 1];
        if (b < 0) throw std::logic_error("betti_reduced: negative Betti number");
        out.reduced_betti[d] = b;
        alt += (d % 2 == 0 ? 1 : -1) * b;
    }
    // Euler characteristic identity for nonempty complexes.
    if (euler != 1 + alt) throw std::logic_error("betti_reduced: Euler characteristic mismatch");
    return out;
}

}  // namespace cantorhom
