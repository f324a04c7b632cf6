#include "cantorhom/conj.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cantorhom {
namespace conj {

std::string CountingConvention::label() const {
    std::string s = coeff_m_over_d ? "coeff-m-over-d" : "coeff-d";
    s += k1_forced_nonzero ? ",k1-nonzero" : ",k1-free";
    return s;
}

long long OrbitTypeVector::total_points() const {
    long long total = 0;
    for (std::size_t i = 0; i < divisors.size(); ++i) total += divisors[i] * counts[i];
    return total;
}

json OrbitTypeVector::to_json() const {
    json j = json::object();
    for (std::size_t i = 0; i < divisors.size(); ++i)
        j["k" + std::to_string(divisors[i])] = counts[i];
    return j;
}

std::vector<OrbitTypeVector> enumerate_orbit_vectors(long long n, long long r, long long m,
                                                     const CountingConvention& conv) {
    if (n < 2) throw std::invalid_argument("enumerate_orbit_vectors: n must be >= 2");
    if (m < 1 || r < 1) throw std::invalid_argument("enumerate_orbit_vectors: m, r must be >= 1");
    auto divs = divisors_of(m);
    double combos = 1;
    for (std::size_t i = 0; i < divs.size(); ++i) combos *= static_cast<double>(n);
    if (combos > 2e7) throw ResourceError("enumerate_orbit_vectors: search space too large");

    long long mod = n - 1;
    std::vector<OrbitTypeVector> out;
    std::vector<long long> counts(divs.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == divs.size()) {
            if (counts.back() == 0) return;  // faithful orbit required
            if (conv.k1_forced_nonzero && counts.front() == 0 && divs.front() == 1) return;
            if (mod > 1) {
                long long total = 0;
                for (std::size_t i = 0; i < divs.size(); ++i) {
                    long long coeff = conv.coeff_m_over_d ? m / divs[i] : divs[i];
                    total += coeff % mod * (counts[i] % mod) % mod;
                }
                if ((total % mod + mod) % mod != ((r % mod) + mod) % mod) return;
            }
            out.push_back({m, divs, counts});
            return;
        }
        for (long long k = 0; k < n; ++k) {
            counts[idx] = k;
            self(self, idx + 1);
        }
        counts[idx] = 0;
    };
    rec(rec, 0);
    return out;
}

Int count_closed_coprime(long long n, long long m) {
    if (n < 2 || m < 1) throw std::invalid_argument("count_closed_coprime: bad arguments");
    if (std::gcd(m, n - 1) != 1)
        throw std::domain_error(
            "count_closed_coprime: gcd(m, n-1) != 1; use count_closed_general");
    return int_pow(Int(n), static_cast<unsigned long long>(euler_phi(m))) - 1;
}

GeneralCountResult count_closed_general(long long n, long long r, long long m) {
    if (n < 2 || m < 1 || r < 1)
        throw std::invalid_argument("count_closed_general: bad arguments");
    std::vector<long long> interior;
    for (long long d : divisors_of(m))
        if (d > 1 && d < m) interior.push_back(d);
    if (interior.size() > 20) throw ResourceError("count_closed_general: too many divisors");

    std::set<long long> omega;
    std::vector<long long> alpha(interior.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, long long acc) -> void {
        if (idx == interior.size()) {
            omega.insert(acc);
            return;
        }
        for (long long a = 0; a <= n; ++a) self(self, idx + 1, acc - a * interior[idx]);
    };
    rec(rec, 0, r);

    GeneralCountResult res;
    res.d = std::gcd(m, n - 1);
    long long hits = 0;
    for (long long a : omega) {
        res.omega.push_back(a);
        if (a % res.d == 0) ++hits;
    }
    res.count = Int(res.d) * hits;
    return res;
}

json GeneralCountResult::to_json() const {
    json j;
    j["count"] = to_decimal(count);
    j["omega"] = omega;
    j["gcd"] = d;
    return j;
}

ReconcileReport reconcile_counts(long long n, long long r, long long m) {
    ReconcileReport rep;
    rep.n = n;
    rep.r = r;
    rep.m = m;

    const std::pair<std::string, CountingConvention> conventions[] = {
        {"statement(coeff-d,k1-free)", CountingConvention::statement()},
        {"default(coeff-d,k1-nonzero)", CountingConvention::default_convention()},
        {"proof(coeff-m-over-d,k1-nonzero)", CountingConvention::proof()},
        {"coeff-m-over-d,k1-free", CountingConvention{true, false}},
    };
    for (const auto& [label, conv] : conventions)
        rep.enumeration_counts[label] =
            Int(static_cast<long long>(enumerate_orbit_vectors(n, r, m, conv).size()));

    rep.statement_formula_applicable = std::gcd(m, n - 1) == 1;
    rep.statement_formula = int_pow(Int(n), static_cast<unsigned long long>(euler_phi(m))) - 1;
    if (m >= 2)
        rep.proof_free_choice =
            Int(n - 1) * int_pow(Int(n), static_cast<unsigned long long>(divisor_count(m) - 2));
    rep.general_count = count_closed_general(n, r, m).count;

    Int reference = rep.enumeration_counts.at("default(coeff-d,k1-nonzero)");
    auto classify = [&](const std::string& name, const Int& value) {
        if (value == reference)
            rep.agreements.push_back(name);
        else
            rep.disagreements.push_back(name + " = " + to_decimal(value) +
                                        " (reference = " + to_decimal(reference) + ")");
    };
    for (const auto& [label, v] : rep.enumeration_counts)
        if (label != "default(coeff-d,k1-nonzero)") classify("enumeration:" + label, v);
    classify("closed:n^phi-1", rep.statement_formula);
    if (rep.proof_free_choice) classify("closed:(n-1)n^(tau-2)", *rep.proof_free_choice);
    classify("closed:residue-set", rep.general_count);
    return rep;
}

json ReconcileReport::to_json() const {
    json j;
    j["n"] = n;
    j["r"] = r;
    j["m"] = m;
    json en = json::object();
    for (const auto& [k, v] : enumeration_counts) en[k] = to_decimal(v);
    j["enumeration"] = en;
    j["closed_n_phi_minus_1"] = to_decimal(statement_formula);
    j["closed_n_phi_minus_1_applicable"] = statement_formula_applicable;
    j["closed_free_choice"] = proof_free_choice ? json(to_decimal(*proof_free_choice)) : json(nullptr);
    j["closed_residue_set"] = to_decimal(general_count);
    j["agreements"] = agreements;
    j["disagreements"] = disagreements;
    return j;
}

WeylResult weyl_group_order(long long m, const OrbitTypeVector& orbit, int cap) {
    if (m < 1) throw std::invalid_argument("weyl_group_order: m must be >= 1");
    for (std::size_t i = 0; i < orbit.divisors.size(); ++i) {
        if (m % orbit.divisors[i] != 0)
            throw std::invalid_argument("weyl_group_order: orbit length must divide m");
        if (orbit.counts[i] < 0) throw std::invalid_argument("weyl_group_order: negative count");
        if (orbit.divisors[i] == m && orbit.counts[i] == 0)
            throw std::invalid_argument("weyl_group_order: faithful orbit count must be nonzero");
    }
    bool has_faithful = false;
    for (std::size_t i = 0; i < orbit.divisors.size(); ++i)
        if (orbit.divisors[i] == m && orbit.counts[i] > 0) has_faithful = true;
    if (!has_faithful) throw std::invalid_argument("weyl_group_order: missing faithful orbit");

    long long pts = orbit.total_points();
    if (pts > cap)
        throw ResourceError("weyl_group_order: " + std::to_string(pts) +
                            " points exceed the cap " + std::to_string(cap));

    int n = static_cast<int>(pts);
    std::vector<int> sigma(n);
    int next = 0;
    for (std::size_t i = 0; i < orbit.divisors.size(); ++i) {
        int d = static_cast<int>(orbit.divisors[i]);
        for (long long c = 0; c < orbit.counts[i]; ++c) {
            for (int a = 0; a < d; ++a) sigma[next + a] = next + (a + 1) % d;
            next += d;
        }
    }

    // Powers of sigma span the cyclic subgroup.
    std::set<std::vector<int>> power_set;
    std::vector<int> cur(n);
    for (int i = 0; i < n; ++i) cur[i] = i;
    for (long long e = 0; e < m; ++e) {
        power_set.insert(cur);
        std::vector<int> nxt(n);
        for (int i = 0; i < n; ++i) nxt[i] = sigma[cur[i]];
        cur = nxt;
    }

    std::vector<int> g(n), ginv(n), conjv(n);
    for (int i = 0; i < n; ++i) g[i] = i;
    long long normalizer = 0, centralizer = 0;
    do {
        for (int i = 0; i < n; ++i) ginv[g[i]] = i;
        for (int i = 0; i < n; ++i) conjv[i] = g[sigma[ginv[i]]];
        if (conjv == sigma) ++centralizer;
        if (power_set.count(conjv)) ++normalizer;
    } while (std::next_permutation(g.begin(), g.end()));

    WeylResult res;
    res.normalizer_order = normalizer;
    res.centralizer_order = centralizer;
    res.weyl_order = Int(normalizer) / centralizer;
    return res;
}

json WeylResult::to_json() const {
    json j;
    j["weyl_order"] = to_decimal(weyl_order);
    j["normalizer_order"] = to_decimal(normalizer_order);
    j["centralizer_order"] = to_decimal(centralizer_order);
    return j;
}

}  // namespace conj
}  // namespace cantorhom
