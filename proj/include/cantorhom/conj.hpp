#pragma once

#include <map>
#include <string>
#include <vector>

#include "cantorhom/ints.hpp"
#include "cantorhom/poset.hpp"  // for the json alias

namespace cantorhom {
namespace conj {

// The congruence on leaf counts can be read with coefficient d (as stated) or
// m/d (as in the unique-solution argument); likewise the count of fixed
// orbits may or may not be forced nonzero. Both choices are explicit.
struct CountingConvention {
    bool coeff_m_over_d = false;
    bool k1_forced_nonzero = true;

    static CountingConvention statement() { return {false, false}; }
    static CountingConvention proof() { return {true, true}; }
    static CountingConvention default_convention() { return {false, true}; }
    std::string label() const;
};

// Orbit counts k_d for each divisor d of m; the faithful orbit count k_m is
// always nonzero.
struct OrbitTypeVector {
    long long m = 1;
    std::vector<long long> divisors;  // ascending
    std::vector<long long> counts;    // aligned with divisors

    long long total_points() const;
    json to_json() const;
};

// All vectors with 0 <= k_d <= n-1 meeting the convention's constraints, in
// lexicographic order over the ascending divisor list. n-1 = 1 makes the
// congruence vacuous.
std::vector<OrbitTypeVector> enumerate_orbit_vectors(long long n, long long r, long long m,
                                                     const CountingConvention& conv);

// n^phi(m) - 1; requires gcd(m, n-1) = 1 and refuses otherwise, pointing the
// caller at count_closed_general.
Int count_closed_coprime(long long n, long long m);

struct GeneralCountResult {
    Int count;
    std::vector<long long> omega;  // the deduplicated residue set, ascending
    long long d = 1;               // gcd(m, n-1)
    json to_json() const;
};

// Residue-set count: Omega is built from the interior divisors 1 < d < m with
// multipliers 0..n, and the result is d * |{a in Omega : d | a}|.
GeneralCountResult count_closed_general(long long n, long long r, long long m);

struct ReconcileReport {
    long long n = 0, r = 0, m = 0;
    std::map<std::string, Int> enumeration_counts;  // per convention label
    Int statement_formula;                          // n^phi(m) - 1
    bool statement_formula_applicable = false;      // gcd(m, n-1) = 1
    std::optional<Int> proof_free_choice;           // (n-1) n^(tau-2), m >= 2
    Int general_count;
    std::vector<std::string> agreements;
    std::vector<std::string> disagreements;
    json to_json() const;
};

// Computes the count by every reading and flags agreements and disagreements
// against the default-convention enumeration, without failing.
ReconcileReport reconcile_counts(long long n, long long r, long long m);

struct WeylResult {
    Int weyl_order;
    Int normalizer_order;
    Int centralizer_order;
    json to_json() const;
};

// Realizes the orbit vector as a permutation with k_d cycles of length d and
// brute-forces normalizer and centralizer of the generated cyclic group in
// the symmetric group on the moved points. Guarded by `cap` total points.
WeylResult weyl_group_order(long long m, const OrbitTypeVector& orbit, int cap = 8);

}  // namespace conj
}  // namespace cantorhom
