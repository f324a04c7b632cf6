#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantorhom/conj.hpp"
#include "cantorhom/ints.hpp"
#include "cantorhom/signature.hpp"

namespace cantorhom {
namespace fj {

// Finitely supported Poincare polynomial with exact integer coefficients.
struct PoincarePolynomial {
    std::map<int, Int> coeff;

    static PoincarePolynomial one() { return {{{0, 1}}}; }
    Int at(int degree) const {
        auto it = coeff.find(degree);
        return it == coeff.end() ? Int(0) : it->second;
    }
    json to_json() const;
    static PoincarePolynomial from_json(const json& j);
    bool operator==(const PoincarePolynomial&) const = default;
};

PoincarePolynomial poly_mul(const PoincarePolynomial& a, const PoincarePolynomial& b);
PoincarePolynomial poly_pow(const PoincarePolynomial& a, long long e);

// Homology of the centralizer of a cyclic group of order m: the group's
// Poincare polynomial raised to the phi(m)-th power (Kunneth over a field on
// the phi(m)-fold product decomposition). Requires constant term 1.
PoincarePolynomial centralizer_poincare(const PoincarePolynomial& group_betti, long long m);

struct SummandIndex {
    long long m = 1;
    long long i = 1;  // class index, 1-based
    long long p = 0;
    long long q = 0;
    bool operator==(const SummandIndex&) const = default;
};

struct SummandEnumeration {
    std::vector<SummandIndex> indices;
    json metadata;  // cutoff, class counts per m (with convention), p bounds
};

// Enumerates the assembly-source index set for total degree n_deg in the
// group with s colours of common arity n_arity and r roots, for 1 <= m <=
// m_max. Class counts come from the orbit-vector enumeration under the given
// convention; the count the displayed index set would use (n^phi(m) - 1) is
// reported alongside in the metadata.
SummandEnumeration fj_summand_indices(long long n_deg, int s, long long n_arity, long long r,
                                      long long m_max,
                                      const conj::CountingConvention& convention =
                                          conj::CountingConvention::default_convention());

struct ThetaDimsTable {
    std::map<std::pair<long long, long long>, Int> dims;  // (m, q) -> dim

    static ThetaDimsTable from_json(const json& entries);
    std::optional<Int> at(long long m, long long q) const;
};

enum class CoinvariantMode { UpperBound, Table };

// Per-index contributions and totals. In UpperBound mode a contribution is
// betti_p * theta_dim (coinvariants are a quotient of the tensor product); in
// Table mode contributions come from the supplied coinvariant dimensions.
// Unknown entries stay unknown and are counted, never zero-filled.
json fj_total_dimension(const SummandEnumeration& enumeration,
                        const PoincarePolynomial& group_betti, const ThetaDimsTable& theta,
                        CoinvariantMode mode, const ThetaDimsTable* coinvariants = nullptr);

// The group Poincare polynomials this artifact can supply on its own: the
// rationally acyclic one-colour groups and the two-colour dyadic group.
std::optional<PoincarePolynomial> known_group_poincare(const ColourSignature& sig);

}  // namespace fj
}  // namespace cantorhom
