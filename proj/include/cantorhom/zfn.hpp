#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cantorhom/homology.hpp"
#include "cantorhom/poset.hpp"
#include "cantorhom/signature.hpp"

namespace cantorhom {
namespace zfn {

// An element of the reduced expansion poset: a set of distinct nonempty colour
// subsets. Stored canonically (subsets sorted lexicographically on their index
// lists), which fixes the element keys and the poset enumeration order.
struct FullClass {
    std::vector<std::uint32_t> omegas;

    int size() const { return static_cast<int>(omegas.size()); }
    Int cost(const ColourSignature& sig) const;
    std::string label() const;
    bool operator==(const FullClass&) const = default;
};

// a <= b iff the subsets of a inject into those of b respecting containment.
bool leq_fullclass(const FullClass& a, const FullClass& b);

struct ZfnPoset {
    ColourSignature sig;
    int p_cap = 0;
    Int delta;
    std::vector<FullClass> elements;  // sorted by (cost, size, subset list)
    FinitePoset poset;

    std::optional<int> beta_index() const;  // the full element, if present
};

// Default size cap: the number of components of the top element.
int default_p_cap(int s);

// All classes with at most p_cap subsets and total cost at most delta, with
// the matching order. delta = 0 yields the empty poset.
ZfnPoset build_zfn_poset(const ColourSignature& sig, int p_cap, const Int& delta);

BettiVector zfn_betti(const ColourSignature& sig, int p_cap, const Int& delta);

// Longest chain of the poset itself (= order-complex dimension); -1 if empty.
int zfn_dimension(const ColourSignature& sig, int p_cap, const Int& delta);

// Longest chain after adjoining a unique bottom element.
int zfn_interval_chain_length(const ColourSignature& sig, int p_cap, const Int& delta);

enum class DichotomyKind { Contractible, DimBelow, Counterexample };

struct DichotomyResult {
    DichotomyKind kind;
    int dim = -1;                        // measured longest chain
    long long dim_bound = 0;             // D(s) - 1
    std::optional<std::string> cone_key;
    json to_json() const;
};

// Either the poset has a cone point (contractible order complex) or its
// dimension is strictly below D(s)-1; anything else is a counterexample record.
DichotomyResult contractibility_dichotomy(const ColourSignature& sig, int p_cap,
                                          const Int& delta);

json summary_json(const ZfnPoset& zp);  // count, dimension, Betti, cone point

}  // namespace zfn
}  // namespace cantorhom
