#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantorhom/homology.hpp"
#include "cantorhom/signature.hpp"

namespace cantorhom {
namespace les {

// A homology dimension variable. All Y and group homology is reduced; the
// group's unreduced H_0 is reported with a final +1 adjustment. Truncation
// pairs at equal width are identified (the base is symbolic and large), so Y
// terms are keyed by width alone and Z layers by their expansion budget.
struct HomTerm {
    enum class Kind { Y, Z, Group, Const };
    Kind kind = Kind::Const;
    int width = 0;    // Y: ceiling minus floor; Z: expansion budget delta
    int degree = 0;
    long long const_dim = 0;

    static HomTerm y(int width, int degree) { return {Kind::Y, width, degree, 0}; }
    static HomTerm z(int width, int degree) { return {Kind::Z, width, degree, 0}; }
    static HomTerm group(int degree) { return {Kind::Group, 0, degree, 0}; }
    static HomTerm constant(long long dim) { return {Kind::Const, 0, 0, dim}; }

    std::string key() const;
    bool operator==(const HomTerm&) const = default;
};

// One window of the pair long exact sequence at pair width u:
//   ... -> H~_d(Y(u-1)) -> H~_d(Y(u)) -> H~_{d-1}(Z(u)) -> ...
// listed from top_degree down to bottom_degree, with the flanking Z terms at
// both ends included. Custom term lists are allowed for synthetic sequences.
struct LesInstance {
    int width = 0;  // 0 for synthetic instances
    std::vector<HomTerm> terms;

    static LesInstance lemma_pair(int width, int top_degree, int bottom_degree = 0);
    static LesInstance synthetic(std::vector<HomTerm> terms);
    json describe() const;
};

struct Fact {
    std::optional<long long> dim;
    std::optional<long long> upper_bound;
    std::string citation;
};

class FactLedger {
public:
    // Records a dimension with its citation; a conflicting value raises
    // FactConflictError naming both citations.
    void inject(const HomTerm& term, long long dim, const std::string& citation);

    std::optional<long long> dim(const HomTerm& term) const;
    std::optional<long long> dim(const std::string& key) const;
    bool improve_upper_bound(const std::string& key, long long bound, const std::string& citation);
    const std::map<std::string, Fact>& facts() const { return facts_; }

private:
    std::map<std::string, Fact> facts_;
};

// Resolves a term to (dimension, citation), or nothing if unknown.
using TermResolver =
    std::function<std::optional<std::pair<long long, std::string>>(const HomTerm&)>;

struct SaturationOutcome {
    json log = json::array();
    std::map<std::string, long long> dims;
    std::vector<std::string> unresolved;
};

// Applies the exactness rules to a fixed point:
//   R1 alternating-sum solving on maximal runs flanked by zero terms,
//   R2/R3 inequality pinning against zero neighbours,
//   R4 two-term isomorphism runs,
// plus the stable-range identification of wide Y terms with group terms when
// `stability_t` is set (t = N-1). Rule applications are logged; fully known
// runs are audited to have alternating sum zero. `shuffle_seed` permutes the
// instance processing order without affecting the final ledger.
SaturationOutcome saturate(const std::vector<LesInstance>& instances, FactLedger& ledger,
                           const TermResolver& resolver = nullptr,
                           std::optional<Int> stability_t = std::nullopt,
                           std::uint64_t shuffle_seed = 0);

// Re-executes a proof log from its recorded facts alone; returns the derived
// assignment. Throws DerivationError if any step fails to reproduce.
std::map<std::string, long long> replay_log(const json& log);

struct Derive2VResult {
    bool ok = false;
    int max_degree = 8;
    std::map<int, long long> homology;        // unreduced dims, degrees 0..max_degree
    std::map<int, std::string> provenance;    // "derived" or "injected"
    std::vector<std::string> unresolved_goals;
    json log;
    json to_json() const;
};

struct VanishingResult {
    bool certified = false;
    int k = 0;
    json failures = json::array();  // dichotomy counterexamples / nonzero layers
    std::vector<std::string> unresolved_goals;
    json log;
    json to_json() const;
};

class LesEngine {
public:
    explicit LesEngine(ColourSignature sig, int p_cap = 0);  // 0 -> default cap

    // Replays the full computation of the rational homology of the two-colour
    // dyadic group through degree max_degree.
    Derive2VResult derive_2v(int max_degree = 8);

    // Certifies vanishing of the group homology in degree k >= D(s) via the
    // dimension/cone dichotomy on every required layer.
    VanishingResult derive_vanishing(int k);

    // Layer homology resolver backed by the reduced poset construction.
    enum class ZPolicy { BettiOrCone, DichotomyOnly };
    TermResolver layer_resolver(ZPolicy policy, json* events = nullptr);

private:
    struct LayerInfo {
        int count = 0;
        int dim = -1;
        std::optional<std::string> cone_key;
        std::optional<BettiVector> betti;
        std::uint64_t chains = 0;
    };
    const LayerInfo& layer(int delta);

    ColourSignature sig_;
    int p_cap_;
    long long dim_bound_;  // D(s) - 1
    Int t_;
    std::map<int, LayerInfo> layers_;
};

}  // namespace les
}  // namespace cantorhom
