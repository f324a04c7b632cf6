#include "cantorhom/zfn.hpp"

#include <algorithm>
#include <tuple>

#include "cantorhom/matching.hpp"

namespace cantorhom {
namespace zfn {

Int FullClass::cost(const ColourSignature& sig) const {
    Int c = 0;
    for (auto m : omegas) c += subset_cost(sig, m);
    return c;
}

std::string FullClass::label() const {
    std::string out;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (i) out += "+";
        out += mask_label(omegas[i]);
    }
    return out;
}

bool leq_fullclass(const FullClass& a, const FullClass& b) {
    if (a.size() > b.size()) return false;
    if (b.size() > 64) throw ResourceError("leq_fullclass: more than 64 components");
    std::vector<std::uint64_t> adj(a.omegas.size(), 0);
    for (std::size_t i = 0; i < a.omegas.size(); ++i)
        for (std::size_t j = 0; j < b.omegas.size(); ++j)
            if ((a.omegas[i] & b.omegas[j]) == a.omegas[i]) adj[i] |= std::uint64_t(1) << j;
    return injective_matching(adj, b.size());
}

int default_p_cap(int s) {
    if (s < 1 || s > 20) throw ResourceError("default_p_cap: s out of supported range [1,20]");
    return (1 << s) - 1;
}

ZfnPoset build_zfn_poset(const ColourSignature& sig, int p_cap, const Int& delta) {
    if (p_cap < 1) throw std::invalid_argument("build_zfn_poset: p_cap must be >= 1");
    if (delta < 0) throw std::invalid_argument("build_zfn_poset: delta must be >= 0");
    auto subsets = nonempty_subsets(sig.s);
    std::vector<Int> costs(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) costs[i] = subset_cost(sig, subsets[i]);

    std::vector<std::pair<Int, FullClass>> found;
    std::vector<std::uint32_t> current;
    auto dfs = [&](auto&& self, std::size_t start, const Int& cost) -> void {
        if (!current.empty()) found.push_back({cost, FullClass{current}});
        if (static_cast<int>(current.size()) >= p_cap) return;
        for (std::size_t k = start; k < subsets.size(); ++k) {
            Int c = cost + costs[k];
            if (c <= delta) {
                current.push_back(subsets[k]);
                self(self, k + 1, c);
                current.pop_back();
            }
        }
    };
    dfs(dfs, 0, Int(0));

    std::stable_sort(found.begin(), found.end(), [&](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
        return std::lexicographical_compare(
            x.second.omegas.begin(), x.second.omegas.end(), y.second.omegas.begin(),
            y.second.omegas.end(), mask_lex_less);
    });

    ZfnPoset zp{sig, p_cap, delta, {}, {}};
    std::vector<std::string> keys;
    for (auto& [c, fc] : found) {
        keys.push_back(fc.label());
        zp.elements.push_back(std::move(fc));
    }
    zp.poset = FinitePoset::from_relation(std::move(keys), [&](int i, int j) {
        return leq_fullclass(zp.elements[i], zp.elements[j]);
    });
    return zp;
}

std::optional<int> ZfnPoset::beta_index() const {
    int full = (1 << sig.s) - 1;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i)
        if (elements[i].size() == full) return i;
    return std::nullopt;
}

BettiVector zfn_betti(const ColourSignature& sig, int p_cap, const Int& delta) {
    ZfnPoset zp = build_zfn_poset(sig, p_cap, delta);
    return betti_reduced(order_complex(zp.poset));
}

int zfn_dimension(const ColourSignature& sig, int p_cap, const Int& delta) {
    return build_zfn_poset(sig, p_cap, delta).poset.longest_chain();
}

int zfn_interval_chain_length(const ColourSignature& sig, int p_cap, const Int& delta) {
    ZfnPoset zp = build_zfn_poset(sig, p_cap, delta);
    return zp.poset.with_bottom("0").longest_chain();
}

DichotomyResult contractibility_dichotomy(const ColourSignature& sig, int p_cap,
                                          const Int& delta) {
    ZfnPoset zp = build_zfn_poset(sig, p_cap, delta);
    DichotomyResult r;
    r.dim = zp.poset.longest_chain();
    Int bound = derived_constants(sig).D - 1;
    r.dim_bound = bound.convert_to<long long>();
    if (auto cone = zp.poset.cone_point()) {
        r.kind = DichotomyKind::Contractible;
        r.cone_key = zp.poset.key(*cone);
    } else if (r.dim < r.dim_bound) {
        r.kind = DichotomyKind::DimBelow;
    } else {
        r.kind = DichotomyKind::Counterexample;
    }
    return r;
}

json DichotomyResult::to_json() const {
    json j;
    switch (kind) {
        case DichotomyKind::Contractible: j["kind"] = "contractible"; break;
        case DichotomyKind::DimBelow: j["kind"] = "dim_below"; break;
        case DichotomyKind::Counterexample: j["kind"] = "counterexample"; break;
    }
    j["dimension"] = dim;
    j["dim_bound"] = dim_bound;
    if (cone_key)
        j["cone_point"] = *cone_key;
    else
        j["cone_point"] = nullptr;
    return j;
}

json summary_json(const ZfnPoset& zp) {
    json j;
    j["s"] = zp.sig.s;
    j["arities"] = zp.sig.arities;
    j["p_cap"] = zp.p_cap;
    j["delta"] = to_decimal(zp.delta);
    j["element_count"] = zp.poset.size();
    int dim = zp.poset.longest_chain();
    j["dimension"] = dim;
    auto cone = zp.poset.cone_point();
    j["cone_point"] = cone ? json(zp.poset.key(*cone)) : json(nullptr);
    // A cone point certifies that all reduced Betti numbers vanish; use that
    // certificate instead of materialising very large contractible complexes.
    if (cone && zp.poset.chain_count() > 2'000'000) {
        BettiVector b;
        for (int d = 0; d <= dim; ++d) b.reduced_betti[d] = 0;
        b.euler = 1;
        json bj = b.to_json();
        bj["certified_by_cone"] = true;
        j["betti"] = bj;
    } else {
        json bj = betti_reduced(order_complex(zp.poset)).to_json();
        bj["certified_by_cone"] = false;
        j["betti"] = bj;
    }
    return j;
}

}  // namespace zfn
}  // namespace cantorhom
