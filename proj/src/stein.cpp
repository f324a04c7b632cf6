#include "cantorhom/stein.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cantorhom/matching.hpp"
#include "cantorhom/zfn.hpp"

namespace cantorhom {
namespace stein {

namespace {

constexpr long long kMaxElements = 100000;
constexpr long long kMaxPartitions = 100000;
constexpr long long kMaxBoxes = 100000;

}  // namespace

std::string SlotPartition::label(const ColourSignature& sig) const {
    std::string out = "[";
    for (std::size_t b = 0; b < boxes.size(); ++b) {
        if (b) out += " ";
        out += "(";
        for (int i = 0; i < sig.s; ++i) {
            if (i) out += ",";
            out += boxes[b][i] < 0 ? "*" : std::to_string(boxes[b][i]);
        }
        out += ")";
    }
    return out + "]";
}

std::vector<SlotPartition> enumerate_slot_partitions(const ColourSignature& sig,
                                                     long long max_cost) {
    for (long long n : sig.arities)
        if (n > kMaxBoxes) throw ResourceError("enumerate_slot_partitions: arity too large");

    SlotPartition trivial;
    trivial.boxes.push_back(std::vector<int>(sig.s, -1));
    std::set<SlotPartition> seen{trivial};
    std::vector<SlotPartition> frontier{trivial};

    while (!frontier.empty()) {
        std::vector<SlotPartition> next;
        for (const auto& part : frontier) {
            for (std::size_t b = 0; b < part.boxes.size(); ++b) {
                for (int i = 0; i < sig.s; ++i) {
                    if (part.boxes[b][i] != -1) continue;  // colour already used on this path
                    long long cost = part.cost() + sig.arities[i] - 1;
                    if (cost > max_cost) continue;
                    SlotPartition split;
                    split.boxes.reserve(part.boxes.size() + sig.arities[i] - 1);
                    for (std::size_t o = 0; o < part.boxes.size(); ++o)
                        if (o != b) split.boxes.push_back(part.boxes[o]);
                    for (long long cell = 0; cell < sig.arities[i]; ++cell) {
                        auto box = part.boxes[b];
                        box[i] = static_cast<int>(cell);
                        split.boxes.push_back(std::move(box));
                    }
                    std::sort(split.boxes.begin(), split.boxes.end());
                    if (seen.insert(split).second) {
                        if (static_cast<long long>(seen.size()) > kMaxPartitions)
                            throw ResourceError("enumerate_slot_partitions: partition guard exceeded");
                        next.push_back(std::move(split));
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<SlotPartition> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const SlotPartition& a, const SlotPartition& b) {
        if (a.cost() != b.cost()) return a.cost() < b.cost();
        return a.boxes < b.boxes;
    });
    return out;
}

namespace {

bool box_contains(const std::vector<int>& outer, const std::vector<int>& inner) {
    for (std::size_t i = 0; i < outer.size(); ++i)
        if (outer[i] != -1 && outer[i] != inner[i]) return false;
    return true;
}

}  // namespace

bool slot_refines(const SlotPartition& a, const SlotPartition& b) {
    // Both partition the cube, so it suffices that every box of b lies inside
    // some box of a.
    for (const auto& bb : b.boxes) {
        bool inside = false;
        for (const auto& ba : a.boxes)
            if (box_contains(ba, bb)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

std::optional<std::uint32_t> full_grid_omega(const SlotPartition& p,
                                             const ColourSignature& sig) {
    if (p.trivial()) return 0u;
    std::uint32_t omega = 0;
    for (int i = 0; i < sig.s; ++i)
        if (p.boxes[0][i] != -1) omega |= 1u << i;
    for (const auto& box : p.boxes) {
        std::uint32_t m = 0;
        for (int i = 0; i < sig.s; ++i)
            if (box[i] != -1) m |= 1u << i;
        if (m != omega) return std::nullopt;
    }
    Int want = subset_weight(sig, omega);
    if (Int(static_cast<long long>(p.boxes.size())) != want) return std::nullopt;
    return omega;
}

ZPoset build_z_poset(const ColourSignature& sig, int p, long long delta) {
    if (p < 1) throw std::invalid_argument("build_z_poset: p must be >= 1");
    if (delta < 0) throw std::invalid_argument("build_z_poset: delta must be >= 0");
    DerivedConstants dc = derived_constants(sig);
    long long slot_cost_cap = delta;
    if (dc.N - 1 < slot_cost_cap) slot_cost_cap = (dc.N - 1).convert_to<long long>();

    ZPoset z;
    z.sig = sig;
    z.p = p;
    z.delta = delta;
    z.partitions = enumerate_slot_partitions(sig, slot_cost_cap);

    std::vector<int> nontrivial;
    for (int i = 0; i < static_cast<int>(z.partitions.size()); ++i)
        if (!z.partitions[i].trivial()) nontrivial.push_back(i);

    std::vector<int> current;
    auto dfs = [&](auto&& self, std::size_t start, long long cost) -> void {
        if (!current.empty()) {
            z.elements.push_back({current, cost});
            if (static_cast<long long>(z.elements.size()) > kMaxElements)
                throw ResourceError("build_z_poset: element guard exceeded");
        }
        if (static_cast<int>(current.size()) >= p) return;
        for (std::size_t k = start; k < nontrivial.size(); ++k) {
            long long c = cost + z.partitions[nontrivial[k]].cost();
            if (c <= delta) {
                current.push_back(nontrivial[k]);
                self(self, k, c);  // multiset: the same partition may repeat
                current.pop_back();
            }
        }
    };
    dfs(dfs, 0, 0);

    std::stable_sort(z.elements.begin(), z.elements.end(),
                     [](const ExpansionClass& a, const ExpansionClass& b) {
                         if (a.cost != b.cost) return a.cost < b.cost;
                         if (a.slots.size() != b.slots.size())
                             return a.slots.size() < b.slots.size();
                         return a.slots < b.slots;
                     });

    // Pairwise refinement of the enumerated partitions, computed once.
    int np = static_cast<int>(z.partitions.size());
    BitMatrix refines(np);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            if (slot_refines(z.partitions[i], z.partitions[j])) refines.set(i, j, true);

    auto class_leq = [&](int a, int b) {
        const auto& sa = z.elements[a].slots;
        const auto& sb = z.elements[b].slots;
        if (sa.size() > sb.size()) return false;
        if (sb.size() > 64) throw ResourceError("build_z_poset: more than 64 slots");
        std::vector<std::uint64_t> adj(sa.size(), 0);
        for (std::size_t i = 0; i < sa.size(); ++i)
            for (std::size_t j = 0; j < sb.size(); ++j)
                if (refines.get(sa[i], sb[j])) adj[i] |= std::uint64_t(1) << j;
        return injective_matching(adj, static_cast<int>(sb.size()));
    };

    std::vector<std::string> keys;
    keys.reserve(z.elements.size());
    for (const auto& e : z.elements) {
        std::string k;
        for (std::size_t i = 0; i < e.slots.size(); ++i) {
            if (i) k += "|";
            k += z.partitions[e.slots[i]].label(sig);
        }
        keys.push_back(k);
    }
    z.poset = FinitePoset::from_relation(std::move(keys), class_leq);
    return z;
}

std::vector<int> full_subposet_indices(const ZPoset& z) {
    std::vector<char> full(z.partitions.size(), 0);
    for (std::size_t i = 0; i < z.partitions.size(); ++i)
        full[i] = full_grid_omega(z.partitions[i], z.sig).has_value();
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(z.elements.size()); ++e) {
        bool ok = true;
        for (int s : z.elements[e].slots)
            if (!full[s]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(e);
    }
    return out;
}

std::vector<int> nonrepeating_subposet_indices(const ZPoset& z) {
    std::vector<int> out;
    for (int e : full_subposet_indices(z)) {
        const auto& slots = z.elements[e].slots;
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < slots.size() && distinct; ++i)
            if (slots[i] == slots[i + 1]) distinct = false;  // slots are sorted
        if (distinct) out.push_back(e);
    }
    return out;
}

QuillenReport cross_validate_quillen(const ColourSignature& sig, int p, long long delta) {
    ZPoset z = build_z_poset(sig, p, delta);
    QuillenReport r;
    r.count_z = z.poset.size();
    r.betti_z = betti_reduced(order_complex(z.poset));

    auto fidx = full_subposet_indices(z);
    r.count_full = static_cast<int>(fidx.size());
    r.betti_full = betti_reduced(order_complex(z.poset.induced(fidx)));

    auto zp = zfn::build_zfn_poset(sig, p, Int(delta));
    r.count_nonrepeating = zp.poset.size();
    r.betti_nonrepeating = betti_reduced(order_complex(zp.poset));

    auto nonzero = [](const BettiVector& b) {
        std::map<int, long long> nz;
        for (auto [d, v] : b.reduced_betti)
            if (v) nz[d] = v;
        return nz;
    };
    r.match = !r.betti_z.empty_complex == !r.betti_nonrepeating.empty_complex &&
              !r.betti_full.empty_complex == !r.betti_z.empty_complex &&
              nonzero(r.betti_z) == nonzero(r.betti_full) &&
              nonzero(r.betti_z) == nonzero(r.betti_nonrepeating);
    if (!r.match) r.mismatch = "Betti vectors differ between Z, full, and nonrepeating reductions";
    return r;
}

json QuillenReport::to_json() const {
    json j;
    j["counts"] = {{"z", count_z}, {"full", count_full}, {"nonrepeating", count_nonrepeating}};
    j["betti_z"] = betti_z.to_json();
    j["betti_full"] = betti_full.to_json();
    j["betti_nonrepeating"] = betti_nonrepeating.to_json();
    j["match"] = match;
    if (!match) j["mismatch"] = mismatch;
    return j;
}

json summary_json(const ZPoset& z) {
    json j;
    j["s"] = z.sig.s;
    j["arities"] = z.sig.arities;
    j["p"] = z.p;
    j["delta"] = z.delta;
    j["partition_count"] = static_cast<int>(z.partitions.size());
    j["element_count"] = z.poset.size();
    j["dimension"] = z.poset.longest_chain();
    j["betti"] = betti_reduced(order_complex(z.poset)).to_json();
    return j;
}

}  // namespace stein
}  // namespace cantorhom
