#include "cantorhom/les.hpp"

#include <algorithm>
#include <random>

#include "cantorhom/zfn.hpp"

namespace cantorhom {
namespace les {

std::string HomTerm::key() const {
    switch (kind) {
        case Kind::Y: return "Y[w=" + std::to_string(width) + ",d=" + std::to_string(degree) + "]";
        case Kind::Z: return "Z[delta=" + std::to_string(width) + ",d=" + std::to_string(degree) + "]";
        case Kind::Group: return "G[d=" + std::to_string(degree) + "]";
        case Kind::Const: return "const[" + std::to_string(const_dim) + "]";
    }
    return "?";
}

LesInstance LesInstance::lemma_pair(int width, int top_degree, int bottom_degree) {
    if (width < 1) throw std::invalid_argument("lemma_pair: width must be >= 1");
    if (bottom_degree < 0 || top_degree < bottom_degree)
        throw std::invalid_argument("lemma_pair: bad degree window");
    LesInstance inst;
    inst.width = width;
    inst.terms.push_back(HomTerm::z(width, top_degree));
    for (int d = top_degree; d >= bottom_degree; --d) {
        inst.terms.push_back(HomTerm::y(width - 1, d));
        inst.terms.push_back(HomTerm::y(width, d));
        inst.terms.push_back(HomTerm::z(width, d - 1));
    }
    return inst;
}

LesInstance LesInstance::synthetic(std::vector<HomTerm> terms) {
    LesInstance inst;
    inst.terms = std::move(terms);
    return inst;
}

json LesInstance::describe() const {
    json j;
    j["width"] = width;
    json t = json::array();
    for (const auto& term : terms) t.push_back(term.key());
    j["terms"] = t;
    return j;
}

void FactLedger::inject(const HomTerm& term, long long dim, const std::string& citation) {
    auto key = term.key();
    auto it = facts_.find(key);
    if (it != facts_.end() && it->second.dim && *it->second.dim != dim)
        throw FactConflictError("fact conflict on " + key + ": " +
                                std::to_string(*it->second.dim) + " (" + it->second.citation +
                                ") vs " + std::to_string(dim) + " (" + citation + ")");
    if (dim < 0) throw std::invalid_argument("inject: dimensions are nonnegative");
    auto& f = facts_[key];
    if (!f.dim) {
        f.dim = dim;
        f.citation = citation;
    }
}

std::optional<long long> FactLedger::dim(const HomTerm& term) const { return dim(term.key()); }

std::optional<long long> FactLedger::dim(const std::string& key) const {
    auto it = facts_.find(key);
    return it == facts_.end() ? std::nullopt : it->second.dim;
}

bool FactLedger::improve_upper_bound(const std::string& key, long long bound,
                                     const std::string& citation) {
    auto& f = facts_[key];
    if (f.upper_bound && *f.upper_bound <= bound) return false;
    f.upper_bound = bound;
    if (f.citation.empty()) f.citation = citation;
    return true;
}

namespace {

json segment_json(const std::vector<HomTerm>& terms, int from, int to,
                  const FactLedger& ledger) {
    json seg = json::array();
    for (int i = from; i <= to; ++i) {
        json e;
        e["term"] = terms[i].key();
        auto d = ledger.dim(terms[i]);
        e["dim"] = d ? json(*d) : json(nullptr);
        seg.push_back(e);
    }
    return seg;
}

// Built-in axiom schemas for Y terms.
std::optional<std::pair<long long, std::string>> y_axiom(const HomTerm& t) {
    if (t.kind != HomTerm::Kind::Y) return std::nullopt;
    if (t.width == 0) return {{0, "axiom:point-level"}};
    if (t.degree > t.width) return {{0, "axiom:truncation-dimension"}};
    return std::nullopt;
}

}  // namespace

SaturationOutcome saturate(const std::vector<LesInstance>& instances, FactLedger& ledger,
                           const TermResolver& resolver, std::optional<Int> stability_t,
                           std::uint64_t shuffle_seed) {
    SaturationOutcome out;

    // Opening entries: the instances themselves and all pre-injected facts.
    for (const auto& inst : instances) {
        json e;
        e["rule"] = "instance";
        e["segment"] = inst.describe();
        e["conclusion"] = "exact sequence admitted";
        e["citation"] = inst.width > 0 ? "lemma:pair-sequence; axiom:width-translation"
                                       : "synthetic";
        out.log.push_back(e);
    }
    for (const auto& [key, fact] : ledger.facts())
        if (fact.dim) {
            json e;
            e["rule"] = "fact";
            e["term"] = key;
            e["dim"] = *fact.dim;
            e["conclusion"] = "dim " + key + " = " + std::to_string(*fact.dim);
            e["citation"] = fact.citation;
            out.log.push_back(e);
        }

    auto log_fact = [&](const HomTerm& t, long long v, const std::string& citation) {
        ledger.inject(t, v, citation);
        json e;
        e["rule"] = "fact";
        e["term"] = t.key();
        e["dim"] = v;
        e["conclusion"] = "dim " + t.key() + " = " + std::to_string(v);
        e["citation"] = citation;
        out.log.push_back(e);
    };

    // Resolve axiom-level terms once.
    for (const auto& inst : instances)
        for (const auto& t : inst.terms) {
            if (ledger.dim(t)) continue;
            if (t.kind == HomTerm::Kind::Const) {
                log_fact(t, t.const_dim, "constant");
            } else if (auto a = y_axiom(t)) {
                log_fact(t, a->first, a->second);
            } else if (resolver) {
                if (auto r = resolver(t)) log_fact(t, r->first, r->second);
            }
        }

    // Stable-range links: wide Y terms carry the group homology.
    std::vector<std::pair<HomTerm, HomTerm>> stable_links;
    if (stability_t) {
        std::map<std::string, bool> seen;
        for (const auto& inst : instances)
            for (const auto& t : inst.terms)
                if (t.kind == HomTerm::Kind::Y && Int(t.width) >= *stability_t * t.degree &&
                    !seen[t.key()]) {
                    seen[t.key()] = true;
                    stable_links.push_back({t, HomTerm::group(t.degree)});
                }
    }

    std::vector<int> order(instances.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::mt19937_64 rng(shuffle_seed);

    bool changed = true;
    while (changed) {
        changed = false;
        if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

        // Stability propagation, both directions.
        for (const auto& [yterm, gterm] : stable_links) {
            auto dy = ledger.dim(yterm);
            auto dg = ledger.dim(gterm);
            if (dy && !dg) {
                ledger.inject(gterm, *dy, "axiom:stable-range");
                json e;
                e["rule"] = "stability";
                e["from"] = yterm.key();
                e["term"] = gterm.key();
                e["dim"] = *dy;
                e["conclusion"] = "dim " + gterm.key() + " = " + std::to_string(*dy);
                e["citation"] = "axiom:stable-range";
                out.log.push_back(e);
                changed = true;
            } else if (dg && !dy) {
                ledger.inject(yterm, *dg, "axiom:stable-range");
                json e;
                e["rule"] = "stability";
                e["from"] = gterm.key();
                e["term"] = yterm.key();
                e["dim"] = *dg;
                e["conclusion"] = "dim " + yterm.key() + " = " + std::to_string(*dg);
                e["citation"] = "axiom:stable-range";
                out.log.push_back(e);
                changed = true;
            }
        }

        for (int idx : order) {
            const auto& terms = instances[idx].terms;
            int n = static_cast<int>(terms.size());
            std::vector<std::optional<long long>> dims(n);
            for (int i = 0; i < n; ++i) dims[i] = ledger.dim(terms[i]);

            // Zero positions split the window into candidate exact runs.
            std::vector<int> zeros;
            for (int i = 0; i < n; ++i)
                if (dims[i] && *dims[i] == 0) zeros.push_back(i);

            for (std::size_t zi = 0; zi + 1 < zeros.size(); ++zi) {
                int lo = zeros[zi], hi = zeros[zi + 1];
                if (hi - lo < 2) continue;
                int unknown = -1, unknown_count = 0;
                long long alt = 0;
                for (int i = lo + 1; i < hi; ++i) {
                    if (!dims[i]) {
                        unknown = i;
                        ++unknown_count;
                    } else {
                        alt += ((i - lo) % 2 == 1 ? 1 : -1) * *dims[i];
                    }
                }
                if (unknown_count == 0) {
                    if (alt != 0)
                        throw std::logic_error(
                            "saturate: exact run has nonzero alternating sum in instance " +
                            std::to_string(instances[idx].width));
                    continue;
                }
                if (unknown_count > 1) continue;
                long long sign = ((unknown - lo) % 2 == 1) ? 1 : -1;
                long long value = -alt * sign;
                if (value < 0)
                    throw std::logic_error("saturate: negative dimension forced at " +
                                           terms[unknown].key());
                const bool iso_run = (hi - lo == 3);
                json e;
                e["rule"] = iso_run ? "R4" : "R1";
                e["segment"] = segment_json(terms, lo, hi, ledger);
                e["term"] = terms[unknown].key();
                e["dim"] = value;
                e["conclusion"] = "dim " + terms[unknown].key() + " = " + std::to_string(value);
                e["citation"] = "exactness";
                ledger.inject(terms[unknown], value, "exactness");
                out.log.push_back(e);
                changed = true;
                dims[unknown] = value;
            }

            // R2/R3: squeeze against zero neighbours; pin when the bound is 0.
            for (int i = 1; i + 1 < n; ++i) {
                if (dims[i]) continue;
                // R3: A -> B -> 0 gives dim B <= dim A.
                if (dims[i + 1] && *dims[i + 1] == 0 && dims[i - 1]) {
                    if (ledger.improve_upper_bound(terms[i].key(), *dims[i - 1], "R3") &&
                        *dims[i - 1] == 0) {
                        json e;
                        e["rule"] = "R3";
                        e["segment"] = segment_json(terms, i - 1, i + 1, ledger);
                        e["term"] = terms[i].key();
                        e["dim"] = 0;
                        e["conclusion"] = "dim " + terms[i].key() + " = 0";
                        e["citation"] = "exactness";
                        ledger.inject(terms[i], 0, "exactness");
                        out.log.push_back(e);
                        changed = true;
                        dims[i] = 0;
                        continue;
                    }
                }
                // R2: 0 -> A -> B gives dim A <= dim B.
                if (dims[i - 1] && *dims[i - 1] == 0 && dims[i + 1]) {
                    if (ledger.improve_upper_bound(terms[i].key(), *dims[i + 1], "R2") &&
                        *dims[i + 1] == 0) {
                        json e;
                        e["rule"] = "R2";
                        e["segment"] = segment_json(terms, i - 1, i + 1, ledger);
                        e["term"] = terms[i].key();
                        e["dim"] = 0;
                        e["conclusion"] = "dim " + terms[i].key() + " = 0";
                        e["citation"] = "exactness";
                        ledger.inject(terms[i], 0, "exactness");
                        out.log.push_back(e);
                        changed = true;
                        dims[i] = 0;
                    }
                }
            }
        }
    }

    // Final audit and reporting.
    std::map<std::string, bool> seen;
    for (const auto& inst : instances)
        for (const auto& t : inst.terms) {
            auto key = t.key();
            if (seen[key]) continue;
            seen[key] = true;
            if (auto d = ledger.dim(key))
                out.dims[key] = *d;
            else
                out.unresolved.push_back(key);
        }
    return out;
}

std::map<std::string, long long> replay_log(const json& log) {
    std::map<std::string, long long> dims;
    auto known = [&](const std::string& k) -> std::optional<long long> {
        auto it = dims.find(k);
        return it == dims.end() ? std::nullopt : std::optional<long long>(it->second);
    };
    for (const auto& e : log) {
        std::string rule = e.at("rule").get<std::string>();
        if (rule == "instance") continue;
        if (rule == "fact" || rule == "stability") {
            std::string term = e.at("term").get<std::string>();
            long long v = e.at("dim").get<long long>();
            if (rule == "stability") {
                auto src = known(e.at("from").get<std::string>());
                if (!src || *src != v)
                    throw DerivationError("replay: stability source mismatch at " + term);
            }
            auto old = known(term);
            if (old && *old != v) throw DerivationError("replay: conflicting value for " + term);
            dims[term] = v;
        } else if (rule == "R1" || rule == "R4" || rule == "R2" || rule == "R3") {
            std::string term = e.at("term").get<std::string>();
            long long v = e.at("dim").get<long long>();
            const auto& seg = e.at("segment");
            int n = static_cast<int>(seg.size());
            int unknown = -1;
            std::vector<long long> vals(n, 0);
            for (int i = 0; i < n; ++i) {
                const auto& entry = seg[i];
                std::string k = entry.at("term").get<std::string>();
                if (k == term && entry.at("dim").is_null()) {
                    unknown = i;
                    continue;
                }
                auto d = known(k);
                if (entry.at("dim").is_null() || !d ||
                    *d != entry.at("dim").get<long long>())
                    throw DerivationError("replay: segment value not established for " + k);
                vals[i] = *d;
            }
            if (unknown < 0) throw DerivationError("replay: solved term missing from segment");
            if (rule == "R1" || rule == "R4") {
                long long alt = 0;
                for (int i = 1; i < n - 1; ++i)
                    if (i != unknown) alt += (i % 2 == 1 ? 1 : -1) * vals[i];
                long long sign = (unknown % 2 == 1) ? 1 : -1;
                if (-alt * sign != v)
                    throw DerivationError("replay: alternating sum disagrees at " + term);
            } else {
                if (v != 0) throw DerivationError("replay: inequality rules only pin zeros");
            }
            auto old = known(term);
            if (old && *old != v) throw DerivationError("replay: conflicting value for " + term);
            dims[term] = v;
        } else {
            throw DerivationError("replay: unknown rule " + rule);
        }
    }
    return dims;
}

LesEngine::LesEngine(ColourSignature sig, int p_cap) : sig_(std::move(sig)) {
    p_cap_ = p_cap > 0 ? p_cap : zfn::default_p_cap(sig_.s);
    DerivedConstants dc = derived_constants(sig_);
    dim_bound_ = (dc.D - 1).convert_to<long long>();
    t_ = dc.t;
}

const LesEngine::LayerInfo& LesEngine::layer(int delta) {
    auto it = layers_.find(delta);
    if (it != layers_.end()) return it->second;
    auto zp = zfn::build_zfn_poset(sig_, p_cap_, Int(delta));
    LayerInfo info;
    info.count = zp.poset.size();
    info.dim = zp.poset.longest_chain();
    if (auto c = zp.poset.cone_point()) info.cone_key = zp.poset.key(*c);
    info.chains = zp.poset.chain_count();
    if (!info.cone_key && info.count > 0 && info.chains <= 2'000'000)
        info.betti = betti_reduced(order_complex(zp.poset));
    return layers_.emplace(delta, std::move(info)).first->second;
}

TermResolver LesEngine::layer_resolver(ZPolicy policy, json* events) {
    return [this, policy, events](const HomTerm& t)
               -> std::optional<std::pair<long long, std::string>> {
        if (t.kind != HomTerm::Kind::Z) return std::nullopt;
        const auto& info = layer(t.width);
        std::string tag = "(delta=" + std::to_string(t.width) + ")";
        if (t.degree <= -1) {
            // Relative degree-0 bookkeeping: empty layers contribute one class.
            if (info.count == 0) return {{1, "zfn:empty-layer" + tag}};
            return {{0, "axiom:augmentation" + tag}};
        }
        if (info.count == 0) return {{0, "zfn:empty-layer" + tag}};
        if (info.cone_key)
            return {{0, "zfn:contractible" + tag + " cone=" + *info.cone_key}};
        if (t.degree > info.dim) return {{0, "zfn:dimension" + tag}};
        if (policy == ZPolicy::DichotomyOnly) {
            // Dichotomy failed to certify this layer; fall back to homology and
            // record the event.
            json ev;
            ev["delta"] = t.width;
            ev["degree"] = t.degree;
            ev["dimension"] = info.dim;
            ev["dim_bound"] = dim_bound_;
            if (info.dim >= dim_bound_) {
                ev["kind"] = "dichotomy-counterexample";
            } else {
                ev["kind"] = "degree-within-dimension";
            }
            auto& mutable_info = layers_[t.width];
            if (!mutable_info.betti && mutable_info.chains <= 2'000'000) {
                auto zp = zfn::build_zfn_poset(sig_, p_cap_, Int(t.width));
                mutable_info.betti = betti_reduced(order_complex(zp.poset));
            }
            if (mutable_info.betti) {
                long long v = mutable_info.betti->at(t.degree);
                ev["betti"] = v;
                if (events) events->push_back(ev);
                return {{v, "zfn:betti-fallback" + tag}};
            }
            ev["betti"] = nullptr;
            if (events) events->push_back(ev);
            return std::nullopt;
        }
        if (info.betti) return {{info.betti->at(t.degree), "zfn:betti" + tag}};
        return std::nullopt;
    };
}

json Derive2VResult::to_json() const {
    json j;
    j["ok"] = ok;
    j["max_degree"] = max_degree;
    json table = json::object();
    for (const auto& [d, v] : homology) {
        json row;
        row["dim"] = v;
        row["provenance"] = provenance.at(d);
        table[std::to_string(d)] = row;
    }
    j["homology"] = table;
    if (!unresolved_goals.empty()) j["unresolved_goals"] = unresolved_goals;
    j["base_floor_note"] = "offsets are relative to a symbolic base at least max(2^s, N_hat - 2^s)";
    j["proof_log"] = log;
    return j;
}

Derive2VResult LesEngine::derive_2v(int max_degree) {
    if (sig_.s != 2 || sig_.arities != std::vector<long long>{2, 2})
        throw std::invalid_argument("derive_2v: requires the two-colour signature (2,2)");
    if (max_degree < 3) throw std::invalid_argument("derive_2v: max_degree must be >= 3");

    Derive2VResult res;
    res.max_degree = max_degree;

    long long t = t_.convert_to<long long>();
    int u_max = static_cast<int>(t * max_degree);
    std::vector<LesInstance> instances;
    for (int u = 1; u <= u_max; ++u)
        instances.push_back(LesInstance::lemma_pair(u, max_degree, 0));

    FactLedger ledger;
    ledger.inject(HomTerm::group(1), 0, "axiom:group-simplicity");

    auto outcome = saturate(instances, ledger, layer_resolver(ZPolicy::BettiOrCone), t_);
    res.log = std::move(outcome.log);

    res.ok = true;
    for (int d = 0; d <= max_degree; ++d) {
        auto g = ledger.dim(HomTerm::group(d));
        if (!g) {
            res.ok = false;
            res.unresolved_goals.push_back(HomTerm::group(d).key());
            continue;
        }
        res.homology[d] = (d == 0) ? *g + 1 : *g;  // unreduced H_0
        res.provenance[d] = (d == 1) ? "injected" : "derived";
    }
    return res;
}

json VanishingResult::to_json() const {
    json j;
    j["certified"] = certified;
    j["degree"] = k;
    if (!failures.empty()) j["failures"] = failures;
    if (!unresolved_goals.empty()) j["unresolved_goals"] = unresolved_goals;
    j["proof_log"] = log;
    return j;
}

VanishingResult LesEngine::derive_vanishing(int k) {
    DerivedConstants dc = derived_constants(sig_);
    if (Int(k) < dc.D)
        throw std::invalid_argument("derive_vanishing: k must be at least D(s) = " +
                                    to_decimal(dc.D));
    Int span = t_ * k;
    if (span > 100000) throw ResourceError("derive_vanishing: layer span exceeds the guard");
    int u_max = span.convert_to<int>();

    VanishingResult res;
    res.k = k;
    std::vector<LesInstance> instances;
    for (int u = 1; u <= u_max; ++u)
        instances.push_back(LesInstance::lemma_pair(u, k, k));

    FactLedger ledger;
    json events = json::array();
    auto outcome = saturate(instances, ledger, layer_resolver(ZPolicy::DichotomyOnly, &events), t_);
    res.log = std::move(outcome.log);
    res.failures = std::move(events);

    auto g = ledger.dim(HomTerm::group(k));
    if (g && *g == 0) {
        res.certified = true;
    } else {
        res.certified = false;
        if (!g) res.unresolved_goals.push_back(HomTerm::group(k).key());
    }
    return res;
}

}  // namespace les
}  // namespace cantorhom
