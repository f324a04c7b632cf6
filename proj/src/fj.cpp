#include "cantorhom/fj.hpp"

#include "cantorhom/les.hpp"

namespace cantorhom {
namespace fj {

json PoincarePolynomial::to_json() const {
    json j = json::object();
    for (const auto& [d, c] : coeff)
        if (c != 0) j[std::to_string(d)] = to_decimal(c);
    return j;
}

PoincarePolynomial PoincarePolynomial::from_json(const json& j) {
    PoincarePolynomial p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int deg = std::stoi(it.key());
        Int c = it.value().is_string() ? Int(it.value().get<std::string>())
                                       : Int(it.value().get<long long>());
        if (c != 0) p.coeff[deg] = c;
    }
    return p;
}

PoincarePolynomial poly_mul(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    PoincarePolynomial out;
    for (const auto& [da, ca] : a.coeff)
        for (const auto& [db, cb] : b.coeff) out.coeff[da + db] += ca * cb;
    for (auto it = out.coeff.begin(); it != out.coeff.end();)
        it = (it->second == 0) ? out.coeff.erase(it) : std::next(it);
    return out;
}

PoincarePolynomial poly_pow(const PoincarePolynomial& a, long long e) {
    if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
    PoincarePolynomial acc = PoincarePolynomial::one(), base = a;
    while (e) {
        if (e & 1) acc = poly_mul(acc, base);
        base = poly_mul(base, base);
        e >>= 1;
    }
    return acc;
}

PoincarePolynomial centralizer_poincare(const PoincarePolynomial& group_betti, long long m) {
    if (group_betti.at(0) != 1)
        throw std::invalid_argument("centralizer_poincare: constant term must be 1");
    for (const auto& [d, c] : group_betti.coeff)
        if (d < 0 || c < 0)
            throw std::invalid_argument("centralizer_poincare: invalid Poincare polynomial");
    return poly_pow(group_betti, euler_phi(m));
}

SummandEnumeration fj_summand_indices(long long n_deg, int s, long long n_arity, long long r,
                                      long long m_max,
                                      const conj::CountingConvention& convention) {
    if (s < 1 || n_arity < 2 || r < 1 || m_max < 1)
        throw std::invalid_argument("fj_summand_indices: bad arguments");
    SummandEnumeration out;
    Int D = Int(s) << (s - 1);

    json per_m = json::array();
    for (long long m = 1; m <= m_max; ++m) {
        long long classes = static_cast<long long>(
            conj::enumerate_orbit_vectors(n_arity, r, m, convention).size());
        Int displayed = int_pow(Int(n_arity), static_cast<unsigned long long>(euler_phi(m))) - 1;
        json row;
        row["m"] = m;
        row["classes"] = classes;
        row["classes_by_n_phi_minus_1"] = to_decimal(displayed);
        Int p_bound = Int(euler_phi(m)) * D;
        row["p_bound"] = to_decimal(p_bound);
        per_m.push_back(row);

        for (long long i = 1; i <= classes; ++i)
            for (long long p = 0; p <= n_deg + 1; ++p) {
                long long q = n_deg - p;
                if (q < -1) continue;
                if (Int(p) > p_bound) continue;
                out.indices.push_back({m, i, p, q});
            }
    }

    out.metadata["n_deg"] = n_deg;
    out.metadata["s"] = s;
    out.metadata["arity"] = n_arity;
    out.metadata["r"] = r;
    out.metadata["m_max_cutoff"] = m_max;
    out.metadata["class_count_convention"] = convention.label();
    out.metadata["classes_per_m"] = per_m;
    out.metadata["centralizer_exponent_note"] =
        "centralizer factors counted with exponent phi(m); the orbit-type count tau(m) "
        "reading is reported per m above";
    return out;
}

ThetaDimsTable ThetaDimsTable::from_json(const json& entries) {
    ThetaDimsTable t;
    for (const auto& e : entries) {
        long long m = e.at("m").get<long long>();
        long long q = e.at("q").get<long long>();
        Int dim = e.at("dim").is_string() ? Int(e.at("dim").get<std::string>())
                                          : Int(e.at("dim").get<long long>());
        if (dim < 0) throw std::invalid_argument("theta table: negative dimension");
        t.dims[{m, q}] = dim;
    }
    return t;
}

std::optional<Int> ThetaDimsTable::at(long long m, long long q) const {
    auto it = dims.find({m, q});
    return it == dims.end() ? std::nullopt : std::optional<Int>(it->second);
}

json fj_total_dimension(const SummandEnumeration& enumeration,
                        const PoincarePolynomial& group_betti, const ThetaDimsTable& theta,
                        CoinvariantMode mode, const ThetaDimsTable* coinvariants) {
    json ledger;
    ledger["mode"] = mode == CoinvariantMode::UpperBound ? "upper_bound" : "table";
    ledger["metadata"] = enumeration.metadata;
    ledger["group_poincare"] = group_betti.to_json();

    std::map<long long, PoincarePolynomial> centralizers;
    json entries = json::array();
    Int total = 0;
    long long unknowns = 0;

    for (const auto& idx : enumeration.indices) {
        if (!centralizers.count(idx.m))
            centralizers[idx.m] = centralizer_poincare(group_betti, idx.m);
        Int betti_p = centralizers[idx.m].at(static_cast<int>(idx.p));

        json e;
        e["m"] = idx.m;
        e["i"] = idx.i;
        e["p"] = idx.p;
        e["q"] = idx.q;
        e["centralizer_betti_p"] = to_decimal(betti_p);

        std::optional<Int> contribution;
        if (mode == CoinvariantMode::UpperBound) {
            auto th = theta.at(idx.m, idx.q);
            e["theta_dim"] = th ? json(to_decimal(*th)) : json(nullptr);
            if (th) contribution = betti_p * *th;
        } else {
            auto co = coinvariants ? coinvariants->at(idx.m, idx.q) : std::nullopt;
            e["coinvariant_dim"] = co ? json(to_decimal(*co)) : json(nullptr);
            contribution = co;
        }
        if (contribution) {
            e["contribution"] = to_decimal(*contribution);
            total += *contribution;
        } else {
            e["contribution"] = nullptr;
            ++unknowns;
        }
        entries.push_back(e);
    }

    ledger["entries"] = entries;
    ledger["total_known"] = to_decimal(total);
    ledger["unknown_entries"] = unknowns;
    ledger["total_is_upper_bound"] = mode == CoinvariantMode::UpperBound;
    return ledger;
}

std::optional<PoincarePolynomial> known_group_poincare(const ColourSignature& sig) {
    if (sig.s == 1) return PoincarePolynomial::one();  // rationally acyclic
    if (sig.s == 2 && sig.arities == std::vector<long long>{2, 2}) {
        les::LesEngine engine(sig);
        auto r = engine.derive_2v(8);
        if (!r.ok) return std::nullopt;
        PoincarePolynomial p;
        for (const auto& [d, v] : r.homology)
            if (v != 0) p.coeff[d] = v;
        return p;
    }
    return std::nullopt;
}

}  // namespace fj
}  // namespace cantorhom
