#include "cantorhom/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantorhom {

ColourSignature ColourSignature::create(int s, std::vector<long long> arities) {
    if (s < 1) throw std::invalid_argument("signature: s must be >= 1");
    if (static_cast<int>(arities.size()) != s)
        throw std::invalid_argument("signature: expected " + std::to_string(s) + " arities");
    for (long long n : arities)
        if (n < 2) throw std::invalid_argument("signature: every arity must be >= 2");
    return ColourSignature{s, std::move(arities)};
}

DerivedConstants derived_constants(const ColourSignature& sig) {
    DerivedConstants c;
    c.N = 1;
    c.N_hat = 1;
    for (long long n : sig.arities) {
        c.N *= n;
        c.N_hat *= Int(n) + 1;
    }
    c.t = c.N - 1;
    c.D = Int(sig.s) << (sig.s - 1);
    c.vanish_threshold = c.N_hat - (Int(1) << sig.s);
    return c;
}

Int subset_weight(const ColourSignature& sig, std::uint32_t omega_mask) {
    if (omega_mask == 0) throw std::invalid_argument("subset_weight: empty colour subset");
    if (omega_mask >> sig.s) throw std::invalid_argument("subset_weight: colour index out of range");
    Int w = 1;
    for (int i = 0; i < sig.s; ++i)
        if (omega_mask >> i & 1) w *= sig.arities[i];
    return w;
}

Int subset_cost(const ColourSignature& sig, std::uint32_t omega_mask) {
    return subset_weight(sig, omega_mask) - 1;
}

std::vector<int> mask_indices(std::uint32_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1) idx.push_back(i + 1);
    return idx;
}

std::string mask_label(std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int i : mask_indices(mask)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    return mask_indices(a) < mask_indices(b);
}

std::vector<std::uint32_t> nonempty_subsets(int s) {
    if (s < 1 || s > 20) throw ResourceError("nonempty_subsets: s out of supported range [1,20]");
    std::vector<std::uint32_t> out;
    out.reserve((1u << s) - 1);
    for (std::uint32_t m = 1; m < (1u << s); ++m) out.push_back(m);
    std::sort(out.begin(), out.end(), mask_lex_less);
    return out;
}

}  // namespace cantorhom
