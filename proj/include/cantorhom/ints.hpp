#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cantorhom {

// All quantities that grow multiplicatively (products of arities, closed-form
// counts, polynomial coefficients) are exact arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

inline Int int_pow(const Int& base, unsigned long long exp) {
    Int acc = 1, b = base;
    while (exp) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

inline long long euler_phi(long long m) {
    if (m <= 0) throw std::invalid_argument("euler_phi: m must be positive");
    long long result = m, n = m;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<long long> divisors_of(long long m) {
    if (m <= 0) throw std::invalid_argument("divisors_of: m must be positive");
    std::vector<long long> lo, hi;
    for (long long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            lo.push_back(d);
            if (d != m / d) hi.push_back(m / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline long long divisor_count(long long m) {
    return static_cast<long long>(divisors_of(m).size());
}

// Raised when a computation would exceed the desk-scale guards.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a requested derivation cannot be completed from the available facts.
class DerivationError : public std::runtime_error {
public:
    explicit DerivationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when two facts assign different dimensions to the same term.
class FactConflictError : public std::runtime_error {
public:
    explicit FactConflictError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cantorhom
