#pragma once

/**
 * @file numtheory.hpp
 * @brief Exact arithmetic over Z_K for odd composite moduli.
 *
 * Factorization, Euler's totient, the exponent of the unit group Z_K^*,
 * multiplicative orders, primitive roots of odd prime powers, CRT, and the
 * construction of an element of prescribed order N | E.
 *
 * Moduli are desk-scale (K <= 2^40); products are taken in 128-bit
 * intermediates so nothing here overflows for K < 2^62.
 */

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "laz/error.hpp"

namespace laz {

using i64 = std::int64_t;

/// Least nonnegative residue of a modulo m (m > 0).
constexpr i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

constexpr i64 pow_mod(i64 base, i64 exp, i64 m) {
    if (m == 1) return 0;
    i64 result = 1;
    base = mod_floor(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

struct PrimePower {
    i64 prime = 0;
    int exponent = 0;

    i64 value() const {
        i64 v = 1;
        for (int i = 0; i < exponent; ++i) v *= prime;
        return v;
    }
    /// phi(p^e) = p^(e-1) (p - 1)
    i64 totient() const { return value() / prime * (prime - 1); }

    bool operator==(const PrimePower&) const = default;
};

/// Canonical factorization, primes strictly increasing.
struct Factorization {
    i64 modulus = 1;
    std::vector<PrimePower> factors;

    bool has_even_prime() const { return !factors.empty() && factors.front().prime == 2; }
    i64 smallest_prime() const { return factors.empty() ? 0 : factors.front().prime; }
    std::vector<i64> primes() const {
        std::vector<i64> out;
        out.reserve(factors.size());
        for (const auto& f : factors) out.push_back(f.prime);
        return out;
    }
};

/// Trial division. Accepts any K >= 2; even moduli are flagged, not rejected.
inline Factorization factorize(i64 k) {
    if (k < 2) throw DomainError("factorize: modulus must be >= 2, got " + std::to_string(k));
    Factorization out{k, {}};
    i64 rest = k;
    for (i64 p = 2; p <= rest / p; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

inline i64 euler_phi(const Factorization& fact) {
    i64 phi = 1;
    for (const auto& f : fact.factors) phi *= f.totient();
    return phi;
}

inline i64 euler_phi(i64 n) {
    if (n < 1) throw DomainError("euler_phi: argument must be >= 1");
    return n == 1 ? 1 : euler_phi(factorize(n));
}

/// Exponent of Z_K^* for general K (Carmichael's lambda); handles the 2-part.
inline i64 carmichael_lambda(const Factorization& fact) {
    i64 lambda = 1;
    for (const auto& f : fact.factors) {
        i64 part = f.totient();
        if (f.prime == 2 && f.exponent >= 3) part /= 2;
        lambda = std::lcm(lambda, part);
    }
    return lambda;
}

/// E = lcm of phi(p_i^e_i); odd moduli only.
inline i64 group_exponent(const Factorization& fact) {
    if (fact.has_even_prime())
        throw UnsupportedModulus("group_exponent: modulus " + std::to_string(fact.modulus) +
                                 " has an even prime factor");
    i64 e = 1;
    for (const auto& f : fact.factors) e = std::lcm(e, f.totient());
    return e;
}

/// True iff a^n == 1 and a^(n/q) != 1 for every prime q | n.
inline bool has_exact_order(i64 a, i64 n, i64 k) {
    if (n < 1) return false;
    if (pow_mod(a, n, k) != 1 % k) return false;
    if (n == 1) return true;
    for (const auto& f : factorize(n).factors)
        if (pow_mod(a, n / f.prime, k) == 1 % k) return false;
    return true;
}

/// Least m >= 1 with a^m == 1 (mod k), found by descending through the
/// divisors of the group exponent.
inline i64 multiplicative_order(i64 a, i64 k) {
    if (k < 1) throw DomainError("multiplicative_order: modulus must be >= 1");
    if (k == 1) return 1;
    a = mod_floor(a, k);
    if (std::gcd(a, k) != 1)
        throw NotAUnit("multiplicative_order: " + std::to_string(a) + " is not a unit mod " +
                       std::to_string(k));
    i64 m = carmichael_lambda(factorize(k));
    if (m == 1) return 1;
    for (const auto& f : factorize(m).factors)
        while (m % f.prime == 0 && pow_mod(a, m / f.prime, k) == 1) m /= f.prime;
    return m;
}

/// Smallest positive generator of Z_{p^e}^*.
inline i64 primitive_root_prime_power(i64 p, int e) {
    if (p == 2) throw UnsupportedModulus("primitive_root_prime_power: p = 2 is not supported");
    if (e < 1 || !is_prime(p))
        throw DomainError("primitive_root_prime_power: need an odd prime p and e >= 1");
    const PrimePower pp{p, e};
    const i64 modulus = pp.value();
    const i64 phi = pp.totient();
    const auto qs = factorize(phi).factors;
    for (i64 g = 2; g < modulus; ++g) {
        if (g % p == 0) continue;
        bool generator = true;
        for (const auto& q : qs) {
            if (pow_mod(g, phi / q.prime, modulus) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    // Z_{p^e}^* is cyclic for odd p.
    throw ValidationError("primitive_root_prime_power: no generator found");
}

struct Congruence {
    i64 value = 0;
    i64 modulus = 1;
};

namespace detail {

/// Inverse of a modulo m, gcd(a, m) == 1 assumed.
inline i64 inverse_mod(i64 a, i64 m) {
    i64 old_r = mod_floor(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    return mod_floor(old_s, m);
}

} // namespace detail

/// Unique residue modulo the product of pairwise coprime moduli.
inline Congruence crt_combine(std::span<const Congruence> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].modulus < 1) throw DomainError("crt_combine: moduli must be positive");
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (std::gcd(parts[i].modulus, parts[j].modulus) != 1)
                throw DomainError("crt_combine: moduli " + std::to_string(parts[i].modulus) +
                                  " and " + std::to_string(parts[j].modulus) +
                                  " are not coprime");
    }
    Congruence acc{0, 1};
    for (const auto& c : parts) {
        const i64 r = mod_floor(c.value, c.modulus);
        const i64 step = mul_mod(mod_floor(r - acc.value, c.modulus),
                                 detail::inverse_mod(acc.modulus % c.modulus, c.modulus),
                                 c.modulus);
        const i64 next_modulus = acc.modulus * c.modulus;
        acc.value = mod_floor(acc.value + static_cast<i64>(static_cast<__int128>(acc.modulus) * step %
                                                           next_modulus),
                              next_modulus);
        acc.modulus = next_modulus;
    }
    return acc;
}

inline Congruence crt_combine(std::initializer_list<Congruence> parts) {
    return crt_combine(std::span<const Congruence>(parts.begin(), parts.size()));
}

/// Cyclic subgroup <alpha> of Z_K^* of order N, with E = N * R.
struct ExponentGroupSpec {
    Factorization factorization;
    i64 exponent = 1;  // E
    i64 order = 1;     // N
    i64 cofactor = 1;  // R
    i64 generator = 1; // alpha

    i64 modulus() const { return factorization.modulus; }
};

/**
 * Element of exact order N in Z_K^*.
 *
 * Without a supplied alpha: pi is the CRT combination of the smallest
 * primitive root of each p_i^e_i, so pi has order E, and alpha = pi^R.
 * A supplied alpha is validated (unit, exact order N) and used as is.
 */
inline ExponentGroupSpec element_of_order(const Factorization& fact, i64 n,
                                          std::optional<i64> alpha = std::nullopt) {
    if (fact.modulus < 3) throw DomainError("element_of_order: modulus must be >= 3");
    const i64 e = group_exponent(fact);
    if (n < 1) throw DomainError("element_of_order: order must be >= 1");
    if (e % n != 0)
        throw NoSuchOrder("element_of_order: " + std::to_string(n) + " does not divide E = " +
                          std::to_string(e));
    const i64 k = fact.modulus;
    ExponentGroupSpec spec{fact, e, n, e / n, 1};

    if (alpha) {
        const i64 a = mod_floor(*alpha, k);
        if (std::gcd(a, k) != 1 || !has_exact_order(a, n, k))
            throw ValidationError("element_of_order: alpha = " + std::to_string(*alpha) +
                                  " does not have order " + std::to_string(n) + " mod " +
                                  std::to_string(k));
        spec.generator = a;
        return spec;
    }

    std::vector<Congruence> roots;
    roots.reserve(fact.factors.size());
    for (const auto& f : fact.factors)
        roots.push_back({primitive_root_prime_power(f.prime, f.exponent), f.value()});
    const i64 pi = crt_combine(roots).value;
    spec.generator = pow_mod(pi, spec.cofactor, k);
    if (!has_exact_order(spec.generator, n, k))
        throw ValidationError("element_of_order: constructed element has wrong order");
    return spec;
}

} // namespace laz
