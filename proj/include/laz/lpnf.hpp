#pragma once

/**
 * @file lpnf.hpp
 * @brief Locally perfect nonlinear functions f: Z_N -> Z_K' as value tables.
 *
 * f is an <N, K', Zx, Zy>-LPNF when f(x + a) - f(x) = b has at most one
 * solution x in Z_N for every shift 0 < |a| < Zx and every difference
 * |b| < Zy. Shifts act cyclically on Z_N; differences are compared modulo K'.
 *
 * Two families are built here:
 *   - exponential: f(x) = alpha^x mod K, alpha of exact order N in Z_K^*;
 *   - lifted: the same values as least positive residues in [1, K - 1],
 *     read as elements of Z_{K1} for some K1 >= K.
 */

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laz/error.hpp"
#include "laz/numtheory.hpp"

namespace laz {

enum class LpnfFamily { exponential, lifted };

/// Which zone formula a profile came from.
enum class ProfileSource {
    unit_shift, // zx = min (p_i - 1) / gcd(p_i - 1, R), zy = K
    full_shift, // zx = N, zy = smallest prime of K
    lifted,     // zx as unit_shift, zy = K1 - K + 2
};

struct LpnfTable {
    i64 n = 0;
    i64 modulus = 0; // K'
    std::vector<i64> values;
    LpnfFamily family = LpnfFamily::exponential;

    i64 at(i64 x) const { return values[static_cast<std::size_t>(mod_floor(x, n))]; }
};

struct LpnfProfile {
    i64 zx = 0;
    i64 zy = 0;
    ProfileSource source = ProfileSource::unit_shift;

    bool operator==(const LpnfProfile&) const = default;
};

struct ExpProfiles {
    LpnfProfile unit_shift;
    LpnfProfile full_shift;
};

struct LiftedLpnf {
    LpnfTable table;
    LpnfProfile profile;
};

struct Counterexample {
    i64 shift = 0;      // a
    i64 difference = 0; // b, as the signed integer from the tested range
    std::vector<i64> solutions;
};

struct LpnfVerdict {
    bool holds = true;
    std::optional<Counterexample> witness;

    explicit operator bool() const { return holds; }
};

inline const char* to_string(LpnfFamily f) {
    return f == LpnfFamily::exponential ? "exp" : "lifted";
}

inline const char* to_string(ProfileSource s) {
    switch (s) {
    case ProfileSource::unit_shift: return "unit-shift";
    case ProfileSource::full_shift: return "full-shift";
    case ProfileSource::lifted: return "lifted";
    }
    return "?";
}

/// Throws DomainError unless the table is well formed.
inline void validate(const LpnfTable& t) {
    if (t.n < 1 || t.modulus < 1)
        throw DomainError("lpnf table: domain size and modulus must be positive");
    if (static_cast<i64>(t.values.size()) != t.n)
        throw DomainError("lpnf table: expected " + std::to_string(t.n) + " values, got " +
                          std::to_string(t.values.size()));
    for (i64 v : t.values)
        if (v < 0 || v >= t.modulus)
            throw DomainError("lpnf table: value " + std::to_string(v) + " outside [0, " +
                              std::to_string(t.modulus) + ")");
}

namespace detail {

inline i64 unit_shift_width(const ExponentGroupSpec& spec) {
    i64 zx = 0;
    for (const auto& f : spec.factorization.factors) {
        const i64 w = (f.prime - 1) / std::gcd(f.prime - 1, spec.cofactor);
        zx = zx == 0 ? w : std::min(zx, w);
    }
    return zx;
}

inline std::vector<i64> powers(const ExponentGroupSpec& spec) {
    const i64 k = spec.modulus();
    std::vector<i64> v(static_cast<std::size_t>(spec.order));
    i64 acc = 1 % k;
    for (auto& x : v) {
        x = acc;
        acc = mul_mod(acc, spec.generator, k);
    }
    return v;
}

} // namespace detail

/// f(x) = alpha^x mod K for x in [0, N).
inline LpnfTable build_exp_lpnf(const ExponentGroupSpec& spec) {
    if (!has_exact_order(spec.generator, spec.order, spec.modulus()))
        throw ValidationError("build_exp_lpnf: generator does not have the recorded order");
    return {spec.order, spec.modulus(), detail::powers(spec), LpnfFamily::exponential};
}

/**
 * Largest Zx such that alpha^a - 1 is a unit for every 0 < a < Zx.
 * The closed form min (p_i - 1) / gcd(p_i - 1, R) is cross-checked by
 * direct gcd computation.
 */
inline i64 max_unit_shift(const ExponentGroupSpec& spec) {
    const i64 zx = detail::unit_shift_width(spec);
    const i64 k = spec.modulus();
    for (i64 a = 1; a < zx; ++a) {
        const i64 d = mod_floor(pow_mod(spec.generator, a, k) - 1, k);
        if (std::gcd(d, k) != 1)
            throw ValidationError("max_unit_shift: alpha^" + std::to_string(a) +
                                  " - 1 is not a unit mod " + std::to_string(k));
    }
    return zx;
}

inline ExpProfiles profiles_exp(const ExponentGroupSpec& spec) {
    return {
        {detail::unit_shift_width(spec), spec.modulus(), ProfileSource::unit_shift},
        {spec.order, spec.factorization.smallest_prime(), ProfileSource::full_shift},
    };
}

/// Least positive residues of alpha^x mod K embedded in Z_{K1}.
inline LiftedLpnf build_lifted_lpnf(const ExponentGroupSpec& spec, i64 k1) {
    const i64 k = spec.modulus();
    if (k1 < k)
        throw DomainError("build_lifted_lpnf: K1 = " + std::to_string(k1) + " is below K = " +
                          std::to_string(k));
    auto table = build_exp_lpnf(spec);
    table.modulus = k1;
    table.family = LpnfFamily::lifted;
    return {std::move(table), {detail::unit_shift_width(spec), k1 - k + 2, ProfileSource::lifted}};
}

/**
 * Exhaustive check of the LPNF property on (-zx, zx) x (-zy, zy).
 *
 * Shifts are scanned from zx - 1 down to -(zx - 1) and, within a shift,
 * differences from zy - 1 down to -(zy - 1); the first (a, b) with two or
 * more solutions is returned. Differences that coincide modulo K' are
 * counted once.
 */
inline LpnfVerdict verify_lpnf(const LpnfTable& table, i64 zx, i64 zy) {
    validate(table);
    if (zx < 1 || zx > table.n)
        throw DomainError("verify_lpnf: zx must lie in [1, " + std::to_string(table.n) + "]");
    if (zy < 1 || zy > table.modulus)
        throw DomainError("verify_lpnf: zy must lie in [1, " + std::to_string(table.modulus) +
                          "]");

    const i64 n = table.n;
    const i64 k = table.modulus;
    std::vector<i64> diff(static_cast<std::size_t>(n));
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    std::vector<i64> seen(static_cast<std::size_t>(k), 0); // epoch stamp per residue
    i64 epoch = 0;

    for (i64 a = zx - 1; a > -zx; --a) {
        if (a == 0) continue;
        for (i64 x = 0; x < n; ++x) {
            diff[x] = mod_floor(table.at(x + a) - table.values[x], k);
            ++count[diff[x]];
        }
        ++epoch;
        std::optional<std::pair<i64, i64>> hit;
        for (i64 b = zy - 1; b > -zy && !hit; --b) {
            const i64 r = mod_floor(b, k);
            if (seen[r] == epoch) continue;
            seen[r] = epoch;
            if (count[r] > 1) hit = {b, r};
        }
        if (hit) {
            Counterexample ce{a, hit->first, {}};
            for (i64 x = 0; x < n; ++x)
                if (diff[x] == hit->second) ce.solutions.push_back(x);
            return {false, std::move(ce)};
        }
        for (i64 x = 0; x < n; ++x) count[diff[x]] = 0;
    }
    return {true, std::nullopt};
}

/// Census of solutions of f(x + a) - f(x) == b (mod K') for all a in (-N, N) \ {0}.
class SolutionCountTable {
public:
    SolutionCountTable(i64 n, i64 modulus)
        : n_(n), modulus_(modulus),
          counts_(static_cast<std::size_t>((2 * n - 1) * modulus), 0) {}

    i64 domain_size() const { return n_; }
    i64 modulus() const { return modulus_; }

    int count(i64 a, i64 b) const { return counts_[index(a, b)]; }
    int& count(i64 a, i64 b) { return counts_[index(a, b)]; }

    /// Largest count inside (-zx, zx) \ {0} x (-zy, zy).
    int max_in_zone(i64 zx, i64 zy) const {
        int best = 0;
        for (i64 a = -(zx - 1); a < zx; ++a) {
            if (a == 0) continue;
            for (i64 b = -(zy - 1); b < zy; ++b) best = std::max(best, count(a, b));
        }
        return best;
    }

private:
    std::size_t index(i64 a, i64 b) const {
        if (a == 0 || a <= -n_ || a >= n_)
            throw DomainError("solution count: shift " + std::to_string(a) + " out of range");
        return static_cast<std::size_t>((a + n_ - 1) * modulus_ + mod_floor(b, modulus_));
    }

    i64 n_;
    i64 modulus_;
    std::vector<int> counts_;
};

inline SolutionCountTable solution_count_table(const LpnfTable& table) {
    validate(table);
    SolutionCountTable census(table.n, table.modulus);
    for (i64 a = -(table.n - 1); a < table.n; ++a) {
        if (a == 0) continue;
        for (i64 x = 0; x < table.n; ++x) ++census.count(a, table.at(x + a) - table.values[x]);
    }
    return census;
}

} // namespace laz
