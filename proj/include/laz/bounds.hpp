#pragma once

/**
 * @file bounds.hpp
 * @brief Lower bounds on in-zone AF magnitude for unimodular sets and the
 *        resulting optimality factors.
 *
 * For M sequences of length D and zone (-Zx, Zx) x (-Zy, Zy):
 *
 *   periodic   Delta  = D / sqrt(Zy) * sqrt((M Zx Zy - D) / (D (M Zx - 1)))
 *   aperiodic  Delta^ = D / sqrt(Zy) * sqrt((M Zx Zy - D - Zx + 1) / ((M Zx - 1)(D + Zx - 1)))
 *
 * and rho = theta / Delta >= 1.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "laz/afengine.hpp"
#include "laz/error.hpp"
#include "laz/numtheory.hpp"

namespace laz {

namespace detail {

inline void check_bound_args(i64 m, i64 d, i64 zx, i64 zy) {
    if (m < 1 || d < 1 || zx < 1 || zy < 1)
        throw DomainError("bound: parameters must be positive");
    if (m * zx <= 1) throw DomainError("bound: requires M * Zx > 1");
}

} // namespace detail

inline double delta_periodic(i64 m, i64 d, i64 zx, i64 zy) {
    detail::check_bound_args(m, d, zx, zy);
    const double num = static_cast<double>(m * zx * zy - d);
    if (num < 0) throw UndefinedBound("periodic bound undefined: M Zx Zy < D");
    const double den = static_cast<double>(d) * static_cast<double>(m * zx - 1);
    return static_cast<double>(d) / std::sqrt(static_cast<double>(zy)) * std::sqrt(num / den);
}

inline double delta_aperiodic(i64 m, i64 d, i64 zx, i64 zy) {
    detail::check_bound_args(m, d, zx, zy);
    const double num = static_cast<double>(m * zx * zy - d - zx + 1);
    if (num < 0) throw UndefinedBound("aperiodic bound undefined: M Zx Zy < D + Zx - 1");
    const double den = static_cast<double>(m * zx - 1) * static_cast<double>(d + zx - 1);
    return static_cast<double>(d) / std::sqrt(static_cast<double>(zy)) * std::sqrt(num / den);
}

inline double delta(i64 m, i64 d, i64 zx, i64 zy, AfMode mode) {
    return mode == AfMode::periodic ? delta_periodic(m, d, zx, zy) : delta_aperiodic(m, d, zx, zy);
}

inline double optimality_factor(double theta, double delta) {
    if (!(delta > 0.0)) throw DomainError("optimality factor: bound must be positive");
    return theta / delta;
}

struct BoundReport {
    i64 m = 0;
    i64 d = 0;
    i64 zx = 0;
    i64 zy = 0;
    double theta = 0.0;
    double delta = 0.0;
    double rho = 0.0;
    AfMode mode = AfMode::periodic;
};

inline BoundReport bound_report(i64 m, i64 d, i64 zx, i64 zy, double theta, AfMode mode) {
    const double dl = delta(m, d, zx, zy, mode);
    return {m, d, zx, zy, theta, dl, optimality_factor(theta, dl), mode};
}

/// Which of the two conditions under which a tighter aperiodic bound is known hold.
struct MengRegime {
    bool sqrt_condition = false;   // Zx > sqrt(3 L^2 / (M Zy)) and M Zy >= 3
    bool arccos_condition = false; // Zx > pi / gamma and 5 <= M Zy <= L^2

    bool applicable() const { return sqrt_condition || arccos_condition; }
};

/// `length` is the sequence length L; gamma = arccos(1 - M Zy / L^2).
inline MengRegime meng_regime_applicable(i64 m, i64 length, i64 zx, i64 zy) {
    if (m < 1 || length < 1 || zx < 1 || zy < 1) throw DomainError("meng regime: parameters must be positive");
    const double mzy = static_cast<double>(m) * static_cast<double>(zy);
    const double l2 = static_cast<double>(length) * static_cast<double>(length);
    MengRegime r;
    r.sqrt_condition = mzy >= 3.0 && static_cast<double>(zx) > std::sqrt(3.0 * l2 / mzy);
    if (mzy >= 5.0 && mzy <= l2) {
        const double gamma = std::acos(1.0 - mzy / l2);
        r.arccos_condition = static_cast<double>(zx) > std::numbers::pi / gamma;
    }
    return r;
}

/// Round to `places` decimals, ties to even.
inline double round_half_even(double x, int places) {
    const double scale = std::pow(10.0, places);
    const double y = x * scale;
    double r = std::round(y);
    if (std::abs(y - std::trunc(y)) == 0.5) r = 2.0 * std::round(y / 2.0);
    return r / scale;
}

// ---------------------------------------------------------------------------
// Parameter families and trends

enum class Family {
    unit_shift,             // K = p^e, N = phi(K), zone (p-1, K), theta = K
    unit_shift_printed,     // as unit_shift with zone width p (the published table layout)
    full_shift,             // K = p^e, N = phi(K), zone (N, p), theta = K
    unit_shift_aperiodic,   // zone (p-1, K), theta^ = K + p - 2
    full_shift_aperiodic,   // zone (N, p), theta^ = K + N - 1
    lifted,                 // K = p^e, K1 = K + floor(K / sqrt p), zone (p-1, K1-K+2), theta = K1
    lifted_aperiodic,       // as lifted, theta^ = K1 + p - 2
    twin_prime,             // K = p (p + 2), N = (p^2 - 1) / 2, zone (p-1, K), theta = K
    squarefree,             // K = p q, q the next prime with gcd(p-1, q-1) = 2, N = lcm, zone (p-1, K)
};

struct FamilyInfo {
    Family family;
    std::string_view name;
};

inline constexpr FamilyInfo kFamilies[] = {
    {Family::unit_shift, "pp-unit"},
    {Family::unit_shift_printed, "pp-unit-printed"},
    {Family::full_shift, "pp-full"},
    {Family::unit_shift_aperiodic, "pp-unit-ap"},
    {Family::full_shift_aperiodic, "pp-full-ap"},
    {Family::lifted, "lifted"},
    {Family::lifted_aperiodic, "lifted-ap"},
    {Family::twin_prime, "twin-prime"},
    {Family::squarefree, "squarefree"},
};

inline Family parse_family(std::string_view name) {
    for (const auto& f : kFamilies)
        if (f.name == name) return f.family;
    throw DomainError("unknown family '" + std::string(name) + "'");
}

inline std::string_view family_name(Family fam) {
    for (const auto& f : kFamilies)
        if (f.family == fam) return f.name;
    return "?";
}

/// Integer floor of sqrt(x).
inline i64 isqrt(i64 x) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

struct FamilyPoint {
    i64 p = 0;
    i64 k = 0;  // base modulus
    i64 k1 = 0; // codomain modulus (= k outside the lifted families)
    BoundReport report;
};

inline i64 integer_power(i64 p, int e) {
    i64 v = 1;
    for (int i = 0; i < e; ++i) v *= p;
    return v;
}

/// Parameters and bound for one admissible prime; e is used by the prime-power families.
inline FamilyPoint family_point(Family fam, i64 p, int e = 2) {
    if (p < 3 || !is_prime(p))
        throw DomainError("family point: p = " + std::to_string(p) + " is not an odd prime");
    if (e < 1) throw DomainError("family point: exponent must be >= 1");
    const i64 k = integer_power(p, e);
    const i64 n = k / p * (p - 1);
    switch (fam) {
    case Family::unit_shift:
        return {p, k, k, bound_report(n, n * k, p - 1, k, static_cast<double>(k), AfMode::periodic)};
    case Family::unit_shift_printed:
        return {p, k, k, bound_report(n, n * k, p, k, static_cast<double>(k), AfMode::periodic)};
    case Family::full_shift:
        return {p, k, k, bound_report(n, n * k, n, p, static_cast<double>(k), AfMode::periodic)};
    case Family::unit_shift_aperiodic:
        return {p, k, k, bound_report(n, n * k, p - 1, k, static_cast<double>(k + p - 2), AfMode::aperiodic)};
    case Family::full_shift_aperiodic:
        return {p, k, k, bound_report(n, n * k, n, p, static_cast<double>(k + n - 1), AfMode::aperiodic)};
    case Family::lifted:
    case Family::lifted_aperiodic: {
        const i64 k1 = k + isqrt(k * k / p);
        const i64 zy = k1 - k + 2;
        if (fam == Family::lifted)
            return {p, k, k1, bound_report(n, n * k1, p - 1, zy, static_cast<double>(k1), AfMode::periodic)};
        return {p, k, k1,
                bound_report(n, n * k1, p - 1, zy, static_cast<double>(k1 + p - 2), AfMode::aperiodic)};
    }
    case Family::twin_prime: {
        if (!is_prime(p + 2)) throw DomainError("twin-prime family: p + 2 = " + std::to_string(p + 2) + " is not prime");
        const i64 kk = p * (p + 2);
        const i64 nn = (p * p - 1) / 2;
        return {p, kk, kk, bound_report(nn, nn * kk, p - 1, kk, static_cast<double>(kk), AfMode::periodic)};
    }
    case Family::squarefree: {
        i64 q = p + 2;
        while (!is_prime(q) || std::gcd(p - 1, q - 1) != 2) q += 2;
        const i64 kk = p * q;
        const i64 nn = std::lcm(p - 1, q - 1);
        return {p, kk, kk, bound_report(nn, nn * kk, p - 1, kk, static_cast<double>(kk), AfMode::periodic)};
    }
    }
    throw DomainError("family point: unknown family");
}

struct TrendPoint {
    i64 p = 0;
    double rho = 0.0;
};

inline std::vector<TrendPoint> optimality_trend(Family fam, std::span<const i64> primes, int e = 2) {
    std::vector<TrendPoint> out;
    out.reserve(primes.size());
    for (i64 p : primes) out.push_back({p, family_point(fam, p, e).report.rho});
    return out;
}

// ---------------------------------------------------------------------------
// Reference tables

/// One printed row: (set size, length, zone, theta, rho) as published.
struct PrintedRow {
    i64 set_size;
    i64 length;
    i64 zx;
    i64 zy;
    i64 theta;
    double rho;
};

struct TableRow {
    i64 p = 0;
    int e = 0;
    i64 k = 0;
    i64 k1 = 0;
    BoundReport report; // regenerated from (p, e, K, K1)
    double rho_rounded = 0.0;
    PrintedRow printed{};
    bool parameters_match = false; // regenerated (M, D, zone, theta) equal the printed ones
};

struct ReproducedTable {
    int which = 0;
    AfMode mode = AfMode::periodic;
    std::vector<TableRow> rows;
};

namespace detail {

// Tables 2-6 as printed. Large-length rows are formula-only.
inline constexpr PrintedRow kTable2[] = {
    {6, 54, 3, 9, 9, 1.4577},           {20, 500, 5, 25, 25, 1.2437},
    {42, 2058, 7, 49, 49, 1.1647},      {110, 13310, 11, 121, 121, 1.0995},
    {156, 26364, 13, 169, 169, 1.0831}, {272, 78608, 17, 289, 289, 1.0624},
    {506, 267674, 23, 529, 529, 1.0454}, {812, 682892, 29, 841, 841, 1.0357},
    {930, 893730, 31, 961, 961, 1.0333}, {1332, 1823508, 37, 1369, 1369, 1.0278},
};
inline constexpr PrintedRow kTable3[] = {
    {6, 54, 6, 3, 9, 1.7078},             {20, 500, 20, 5, 25, 1.2894},
    {42, 2058, 42, 7, 49, 1.1829},        {110, 13310, 110, 11, 121, 1.1055},
    {156, 26364, 156, 13, 169, 1.0871},   {272, 78608, 272, 17, 289, 1.0646},
    {506, 267674, 506, 23, 529, 1.0465},  {812, 682892, 812, 29, 841, 1.0364},
    {930, 893730, 930, 31, 961, 1.0339},  {1332, 1823508, 1332, 37, 1369, 1.0282},
};
inline constexpr PrintedRow kTable4[] = {
    {6, 54, 6, 4, 9, 1.5275},         {12, 204, 12, 6, 17, 1.3571},
    {22, 638, 22, 8, 29, 1.2550},     {36, 1584, 36, 9, 44, 1.1888},
    {52, 3224, 52, 11, 62, 1.1562},   {66, 5082, 66, 12, 77, 1.1367},
    {78, 7020, 78, 13, 90, 1.1252},   {96, 10464, 96, 14, 109, 1.1115},
    {108, 13176, 108, 15, 122, 1.1052}, {126, 17766, 126, 16, 141, 1.0969},
};
inline constexpr PrintedRow kTable5[] = {
    {6, 54, 3, 9, 11, 1.8314},            {20, 500, 5, 25, 29, 1.4499},
    {42, 2058, 7, 49, 55, 1.3095},        {110, 13310, 11, 121, 131, 1.1909},
    {156, 26364, 13, 169, 181, 1.1603},   {272, 78608, 17, 289, 305, 1.1213},
    {506, 267674, 23, 529, 551, 1.0889},  {812, 682892, 29, 841, 869, 1.0702},
    {930, 893730, 31, 961, 991, 1.0656},  {1332, 1823508, 37, 1369, 1405, 1.0548},
};
inline constexpr PrintedRow kTable6[] = {
    {42, 3990, 6, 48, 100, 1.9319},            {156, 62244, 12, 232, 410, 1.7752},
    {506, 445786, 22, 354, 902, 1.4345},       {1332, 2521476, 36, 526, 1928, 1.2798},
    {2756, 9725924, 52, 722, 3580, 1.2060},    {4422, 23790360, 66, 893, 5445, 1.1711},
    {6162, 44853198, 78, 1040, 7356, 1.1512},  {9312, 99340416, 96, 1261, 10763, 1.1308},
    {11772, 156402792, 108, 1407, 13393, 1.1210}, {16002, 284275530, 126, 1638, 17890, 1.1099},
};

inline PrimePower single_prime_power(i64 k) {
    const auto f = factorize(k);
    if (f.factors.size() != 1 || f.has_even_prime())
        throw ValidationError("table row: modulus " + std::to_string(k) + " is not an odd prime power");
    return f.factors.front();
}

/**
 * Row recovery rules (the tables print derived quantities only):
 *   2, 5: K = Zy = p^e; zone width printed as p; theta = K (2) or K + p - 1 (5).
 *   3:    K = D / N = p^e, zone (N, p), theta = K.
 *   4, 6: K1 = D / N, K = K1 - Zy + 2 = p^e; zone (p - 1, K1 - K + 2);
 *         theta = K1 (4) or K1 + p - 2 (6).
 * In every table N = phi(K).
 */
inline TableRow regenerate_row(int which, const PrintedRow& pr) {
    TableRow row;
    row.printed = pr;
    i64 k = 0, k1 = 0;
    switch (which) {
    case 2:
    case 5: k = k1 = pr.zy; break;
    case 3: k = k1 = pr.length / pr.set_size; break;
    case 4:
    case 6:
        k1 = pr.length / pr.set_size;
        k = k1 - pr.zy + 2;
        break;
    default: throw DomainError("unknown table " + std::to_string(which));
    }
    const auto pp = single_prime_power(k);
    const i64 p = pp.prime;
    const i64 n = pp.totient();
    row.p = p;
    row.e = pp.exponent;
    row.k = k;
    row.k1 = k1;

    i64 zx = 0, zy = 0, theta = 0;
    AfMode mode = AfMode::periodic;
    switch (which) {
    case 2: zx = p; zy = k; theta = k; break;
    case 3: zx = n; zy = p; theta = k; break;
    case 4: zx = p - 1; zy = k1 - k + 2; theta = k1; break;
    case 5: zx = p; zy = k; theta = k + zx - 1; mode = AfMode::aperiodic; break;
    case 6: zx = p - 1; zy = k1 - k + 2; theta = k1 + zx - 1; mode = AfMode::aperiodic; break;
    }
    row.report = bound_report(n, n * k1, zx, zy, static_cast<double>(theta), mode);
    row.rho_rounded = round_half_even(row.report.rho, 4);
    row.parameters_match = n == pr.set_size && n * k1 == pr.length && zx == pr.zx && zy == pr.zy &&
                           theta == pr.theta;
    return row;
}

inline std::span<const PrintedRow> printed_table(int which) {
    switch (which) {
    case 2: return kTable2;
    case 3: return kTable3;
    case 4: return kTable4;
    case 5: return kTable5;
    case 6: return kTable6;
    default: throw DomainError("table must be one of 2..6, got " + std::to_string(which));
    }
}

} // namespace detail

inline ReproducedTable reproduce_table(int which) {
    const auto printed = detail::printed_table(which);
    ReproducedTable t{which, which >= 5 ? AfMode::aperiodic : AfMode::periodic, {}};
    for (const auto& pr : printed) t.rows.push_back(detail::regenerate_row(which, pr));
    return t;
}

} // namespace laz
