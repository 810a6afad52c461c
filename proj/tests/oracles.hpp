#pragma once

// Independent brute-force routes used only by the tests. Nothing here calls
// into the evaluators it checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using cplx = std::complex<double>;

inline i64 phi_by_count(i64 n) {
    i64 c = 0;
    for (i64 a = 1; a <= n; ++a)
        if (std::gcd(a, n) == 1) ++c;
    return c;
}

inline i64 order_by_iteration(i64 a, i64 k) {
    i64 x = a % k, m = 1;
    while (x != 1 % k) {
        x = x * a % k;
        ++m;
    }
    return m;
}

/// Term-by-term AF with libm exponentials, no shared helpers.
inline cplx af_sum(const std::vector<cplx>& a, const std::vector<cplx>& b, i64 tau, i64 nu, bool periodic) {
    const i64 d = static_cast<i64>(a.size());
    cplx s{0, 0};
    for (i64 t = 0; t < d; ++t) {
        i64 st = t + tau;
        if (periodic) {
            st = ((st % d) + d) % d;
        } else if (st < 0 || st >= d) {
            continue;
        }
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(nu) * static_cast<double>(t) / static_cast<double>(d);
        s += a[t] * std::conj(b[st]) * std::polar(1.0, ang);
    }
    return s;
}

inline std::vector<cplx> random_unimodular(std::mt19937_64& rng, i64 d) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    std::vector<cplx> v(static_cast<std::size_t>(d));
    for (auto& x : v) x = std::polar(1.0, u(rng));
    return v;
}

/// Bounds in the rewritten form sqrt(D (1 - D/(M Zx Zy)) / (1 - 1/(M Zx Zy))).
inline double delta_periodic_rewritten(double m, double d, double zx, double zy) {
    const double mzz = m * zx * zy;
    return std::sqrt(d * (1.0 - d / mzz) / (1.0 - 1.0 / (m * zx)));
}

inline double delta_aperiodic_rewritten(double m, double d, double zx, double zy) {
    const double mzz = m * zx * zy;
    return std::sqrt(d * (1.0 - d / mzz - 1.0 / (m * zy) + 1.0 / mzz) /
                     ((1.0 - 1.0 / (m * zx)) * (1.0 + zx / d - 1.0 / d)));
}

/// Number of x in Z_N with f(x + a) - f(x) == b (mod k), counted directly.
inline int solutions(const std::vector<i64>& f, i64 k, i64 a, i64 b) {
    const i64 n = static_cast<i64>(f.size());
    int c = 0;
    for (i64 x = 0; x < n; ++x) {
        const i64 y = (((x + a) % n) + n) % n;
        if ((((f[y] - f[x] - b) % k) + k) % k == 0) ++c;
    }
    return c;
}

} // namespace oracle
