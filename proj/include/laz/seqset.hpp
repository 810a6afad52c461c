#pragma once

/**
 * @file seqset.hpp
 * @brief Interleaved LAZ sequence sets built from an LPNF table.
 *
 * Sequence u (u in Z_N) of length D = N K' at position t = j N + i is
 *
 *     a_u(t) = w_{K'}^{j f(i)} * w_N^{u i},
 *
 * stored exactly as the exponent (N j f(i) + K' u i) mod D of w_D.
 * The in-zone periodic AF magnitude is capped at K' and the aperiodic one
 * at K' + Zx - 1; both are recorded as the set's claimed parameters.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "laz/error.hpp"
#include "laz/lpnf.hpp"
#include "laz/numtheory.hpp"

namespace laz {

using cplx = std::complex<double>;

/// Open delay-Doppler rectangle (-zx, zx) x (-zy, zy).
struct ZoneSpec {
    i64 zx = 1;
    i64 zy = 1;

    i64 tau_min() const { return -(zx - 1); }
    i64 tau_max() const { return zx - 1; }
    i64 nu_min() const { return -(zy - 1); }
    i64 nu_max() const { return zy - 1; }

    bool operator==(const ZoneSpec&) const = default;
};

struct ClaimedParameters {
    i64 set_size = 0;
    i64 length = 0;
    ZoneSpec zone;
    i64 theta = 0;     // periodic
    i64 theta_hat = 0; // aperiodic
};

struct Provenance {
    i64 n = 0;
    i64 modulus = 0; // K'
    LpnfFamily family = LpnfFamily::exponential;
    LpnfProfile profile;
};

/// exp(2 pi i k / d), exact at multiples of a quarter turn.
inline cplx unit_root(i64 k, i64 d) {
    k = mod_floor(k, d);
    // 4k = q d + r, angle = q (pi/2) + (pi/2) r / d
    const i64 q = static_cast<i64>(static_cast<__int128>(4) * k / d);
    const i64 r = static_cast<i64>(static_cast<__int128>(4) * k - static_cast<__int128>(q) * d);
    const double theta = std::numbers::pi / 2.0 * static_cast<double>(r) / static_cast<double>(d);
    const cplx z = r == 0 ? cplx(1.0, 0.0) : cplx(std::cos(theta), std::sin(theta));
    switch (q & 3) {
    case 0: return z;
    case 1: return {-z.imag(), z.real()};
    case 2: return {-z.real(), -z.imag()};
    default: return {z.imag(), -z.real()};
    }
}

/// All d roots w_d^k, k in [0, d).
inline std::vector<cplx> unit_roots(i64 d) {
    std::vector<cplx> roots(static_cast<std::size_t>(d));
    for (i64 k = 0; k < d; ++k) roots[k] = unit_root(k, d);
    return roots;
}

class SequenceSet {
public:
    SequenceSet() = default;

    /// Takes ownership of a row-major M x D exponent matrix; checks shape and range.
    SequenceSet(i64 set_size, i64 length, std::vector<i64> exponents, Provenance provenance,
                ClaimedParameters claimed)
        : set_size_(set_size), length_(length), exponents_(std::move(exponents)),
          provenance_(provenance), claimed_(claimed) {
        if (set_size_ < 1 || length_ < 1)
            throw ValidationError("sequence set: set size and length must be positive");
        if (static_cast<i64>(exponents_.size()) != set_size_ * length_)
            throw ValidationError("sequence set: exponent matrix is not " +
                                  std::to_string(set_size_) + " x " + std::to_string(length_));
        for (i64 e : exponents_)
            if (e < 0 || e >= length_)
                throw ValidationError("sequence set: exponent outside [0, D)");
    }

    i64 set_size() const { return set_size_; }
    i64 length() const { return length_; }
    i64 phase_modulus() const { return length_; }

    std::span<const i64> row(i64 u) const {
        if (u < 0 || u >= set_size_)
            throw DomainError("sequence index " + std::to_string(u) + " out of range");
        return {exponents_.data() + u * length_, static_cast<std::size_t>(length_)};
    }

    /// Exponent of sequence u at time t, t taken modulo D.
    i64 exponent(i64 u, i64 t) const { return row(u)[static_cast<std::size_t>(mod_floor(t, length_))]; }

    const std::vector<i64>& exponents() const { return exponents_; }
    const Provenance& provenance() const { return provenance_; }
    const ClaimedParameters& claimed() const { return claimed_; }

private:
    i64 set_size_ = 0;
    i64 length_ = 0;
    std::vector<i64> exponents_;
    Provenance provenance_;
    ClaimedParameters claimed_;
};

inline SequenceSet build_laz_set(const LpnfTable& table, const LpnfProfile& profile) {
    validate(table);
    if (profile.zx < 1 || profile.zx > table.n || profile.zy < 1 || profile.zy > table.modulus)
        throw DomainError("build_laz_set: profile (" + std::to_string(profile.zx) + ", " +
                          std::to_string(profile.zy) + ") is inconsistent with a table over Z_" +
                          std::to_string(table.n) + " -> Z_" + std::to_string(table.modulus));
    const i64 n = table.n;
    const i64 k = table.modulus;
    const i64 d = n * k;

    std::vector<i64> exps(static_cast<std::size_t>(n * d));
    for (i64 u = 0; u < n; ++u) {
        i64* row = exps.data() + u * d;
        for (i64 j = 0; j < k; ++j)
            for (i64 i = 0; i < n; ++i)
                row[j * n + i] = mod_floor(n * mul_mod(j, table.values[i], k) + k * mul_mod(u, i, n), d);
    }
    const ClaimedParameters claimed{n, d, {profile.zx, profile.zy}, k, k + profile.zx - 1};
    return {n, d, std::move(exps), {n, k, table.family, profile}, claimed};
}

inline std::vector<cplx> sample_sequence(const SequenceSet& set, i64 u) {
    const auto r = set.row(u);
    std::vector<cplx> out(r.size());
    for (std::size_t t = 0; t < r.size(); ++t) out[t] = unit_root(r[t], set.phase_modulus());
    return out;
}

inline ClaimedParameters claimed_parameters(const SequenceSet& set) { return set.claimed(); }

} // namespace laz
