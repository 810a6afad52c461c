#pragma once

/**
 * @file afengine.hpp
 * @brief Periodic and aperiodic (cross-)ambiguity functions and zone scans.
 *
 *   AF_{a,b}(tau, nu) = sum_t a(t) conj(b(t + tau)) w_D^{nu t}
 *
 * Periodic: t runs over Z_D and t + tau wraps. Aperiodic: t is restricted to
 * the overlap [max(0, -tau), min(D - 1, D - 1 - tau)] and the value is zero
 * for |tau| >= D.
 *
 * Two evaluators:
 *   - exact: for sequences stored as integer phases mod D every term is a
 *     root w_D^k, so a D-bin histogram of k followed by one complex reduction
 *     gives the value with no accumulated rounding;
 *   - row DFT: for fixed (a, b, tau) all D Doppler bins at once through a
 *     length-D DFT of c(t) = a(t) conj(b(t + tau)) (FFTW, backward sign).
 */

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <fftw3.h>

#include "laz/error.hpp"
#include "laz/numtheory.hpp"
#include "laz/seqset.hpp"

namespace laz {

enum class AfMode { periodic, aperiodic };

inline const char* to_string(AfMode m) { return m == AfMode::periodic ? "periodic" : "aperiodic"; }

struct AfValue {
    i64 tau = 0;
    i64 nu = 0;
    cplx value;
    double magnitude = 0.0;
};

/// Sequence given as w_D^{e(t)}, D = exponents.size().
struct PhaseSequence {
    std::span<const i64> exponents;

    i64 length() const { return static_cast<i64>(exponents.size()); }
};

inline PhaseSequence phase_row(const SequenceSet& set, i64 u) { return {set.row(u)}; }

/// Half-open range of t for which both a(t) and b(t + tau) exist.
struct OverlapRange {
    i64 begin = 0;
    i64 end = 0;
};

inline OverlapRange overlap(i64 d, i64 tau, AfMode mode) {
    if (mode == AfMode::periodic) return {0, d};
    if (tau >= d || tau <= -d) return {0, 0};
    return {std::max<i64>(0, -tau), std::min<i64>(d, d - tau)};
}

namespace detail {

inline void check_lengths(std::size_t a, std::size_t b) {
    if (a != b)
        throw DomainError("ambiguity function: sequence lengths differ (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
    if (a == 0) throw DomainError("ambiguity function: empty sequence");
}

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace detail

/// Length-d DFT with the AF sign convention: out[nu] = sum_t in[t] w_d^{nu t}.
class DopplerDft {
public:
    explicit DopplerDft(i64 d) : d_(d) {
        if (d < 1) throw DomainError("DFT length must be positive");
        in_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * d));
        out_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * d));
        std::lock_guard lock(detail::fftw_planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(d), in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    DopplerDft(const DopplerDft&) = delete;
    DopplerDft& operator=(const DopplerDft&) = delete;
    ~DopplerDft() {
        {
            std::lock_guard lock(detail::fftw_planner_mutex());
            fftw_destroy_plan(plan_);
        }
        fftw_free(in_);
        fftw_free(out_);
    }

    i64 size() const { return d_; }
    std::span<cplx> input() { return {reinterpret_cast<cplx*>(in_), static_cast<std::size_t>(d_)}; }

    std::span<const cplx> execute() {
        fftw_execute(plan_);
        return {reinterpret_cast<const cplx*>(out_), static_cast<std::size_t>(d_)};
    }

private:
    i64 d_;
    fftw_complex* in_ = nullptr;
    fftw_complex* out_ = nullptr;
    fftw_plan plan_ = nullptr;
};

/// Exact evaluator for phase sequences of one length D. Holds scratch; one per thread.
class ExactAf {
public:
    explicit ExactAf(i64 d) : d_(d), roots_(unit_roots(d)), hist_(static_cast<std::size_t>(d)) {}

    i64 length() const { return d_; }

    cplx operator()(PhaseSequence a, PhaseSequence b, i64 tau, i64 nu, AfMode mode) {
        detail::check_lengths(a.exponents.size(), b.exponents.size());
        if (a.length() != d_) throw DomainError("exact evaluator: length mismatch");
        const auto [begin, end] = overlap(d_, tau, mode);
        if (begin >= end) return {0.0, 0.0};
        std::fill(hist_.begin(), hist_.end(), 0);
        const i64 step = mod_floor(nu, d_);
        i64 doppler = mul_mod(step, begin, d_);
        i64 shifted = mod_floor(begin + tau, d_);
        for (i64 t = begin; t < end; ++t) {
            i64 k = a.exponents[t] - b.exponents[shifted] + doppler;
            k = mod_floor(k, d_);
            ++hist_[k];
            if (++shifted == d_) shifted = 0;
            doppler += step;
            if (doppler >= d_) doppler -= d_;
        }
        cplx sum{0.0, 0.0};
        for (i64 k = 0; k < d_; ++k)
            if (hist_[k] != 0) sum += static_cast<double>(hist_[k]) * roots_[k];
        return sum;
    }

private:
    i64 d_;
    std::vector<cplx> roots_;
    std::vector<i64> hist_;
};

namespace detail {

inline AfValue make_value(i64 tau, i64 nu, cplx v) { return {tau, nu, v, std::abs(v)}; }

inline cplx naive_af(std::span<const cplx> a, std::span<const cplx> b, i64 tau, i64 nu, AfMode mode) {
    check_lengths(a.size(), b.size());
    const i64 d = static_cast<i64>(a.size());
    const auto [begin, end] = overlap(d, tau, mode);
    cplx sum{0.0, 0.0};
    for (i64 t = begin; t < end; ++t)
        sum += a[t] * std::conj(b[mod_floor(t + tau, d)]) * unit_root(mul_mod(mod_floor(nu, d), t, d), d);
    return sum;
}

} // namespace detail

inline AfValue periodic_af(std::span<const cplx> a, std::span<const cplx> b, i64 tau, i64 nu) {
    return detail::make_value(tau, nu, detail::naive_af(a, b, tau, nu, AfMode::periodic));
}

inline AfValue aperiodic_af(std::span<const cplx> a, std::span<const cplx> b, i64 tau, i64 nu) {
    return detail::make_value(tau, nu, detail::naive_af(a, b, tau, nu, AfMode::aperiodic));
}

inline AfValue periodic_af(PhaseSequence a, PhaseSequence b, i64 tau, i64 nu) {
    detail::check_lengths(a.exponents.size(), b.exponents.size());
    ExactAf eval(a.length());
    return detail::make_value(tau, nu, eval(a, b, tau, nu, AfMode::periodic));
}

inline AfValue aperiodic_af(PhaseSequence a, PhaseSequence b, i64 tau, i64 nu) {
    detail::check_lengths(a.exponents.size(), b.exponents.size());
    ExactAf eval(a.length());
    return detail::make_value(tau, nu, eval(a, b, tau, nu, AfMode::aperiodic));
}

inline AfValue ambiguity(PhaseSequence a, PhaseSequence b, i64 tau, i64 nu, AfMode mode) {
    return mode == AfMode::periodic ? periodic_af(a, b, tau, nu) : aperiodic_af(a, b, tau, nu);
}

inline AfValue ambiguity(std::span<const cplx> a, std::span<const cplx> b, i64 tau, i64 nu, AfMode mode) {
    return mode == AfMode::periodic ? periodic_af(a, b, tau, nu) : aperiodic_af(a, b, tau, nu);
}

namespace detail {

/// Fills dft.input() with c(t) = a(t) conj(b(t + tau)) (zero outside the overlap).
template <typename Product>
inline std::span<const cplx> doppler_row_into(DopplerDft& dft, i64 tau, AfMode mode, Product product) {
    const i64 d = dft.size();
    auto in = dft.input();
    std::fill(in.begin(), in.end(), cplx{0.0, 0.0});
    const auto [begin, end] = overlap(d, tau, mode);
    i64 shifted = mod_floor(begin + tau, d);
    for (i64 t = begin; t < end; ++t) {
        in[t] = product(t, shifted);
        if (++shifted == d) shifted = 0;
    }
    return dft.execute();
}

} // namespace detail

/// AF over every Doppler bin nu in [0, D) for one delay.
inline std::vector<cplx> af_doppler_row(std::span<const cplx> a, std::span<const cplx> b, i64 tau,
                                        AfMode mode) {
    detail::check_lengths(a.size(), b.size());
    DopplerDft dft(static_cast<i64>(a.size()));
    const auto row = detail::doppler_row_into(dft, tau, mode, [&](i64 t, i64 s) {
        return a[t] * std::conj(b[s]);
    });
    return {row.begin(), row.end()};
}

inline std::vector<cplx> af_doppler_row(PhaseSequence a, PhaseSequence b, i64 tau, AfMode mode) {
    detail::check_lengths(a.exponents.size(), b.exponents.size());
    const i64 d = a.length();
    const auto roots = unit_roots(d);
    DopplerDft dft(d);
    const auto row = detail::doppler_row_into(dft, tau, mode, [&](i64 t, i64 s) {
        return roots[mod_floor(a.exponents[t] - b.exponents[s], d)];
    });
    return {row.begin(), row.end()};
}

// ---------------------------------------------------------------------------
// Zone scan

enum class Evaluator { row_dft, exact };

struct ScanOptions {
    Evaluator evaluator = Evaluator::row_dft;
    unsigned threads = 1; // 0: hardware concurrency
};

struct AfWitness {
    i64 u = 0;
    i64 v = 0;
    i64 tau = 0;
    i64 nu = 0;
    double magnitude = 0.0;
};

struct ScanReport {
    AfMode mode = AfMode::periodic;
    ZoneSpec zone;
    double theta_auto = 0.0;
    double theta_cross = 0.0;
    double theta_max = 0.0;
    std::optional<AfWitness> auto_witness;
    std::optional<AfWitness> cross_witness;
    i64 grid_points_evaluated = 0;
};

/// Runs body(i) for i in [0, count) on up to `threads` workers.
template <typename Body>
inline void parallel_for(std::size_t count, unsigned threads, Body body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = next++; i < count; i = next++) body(i, w);
        });
}

namespace detail {

// One (u, v, tau) slice of the zone; nu runs over [nu_lo, nu_hi].
struct ScanItem {
    i64 u, v, tau, nu_lo, nu_hi;
};

class ItemEvaluator {
public:
    ItemEvaluator(const SequenceSet& set, AfMode mode, Evaluator kind)
        : set_(set), mode_(mode), kind_(kind), d_(set.length()) {
        if (kind_ == Evaluator::row_dft) {
            dft_.emplace(d_);
            roots_ = unit_roots(d_);
        } else {
            exact_.emplace(d_);
        }
    }

    /// Calls visit(nu, magnitude) for nu ascending.
    template <typename Visit>
    void run(const ScanItem& it, Visit visit) {
        const auto a = set_.row(it.u);
        const auto b = set_.row(it.v);
        if (kind_ == Evaluator::row_dft) {
            const auto row = doppler_row_into(*dft_, it.tau, mode_, [&](i64 t, i64 s) {
                return roots_[mod_floor(a[t] - b[s], d_)];
            });
            for (i64 nu = it.nu_lo; nu <= it.nu_hi; ++nu) visit(nu, std::abs(row[mod_floor(nu, d_)]));
        } else {
            for (i64 nu = it.nu_lo; nu <= it.nu_hi; ++nu)
                visit(nu, std::abs((*exact_)({a}, {b}, it.tau, nu, mode_)));
        }
    }

private:
    const SequenceSet& set_;
    AfMode mode_;
    Evaluator kind_;
    i64 d_;
    std::optional<DopplerDft> dft_;
    std::optional<ExactAf> exact_;
    std::vector<cplx> roots_;
};

struct ItemResult {
    double max = -1.0;
    i64 points = 0;
};

} // namespace detail

/**
 * Exhaustive maximum of |AF| over the integer lattice of an open zone.
 *
 * Auto part: every sequence, (tau, nu) != (0, 0). Cross part: every ordered
 * pair u != v. Since |AF_{a,b}(tau, nu)| = |AF_{b,a}(-tau, -nu)| only the
 * lexicographically smaller half is evaluated: pairs u < v, and for auto
 * terms tau < 0 or (tau = 0, nu < 0). The reported witness is the
 * lexicographically smallest (u, v, tau, nu) whose magnitude is within
 * 1e-9 D of the maximum; it is re-checked against its mirror image with the
 * exact evaluator.
 */
inline ScanReport scan_zone(const SequenceSet& set, ZoneSpec zone, AfMode mode,
                            ScanOptions options = {}) {
    const i64 d = set.length();
    const i64 m = set.set_size();
    if (zone.zx < 1 || zone.zy < 1 || zone.zx > d || zone.zy > d)
        throw DomainError("scan_zone: zone (" + std::to_string(zone.zx) + ", " + std::to_string(zone.zy) +
                          ") must lie within (-D, D) with D = " + std::to_string(d));

    std::vector<detail::ScanItem> auto_items, cross_items;
    for (i64 u = 0; u < m; ++u) {
        for (i64 tau = zone.tau_min(); tau < 0; ++tau)
            auto_items.push_back({u, u, tau, zone.nu_min(), zone.nu_max()});
        if (zone.zy > 1) auto_items.push_back({u, u, 0, zone.nu_min(), -1});
    }
    for (i64 u = 0; u < m; ++u)
        for (i64 v = u + 1; v < m; ++v)
            for (i64 tau = zone.tau_min(); tau <= zone.tau_max(); ++tau)
                cross_items.push_back({u, v, tau, zone.nu_min(), zone.nu_max()});

    std::vector<const detail::ScanItem*> items;
    items.reserve(auto_items.size() + cross_items.size());
    for (const auto& it : auto_items) items.push_back(&it);
    for (const auto& it : cross_items) items.push_back(&it);

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                            : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(items.size(), 1)));
    std::vector<std::optional<detail::ItemEvaluator>> evaluators(threads);
    std::vector<detail::ItemResult> results(items.size());

    parallel_for(items.size(), threads, [&](std::size_t i, unsigned w) {
        if (!evaluators[w]) evaluators[w].emplace(set, mode, options.evaluator);
        auto& r = results[i];
        evaluators[w]->run(*items[i], [&](i64, double mag) {
            r.max = std::max(r.max, mag);
            ++r.points;
        });
    });

    ScanReport report;
    report.mode = mode;
    report.zone = zone;
    for (const auto& r : results) report.grid_points_evaluated += r.points;

    const double tie = 1e-9 * static_cast<double>(d);
    if (!evaluators[0]) evaluators[0].emplace(set, mode, options.evaluator);
    ExactAf exact(d);

    auto reduce = [&](std::size_t first, std::size_t last, double& theta) -> std::optional<AfWitness> {
        double best = -1.0;
        for (std::size_t i = first; i < last; ++i) best = std::max(best, results[i].max);
        if (best < 0.0) return std::nullopt;
        theta = best;
        for (std::size_t i = first; i < last; ++i) {
            if (results[i].max < best - tie) continue;
            std::optional<AfWitness> w;
            const auto& it = *items[i];
            evaluators[0]->run(it, [&](i64 nu, double mag) {
                if (!w && mag >= best - tie) w = AfWitness{it.u, it.v, it.tau, nu, mag};
            });
            const double mirror = std::abs(exact({set.row(w->v)}, {set.row(w->u)}, -w->tau, -w->nu, mode));
            if (std::abs(mirror - w->magnitude) > 1e-6)
                throw ValidationError("scan_zone: magnitude symmetry check failed at witness");
            return w;
        }
        return std::nullopt;
    };

    report.auto_witness = reduce(0, auto_items.size(), report.theta_auto);
    report.cross_witness = reduce(auto_items.size(), items.size(), report.theta_cross);
    report.theta_max = std::max(report.theta_auto, report.theta_cross);
    return report;
}

// ---------------------------------------------------------------------------
// Grid export

struct AfCell {
    i64 tau = 0;
    i64 nu = 0;
    double magnitude = 0.0;
};

struct AfGrid {
    i64 u = 0;
    i64 v = 0;
    AfMode mode = AfMode::periodic;
    std::vector<AfCell> cells; // tau outer, nu inner, both ascending
};

/// |AF_{u,v}| over [tau_lo, tau_hi] x [nu_lo, nu_hi] (inclusive).
inline AfGrid export_af_grid(const SequenceSet& set, i64 u, i64 v, i64 tau_lo, i64 tau_hi, i64 nu_lo,
                             i64 nu_hi, AfMode mode) {
    if (u < 0 || u >= set.set_size() || v < 0 || v >= set.set_size())
        throw DomainError("export_af_grid: sequence index out of range");
    if (tau_lo > tau_hi || nu_lo > nu_hi) throw DomainError("export_af_grid: empty range");
    const i64 d = set.length();
    const auto roots = unit_roots(d);
    const auto a = set.row(u);
    const auto b = set.row(v);
    DopplerDft dft(d);
    AfGrid grid{u, v, mode, {}};
    grid.cells.reserve(static_cast<std::size_t>((tau_hi - tau_lo + 1) * (nu_hi - nu_lo + 1)));
    for (i64 tau = tau_lo; tau <= tau_hi; ++tau) {
        const auto row = detail::doppler_row_into(dft, tau, mode, [&](i64 t, i64 s) {
            return roots[mod_floor(a[t] - b[s], d)];
        });
        for (i64 nu = nu_lo; nu <= nu_hi; ++nu)
            grid.cells.push_back({tau, nu, std::abs(row[mod_floor(nu, d)])});
    }
    return grid;
}

inline void write_grid_csv(std::ostream& os, const AfGrid& grid) {
    os << "tau,nu,magnitude\n";
    char buf[64];
    for (const auto& c : grid.cells) {
        std::snprintf(buf, sizeof buf, "%.9g", c.magnitude);
        os << c.tau << ',' << c.nu << ',' << buf << '\n';
    }
}

} // namespace laz
