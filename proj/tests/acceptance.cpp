// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "laz/laz.hpp"
#include "oracles.hpp"

using namespace laz;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note << " [failed: " << what << "]";
        }
    }
};

SequenceSet exp_set(i64 k, i64 n, std::optional<i64> alpha, bool unit_shift) {
    const auto spec = element_of_order(factorize(k), n, alpha);
    const auto pr = profiles_exp(spec);
    return build_laz_set(build_exp_lpnf(spec), unit_shift ? pr.unit_shift : pr.full_shift);
}

SequenceSet lifted_6x60_set() {
    const auto l = build_lifted_lpnf(element_of_order(factorize(7), 6, 5), 10);
    return build_laz_set(l.table, l.profile);
}

double scan(const SequenceSet& s, ZoneSpec z, AfMode mode) { return scan_zone(s, z, mode).theta_max; }

std::string num(double x, int prec = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, x);
    return buf;
}

// 1 -------------------------------------------------------------------------
void lpnf_fixtures(Outcome& o) {
    const auto t1 = build_exp_lpnf(element_of_order(factorize(25), 20, 2));
    const auto t2 = build_exp_lpnf(element_of_order(factorize(9), 6, 2));
    const auto t3 = build_lifted_lpnf(element_of_order(factorize(7), 6, 5), 10);
    o.check(t1.at(7) == 3 && t1.at(19) == 13, "K=25 table values");
    o.check(t2.values == std::vector<i64>{1, 2, 4, 8, 7, 5}, "K=9 table");
    o.check(t3.table.values == std::vector<i64>{1, 5, 4, 6, 2, 3}, "lifted K=7 table");
    o.check(verify_lpnf(t1, 4, 25).holds, "<20,25,4,25>");
    o.check(verify_lpnf(t2, 6, 3).holds, "<6,9,6,3>");
    o.check(verify_lpnf(t3.table, 6, 5).holds, "<6,10,6,5>");
    const auto v = verify_lpnf(t2, 6, 4);
    o.check(!v.holds && v.witness && v.witness->shift == 4 && v.witness->difference == 3 &&
                v.witness->solutions == std::vector<i64>{1, 3, 5},
            "<6,9,6,4> witness (4,3,{1,3,5})");
}

// 2 -------------------------------------------------------------------------
void exhaustive_profiles(Outcome& o) {
    int exp_cases = 0, lifted_cases = 0;
    for (i64 k = 3; k <= 400; k += 2) {
        const auto f = factorize(k);
        if (f.factors.size() > 2) continue;
        const i64 e = group_exponent(f);
        for (i64 n = 2; n <= e; ++n) {
            if (e % n != 0) continue;
            const auto spec = element_of_order(f, n);
            const auto t = build_exp_lpnf(spec);
            const auto pr = profiles_exp(spec);
            if (!verify_lpnf(t, pr.unit_shift.zx, pr.unit_shift.zy))
                o.check(false, "unit-shift K=" + std::to_string(k) + " N=" + std::to_string(n));
            if (!verify_lpnf(t, pr.full_shift.zx, pr.full_shift.zy))
                o.check(false, "full-shift K=" + std::to_string(k) + " N=" + std::to_string(n));
            ++exp_cases;
            if (k > 100) continue;
            for (i64 k1 = k; k1 < 2 * k; ++k1) {
                const auto l = build_lifted_lpnf(spec, k1);
                if (!verify_lpnf(l.table, l.profile.zx, l.profile.zy))
                    o.check(false, "lifted K=" + std::to_string(k) + " N=" + std::to_string(n) +
                                       " K1=" + std::to_string(k1));
                ++lifted_cases;
            }
        }
    }
    o.note << " exp (K,N) cases=" << exp_cases << " lifted (K,N,K1) cases=" << lifted_cases;
}

// 3 -------------------------------------------------------------------------
void pipeline_20x500(Outcome& o) {
    const auto s = exp_set(25, 20, 2, true);
    o.check(s.set_size() == 20 && s.length() == 500, "(M, D) = (20, 500)");
    const double p1 = scan(s, {4, 25}, AfMode::periodic);
    const double p2 = scan(s, {20, 5}, AfMode::periodic);
    const double a1 = scan(s, {4, 25}, AfMode::aperiodic);
    o.check(std::abs(p1 - 25.0) <= 1e-6, "periodic (4,25) = 25");
    o.check(std::abs(p2 - 25.0) <= 1e-6, "periodic (20,5) = 25");
    o.check(a1 <= 30.0 + 1e-6, "aperiodic (4,25) <= 30");
    o.note << " periodic(4,25)=" << num(p1) << " periodic(20,5)=" << num(p2) << " aperiodic(4,25)=" << num(a1)
           << " vs formula K+Zx-1=" << s.claimed().theta_hat;
}

// 4 -------------------------------------------------------------------------
void pipeline_6x60(Outcome& o) {
    const auto s = lifted_6x60_set();
    o.check(s.set_size() == 6 && s.length() == 60, "(M, D) = (6, 60)");
    const double p = scan(s, {6, 5}, AfMode::periodic);
    const double a = scan(s, {6, 5}, AfMode::aperiodic);
    o.check(std::abs(p - 10.0) <= 1e-6, "periodic (6,5) = 10");
    o.check(std::abs(a - 15.0) <= 1e-6, "aperiodic (6,5) = 15");
    o.note << " periodic=" << num(p) << " aperiodic=" << num(a);
}

// 5 -------------------------------------------------------------------------
void table_goldens(Outcome& o) {
    int rows = 0;
    for (int which = 2; which <= 6; ++which)
        for (const auto& r : reproduce_table(which).rows) {
            ++rows;
            if (!r.parameters_match || std::abs(r.rho_rounded - r.printed.rho) > 1e-4 + 1e-12)
                o.check(false, "table " + std::to_string(which) + " p=" + std::to_string(r.p) + " rho=" +
                                   num(r.rho_rounded, 4) + " printed=" + num(r.printed.rho, 4));
        }
    o.check(rows == 50, "50 rows");
    o.note << " rows=" << rows;
}

// 6 -------------------------------------------------------------------------
void table2_row1(Outcome& o) {
    const auto s = exp_set(9, 6, std::nullopt, true);
    o.check(s.set_size() == 6 && s.length() == 54, "(M, D) = (6, 54)");
    const double profile_zone = scan(s, {2, 9}, AfMode::periodic);
    const double table_zone = scan(s, {3, 9}, AfMode::periodic);
    o.check(profile_zone <= 9.0 + 1e-6, "theta_max <= 9 on (2,9)");
    o.note << " theta(2,9)=" << num(profile_zone) << " theta(3,9)=" << num(table_zone)
           << (table_zone > 9.0 + 1e-6 ? " FLAG: printed zone width 3 exceeds 9" : " printed zone within 9");
}

// 7 -------------------------------------------------------------------------
void oracle_equivalence(Outcome& o) {
    std::mt19937_64 rng(20240607);
    double worst = 0.0, worst_parseval = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const i64 d = 1 + static_cast<i64>(rng() % 256);
        const auto a = oracle::random_unimodular(rng, d);
        const auto b = oracle::random_unimodular(rng, d);
        const std::span<const cplx> sa(a), sb(b);
        std::vector<i64> taus{-(d - 1), -1, 0, 1, d - 1};
        for (int i = 0; i < 4; ++i) taus.push_back(static_cast<i64>(rng() % (2 * d - 1)) - (d - 1));
        for (auto mode : {AfMode::periodic, AfMode::aperiodic}) {
            for (i64 tau = -(d - 1); tau < d; ++tau) {
                const auto row = af_doppler_row(sa, sb, tau, mode);
                double energy = 0.0;
                for (const auto& z : row) energy += std::norm(z);
                if (mode == AfMode::periodic) {
                    const double dd = static_cast<double>(d) * static_cast<double>(d);
                    worst_parseval = std::max(worst_parseval, std::abs(energy - dd) / dd);
                }
                if (std::find(taus.begin(), taus.end(), tau) == taus.end()) continue;
                for (i64 nu = 0; nu < d; ++nu)
                    worst = std::max(worst, std::abs(row[nu] - ambiguity(sa, sb, tau, nu, mode).value) /
                                                static_cast<double>(d));
            }
        }
    }
    o.check(worst < 1e-9, "row-DFT vs naive < 1e-9 D");
    o.check(worst_parseval < 1e-6, "Parseval within 1e-6");
    char buf[96];
    std::snprintf(buf, sizeof buf, " max dev/D=%.3e max Parseval rel=%.3e", worst, worst_parseval);
    o.note << buf;
}

// 8 -------------------------------------------------------------------------
void meng_regime(Outcome& o) {
    struct P {
        i64 m, d, zx, zy;
    };
    const P sets[] = {{20, 500, 4, 25}, {20, 500, 20, 5}, {6, 60, 6, 5},
                      {6, 54, 2, 9},    {6, 54, 3, 9},    {6, 54, 6, 3}};
    for (const auto& p : sets)
        if (meng_regime_applicable(p.m, p.d, p.zx, p.zy).applicable())
            o.check(false, "(" + std::to_string(p.m) + "," + std::to_string(p.d) + "," + std::to_string(p.zx) + "," +
                               std::to_string(p.zy) + ")");
    o.note << " sets checked=" << std::size(sets);
}

// 9 -------------------------------------------------------------------------
void trends(Outcome& o) {
    const i64 table_primes[] = {3, 5, 7, 11, 13, 17, 23, 29, 31, 37};
    const auto t2 = optimality_trend(Family::unit_shift_printed, table_primes);
    bool dec = t2.size() >= 8;
    for (std::size_t i = 1; i < t2.size(); ++i) dec = dec && t2[i].rho < t2[i - 1].rho && t2[i].rho > 1.0;
    o.check(dec, "table-2 family strictly decreasing toward 1");

    auto toward = [](const std::vector<TrendPoint>& t, double limit) {
        bool ok = t.size() >= 8;
        for (std::size_t i = 1; i < t.size(); ++i)
            ok = ok && std::abs(t[i].rho - limit) < std::abs(t[i - 1].rho - limit);
        return ok;
    };
    const auto ap = optimality_trend(Family::full_shift_aperiodic, table_primes);
    o.check(toward(ap, 2.0), "full-shift aperiodic family toward 2");
    const i64 twins[] = {3, 5, 11, 17, 29, 41, 59, 71, 101, 107};
    const auto tw = optimality_trend(Family::twin_prime, twins);
    o.check(toward(tw, std::sqrt(2.0)), "twin-prime family toward sqrt 2");
    o.note << " last: table2=" << num(t2.back().rho, 4) << " aperiodic=" << num(ap.back().rho, 4)
           << " twin=" << num(tw.back().rho, 4);
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
        double budget_s;
    };
    const Criterion criteria[] = {
        {1, "lpnf fixtures", lpnf_fixtures, 1},
        {2, "exhaustive profile check", exhaustive_profiles, 120},
        {3, "20x500 set pipeline", pipeline_20x500, 5},
        {4, "6x60 lifted set pipeline", pipeline_6x60, 1},
        {5, "table goldens", table_goldens, 1},
        {6, "6x54 set zones", table2_row1, 1},
        {7, "oracle equivalence", oracle_equivalence, 30},
        {8, "bound regime", meng_regime, 1},
        {9, "trends", trends, 1},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.check(dt <= c.budget_s, "time budget " + num(c.budget_s, 0) + " s");
        failed += !o.ok;
        std::printf("%s %d %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, dt, o.note.str().c_str());
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
