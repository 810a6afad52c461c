// laz: command-line front end for LPNF construction, LAZ set building,
// ambiguity scans, bound evaluation and table reproduction.
//
// Exit status: 0 success / verified, 1 verification false, 2 usage or data error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laz/laz.hpp"

namespace {

using namespace laz;

constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct LpnfArgs {
    i64 k = 0;
    i64 n = 0;
    std::optional<i64> alpha;
    std::optional<i64> k1;
    std::string family = "exp";
};

void add_lpnf_args(CLI::App* cmd, LpnfArgs& a, bool required) {
    auto* k = cmd->add_option("--k", a.k, "modulus K (odd)");
    auto* n = cmd->add_option("--n", a.n, "order N of alpha, N | E");
    if (required) {
        k->required();
        n->required();
    }
    cmd->add_option("--alpha", a.alpha, "element of order N (default: derived from primitive roots)");
    cmd->add_option("--k1", a.k1, "codomain modulus for the lifted family, K <= K1");
    cmd->add_option("--family", a.family, "exp | lifted")->check(CLI::IsMember({"exp", "lifted"}));
}

struct BuiltLpnf {
    LpnfTable table;
    std::vector<LpnfProfile> profiles;
};

BuiltLpnf build_lpnf(const LpnfArgs& a) {
    const bool lifted = a.family == "lifted";
    if (lifted && !a.k1) throw DomainError("--family lifted needs --k1");
    if (!lifted && a.k1) throw DomainError("--k1 is only meaningful with --family lifted");
    if (a.k < 3) throw DomainError("--k must be at least 3");
    if (a.n < 1) throw DomainError("--n must be positive");
    const auto spec = element_of_order(factorize(a.k), a.n, a.alpha);
    if (lifted) {
        auto l = build_lifted_lpnf(spec, *a.k1);
        return {std::move(l.table), {l.profile}};
    }
    const auto pr = profiles_exp(spec);
    return {build_exp_lpnf(spec), {pr.unit_shift, pr.full_shift}};
}

json table_document(const BuiltLpnf& b) {
    auto j = to_json(b.table);
    json profiles = json::array();
    for (const auto& p : b.profiles) profiles.push_back(to_json(p));
    j["profiles"] = std::move(profiles);
    return j;
}

void emit(const std::optional<std::string>& out, const std::string& text) {
    if (out)
        write_text_file(*out, text);
    else
        std::cout << text;
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

unsigned resolve_threads(std::optional<unsigned> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0) throw DomainError("THREADS must be a non-negative integer");
        return static_cast<unsigned>(v);
    }
    return 1;
}

// --- lpnf ------------------------------------------------------------------

int cmd_lpnf_build(const LpnfArgs& a, const std::optional<std::string>& out) {
    const auto b = build_lpnf(a);
    const std::string doc = table_document(b).dump(2) + "\n";
    emit(out, doc);
    if (out)
        for (const auto& p : b.profiles)
            std::cout << "profile " << to_string(p.source) << " zx=" << p.zx << " zy=" << p.zy << "\n";
    return 0;
}

int cmd_lpnf_verify(const std::string& path, i64 zx, i64 zy) {
    const auto t = lpnf_table_from_json(read_json_file(path));
    const auto v = verify_lpnf(t, zx, zy);
    if (v.holds) {
        std::cout << "true\n";
        return 0;
    }
    const auto& w = *v.witness;
    std::cout << "false a=" << w.shift << " b=" << w.difference << " solutions=";
    for (std::size_t i = 0; i < w.solutions.size(); ++i) std::cout << (i ? "," : "") << w.solutions[i];
    std::cout << "\n";
    return kExitFalse;
}

// --- set -------------------------------------------------------------------

struct SetArgs {
    LpnfArgs lpnf;
    std::optional<std::string> table;
    std::optional<std::string> profile;
    std::optional<i64> zx, zy;
};

int cmd_set_build(const SetArgs& a, const std::optional<std::string>& out) {
    BuiltLpnf b;
    if (a.table) {
        if (a.lpnf.k != 0 || a.lpnf.n != 0) throw DomainError("give either --table or --k/--n, not both");
        const auto j = read_json_file(*a.table);
        b.table = lpnf_table_from_json(j);
        if (j.contains("profiles"))
            for (const auto& p : j.at("profiles")) b.profiles.push_back(lpnf_profile_from_json(p));
    } else {
        if (a.lpnf.k == 0 || a.lpnf.n == 0) throw DomainError("set build needs --table or --k and --n");
        b = build_lpnf(a.lpnf);
    }

    std::optional<LpnfProfile> chosen;
    if (a.profile) {
        const auto src = parse_profile_source(*a.profile);
        for (const auto& p : b.profiles)
            if (p.source == src) chosen = p;
        if (!chosen && !(a.zx && a.zy)) throw DomainError("profile '" + *a.profile + "' is not available for this table");
    } else if (!b.profiles.empty()) {
        chosen = b.profiles.front();
    }
    if (a.zx || a.zy) {
        if (!chosen && !(a.zx && a.zy)) throw DomainError("--zx and --zy are both needed without a stored profile");
        LpnfProfile p = chosen.value_or(LpnfProfile{});
        if (a.zx) p.zx = *a.zx;
        if (a.zy) p.zy = *a.zy;
        chosen = p;
    }
    if (!chosen) throw DomainError("no zone profile: pass --profile or --zx/--zy");

    const auto s = build_laz_set(b.table, *chosen);
    emit(out, to_json(s).dump() + "\n");
    if (out) {
        const auto& c = s.claimed();
        std::cout << "set m=" << s.set_size() << " d=" << s.length() << " zone=" << c.zone.zx << "x" << c.zone.zy
                  << " theta=" << c.theta << " theta_hat=" << c.theta_hat << "\n";
    }
    return 0;
}

// --- af --------------------------------------------------------------------

struct ScanArgs {
    std::string set;
    std::string mode = "periodic";
    std::optional<i64> zx, zy;
    std::optional<unsigned> threads;
    std::string evaluator = "row-dft";
};

int cmd_af_scan(const ScanArgs& a, const std::optional<std::string>& out) {
    const auto s = sequence_set_from_json(read_json_file(a.set));
    const auto mode = parse_mode(a.mode);
    const auto& c = s.claimed();
    const ZoneSpec zone{a.zx.value_or(c.zone.zx), a.zy.value_or(c.zone.zy)};
    const ScanOptions opt{a.evaluator == "exact" ? Evaluator::exact : Evaluator::row_dft, resolve_threads(a.threads)};
    const auto r = scan_zone(s, zone, mode, opt);
    if (out) write_text_file(*out, to_json(r).dump(2) + "\n");
    const i64 claimed = mode == AfMode::periodic ? c.theta : c.theta_hat;
    std::cout << "theta_max=" << fixed6(r.theta_max) << " claimed=" << claimed << "\n";
    return 0;
}

struct GridArgs {
    std::string set;
    std::string mode = "periodic";
    i64 u = 0, v = 0;
    std::optional<i64> tau_lo, tau_hi, nu_lo, nu_hi;
};

int cmd_af_grid(const GridArgs& a, const std::optional<std::string>& out) {
    const auto s = sequence_set_from_json(read_json_file(a.set));
    const auto z = s.claimed().zone;
    const auto g = export_af_grid(s, a.u, a.v, a.tau_lo.value_or(z.tau_min()), a.tau_hi.value_or(z.tau_max()),
                                  a.nu_lo.value_or(z.nu_min()), a.nu_hi.value_or(z.nu_max()), parse_mode(a.mode));
    std::ostringstream os;
    write_grid_csv(os, g);
    emit(out, os.str());
    return 0;
}

// --- bounds / tables -------------------------------------------------------

struct BoundArgs {
    std::optional<i64> m, d, zx, zy;
    std::optional<double> theta;
    std::string mode = "periodic";
    std::optional<std::string> family;
    std::vector<i64> primes;
    int e = 2;
    std::string format = "csv";
};

int cmd_bounds(const BoundArgs& a, const std::optional<std::string>& out) {
    std::vector<BoundReport> reports;
    if (a.family) {
        if (a.m || a.d || a.zx || a.zy || a.theta) throw DomainError("--family excludes explicit --m/--d/--zx/--zy/--theta");
        if (a.primes.empty()) throw DomainError("--family needs --primes");
        const auto fam = parse_family(*a.family);
        for (i64 p : a.primes) reports.push_back(family_point(fam, p, a.e).report);
    } else {
        if (!(a.m && a.d && a.zx && a.zy && a.theta)) throw DomainError("bounds needs --m --d --zx --zy --theta, or --family");
        reports.push_back(bound_report(*a.m, *a.d, *a.zx, *a.zy, *a.theta, parse_mode(a.mode)));
    }
    std::string text;
    if (a.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        text = arr.dump(2) + "\n";
    } else {
        text = std::string(kBoundCsvHeader) + "\n";
        for (const auto& r : reports) text += bound_csv_row(r) + "\n";
    }
    emit(out, text);
    return 0;
}

int cmd_tables(int which, const std::string& format, const std::optional<std::string>& out) {
    const auto t = reproduce_table(which);
    std::string text;
    if (format == "json") {
        text = to_json(t).dump(2) + "\n";
    } else {
        text = std::string(kBoundCsvHeader) + "\n";
        for (const auto& r : t.rows) text += bound_csv_row(r.report) + "\n";
    }
    emit(out, text);
    for (const auto& r : t.rows)
        if (!r.parameters_match || std::abs(r.rho_rounded - r.printed.rho) > 1e-4 + 1e-12)
            std::cerr << "warning: row p=" << r.p << " differs from the printed row\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"LPNF-based low ambiguity zone sequence sets"};
    app.require_subcommand(1);
    std::optional<std::string> out;

    auto* lpnf = app.add_subcommand("lpnf", "LPNF tables")->require_subcommand(1);
    LpnfArgs build_args;
    auto* lpnf_build = lpnf->add_subcommand("build", "build an LPNF value table");
    add_lpnf_args(lpnf_build, build_args, true);
    lpnf_build->add_option("--out", out, "output JSON path (default stdout)");

    std::string verify_path;
    i64 verify_zx = 0, verify_zy = 0;
    auto* lpnf_verify = lpnf->add_subcommand("verify", "check the LPNF property on a zone");
    lpnf_verify->add_option("--table", verify_path, "table JSON")->required();
    lpnf_verify->add_option("--zx", verify_zx)->required();
    lpnf_verify->add_option("--zy", verify_zy)->required();

    auto* set = app.add_subcommand("set", "sequence sets")->require_subcommand(1);
    SetArgs set_args;
    auto* set_build = set->add_subcommand("build", "build a LAZ sequence set");
    add_lpnf_args(set_build, set_args.lpnf, false);
    set_build->add_option("--table", set_args.table, "table JSON from 'lpnf build'");
    set_build->add_option("--profile", set_args.profile, "unit-shift | full-shift | lifted");
    set_build->add_option("--zx", set_args.zx, "override zone width");
    set_build->add_option("--zy", set_args.zy, "override zone height");
    set_build->add_option("--out", out, "output JSON path (default stdout)");

    auto* af = app.add_subcommand("af", "ambiguity functions")->require_subcommand(1);
    ScanArgs scan_args;
    auto* af_scan = af->add_subcommand("scan", "maximum |AF| over a zone");
    af_scan->add_option("--set", scan_args.set, "set JSON")->required();
    af_scan->add_option("--mode", scan_args.mode)->check(CLI::IsMember({"periodic", "aperiodic"}));
    af_scan->add_option("--zx", scan_args.zx, "zone width (default: claimed)");
    af_scan->add_option("--zy", scan_args.zy, "zone height (default: claimed)");
    af_scan->add_option("--threads", scan_args.threads, "worker threads, 0 = hardware (default: $THREADS or 1)");
    af_scan->add_option("--evaluator", scan_args.evaluator)->check(CLI::IsMember({"row-dft", "exact"}));
    af_scan->add_option("--out", out, "report JSON path");

    GridArgs grid_args;
    auto* af_grid = af->add_subcommand("grid", "|AF_{u,v}| on a delay-Doppler rectangle as CSV");
    af_grid->add_option("--set", grid_args.set, "set JSON")->required();
    af_grid->add_option("--mode", grid_args.mode)->check(CLI::IsMember({"periodic", "aperiodic"}));
    af_grid->add_option("--u", grid_args.u);
    af_grid->add_option("--v", grid_args.v);
    af_grid->add_option("--tau-lo", grid_args.tau_lo);
    af_grid->add_option("--tau-hi", grid_args.tau_hi);
    af_grid->add_option("--nu-lo", grid_args.nu_lo);
    af_grid->add_option("--nu-hi", grid_args.nu_hi);
    af_grid->add_option("--out", out, "CSV path (default stdout)");

    BoundArgs bound_args;
    auto* bounds = app.add_subcommand("bounds", "lower bound and optimality factor");
    bounds->add_option("--m", bound_args.m);
    bounds->add_option("--d", bound_args.d);
    bounds->add_option("--zx", bound_args.zx);
    bounds->add_option("--zy", bound_args.zy);
    bounds->add_option("--theta", bound_args.theta);
    bounds->add_option("--mode", bound_args.mode)->check(CLI::IsMember({"periodic", "aperiodic"}));
    bounds->add_option("--family", bound_args.family, "parameter family for a trend");
    bounds->add_option("--primes", bound_args.primes, "comma separated primes")->delimiter(',');
    bounds->add_option("--e", bound_args.e, "prime-power exponent for the family");
    bounds->add_option("--format", bound_args.format)->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", out);

    auto* tables = app.add_subcommand("tables", "published tables")->require_subcommand(1);
    int which = 0;
    std::string table_format = "csv";
    auto* reproduce = tables->add_subcommand("reproduce", "regenerate one of tables 2..6");
    reproduce->add_option("--which", which)->required()->check(CLI::Range(2, 6));
    reproduce->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
    reproduce->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (*lpnf_build) return cmd_lpnf_build(build_args, out);
        if (*lpnf_verify) return cmd_lpnf_verify(verify_path, verify_zx, verify_zy);
        if (*set_build) return cmd_set_build(set_args, out);
        if (*af_scan) return cmd_af_scan(scan_args, out);
        if (*af_grid) return cmd_af_grid(grid_args, out);
        if (*bounds) return cmd_bounds(bound_args, out);
        if (*reproduce) return cmd_tables(which, table_format, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
