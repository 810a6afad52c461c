#pragma once

// JSON and CSV persistence for tables, sequence sets, scan and bound reports.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "laz/afengine.hpp"
#include "laz/bounds.hpp"
#include "laz/error.hpp"
#include "laz/lpnf.hpp"
#include "laz/seqset.hpp"

namespace laz {

using json = nlohmann::json;

inline LpnfFamily parse_lpnf_family(const std::string& s) {
    if (s == "exp") return LpnfFamily::exponential;
    if (s == "lifted") return LpnfFamily::lifted;
    throw FormatError("unknown lpnf family '" + s + "'");
}

inline ProfileSource parse_profile_source(const std::string& s) {
    if (s == "unit-shift") return ProfileSource::unit_shift;
    if (s == "full-shift") return ProfileSource::full_shift;
    if (s == "lifted") return ProfileSource::lifted;
    throw FormatError("unknown profile source '" + s + "'");
}

inline AfMode parse_mode(const std::string& s) {
    if (s == "periodic") return AfMode::periodic;
    if (s == "aperiodic") return AfMode::aperiodic;
    throw FormatError("unknown mode '" + s + "'");
}

namespace detail {

template <typename F>
auto guarded(const char* what, F f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

} // namespace detail

// --- LpnfTable ------------------------------------------------------------

inline json to_json(const LpnfTable& t) {
    return {{"n", t.n}, {"modulus", t.modulus}, {"values", t.values}, {"family", to_string(t.family)}};
}

inline json to_json(const LpnfProfile& p) {
    return {{"zx", p.zx}, {"zy", p.zy}, {"source", to_string(p.source)}};
}

inline LpnfTable lpnf_table_from_json(const json& j) {
    auto t = detail::guarded("lpnf table", [&] {
        return LpnfTable{j.at("n").get<i64>(), j.at("modulus").get<i64>(),
                         j.at("values").get<std::vector<i64>>(),
                         parse_lpnf_family(j.at("family").get<std::string>())};
    });
    try {
        validate(t);
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
    return t;
}

inline LpnfProfile lpnf_profile_from_json(const json& j) {
    return detail::guarded("lpnf profile", [&] {
        return LpnfProfile{j.at("zx").get<i64>(), j.at("zy").get<i64>(),
                           parse_profile_source(j.at("source").get<std::string>())};
    });
}

// --- SequenceSet ------------------------------------------------------------

inline json to_json(const SequenceSet& s) {
    json rows = json::array();
    for (i64 u = 0; u < s.set_size(); ++u) {
        const auto r = s.row(u);
        rows.push_back(std::vector<i64>(r.begin(), r.end()));
    }
    const auto& pv = s.provenance();
    const auto& c = s.claimed();
    return {
        {"m", s.set_size()},
        {"d", s.length()},
        {"exponents", std::move(rows)},
        {"provenance",
         {{"n", pv.n}, {"modulus", pv.modulus}, {"family", to_string(pv.family)}, {"profile", to_json(pv.profile)}}},
        {"claimed",
         {{"zx", c.zone.zx}, {"zy", c.zone.zy}, {"theta", c.theta}, {"theta_hat", c.theta_hat}}},
    };
}

inline SequenceSet sequence_set_from_json(const json& j) {
    return detail::guarded("sequence set", [&] {
        const i64 m = j.at("m").get<i64>();
        const i64 d = j.at("d").get<i64>();
        const auto& rows = j.at("exponents");
        if (!rows.is_array() || static_cast<i64>(rows.size()) != m)
            throw FormatError("sequence set: expected " + std::to_string(m) + " exponent rows");
        std::vector<i64> flat;
        flat.reserve(static_cast<std::size_t>(m * d));
        for (const auto& r : rows) {
            const auto v = r.get<std::vector<i64>>();
            if (static_cast<i64>(v.size()) != d)
                throw FormatError("sequence set: exponent row of length " + std::to_string(v.size()) +
                                  ", expected " + std::to_string(d));
            flat.insert(flat.end(), v.begin(), v.end());
        }
        const auto& pj = j.at("provenance");
        const Provenance pv{pj.at("n").get<i64>(), pj.at("modulus").get<i64>(),
                            parse_lpnf_family(pj.at("family").get<std::string>()),
                            lpnf_profile_from_json(pj.at("profile"))};
        const auto& cj = j.at("claimed");
        const ClaimedParameters c{m, d, {cj.at("zx").get<i64>(), cj.at("zy").get<i64>()},
                                  cj.at("theta").get<i64>(), cj.at("theta_hat").get<i64>()};
        try {
            return SequenceSet(m, d, std::move(flat), pv, c);
        } catch (const ValidationError& e) {
            throw FormatError(e.what());
        }
    });
}

// --- ScanReport -------------------------------------------------------------

inline json to_json(const std::optional<AfWitness>& w) {
    if (!w) return nullptr;
    return {{"u", w->u}, {"v", w->v}, {"tau", w->tau}, {"nu", w->nu}, {"magnitude", w->magnitude}};
}

inline json to_json(const ScanReport& r) {
    return {
        {"mode", to_string(r.mode)},
        {"zone", {{"zx", r.zone.zx}, {"zy", r.zone.zy}}},
        {"theta_auto", r.theta_auto},
        {"theta_cross", r.theta_cross},
        {"theta_max", r.theta_max},
        {"auto_witness", to_json(r.auto_witness)},
        {"cross_witness", to_json(r.cross_witness)},
        {"grid_points_evaluated", r.grid_points_evaluated},
    };
}

// --- BoundReport ------------------------------------------------------------

inline constexpr const char* kBoundCsvHeader = "set_size,length,zx,zy,theta,delta,rho";

inline std::string bound_csv_row(const BoundReport& b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%lld,%lld,%lld,%lld,%.10g,%.10g,%.4f", static_cast<long long>(b.m),
                  static_cast<long long>(b.d), static_cast<long long>(b.zx), static_cast<long long>(b.zy),
                  b.theta, b.delta, round_half_even(b.rho, 4));
    return buf;
}

inline json to_json(const BoundReport& b) {
    return {{"set_size", b.m}, {"length", b.d}, {"zx", b.zx},   {"zy", b.zy},
            {"theta", b.theta}, {"delta", b.delta}, {"rho", b.rho}, {"mode", to_string(b.mode)}};
}

inline json to_json(const ReproducedTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        auto j = to_json(r.report);
        j["rho_rounded"] = r.rho_rounded;
        j["printed_rho"] = r.printed.rho;
        j["p"] = r.p;
        j["e"] = r.e;
        j["k"] = r.k;
        j["k1"] = r.k1;
        j["parameters_match"] = r.parameters_match;
        rows.push_back(std::move(j));
    }
    return {{"table", t.which}, {"mode", to_string(t.mode)}, {"rows", std::move(rows)}};
}

// --- files ------------------------------------------------------------------

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw FormatError("'" + path + "' is empty");
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError("'" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text;
}

} // namespace laz
