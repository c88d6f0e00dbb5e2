#pragma once

#include "slh/ratpoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <complex>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace slh {

enum class ClaimStatus {
    /// Exact arithmetic or a converged certified enclosure.
    certified,
    /// Holds on a finite evaluation grid; not a proof.
    grid_passed,
    /// Not falsified by random sampling.
    oracle_consistent,
    failed,
    /// A quoted intermediate display disagrees with the recomputation; no stated bound depends on it.
    discrepancy
};

inline std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::certified: return "certified";
        case ClaimStatus::grid_passed: return "grid-passed";
        case ClaimStatus::oracle_consistent: return "oracle-consistent";
        case ClaimStatus::failed: return "failed";
        case ClaimStatus::discrepancy: return "discrepancy";
    }
    return "?";
}

/// A reported value: nothing, an exact rational, an enclosure, a float, a flag or free text.
using ClaimValue = std::variant<std::monostate, Rational, RatInterval, double, bool, std::string>;

struct Claim {
    std::string id;
    /// The asserted property in plain notation, e.g. "|H3(1)| <= 1/36".
    std::string statement;
    ClaimValue expected;
    ClaimValue computed;
    ClaimStatus status = ClaimStatus::failed;
    std::string note;
    double runtime_ms = 0;
};

inline nlohmann::ordered_json rational_json(const Rational& q) {
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"decimal", to_decimal(q, 15)}};
}

inline std::string format_double(double d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", d);
    return buf;
}

inline nlohmann::ordered_json value_json(const ClaimValue& v) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(const Rational& q) const { return rational_json(q); }
        nlohmann::ordered_json operator()(const RatInterval& i) const {
            return {{"lo", rational_json(i.lo)}, {"hi", rational_json(i.hi)}, {"width", rational_json(i.width())}};
        }
        nlohmann::ordered_json operator()(double d) const { return d; }
        nlohmann::ordered_json operator()(bool b) const { return b; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, v);
}

inline std::string value_text(const ClaimValue& v) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "-"; }
        std::string operator()(const Rational& q) const {
            if (q.get_den() == 1 || q.get_den().get_str().size() <= 8) return to_string(q);
            return to_decimal(q, 12);
        }
        std::string operator()(const RatInterval& i) const {
            return "[" + to_decimal(i.lo, 12) + ", " + to_decimal(i.hi, 12) + "]";
        }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, v);
}

struct VerificationReport {
    std::string command;
    /// Settings in effect, printed as the report header.
    std::vector<std::pair<std::string, std::string>> settings;
    std::vector<Claim> claims;
    /// Extra tables (edge rows, coefficient lists) keyed by name.
    nlohmann::ordered_json tables = nlohmann::ordered_json::object();
    bool timing = false;

    void add(Claim c) { claims.push_back(std::move(c)); }
    void append(const VerificationReport& other) {
        claims.insert(claims.end(), other.claims.begin(), other.claims.end());
        for (auto it = other.tables.begin(); it != other.tables.end(); ++it) tables[it.key()] = it.value();
    }

    bool any_failed() const {
        return std::any_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::failed; });
    }
    int exit_code() const { return any_failed() ? 1 : 0; }

    std::map<std::string, int> status_counts() const {
        std::map<std::string, int> m;
        for (const auto& c : claims) ++m[to_string(c.status)];
        return m;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        nlohmann::ordered_json s = nlohmann::ordered_json::object();
        for (const auto& [k, v] : settings) s[k] = v;
        j["settings"] = s;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : claims) {
            nlohmann::ordered_json o;
            o["id"] = c.id;
            o["statement"] = c.statement;
            o["expected"] = value_json(c.expected);
            o["computed"] = value_json(c.computed);
            o["status"] = to_string(c.status);
            if (!c.note.empty()) o["note"] = c.note;
            if (timing) o["runtime_ms"] = c.runtime_ms;
            arr.push_back(std::move(o));
        }
        j["claims"] = arr;
        if (!tables.empty()) j["tables"] = tables;
        nlohmann::ordered_json summary = nlohmann::ordered_json::object();
        for (const auto& [k, n] : status_counts()) summary[k] = n;
        j["summary"] = summary;
        j["exit_code"] = exit_code();
        return j;
    }

    std::string to_text() const {
        std::ostringstream out;
        out << "# " << command << "\n";
        for (const auto& [k, v] : settings) out << "# " << k << " = " << v << "\n";
        std::vector<std::array<std::string, 5>> rows{{"status", "claim", "expected", "computed", "note"}};
        for (const auto& c : claims) {
            std::string note = c.note;
            if (timing) note += (note.empty() ? "" : "; ") + format_double(c.runtime_ms) + " ms";
            rows.push_back({to_string(c.status), c.id, value_text(c.expected), value_text(c.computed), note});
        }
        std::array<std::size_t, 5> w{};
        for (const auto& r : rows)
            for (std::size_t i = 0; i < 4; ++i) w[i] = std::max(w[i], r[i].size());
        for (const auto& r : rows) {
            std::string line;
            for (std::size_t i = 0; i < 4; ++i) line += r[i] + std::string(w[i] - r[i].size() + 2, ' ');
            line += r[4];
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out << line << "\n";
        }
        out << "#";
        for (const auto& [k, n] : status_counts()) out << " " << k << "=" << n;
        out << "\n";
        return out.str();
    }
};

}  // namespace slh
