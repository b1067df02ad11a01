#pragma once

/**
 * @file report.hpp
 * @brief Verification reports and their deterministic serialization.
 *
 * Reports are plain data; emission is byte-deterministic (stable case order,
 * canonical rational printing).  Timing is excluded under deterministic mode.
 */

#include "rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace slcalc {

struct ReportCase {
    std::string name;
    std::string expected;
    std::string got;
    std::string provenance; ///< which module/invariant produced the case
    bool pass = true;
};

struct Report {
    enum class Status { Pass, Fail, Error };
    Status status = Status::Pass;
    std::vector<ReportCase> cases;
    double timing_ms = 0.0;

    void add(std::string name, std::string expected, std::string got, std::string provenance) {
        bool ok = expected == got;
        cases.push_back({std::move(name), std::move(expected), std::move(got),
                         std::move(provenance), ok});
        if (!ok)
            status = Status::Fail;
    }
    void add_check(std::string name, bool ok, std::string witness, std::string provenance) {
        cases.push_back({std::move(name), "pass", ok ? "pass" : ("fail: " + witness),
                         std::move(provenance), ok});
        if (!ok)
            status = Status::Fail;
    }
    bool passed() const { return status == Status::Pass; }

    void sort_cases() {
        std::stable_sort(cases.begin(), cases.end(),
                         [](const ReportCase& a, const ReportCase& b) { return a.name < b.name; });
    }
};

inline const char* status_name(Report::Status s) {
    switch (s) {
    case Report::Status::Pass: return "pass";
    case Report::Status::Fail: return "fail";
    case Report::Status::Error: return "error";
    }
    return "?";
}

enum class ReportFormat { Json, Csv, Text };

/// Deterministic byte emission.  `deterministic` drops the timing field.
inline std::string emit_report(Report rep, ReportFormat fmt, bool deterministic) {
    rep.sort_cases();
    switch (fmt) {
    case ReportFormat::Json: {
        nlohmann::ordered_json j;
        j["status"] = status_name(rep.status);
        j["cases"] = nlohmann::ordered_json::array();
        for (const auto& c : rep.cases) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["expected"] = c.expected;
            jc["got"] = c.got;
            jc["provenance"] = c.provenance;
            jc["pass"] = c.pass;
            j["cases"].push_back(std::move(jc));
        }
        if (!deterministic)
            j["timing_ms"] = rep.timing_ms;
        return j.dump() + "\n";
    }
    case ReportFormat::Csv: {
        auto esc = [](const std::string& s) {
            std::string out = "\"";
            for (char c : s)
                out += (c == '"') ? "\"\"" : std::string(1, c);
            return out + "\"";
        };
        std::string out = "name,expected,got,provenance,pass\n";
        for (const auto& c : rep.cases)
            out += esc(c.name) + "," + esc(c.expected) + "," + esc(c.got) + "," +
                   esc(c.provenance) + "," + (c.pass ? "true" : "false") + "\n";
        return out;
    }
    case ReportFormat::Text: {
        std::string out = std::string("status: ") + status_name(rep.status) + "\n";
        for (const auto& c : rep.cases) {
            out += std::string(c.pass ? "  ok   " : "  FAIL ") + c.name;
            if (!c.pass)
                out += "  expected=" + c.expected + " got=" + c.got + "  [" + c.provenance + "]";
            out += "\n";
        }
        if (!deterministic)
            out += "timing_ms: " + std::to_string(rep.timing_ms) + "\n";
        return out;
    }
    }
    return {};
}

} // namespace slcalc
