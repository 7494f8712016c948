#pragma once
// Check records and their text / JSON renderings.

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cubegal {

enum class CheckStatus { pass, fail, skip, inconclusive };

inline const char* status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct CheckReport {
    std::string id;
    CheckStatus status = CheckStatus::skip;
    std::string expected;
    std::string actual;
    std::string citation;
    std::int64_t ms = 0;
};

struct ReportSummary {
    std::size_t pass = 0, fail = 0, skip = 0, inconclusive = 0;
};

inline ReportSummary summarize(const std::vector<CheckReport>& checks)
{
    ReportSummary s;
    for (const auto& c : checks) {
        switch (c.status) {
        case CheckStatus::pass: ++s.pass; break;
        case CheckStatus::fail: ++s.fail; break;
        case CheckStatus::skip: ++s.skip; break;
        case CheckStatus::inconclusive: ++s.inconclusive; break;
        }
    }
    return s;
}

inline nlohmann::ordered_json report_json(const std::vector<CheckReport>& checks)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks)
        arr.push_back(nlohmann::ordered_json{{"id", c.id},
                                             {"status", status_name(c.status)},
                                             {"expected", c.expected},
                                             {"actual", c.actual},
                                             {"citation", c.citation},
                                             {"ms", c.ms}});
    auto s = summarize(checks);
    return nlohmann::ordered_json{
        {"version", 1},
        {"checks", arr},
        {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}, {"inconclusive", s.inconclusive}}}};
}

inline void write_text_report(std::ostream& os, const std::vector<CheckReport>& checks, bool timings)
{
    for (const auto& c : checks) {
        os << "[" << status_name(c.status) << "] " << c.id;
        if (timings)
            os << " (" << c.ms << " ms)";
        os << "\n    expected: " << c.expected << "\n    actual:   " << c.actual
           << "\n    source:   " << c.citation << "\n";
    }
    auto s = summarize(checks);
    os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skip << " skip, " << s.inconclusive
       << " inconclusive\n";
}

/// Runs `body`, which fills in status/expected/actual, and records the
/// wall time when `timings` is set (otherwise ms stays 0 so reports are
/// reproducible byte for byte).
template <class Body>
CheckReport timed_check(std::string id, std::string citation, bool timings, Body body)
{
    CheckReport r;
    r.id = std::move(id);
    r.citation = std::move(citation);
    auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.actual = std::string("error: ") + e.what();
    }
    if (timings)
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace cubegal
