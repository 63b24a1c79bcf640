#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cloudcover {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // witness description on failure, summary otherwise
};

/// Per-task verification report. Deterministic for a given scene and seed;
/// wall-clock timing is kept out of the serialized forms for that reason.
struct Report {
    std::string task_name;
    std::string task_kind;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;  // growth tables, counters, witnesses
    double elapsed_seconds = 0;

    bool pass() const;
    void check(const std::string& name, bool ok, const std::string& detail = "");
};

std::string reports_to_json(const std::vector<Report>& reports);
std::string reports_to_csv(const std::vector<Report>& reports);

}  // namespace cloudcover
