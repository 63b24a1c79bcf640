#include "cloudcover/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace cloudcover {

bool Report::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Report::check(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
}

std::string reports_to_json(const std::vector<Report>& reports) {
    nlohmann::ordered_json root;
    root["schema_version"] = 1;
    auto& arr = root["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json jr;
        jr["task"] = r.task_name;
        jr["kind"] = r.task_kind;
        jr["seed"] = r.seed;
        jr["pass"] = r.pass();
        auto& checks = jr["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        jr["notes"] = r.notes;
        arr.push_back(std::move(jr));
    }
    return root.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string reports_to_csv(const std::vector<Report>& reports) {
    std::ostringstream out;
    out << "task,kind,seed,check,pass,detail\n";
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            out << csv_escape(r.task_name) << "," << csv_escape(r.task_kind) << "," << r.seed << ","
                << csv_escape(c.name) << "," << (c.pass ? "true" : "false") << ","
                << csv_escape(c.detail) << "\n";
    return out.str();
}

}  // namespace cloudcover
