#pragma once

#include <string>
#include <vector>

namespace msplect {

struct ReportDetail {
    std::string key;
    std::string value;
};

struct TaskResult {
    std::string task;
    std::string status; // pass | fail | error
    std::vector<ReportDetail> details;
    std::vector<std::pair<std::string, std::string>> residuals; // label -> printed form
};

struct Report {
    std::string file;
    unsigned seed = 0;
    bool seeded = false;
    std::string convention;
    std::vector<std::string> warnings;
    std::vector<TaskResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (r.status != "pass") return false;
        return true;
    }
};

// Stable-field-order serializations; identical input -> identical bytes.
std::string emit_text(const Report& rep);
std::string emit_jsonl(const Report& rep);

} // namespace msplect
