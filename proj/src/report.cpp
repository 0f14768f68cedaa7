#include "msplect/report.hpp"

#include <json.hpp>

#include <sstream>

namespace msplect {

std::string emit_text(const Report& rep) {
    std::ostringstream os;
    os << "== msplect report ==\n";
    if (!rep.file.empty()) os << "file: " << rep.file << "\n";
    if (rep.seeded) os << "seed: " << rep.seed << "\n";
    if (!rep.convention.empty()) os << "convention: " << rep.convention << "\n";
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    for (const auto& r : rep.results) {
        os << "[" << r.status << "] " << r.task << "\n";
        for (const auto& d : r.details) os << "    " << d.key << ": " << d.value << "\n";
        for (const auto& [label, value] : r.residuals)
            os << "    residual " << label << " = " << value << "\n";
    }
    os << (rep.all_pass() ? "PASS" : "FAIL") << " (" << rep.results.size() << " tasks)\n";
    return os.str();
}

std::string emit_jsonl(const Report& rep) {
    using json = nlohmann::ordered_json;
    std::ostringstream os;
    {
        json header;
        header["record"] = "header";
        header["file"] = rep.file;
        if (rep.seeded) header["seed"] = rep.seed;
        header["convention"] = rep.convention;
        header["warnings"] = rep.warnings;
        os << header.dump() << "\n";
    }
    for (const auto& r : rep.results) {
        json j;
        j["record"] = "task";
        j["task"] = r.task;
        j["status"] = r.status;
        json det = json::object();
        for (const auto& d : r.details) det[d.key] = d.value;
        j["details"] = det;
        os << j.dump() << "\n";
        for (const auto& [label, value] : r.residuals) {
            json rj;
            rj["record"] = "residual";
            rj["task"] = r.task;
            rj["label"] = label;
            rj["value"] = value;
            os << rj.dump() << "\n";
        }
    }
    json footer;
    footer["record"] = "summary";
    footer["status"] = rep.all_pass() ? "pass" : "fail";
    footer["tasks"] = rep.results.size();
    os << footer.dump() << "\n";
    return os.str();
}

} // namespace msplect
