#include "crpoisson/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace crp {

std::string statusName(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Discrepancy: return "discrepancy";
        default: return "skipped";
    }
}

int Report::countOf(CheckStatus s) const {
    int c = 0;
    for (const auto& o : checks)
        if (o.result.status == s) ++c;
    return c;
}

std::string reportToJson(const Report& r, bool includeTimings) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["suite"] = r.suite;
    j["version"] = r.version;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& o : r.checks) {
        nlohmann::ordered_json c;
        c["id"] = o.id;
        c["paper_ref"] = o.anchor;
        c["status"] = statusName(o.result.status);
        if (includeTimings) c["elapsed_ms"] = o.result.elapsedMs;
        if (!o.result.witness.empty()) c["witness"] = o.result.witness;
        j["checks"].push_back(std::move(c));
    }
    j["summary"] = {{"pass", r.countOf(CheckStatus::Pass)},
                    {"fail", r.countOf(CheckStatus::Fail)},
                    {"discrepancy", r.countOf(CheckStatus::Discrepancy)},
                    {"skipped", r.countOf(CheckStatus::Skipped)}};
    return j.dump(2) + "\n";
}

std::string reportToText(const Report& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "  n=" << r.n << "  seed=" << r.seed << "  (" << r.version
       << ")\n";
    for (const auto& o : r.checks) {
        os << std::left << std::setw(44) << o.id << std::setw(13)
           << statusName(o.result.status) << std::right << std::setw(8) << o.result.elapsedMs
           << " ms\n";
        if (!o.result.witness.empty()) os << "    witness: " << o.result.witness << "\n";
    }
    os << "summary: pass=" << r.countOf(CheckStatus::Pass)
       << " fail=" << r.countOf(CheckStatus::Fail)
       << " discrepancy=" << r.countOf(CheckStatus::Discrepancy)
       << " skipped=" << r.countOf(CheckStatus::Skipped) << "\n";
    return os.str();
}

void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace crp
