#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crp {

enum class CheckStatus { Pass, Fail, Discrepancy, Skipped };

std::string statusName(CheckStatus s);

struct CheckResult {
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // required for fail/discrepancy
    long elapsedMs = 0;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string w) { return {CheckStatus::Fail, std::move(w), 0}; }
    static CheckResult discrepancy(std::string w) {
        return {CheckStatus::Discrepancy, std::move(w), 0};
    }
    static CheckResult skipped(std::string w = "") {
        return {CheckStatus::Skipped, std::move(w), 0};
    }
};

struct CheckOutcome {
    std::string id;
    std::string anchor;
    CheckResult result;
};

struct Report {
    int n = 0;
    std::string suite;
    std::string version;
    std::uint64_t seed = 0;
    std::vector<CheckOutcome> checks;  // ordered by check id

    int countOf(CheckStatus s) const;
    bool anyFail() const { return countOf(CheckStatus::Fail) > 0; }
    bool anyDiscrepancy() const { return countOf(CheckStatus::Discrepancy) > 0; }
};

/// Canonical JSON per the report schema; timings are excluded unless
/// requested so that equal (n, suite, seed) runs are byte-identical.
std::string reportToJson(const Report& r, bool includeTimings = false);
std::string reportToText(const Report& r);

void writeFile(const std::string& path, const std::string& content);

/// Deterministic splitmix64 stream; self-contained so reports do not depend
/// on the standard library's distribution implementations.
class SplitMix {
  public:
    explicit SplitMix(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t state_;
};

}  // namespace crp
