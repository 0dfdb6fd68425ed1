#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crpoisson/hodge.hpp"
#include "crpoisson/kernels.hpp"
#include "crpoisson/pplus.hpp"
#include "crpoisson/report.hpp"

namespace crp {

inline constexpr const char* kVersion = "crpoisson 1.0.0";

struct CheckContext {
    const Calculus& cal;
    const Hodge& hodge;
    const KernelFactory& kernels;
    const PPlusAlgebra& pplus;
    std::uint64_t seed = 0;

    int n() const { return cal.n(); }
    SplitMix rng(std::uint64_t salt) const { return SplitMix(seed ^ (salt * 0x9e3779b97f4a7c15ULL)); }
};

struct CheckDef {
    std::string id;
    std::string anchor;  // paper anchor, or "plumbing"
    std::function<CheckResult(const CheckContext&)> run;
};

/// Full registry, ordered by check id. Ids are dotted; the first component
/// names the suite.
const std::vector<CheckDef>& checkRegistry();

std::vector<std::string> suiteNames();
bool knownSuite(const std::string& suite);

/// Anchors that must each have at least one check (registry self-test).
const std::vector<std::string>& requiredAnchors();

Report runSuite(int n, const std::string& suite, std::uint64_t seed, int maxRank = 4);

/// Helpers shared with tests.
Scalar randomScalar(SplitMix& rng);
std::vector<Scalar> randomVector(SplitMix& rng, int n);
Multiform randomForm(SplitMix& rng, int n, int terms);

}  // namespace crp
