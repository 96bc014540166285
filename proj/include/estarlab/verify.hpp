#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "estarlab/claims.hpp"

namespace estarlab {

/// One pinned assertion about a worked example. `match` compares the
/// published value against the recomputed one; mismatches are also recorded
/// as findings with the recomputed value.
struct GoldenResult {
    std::string id;
    std::string description;
    bool match = true;
    std::string expected;
    std::string got;
};

struct VerifyOptions {
    CorpusSpec corpus;
    RunOptions run;
    Def41Reading reading = Def41Reading::resolved;
};

struct VerifyResult {
    std::vector<GoldenResult> goldens;
    std::vector<ClaimReport> claims;
    nlohmann::json findings = nlohmann::json::array();
    int exit_code = 0;  // 0 = hard invariants hold and goldens match

    nlohmann::json to_json() const;
    std::string human() const;
};

/// Runs every golden example plus the whole claim registry on the standard
/// corpus. Deterministic for a fixed (options); independent of thread count.
VerifyResult verify_paper(const VerifyOptions& options = {});

nlohmann::json claim_report_to_json(const ClaimReport& report);

}  // namespace estarlab
