#ifndef DIMERCOUNT_VERIFY_HPP
#define DIMERCOUNT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <dimercount/counts.hpp>
#include <dimercount/oracle.hpp>

namespace dimercount {

struct CheckResult {
    std::string name;      // e.g. "Table1.n3.x"
    std::string expected;  // golden value (decimal string) or stated property
    std::string actual;
    bool pass = false;
    std::string source;  // golden-set id the expectation comes from
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

struct VerifyOptions {
    std::optional<GraphFamily> family;  // unset = both
    int exact_cap = 12;
    int sandwich_max_stage = 10;
    unsigned sandwich_precision_bits = 8192;  // resolves the k = n = 10 margin (~10^-1493)
    OracleBudget oracle_budget{};
    bool oracle_parallel = false;
    bool oracle_sierpx2 = false;  // also brute-force the SierpX n=2 total (slow-ish)
};

// Golden-set comparisons split out so tests can feed deliberately corrupted
// ledgers and watch the right rows fail.
void check_counts_golden(VerifyReport& report, GraphFamily family,
                         const std::vector<StageRecord>& ledger);
void check_ratios_golden(VerifyReport& report, GraphFamily family,
                         const std::vector<StageRecord>& ledger);
void check_oracle_agreement(VerifyReport& report, GraphFamily family,
                            const std::vector<StageRecord>& ledger, const VerifyOptions& opt);
void check_ratio_invariants(VerifyReport& report, GraphFamily family,
                            const std::vector<StageRecord>& ledger);
void check_count_sandwich(VerifyReport& report, const std::vector<StageRecord>& hanoi_ledger,
                          const VerifyOptions& opt);
void check_entropy_golden(VerifyReport& report, GraphFamily family);

// The full suite for the selected families. Deterministic output.
VerifyReport run_verify(const VerifyOptions& opt = {});

std::string render_text(const VerifyReport& report);
nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace dimercount

#endif
