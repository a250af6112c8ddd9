#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oldset {

/// Outcome of one claim scan.  Counterexamples are compact edge-list
/// encodings, sorted, so a report is byte-identical across runs apart from
/// the elapsed field.
struct VerificationReport {
    std::string claim;
    std::string population;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    bool verified() const { return counterexamples.empty(); }
};

struct VerifyOptions {
    std::optional<int> max_n;  // override of the claim's default order cap
    int workers = 0;           // 0 = OLDSET_WORKERS env var, else 1
};

/// Claim identifiers: MAIN, NO-DOUBLE, BONDY, ALL-FORCED, CORLOC, H-FOREST,
/// STRIP, SOURCE-SINK, CONSTRUCT, REFLEX-SYM, REFLEX-ORIENT, HALF, TREES,
/// TREE-LEMMAS.  Throws std::invalid_argument on unknown claims and
/// std::length_error when max_n exceeds the claim's hard cap.
VerificationReport verify_claim(std::string_view claim, const VerifyOptions& options = {});

const std::vector<std::string>& claim_names();

std::string format_report(const VerificationReport& report, bool include_elapsed = true);

int default_worker_count();  // OLDSET_WORKERS, else 1

}  // namespace oldset
