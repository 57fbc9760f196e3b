#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rv/block_analysis.hpp"
#include "rv/rational.hpp"

namespace rv {

struct LedgerRow {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    bool pass;
};

struct ReproductionLedger {
    std::vector<LedgerRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

struct ReproduceOptions {
    bool skip_slow = false;         // drop the Monte Carlo spot checks
    long mc_trials = 1000000;
    std::uint64_t seed = 20090708;  // date stamp of the result being verified
    // Test hook: add delta to P4 entry (i, j) (and (j, i)) before the
    // P4-dependent checks, to verify the ledger localizes faults.
    std::optional<std::tuple<int, int, Rational>> perturb_p4;
};

ReproductionLedger reproduce_all(const ReproduceOptions& options = {});

}  // namespace rv
