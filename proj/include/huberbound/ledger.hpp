#pragma once

#include <map>
#include <optional>
#include <string>

#include "huberbound/invariants.hpp"

namespace hb {

enum class LedgerMode { kCocompact, kCofinite };

// Evaluated constant table. C bounds the spectral counting function by
// C (r^2 + 1/4); C_u bounds the prime geodesic error term by
// C_u x^{3/4} / log x. C22 is negative by its verbatim formula.
struct ConstantLedger {
    LedgerMode mode = LedgerMode::kCofinite;
    std::string b_source;  // "computed" or "override"

    // slot name -> value, e.g. "C1", "B", "C", "C10", ..., "Cu", "mu"
    std::map<std::string, Real> slots;

    // echo of the invariants the evaluation consumed
    std::vector<std::pair<std::string, std::string>> inputs;

    const Real& at(const std::string& k) const { return slots.at(k); }
};

struct LedgerOptions {
    // Pin the spectral-counting constant C instead of the computed value;
    // the C12..Cu chain then runs from the pinned value.
    std::optional<Real> C_override;
    long prec = 0;  // 0: max(default, 128)
};

Real compute_B_cofinite(const Real& Y, const std::vector<Real>& diameters);
Real compute_B_cocompact(const Real& diameter, const Real& area);

ConstantLedger cocompact_ledger(const FundamentalInvariants& inv, const LedgerOptions& opts = {});
ConstantLedger cofinite_ledger(const FundamentalInvariants& inv, const LedgerOptions& opts = {});

// Machine-readable key = value report (20 significant digits), stable order,
// defining formula in a trailing comment.
std::string ledger_report(const ConstantLedger& ledger);

// Parse a report back into slot values (comments ignored).
std::map<std::string, Real> parse_ledger_report(const std::string& text,
                                                long prec = Real::default_precision());

}  // namespace hb
