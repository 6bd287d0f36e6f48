#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "linf/extremal.hpp"

namespace linf {

inline constexpr const char* kToolVersion = "1.0.0";

// A verification run: tool/version header, the sweep description, one row
// per parameter tuple. CSV round-trips losslessly.
struct VerificationReport {
    std::string tool_version = kToolVersion;
    std::string mode;
    std::string ranges;
    std::vector<ExtremalRecord> rows;

    bool pass() const;
};

void write_report_csv(std::ostream& os, const VerificationReport& report);
VerificationReport read_report_csv(std::istream& is);

}  // namespace linf
