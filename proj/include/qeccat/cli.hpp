#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeccat::cli {

// Exit codes: 0 success, 2 malformed noise document, 3 valid JSON that is
// not a CPTP channel, 1 anything else.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBadFormat = 2;
inline constexpr int kExitBadChannel = 3;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qeccat::cli
