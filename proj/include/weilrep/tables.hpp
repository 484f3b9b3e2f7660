#pragma once

#include <cstdint>
#include <string>

namespace weilrep {

/// CSV (header row, LF endings) for kind in {reciprocity, gauss-signs,
/// constants}. Throws InvalidParams for other kinds.
std::string emit_table(const std::string& kind, std::int64_t bound);

/// "i*sqrt(3)", "-sqrt(5)", "-3*sqrt(3)*i" style labels for values of the form
/// i^k n^(m/2).
std::string sqrt_power_label(int i_power, std::int64_t n, std::int64_t half_exponent);

}  // namespace weilrep
