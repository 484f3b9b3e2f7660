#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "weilrep/check.hpp"

namespace weilrep {

/// dft, weil, egorov, character, chtau, tensor, qr, jacobi, gauss-sign,
/// equivariance, group, all.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite, or InvalidParams for parameters outside a suite's
/// domain (even n, composite p where a prime is needed, ...).
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

nlohmann::ordered_json value_to_json(const Value& v);
/// Top level {version, suite, params, checks, elapsed_ms, status}. With
/// include_timing = false, elapsed_ms is null so reports are byte-stable.
nlohmann::ordered_json report_to_json(const SuiteReport& report, bool include_timing = true);

/// One line per check plus a summary line.
std::string report_to_text(const SuiteReport& report);

}  // namespace weilrep
