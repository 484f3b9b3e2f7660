#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weilrep/scalar.hpp"

namespace weilrep {

enum class Status { Pass, Fail, Skip };

std::string to_string(Status status);

using Value = std::variant<std::monostate, std::int64_t, CycloNum, Complex, std::string>;

struct CheckRecord {
  std::string id;
  Status status = Status::Pass;
  Value lhs;
  Value rhs;
  std::optional<double> residual;  // float backend only
};

struct SuiteParams {
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> primes_up_to;
  Backend backend = Backend::Exact;
  std::optional<double> tol;  // float backend only
  std::uint64_t seed = 1;
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0.0;

  /// Fail iff any check failed.
  Status status() const;
  bool passed() const { return status() != Status::Fail; }
  std::size_t count(Status s) const;
};

}  // namespace weilrep
