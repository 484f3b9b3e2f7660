#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "weilrep/errors.hpp"
#include "weilrep/scalar.hpp"
#include "weilrep/suites.hpp"
#include "weilrep/tables.hpp"

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Weil representation checks"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::optional<std::int64_t> n, bound;
  std::string backend = "exact";
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string json_path;
  bool no_timing = false, quiet = false;
  verify->add_option("--suite", suite)->required();
  auto* n_opt = verify->add_option("--n", n, "modulus");
  verify->add_option("--primes-up-to", bound, "prime bound")->excludes(n_opt);
  verify->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--tol", tol, "float tolerance (default 1e-9 n)");
  verify->add_option("--seed", seed);
  verify->add_option("--json", json_path, "write JSON report here");
  verify->add_flag("--no-timing", no_timing, "omit elapsed_ms from the JSON report");
  verify->add_flag("-q,--quiet", quiet, "summary line only");

  auto* table = app.add_subcommand("table", "emit a CSV table");
  std::string kind, csv_path;
  std::int64_t table_bound = 0;
  table->add_option("--kind", kind)->required()->check(CLI::IsMember({"reciprocity", "gauss-signs", "constants"}));
  table->add_option("--bound", table_bound)->required();
  table->add_option("--csv", csv_path, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      weilrep::SuiteParams params;
      params.n = n;
      params.primes_up_to = bound;
      params.backend = weilrep::backend_from_string(backend);
      params.tol = tol;
      params.seed = seed;
      const auto report = weilrep::run_suite(suite, params);
      std::string text = weilrep::report_to_text(report);
      if (quiet) text = text.substr(text.rfind('\n', text.size() - 2) + 1);
      std::cout << text;
      if (!json_path.empty() && !write_file(json_path, report_to_json(report, !no_timing).dump(2) + "\n")) {
        std::cerr << "cannot write " << json_path << "\n";
        return 2;
      }
      return report.passed() ? 0 : 1;
    }
    const std::string csv = weilrep::emit_table(kind, table_bound);
    if (csv_path.empty()) {
      std::cout << csv;
    } else if (!write_file(csv_path, csv)) {
      std::cerr << "cannot write " << csv_path << "\n";
      return 2;
    }
    return 0;
  } catch (const weilrep::UnknownSuite& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const weilrep::InvalidParams& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const weilrep::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
