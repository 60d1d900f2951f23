#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qito/report.hpp"

namespace qito {

struct VerifyOptions {
  /// Largest label (twice-value); each suite has its own default.
  std::optional<int> jmax;
  /// Seed for randomized checks.
  std::uint64_t seed = 1;
  /// Decimal digits for numeric checks.
  int digits = 30;
  /// Classical suite: "s3", "z2" or a JSON table file.
  std::string group = "s3";
};

Report verify_hopf(const VerifyOptions& o);           // default jmax 3
Report verify_cg(const VerifyOptions& o);             // default jmax 3
Report verify_haar(const VerifyOptions& o);           // default jmax 2
Report verify_ito(const VerifyOptions& o);            // default jmax 3
Report verify_wigner_eckart(const VerifyOptions& o);  // default jmax 3
Report verify_boson(const VerifyOptions& o);          // default jmax 2
Report verify_classical(const VerifyOptions& o);

/// hopf, cg, haar, ito, wigner-eckart, boson, classical.
const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown name.
Report run_suite(const std::string& name, const VerifyOptions& o);

namespace detail {
// Counts failures of one property and records a single check for it.
struct Tally {
  std::size_t total = 0, bad = 0;
  std::string first;

  void operator()(bool ok, const std::string& where) {
    ++total;
    if (!ok && bad++ == 0) first = where;
  }
  void into(Report& rep, const std::string& name) const {
    rep.add(name, bad == 0, bad == 0 ? std::to_string(total) + " cases" : std::to_string(bad) + " of " + std::to_string(total) + " fail, first " + first);
  }
};

// "3/2" style label for a twice-value.
std::string half(int twice);
}  // namespace detail

}  // namespace qito
