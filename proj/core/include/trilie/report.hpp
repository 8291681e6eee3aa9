#pragma once

#include "trilie/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trilie {

/// Location of a failed identity: the basis multi-index at which the residual
/// was evaluated, its first nonzero component, and (when a check bundles
/// several identities) which one failed.
struct Witness {
  std::vector<int> indices;
  Scalar residual;
  std::string where;
};

struct VerifyOptions {
  /// Collect every failing tuple instead of stopping at the first.
  bool all_witnesses = false;
};

/// Outcome of one verification. passed == true iff witness is absent.
struct VerificationReport {
  std::string check;
  bool passed = true;
  std::optional<Witness> witness;
  long checked_count = 0;
  /// Extra witnesses, populated only under VerifyOptions::all_witnesses.
  std::vector<Witness> witnesses;
  /// Named sub-verdicts for checks that aggregate several predicates.
  std::vector<std::pair<std::string, bool>> parts;
  std::string note;
};

/// Accumulates failures during a verification loop.
class ReportBuilder {
public:
  ReportBuilder(std::string check, VerifyOptions opt = {})
      : opt_(opt) {
    report_.check = std::move(check);
  }

  void count() { ++report_.checked_count; }

  /// Records a failure; returns true while scanning should continue.
  bool fail(std::vector<int> indices, Scalar residual, std::string where = {}) {
    Witness w{std::move(indices), std::move(residual), std::move(where)};
    if (report_.passed) {
      report_.passed = false;
      report_.witness = w;
    }
    if (opt_.all_witnesses) {
      report_.witnesses.push_back(std::move(w));
      return true;
    }
    return false;
  }

  bool passed() const { return report_.passed; }
  VerificationReport& raw() { return report_; }
  VerificationReport take() { return std::move(report_); }

private:
  VerifyOptions opt_;
  VerificationReport report_;
};

} // namespace trilie
