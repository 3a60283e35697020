#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordamalg/class_spec.hpp"
#include "ordamalg/oracle.hpp"
#include "ordamalg/structure.hpp"

namespace ordamalg {

enum class Claim { SAP_fails, AP_fails };

std::string_view to_string(Claim claim);

/// A triple witnessing the failure of (strong) amalgamation in a class. Infinite examples are
/// stored as finite truncations with partial operations and flagged.
struct RegisteredCounterexample {
  std::string name;
  std::string summary;
  AmalgamationTriple triple;
  Claim claim = Claim::AP_fails;
  ClassSpec spec;
  bool truncated = false;
  std::string truncation_note;
  int max_extra = 0;  // fresh elements the AP search allows
};

/// Stable, sorted list of entry names.
std::vector<std::string> list_counterexamples();

/// Throws UnknownName. `level` is the truncation level of the successor examples (their carrier
/// {0, ..., level}); other entries ignore it.
RegisteredCounterexample get_counterexample(std::string_view name, int level = 4);

struct CounterexampleReport {
  bool pass = false;
  OracleVerdict verdict;                  // the search refuting the claim's property
  std::optional<OracleVerdict> weaker;    // for SAP_fails: the plain amalgam search
  std::string text;
};

/// Runs the oracle against the entry's claim: no strong amalgam for SAP_fails (plus an
/// informational amalgam search), no amalgam within max_extra fresh elements for AP_fails.
/// Truncated entries report that the claim is confirmed for the truncation only.
CounterexampleReport verify_counterexample(std::string_view name, const SearchOptions& options = {},
                                           int level = 4);
CounterexampleReport verify_counterexample(const RegisteredCounterexample& entry,
                                           const SearchOptions& options = {});

}  // namespace ordamalg
