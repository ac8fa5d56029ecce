#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rpq {

enum class Verdict { Passed, Failed, Inconclusive };

std::string_view to_string(Verdict verdict);

/// Gate values for checks whose theorem has a growth-rate hypothesis.
struct GateDiagnostics {
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;
};

/// Evidence for one inequality check. worst_margin is the minimum over all
/// evaluated points of (bound - observed); the witness names where it occurred.
struct BoundCheckReport {
  Verdict verdict = Verdict::Passed;
  double worst_margin = 0.0;
  std::string witness;
  int trials = 0;
  std::optional<GateDiagnostics> gate;
  std::string note;

  bool passed() const noexcept { return verdict == Verdict::Passed; }
};

/// Folds `next` into `acc`: the worse verdict wins, margins take the minimum,
/// trials add. Called in trial order so the result is reproducible.
void merge_into(BoundCheckReport& acc, const BoundCheckReport& next);

}  // namespace rpq
