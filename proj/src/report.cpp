#include "rpq/report.hpp"

#include <algorithm>

namespace rpq {

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::Passed: return 0;
    case Verdict::Inconclusive: return 1;
    case Verdict::Failed: return 2;
  }
  return 2;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Passed: return "passed";
    case Verdict::Failed: return "failed";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "failed";
}

void merge_into(BoundCheckReport& acc, const BoundCheckReport& next) {
  if (acc.trials == 0) {
    const int trials = next.trials;
    acc = next;
    acc.trials = trials;
    return;
  }
  const int before = severity(acc.verdict);
  const int after = severity(next.verdict);
  if (after > before || (after == before && next.worst_margin < acc.worst_margin)) {
    acc.witness = next.witness;
  }
  if (after > before) {
    acc.verdict = next.verdict;
  }
  acc.worst_margin = std::min(acc.worst_margin, next.worst_margin);
  acc.trials += next.trials;
}

}  // namespace rpq
