#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "formations/analysis.hpp"
#include "formations/config.hpp"
#include "formations/groupspec.hpp"

namespace formations {

struct Corpus {
  std::vector<ManifestEntry> entries;
  Budgets budgets;
};

// The stock test bed: cyclic, dihedral, symmetric and alternating groups,
// a handful of linear groups, direct products, wreath products and a few
// designed extensions. Every entry builds under the default budgets.
Corpus default_corpus();

struct CheckInfo {
  std::string id;
  std::string description;
  bool in_default_set = true;  // the "all" selection; opt-in checks carry false
};

// Stable catalogue of property checks, keyed by id.
const std::vector<CheckInfo>& check_catalogue();

// Ids run by the "all" selection, in catalogue order.
std::vector<std::string> default_check_ids();

enum class CellStatus { Pass, Fail, Skip };

// Outcome of one check on one group (or designed instance).
struct CellResult {
  std::string label;
  CellStatus status = CellStatus::Pass;
  std::size_t hits = 0;   // times the check's hypothesis was exercised
  std::string detail;     // failure witness or skip reason, empty on clean pass
};

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = true;      // no failing cell (skips do not count as passes)
  std::size_t hits = 0;
  std::size_t cells_passed = 0;
  std::size_t cells_failed = 0;
  std::size_t cells_skipped = 0;
  std::vector<CellResult> cells;  // sorted by label
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by id
  bool all_passed = true;
};

// Runs the selected checks over the corpus. Cells (check x group) are
// independent and may run on several threads; the report is assembled in
// sorted order regardless of scheduling. Unknown ids raise DomainError.
// threads = 0 picks the hardware count.
VerifyReport run_checks(const Corpus& corpus, const std::vector<std::string>& ids,
                        unsigned seed = 0, unsigned threads = 0);

// One block per check plus a summary table (id, status, hits, skips).
std::string verify_text(const VerifyReport& report);

// The same content as a JSON document with stable key order.
std::string verify_structured(const VerifyReport& report);

}  // namespace formations
