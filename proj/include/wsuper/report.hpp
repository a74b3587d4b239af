#pragma once

#include "wsuper/relations.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace wsuper {

/// Everything a verify run produces. Assembled by a single owner after the checks finish.
struct SuiteReport {
  std::string algebra;
  std::vector<RelationReport> relations;
  std::optional<C0Result> c0;
  std::vector<WGenerator> generators;
  bool passed() const;
};

/// Runs the requested relation ids. With threads > 1 each id runs on its own copy of the lab;
/// results are joined back in the fixed suite order.
SuiteReport run_suite(RelationsLab& lab, const std::string& algebra, const std::vector<std::string>& ids, int max_deg,
                      int threads);

/// Worker count from WSUPER_THREADS (default 1, invalid values rejected with InputError).
int thread_budget();

nlohmann::ordered_json setup_json(const MinimalSetup& setup);
nlohmann::ordered_json c0_json(const MinimalSetup& setup, const C0Result& c0);
/// Deterministic report: no timings, fixed key and pair order.
nlohmann::ordered_json report_json(const MinimalSetup& setup, const SuiteReport& report);
std::string report_text(const MinimalSetup& setup, const SuiteReport& report);

}  // namespace wsuper
