#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramcoh/h1.hpp"
#include "ramcoh/unit_modules.hpp"

namespace ramcoh {

struct ExpectedInvariants {
  int e = 1;
  int f = 1;
  int t = 1;
  int w = 1;
  std::vector<int> breaks;
};

struct CorpusEntry {
  std::string label;
  TowerSpec spec;
  std::optional<ExpectedInvariants> expected;
};

/// Parses {"entries": [{"label", "p", "unramified_poly"?, "eisenstein_polys",
/// "expected"?}]}. Throws ConfigError with line/column or the entry path.
std::vector<CorpusEntry> parse_corpus(const std::string& text);
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// H^1(G, U^i/U^N) for i = 0..max_level, plus the images
/// im(H^1(U^i/U^{N+s}) -> H^1(U^j/U^N)) for j <= i. The images are what the
/// checks compare; s is the margin.
class FiltrationCohomology {
 public:
  /// The field of g must carry at least N + s digits.
  FiltrationCohomology(std::shared_ptr<const GaloisGroup> g, int precision, int margin, int max_level);

  int precision() const { return precision_; }
  int margin() const { return margin_; }
  int max_level() const { return max_level_; }
  const GaloisGroup& galois() const { return *galois_; }

  const UnitQuotientModule& module(int i) const { return *modules_.at(i); }
  const CohomologyGroup& cohomology(int i) const { return *h1_.at(i); }
  const UnitQuotientModule& deep_module(int i) const { return *deep_modules_.at(i); }
  const CohomologyGroup& deep_cohomology(int i) const { return *deep_h1_.at(i); }

  /// Matrix of H^1(U^i/U^{N+s}) -> H^1(U^j/U^N), j <= i.
  IntMatrix induced(int i, int j) const;
  FgSubgroup stable_image(int i, int j) const;
  /// [f_pi] in H^1(U^0/U^N).
  CohomologyClass fundamental_class() const;

 private:
  std::shared_ptr<const GaloisGroup> galois_;
  int precision_;
  int margin_;
  int max_level_;
  std::vector<std::shared_ptr<const UnitQuotientModule>> modules_, deep_modules_;
  std::vector<std::shared_ptr<const CohomologyGroup>> h1_, deep_h1_;
};

enum class CheckStatus { Pass, Fail, HypothesisNotMet, Skipped };
std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  nlohmann::ordered_json computed;
  nlohmann::ordered_json expected;
  int precision = 0;
  nlohmann::ordered_json stabilization;
  std::string note;
};

/// The fixed check names, in report order.
const std::vector<std::string>& check_names();

struct VerifyOptions {
  std::optional<int> precision;
  int max_level = 4;
  std::uint64_t brute_force_budget = 10'000'000;
  /// choose_precision gives up after this many steps above the floor.
  int precision_search_steps = 12;
  int stabilization_step = 2;
  int random_units = 3;
  std::uint64_t seed = 20240601;
};

struct EntryReport {
  std::string label;
  std::optional<std::string> error_code;
  std::string error_message;
  int e = 0, f = 0, t = 0, w = 0;
  std::vector<int> breaks;
  std::optional<ExpectedInvariants> expected;
  bool expected_match = true;
  int precision = 0;
  int margin = 0;
  std::vector<CheckRecord> checks;

  const CheckRecord& check(const std::string& name) const;
  /// No check failed and the pinned invariants match.
  bool passed() const;
};

/// max(max_break, 0) + max_level + 4.
int precision_floor(const GaloisGroup& g, int max_level);
/// Default margin s = 2 (max(max_break, 0) + 1) + e.
int default_margin(const GaloisGroup& g);
/// Smallest N >= floor with the invariant factors of H^1(U^i/U^N) and
/// H^1(U^i/U^{N+2}) equal for i = 0..max_level; throws NoStabilization.
int choose_precision(const TowerSpec& spec, const VerifyOptions& opts);

/// Runs C1..C7 at (N, s) only.
std::vector<CheckRecord> run_checks(std::shared_ptr<const GaloisGroup> g, int precision, int margin,
                                    const VerifyOptions& opts);

/// Full verification of one entry, including the rerun at N + 2 that fills
/// each check's stabilization record. Library errors end up in error_code.
EntryReport verify_entry(const CorpusEntry& entry, const VerifyOptions& opts);

nlohmann::ordered_json report_to_json(const std::vector<EntryReport>& reports);

/// Loads, verifies and writes the report. Returns 0 iff every non-skipped
/// check passes. Throws ConfigError on a bad config.
int run_corpus(const std::string& config_path, const std::string& out_path, const VerifyOptions& opts);

}  // namespace ramcoh
