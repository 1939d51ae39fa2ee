#pragma once

#include "zagraph/graph.hpp"
#include "zagraph/ideal.hpp"
#include "zagraph/invariants.hpp"
#include "zagraph/ring_expr.hpp"

#include <json.hpp>

#include <chrono>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zag {

enum class Family { zn, gf, products, local, matrix };

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

struct CatalogLimits {
  std::size_t max_order = 64;
  std::set<Family> families{Family::zn, Family::gf, Family::products, Family::local, Family::matrix};
};

// Everything the checks need about a ring that does not depend on a graph.
struct RingProfile {
  ElementClasses classes;
  IdealLattice lattice;
  SpectrumSummary spectrum;
  RingPredicates predicates;
  std::optional<std::vector<FiniteRing>> crt;  // field factors when R is a product of fields
};

struct RingCatalogEntry {
  RingSpec spec;
  std::string provenance;  // render(spec); re-elaborates to the same tables
  FiniteRing ring;
  std::optional<RingProfile> profile;
  std::string profile_error;  // set when the profile could not be computed
};

RingCatalogEntry make_entry(RingSpec spec, const RingLimits& limits = {});

// Deterministic catalog of rings of order <= max_order from the selected
// families; duplicates (same provenance) are dropped.
std::vector<RingCatalogEntry> build_catalog(const CatalogLimits& limits, const RingLimits& ring_limits = {});

enum class Verdict { pass, fail, inapplicable, skipped };

std::string_view verdict_name(Verdict v) noexcept;

struct CheckRecord {
  std::string check_id;
  std::string ring;
  Verdict verdict = Verdict::pass;
  std::string detail;
  nlohmann::ordered_json counterexample;  // null unless the verdict is fail
  std::chrono::microseconds elapsed{0};
};

struct TheoremInfo {
  std::string_view id;
  std::string_view statement;
  bool runtime_check;  // false for entries that are documentation only
  std::string_view note;
};

// Traceability table: every runtime check id appears exactly once.
std::span<const TheoremInfo> theorem_table();

struct RingAnalysis {
  const RingCatalogEntry* entry = nullptr;
  SimpleGraph za;
  InvariantReport za_invariants;
  std::optional<SimpleGraph> coann;
};

RingAnalysis analyze(const RingCatalogEntry& entry, const InvariantOptions& opts = {});

std::vector<CheckRecord> check_classifications(const RingAnalysis& a);
std::vector<CheckRecord> check_metrics(const RingAnalysis& a);
std::vector<CheckRecord> check_structure_lemmas(const RingAnalysis& a);

// All three groups for one analysed ring, timed.
std::vector<CheckRecord> run_checks(const RingAnalysis& a);

struct TheoremReport {
  std::vector<CheckRecord> records;
  std::size_t rings = 0;
  std::size_t pass = 0, fail = 0, inapplicable = 0, skipped = 0;

  bool ok() const noexcept { return fail == 0; }
};

struct SuiteOptions {
  InvariantOptions invariants;
  unsigned threads = 0;  // 0: hardware concurrency
};

TheoremReport run_suite(std::span<const RingCatalogEntry> catalog, const SuiteOptions& opts = {});

// Definition-level adjacency: scans the ring for an element other than 0
// annihilating both x and y on the given side.
bool oracle_adjacent(const FiniteRing& r, Element x, Element y, Side side = Side::left);

nlohmann::ordered_json record_json(const CheckRecord& r, bool with_timing = false);
nlohmann::ordered_json report_json(const TheoremReport& report, bool with_timing = false);
std::string report_text(const TheoremReport& report, bool with_timing = false);

}  // namespace zag
