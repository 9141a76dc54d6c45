#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deltaknot/delta.hpp"
#include "deltaknot/homfly.hpp"
#include "deltaknot/identify.hpp"
#include "deltaknot/shadow.hpp"

namespace dk {

/// Per-n pipeline statistics.
struct TabulationStats {
  int n = 0;
  int projections = 0;       // ingested
  int knot_projections = 0;  // retained single-strand projections
  long long diagrams = 0;    // 4^n expansion, pre-dedup
  long long after_dedup = 0; // mirror representatives
};

/// One tabulated knot (or unresolved fingerprint class).
struct KnotEntry {
  std::vector<std::string> names;  // 1 name, or >= 2 for an ambiguity class
  MatchStatus status = MatchStatus::Unknown;
  int delta_number = 0;   // minimal n where the fingerprint appeared
  std::string witness;    // lexicographically least dPD at that n
  bool mirrored = false;  // identified through the mirror fingerprint

  std::string class_name() const;  // names joined with '|'
};

struct TabulationReport {
  std::vector<TabulationStats> stats;
  std::vector<KnotEntry> knots;     // named knots, sorted by (delta, name)
  std::vector<KnotEntry> unknowns;  // fingerprints absent from the table
  long long unknot_diagrams = 0;
  long long total_diagrams = 0;  // across all n, pre-dedup
};

/// All 4^n type assignments of one projection, lexicographic in S<T<U<W.
std::vector<DeltaDiagram> enumerate_assignments(const ShadowProjection& p);

/// One representative per mirror pair under canonical keying; duplicates
/// collapse. Order: first appearance.
std::vector<DeltaDiagram> dedupe_mirrors(const std::vector<DeltaDiagram>& in);

/// Parses one projection per line ('#' comments, blank lines skipped).
std::vector<ShadowProjection> load_spd_file(const std::string& path);

struct TabulationOptions {
  /// (n, full Tb_n projection list) per requested n, ascending.
  std::vector<std::pair<int, std::vector<ShadowProjection>>> tb_sets;
  const ReferenceTable* reference = nullptr;
  std::string cache_path;          // optional fingerprint cache (appended)
  HomflyEngine* engine = nullptr;  // optional shared engine
};

TabulationReport run_pipeline(const TabulationOptions& opts);

/// Table-1 style: one line per n, "n count name name ...".
std::string emit_table1(const TabulationReport& report);
/// Table-2 style: one line per knot, "name witness-dPD", ambiguity classes
/// and unknowns appended as comments.
std::string emit_table2(const TabulationReport& report);

}  // namespace dk
