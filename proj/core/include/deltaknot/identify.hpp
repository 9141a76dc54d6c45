#pragma once

#include <string>
#include <vector>

#include "deltaknot/fingerprint.hpp"

namespace dk {

/// One reference-table row; polynomials in the library's canonical
/// convention after load-time normalization.
struct KnotRecord {
  std::string name;
  int crossings = 0;
  Laurent homfly;     // in (v, z)
  Laurent jones;      // in t
  Laurent alexander;  // in t
};

/// Immutable reference knot table loaded from CSV
/// (`name,crossings,homfly,jones,alexander`, '#' comments). Rows are
/// validated against the specialization identities; a row stated in the
/// mirrored HOMFLY convention is flipped into ours and counted.
class ReferenceTable {
public:
  static ReferenceTable load(const std::string& path);
  static ReferenceTable from_csv(const std::string& text);

  const std::vector<KnotRecord>& records() const { return records_; }
  const KnotRecord* find(const std::string& name) const;
  int max_crossings() const;
  /// Rows whose polynomials arrived mirror-flipped and were normalized.
  int normalized_rows() const { return normalized_; }

private:
  std::vector<KnotRecord> records_;
  int normalized_ = 0;
};

enum class MatchStatus { Unique, Ambiguous, Unknown };

/// Name given to the trivial fingerprint (1, 1, 1), which prime tables
/// never list.
inline const char* kUnknotName = "unknot";

struct MatchResult {
  MatchStatus status = MatchStatus::Unknown;
  std::vector<std::string> names;  // sorted; 1 for Unique, >= 2 Ambiguous
  bool mirrored = false;  // matched through the mirror fingerprint only
};

/// Mirror-closed lookup: f matches a record when either f or
/// mirror_fingerprint(f) equals the record's polynomials.
MatchResult identify(const Fingerprint& f, const ReferenceTable& table);

}  // namespace dk
