#pragma once

#include <string>
#include <vector>

#include "deltaknot/planar_map.hpp"

namespace dk {

/// Face-configuration template for one of the triple-point tangles T1..T4.
/// Three kinds cover all four: "face" (a single face of the given size),
/// "edge_pair" (two faces of the given sizes sharing an edge), and "fan"
/// (`count` distinct faces of size `attached_size` hanging off consecutive
/// edges of a host face with at least `host_min_size` sides).
struct PatternSpec {
  std::string id;
  std::string kind;
  int size = 0;                  // face
  int sizes[2] = {0, 0};         // edge_pair
  int attached_size = 0;         // fan
  int count = 0;                 // fan
  int host_min_size = 0;         // fan
};

/// Parses a JSON array of pattern objects (the schema written by
/// default_patterns_json, shipped as data/tangle_patterns.json).
std::vector<PatternSpec> load_patterns(const std::string& json_text);
/// Built-in copy of the shipped template file.
const std::string& default_patterns_json();
std::vector<PatternSpec> default_patterns();

struct TangleEmbedding {
  std::string pattern;
  std::vector<int> vertices;  // sorted; the disjointness footprint
  std::vector<int> faces;     // face indices realizing the template
};

/// All embeddings of one template, with symmetric duplicates collapsed by
/// their (pattern, vertex set) key.
std::vector<TangleEmbedding> detect_pattern(const PlanarMap& m,
                                            const PatternSpec& pattern);

struct TangleCount {
  int t1 = 0, t2 = 0, t3 = 0, t4 = 0;
  std::vector<TangleEmbedding> selected;
  int sum() const { return t1 + t2 + t3 + t4; }
};

/// Exact maximal pairwise vertex-disjoint selection, lexicographically
/// maximizing (t1 + t2, t1, t2, t3 + t4). Exponential in the number of
/// embeddings; intended for small maps.
TangleCount max_disjoint_counts(const PlanarMap& m);
TangleCount max_disjoint_counts(const PlanarMap& m,
                                const std::vector<PatternSpec>& patterns);

struct ExistenceReport {
  bool ok = false;
  std::string detail;  // on failure, the face vector and map code
};

/// Checks that at least one of T1..T4 embeds. Must hold for every knot or
/// non-split-link projection; a failure report would falsify the template
/// transcription rather than the theorem.
ExistenceReport verify_existence(const PlanarMap& m);

struct FaceFlag {
  int face = 0;
  int length = 0;
  int bigon_edges = 0;
  int limit = 0;  // floor(2m/3)
  bool over_limit = false;
};

struct FaceIdentityReport {
  int residual = 0;  // 2 f1 + f2 - 6 - sum_{k>=4} (k-3) f_k
  std::vector<int> face_vector;
  std::vector<FaceFlag> flags;  // one per face of length >= 4
};

FaceIdentityReport face_identity_report(const PlanarMap& m);

}  // namespace dk
