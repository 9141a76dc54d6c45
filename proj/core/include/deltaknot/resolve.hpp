#pragma once

#include <array>
#include <string>
#include <vector>

#include "deltaknot/delta.hpp"
#include "deltaknot/triple.hpp"

namespace dk {

/// Replacement tangle spliced in place of a site (a group of vertices with
/// its boundary legs in canonical counterclockwise order). New vertices
/// carry mixed labels: a delta type letter or a T/M/B role word. Each leg
/// entry routes a boundary leg either to a port {vertex, slot} of a new
/// vertex or, with vertex -1, straight to another leg (a plain arc).
struct TanglePatch {
  std::vector<std::string> labels;
  std::vector<std::array<int, 4>> internal;  // {v1, s1, v2, s2}
  std::vector<std::array<int, 2>> legs;      // {v, slot} or {-1, other leg}
};

struct PatchSite {
  std::vector<int> vertices;  // consumed base vertices
  std::vector<int> legs;      // outgoing base darts, counterclockwise
  TanglePatch patch;
};

struct PatchedDiagram {
  ShadowProjection shadow;          // empty when everything cancelled
  std::vector<std::string> labels;  // per new vertex
  int free_loops = 0;               // crossing-free components produced
};

/// Replaces every site at once; every base vertex must belong to exactly
/// one site. The workhorse behind all resolution rules.
PatchedDiagram apply_patches(const ShadowProjection& base,
                             const std::vector<PatchSite>& sites);

struct ResolutionReport {
  std::string input_kind;
  int input_crossings = 0;
  std::string output_kind;
  int output_crossings = 0;
  std::vector<std::string> rules;  // one entry per site, rule id
  int free_loops = 0;
};

/// Theorem A direction: each delta crossing becomes two triple crossings.
TripleDiagram delta_to_triples(const DeltaDiagram& d);

/// The 2n-resolution: each triple crossing becomes two delta crossings.
DeltaDiagram triple_to_deltas_naive(const TripleDiagram& d);

/// Tangle-aware resolution: T1 tangles spend at most one delta and T2
/// tangles at most three, so the output has at most 2n - t1 - t2 deltas
/// for the disjoint tangle counts of the underlying projection.
std::pair<DeltaDiagram, ResolutionReport> triple_to_deltas_optimized(
    const TripleDiagram& d);

/// 2n - t1 - t2 for the maximal disjoint tangle counts of d's projection.
int delta_upper_bound(const TripleDiagram& d);

/// Site decomposition used by the tangle-aware resolver, with the rule key
/// per site and the patch left empty. Keys: "T1:<parity>:<loop roles>"
/// (free strand in the middle), "T1:arcs" (free strand on top or bottom),
/// "T2:<parity>:<word1>:<word2>", and "naive:<word>". Exposed so the rule
/// search tool replays the exact sites the resolver will use.
struct SiteSpec {
  PatchSite site;
  std::string key;
};
std::vector<SiteSpec> resolution_sites(const TripleDiagram& d);

/// Theorem A bound: a k-delta diagram caps the triple-crossing number at 2k.
int c3_upper_from_delta(int c_delta);

/// Effective boundary legs of vertex v: dart of boundary slot k is
/// legs[k], with slot 0 placed on an inflow of the natural orientation.
std::vector<int> oriented_legs(const ShadowProjection& base, int v);

}  // namespace dk
