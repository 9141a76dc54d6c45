#pragma once

#include "deltaknot/classical.hpp"
#include "deltaknot/delta.hpp"
#include "deltaknot/triple.hpp"

namespace dk {

/// Replace every delta tangle by its three double crossings. Requires a
/// natural orientation; 3n crossings out.
ClassicalDiagram delta_to_classical(const DeltaDiagram& d);

/// Perturb every triple point into three double crossings consistent with
/// its T/M/B depths. Requires a natural orientation; 3n crossings out.
ClassicalDiagram triple_to_classical(const TripleDiagram& d);

/// Expansion of a mixed diagram: one label per vertex, either a delta type
/// letter ("S","T","U","W") or a three-letter T/M/B role word. Used by the
/// resolution engine to check intermediate rewrites.
ClassicalDiagram expand_labeled(const ShadowProjection& base,
                                const std::vector<std::string>& labels);

}  // namespace dk
