#pragma once

#include <vector>

#include "deltaknot/shadow.hpp"

namespace dk {

/// All prime, connected, 6-valent planar maps with exactly n vertices, up
/// to isomorphism and reflection, sorted by canonical key. Prime: no pair
/// of edges whose removal separates two vertices. Exact but exponential —
/// meant for small n (tables use n <= 4).
std::vector<ShadowProjection> enumerate_projections(int n);

/// Keeps the projections traced by a single closed strand.
std::vector<ShadowProjection> filter_knot_projections(
    const std::vector<ShadowProjection>& projections);

}  // namespace dk
