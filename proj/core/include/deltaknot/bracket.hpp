#pragma once

#include "deltaknot/classical.hpp"
#include "deltaknot/poly.hpp"

namespace dk {

/// Kauffman bracket in A by full state sum. The A-smoothing at a crossing
/// joins slots (0,1) and (2,3); with this choice a positive kink brackets
/// to -A^3. Throws BudgetError above `budget` crossings.
Laurent kauffman_bracket(const ClassicalDiagram& d, int budget = 16);

/// Writhe-normalized bracket (-A)^(-3w)<D> rewritten in t = A^-4.
Laurent jones_via_bracket(const ClassicalDiagram& d, int budget = 16);

}  // namespace dk
