#pragma once

#include <unordered_map>

#include "deltaknot/classical.hpp"
#include "deltaknot/poly.hpp"

namespace dk {

/// HOMFLY-PT polynomial P(v, z) under the skein convention
///   v^-1 P(L+) - v P(L-) = z P(L0),   P(unknot) = 1.
/// Skein recursion toward descending diagrams, with greedy R1/R2
/// pre-simplification and memoization on canonical diagram keys. The memo
/// persists inside an engine, so batch callers share subdiagram results.
class HomflyEngine {
public:
  explicit HomflyEngine(int budget = 28) : budget_(budget) {}

  Laurent compute(const ClassicalDiagram& d);
  size_t memo_size() const { return memo_.size(); }

private:
  int budget_;
  std::unordered_map<std::string, Laurent> memo_;

  Laurent rec(std::vector<Crossing> xs);
  Laurent eval(std::vector<Crossing> xs, int circles);
};

/// One-shot convenience wrapper around a fresh engine.
Laurent homfly(const ClassicalDiagram& d, int budget = 28);

}  // namespace dk
