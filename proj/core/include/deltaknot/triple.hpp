#pragma once

#include <array>
#include <string>
#include <vector>

#include "deltaknot/shadow.hpp"

namespace dk {

/// Triple-crossing diagram: a projection plus a depth role per strand at
/// each triple point. roles()[v][s] is the role of the strand occupying
/// slots s and s+3 of vertex v, one of 'T' (top), 'M', 'B' (bottom), each
/// used exactly once per vertex.
class TripleDiagram {
public:
  TripleDiagram() = default;
  TripleDiagram(ShadowProjection base, std::vector<std::array<char, 3>> roles);

  /// tPD grammar: '[' WORD ',' tuple (',' WORD ',' tuple)* ']' where WORD
  /// is a permutation of TMB giving the roles of strands (0,3),(1,4),(2,5).
  static TripleDiagram parse(const std::string& text);
  std::string emit() const;

  int size() const { return base_.size(); }
  const ShadowProjection& base() const { return base_; }
  const std::vector<std::array<char, 3>>& roles() const { return roles_; }
  /// Role of the strand through `dart`'s slot.
  char role_at(int dart) const { return roles_[dart / 6][dart % 6 % 3]; }

private:
  ShadowProjection base_;
  std::vector<std::array<char, 3>> roles_;
};

}  // namespace dk
