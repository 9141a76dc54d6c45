#pragma once

#include <array>
#include <string>
#include <vector>

#include "deltaknot/shadow.hpp"

namespace dk {

/// Delta-crossing diagram: each vertex is a delta tangle of one of the
/// four types S, T, U, W, with six boundary arc labels counterclockwise.
/// The underlying 6-valent map obeys the same validity rules as a
/// projection.
class DeltaDiagram {
public:
  DeltaDiagram() = default;
  DeltaDiagram(std::vector<char> letters, std::vector<std::array<int, 6>> verts);

  /// dPD grammar: '[' LETTER ',' tuple (',' LETTER ',' tuple)* ']' with
  /// LETTER in {S,T,U,W}.
  static DeltaDiagram parse(const std::string& text);
  std::string emit() const;

  int size() const { return base_.size(); }
  const ShadowProjection& base() const { return base_; }
  const std::vector<char>& letters() const { return letters_; }
  char letter(int v) const { return letters_[v]; }

  /// Mirror image: the type-letter involution with the map unchanged.
  DeltaDiagram mirror() const;

  /// Invariant under relabeling and reversal of the natural orientation.
  /// Requires a natural orientation to exist.
  std::string canonical_key() const;

private:
  ShadowProjection base_;
  std::vector<char> letters_;
};

/// The letter involution realizing the mirror image (map unchanged).
char mirror_letter(char c);
/// The letter substitution realizing orientation reversal (map unchanged).
char reverse_letter(char c);

}  // namespace dk
