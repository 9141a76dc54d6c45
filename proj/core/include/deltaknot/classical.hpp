#pragma once

#include <array>
#include <string>
#include <vector>

#include "deltaknot/planar_map.hpp"

namespace dk {

/// One double crossing. Arc labels sit in counterclockwise slot order
/// starting at the incoming under-strand, so the under-strand runs
/// slot 0 -> slot 2. Sign +1 means the over-strand runs slot 3 -> slot 1.
struct Crossing {
  std::array<int, 4> arcs;
  int sign = +1;
};

/// Oriented double-crossing diagram. Zero crossings encodes the unknot.
class ClassicalDiagram {
public:
  ClassicalDiagram() = default;
  explicit ClassicalDiagram(std::vector<Crossing> xs);

  /// PD grammar: '[' xtuple (',' xtuple)* ']' with
  /// xtuple := 'X' sign? '[' int ',' int ',' int ',' int ']'.
  /// Missing signs are inferred from orientation consistency.
  static ClassicalDiagram parse(const std::string& text);
  std::string emit() const;

  /// Serialization invariant under arc relabeling, crossing reordering
  /// and choice of starting point; used for memoization and dedup.
  std::string canonical_key() const;

  int size() const { return static_cast<int>(xs_.size()); }
  bool empty() const { return xs_.empty(); }
  const std::vector<Crossing>& crossings() const { return xs_; }

  int writhe() const;
  int components() const;
  ClassicalDiagram mirror() const;
  PlanarMap planar_map() const;

  /// Dart utilities; dart = 4*crossing + slot.
  /// Partner dart along the shared arc.
  int theta(int dart) const;
  /// true if the strand runs into the crossing at this dart.
  bool is_in_dart(int dart) const;
  /// The dart where the strand leaves after entering at `dart`.
  int strand_out(int dart) const { return (dart & ~3) | ((dart + 2) & 3); }

private:
  std::vector<Crossing> xs_;
  std::vector<int> theta_;  // built on validation

  void validate_and_index();
};

}  // namespace dk
