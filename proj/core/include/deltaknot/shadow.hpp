#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "deltaknot/planar_map.hpp"

namespace dk {

/// Triple-point projection with no depth information: a connected 6-valent
/// map on the sphere. Each vertex lists its six arc labels counterclockwise;
/// the strand entering at slot s leaves at slot s+3.
class ShadowProjection {
public:
  ShadowProjection() = default;
  explicit ShadowProjection(std::vector<std::array<int, 6>> verts);

  /// sPD grammar: '[' tuple (',' tuple)* ']', tuple := '[' int{6} ']'.
  static ShadowProjection parse(const std::string& text);
  std::string emit() const;

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<std::array<int, 6>>& verts() const { return verts_; }

  PlanarMap planar_map() const;
  /// Number of closed strands under the slot s <-> s+3 pairing.
  int strand_components() const;

  /// Invariant under relabeling; quotients reflection too when asked,
  /// which is the equivalence used to dedup projection tables.
  std::string canonical_key(bool up_to_reflection = true) const;

  /// Dart utilities; dart = 6*vertex + slot.
  int theta(int dart) const { return theta_[dart]; }
  static int through(int dart) { return (dart / 6) * 6 + (dart + 3) % 6; }

private:
  std::vector<std::array<int, 6>> verts_;
  std::vector<int> theta_;

  void validate_and_index();
};

/// Natural orientation: directs every strand so the six ends alternate
/// in/out around each vertex. Returns an is-in flag per dart, normalized
/// so vertex 0 takes its inflows at even slots, or nullopt if no such
/// orientation exists.
std::optional<std::vector<char>> natural_orientation(const ShadowProjection& p);

}  // namespace dk
