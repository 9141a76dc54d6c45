#pragma once

#include <string>
#include <vector>

namespace dk {

/// Combinatorial map of a diagram shadow on the sphere. Vertices all have
/// the same degree (4 for double crossings, 6 for triple points). Dart
/// d sits at vertex d/degree, slot d%degree, slots counterclockwise;
/// theta[d] is the dart at the other end of the same edge.
struct PlanarMap {
  int degree = 0;
  int nv = 0;
  std::vector<int> theta;
  std::vector<std::vector<int>> faces;  // dart cycles, one per face
  std::vector<int> face_of;             // dart -> face index

  int vertex_of(int dart) const { return dart / degree; }
  int slot_of(int dart) const { return dart % degree; }
  int rot_next(int dart) const {
    return vertex_of(dart) * degree + (slot_of(dart) + 1) % degree;
  }
  int num_edges() const { return nv * degree / 2; }
  int num_faces() const { return static_cast<int>(faces.size()); }
  int euler_characteristic() const { return nv - num_edges() + num_faces(); }
  bool is_sphere() const { return euler_characteristic() == 2; }
  bool connected() const;

  /// f[k] = number of faces bounded by k edge sides, k from 0 to max.
  std::vector<int> face_vector() const;
};

/// Builds the map and traces faces. theta must be a fixed-point-free
/// involution on darts 0..degree*nv-1.
PlanarMap build_map(int degree, int nv, std::vector<int> theta);

/// Encoding of the map invariant under vertex relabeling and rotation of
/// slot origins: the minimum over all starting darts of a breadth-first
/// dart renumbering. With `reflected` the slots are read clockwise, so
/// min over both flags identifies a map with its mirror image.
/// `vlabels`, if nonempty, carries one tag per vertex that is woven into
/// the code (in first-visit order), so labeled maps compare correctly.
std::string canonical_code(const PlanarMap& m,
                           const std::vector<std::string>& vlabels,
                           bool reflected);

}  // namespace dk
