#include "deltaknot/planar_map.hpp"

#include <stdexcept>
#include <string>

namespace dk {

PlanarMap build_map(int degree, int nv, std::vector<int> theta) {
  PlanarMap m;
  m.degree = degree;
  m.nv = nv;
  const int nd = degree * nv;
  if (static_cast<int>(theta.size()) != nd)
    throw std::invalid_argument("build_map: theta size mismatch");
  for (int d = 0; d < nd; ++d) {
    if (theta[d] < 0 || theta[d] >= nd || theta[theta[d]] != d ||
        theta[d] == d)
      throw std::invalid_argument("build_map: theta is not an involution");
  }
  m.theta = std::move(theta);
  m.face_of.assign(nd, -1);
  // Face tracing: follow theta, then turn counterclockwise at the vertex.
  for (int d0 = 0; d0 < nd; ++d0) {
    if (m.face_of[d0] != -1) continue;
    int f = static_cast<int>(m.faces.size());
    m.faces.emplace_back();
    int d = d0;
    do {
      m.face_of[d] = f;
      m.faces[f].push_back(d);
      d = m.rot_next(m.theta[d]);
    } while (d != d0);
  }
  return m;
}

bool PlanarMap::connected() const {
  if (nv == 0) return false;
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int s = 0; s < degree; ++s) {
      int w = vertex_of(theta[v * degree + s]);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == nv;
}

std::string canonical_code(const PlanarMap& m,
                           const std::vector<std::string>& vlabels,
                           bool reflected) {
  const int deg = m.degree;
  const int nd = deg * m.nv;
  if (nd == 0) return "";
  const int dir = reflected ? deg - 1 : 1;  // slot step, mod deg
  std::string best;
  std::vector<int> vindex(m.nv), voff(m.nv), vorder(m.nv);
  for (int start = 0; start < nd; ++start) {
    vindex.assign(m.nv, -1);
    int placed = 0;
    auto place = [&](int dart) {
      int v = m.vertex_of(dart);
      vindex[v] = placed;
      voff[v] = m.slot_of(dart);
      vorder[placed] = v;
      ++placed;
    };
    place(start);
    std::string code;
    for (int cid = 0; cid < nd; ++cid) {
      int v = vorder[cid / deg];
      int slot = (voff[v] + dir * (cid % deg)) % deg;
      int t = m.theta[v * deg + slot];
      int tv = m.vertex_of(t);
      if (vindex[tv] < 0) {
        place(t);
        if (!vlabels.empty()) {
          code += '{';
          code += vlabels[tv];
          code += '}';
        }
      }
      int toff = (m.slot_of(t) - voff[tv] + deg) % deg;
      if (reflected) toff = (deg - toff) % deg;
      code += std::to_string(vindex[tv] * deg + toff);
      code += ',';
    }
    if (!vlabels.empty())
      code = '{' + vlabels[m.vertex_of(start)] + '}' + code;
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<int> PlanarMap::face_vector() const {
  std::vector<int> fv;
  for (const auto& f : faces) {
    size_t k = f.size();
    if (fv.size() <= k) fv.resize(k + 1, 0);
    ++fv[k];
  }
  return fv;
}

}  // namespace dk
