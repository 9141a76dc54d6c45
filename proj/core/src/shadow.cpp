#include "deltaknot/shadow.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "deltaknot/errors.hpp"

namespace dk {

namespace {

size_t skip_ws(const std::string& s, size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

void expect_char(const std::string& s, size_t& i, char c) {
  i = skip_ws(s, i);
  if (i >= s.size() || s[i] != c)
    throw ParseError(std::string("expected '") + c + "'", i);
  ++i;
}

int read_int(const std::string& s, size_t& i) {
  i = skip_ws(s, i);
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits) throw ParseError("expected integer", start);
  return std::atoi(s.substr(start, i - start).c_str());
}

}  // namespace

ShadowProjection::ShadowProjection(std::vector<std::array<int, 6>> verts)
    : verts_(std::move(verts)) {
  validate_and_index();
}

void ShadowProjection::validate_and_index() {
  const int nd = 6 * size();
  theta_.assign(nd, -1);
  std::map<int, std::vector<int>> occ;
  for (int d = 0; d < nd; ++d) occ[verts_[d / 6][d % 6]].push_back(d);
  for (auto& [arc, darts] : occ) {
    if (darts.size() != 2)
      throw ValidationError("arc " + std::to_string(arc) + " used " +
                            std::to_string(darts.size()) +
                            " times, expected 2");
    theta_[darts[0]] = darts[1];
    theta_[darts[1]] = darts[0];
  }
  if (size() > 0) {
    PlanarMap m = planar_map();
    if (!m.connected())
      throw ValidationError("projection is not connected");
    if (!m.is_sphere())
      throw ValidationError("arc pairing is not planar");
  }
}

ShadowProjection ShadowProjection::parse(const std::string& text) {
  size_t i = 0;
  expect_char(text, i, '[');
  std::vector<std::array<int, 6>> verts;
  i = skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      expect_char(text, i, '[');
      std::array<int, 6> t;
      for (int k = 0; k < 6; ++k) {
        if (k) expect_char(text, i, ',');
        t[k] = read_int(text, i);
      }
      expect_char(text, i, ']');
      verts.push_back(t);
      i = skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect_char(text, i, ']');
      break;
    }
  }
  i = skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing input", i);
  return ShadowProjection(std::move(verts));
}

std::string ShadowProjection::emit() const {
  std::ostringstream os;
  os << "[";
  for (int v = 0; v < size(); ++v) {
    if (v) os << ", ";
    os << "[";
    for (int k = 0; k < 6; ++k) {
      if (k) os << ", ";
      os << verts_[v][k];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

PlanarMap ShadowProjection::planar_map() const {
  return build_map(6, size(), theta_);
}

int ShadowProjection::strand_components() const {
  if (size() == 0) return 0;
  const int nd = 6 * size();
  std::vector<char> seen(nd, 0);
  int orbits = 0;
  for (int d0 = 0; d0 < nd; ++d0) {
    if (seen[d0]) continue;
    ++orbits;
    int d = d0;
    do {
      seen[d] = 1;
      d = theta_[through(d)];
    } while (d != d0);
  }
  // Each closed strand is traced once in each direction.
  return orbits / 2;
}

std::optional<std::vector<char>> natural_orientation(
    const ShadowProjection& p) {
  const int n = p.size();
  if (n == 0) return std::vector<char>{};
  // eps[v] = 0 if vertex v takes inflow at even slots, 1 at odd slots.
  std::vector<int> eps(n, -1);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (eps[root] >= 0) continue;
    eps[root] = 0;
    queue.assign(1, root);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int s = 0; s < 6; ++s) {
        int t = p.theta(6 * v + s);
        int w = t / 6;
        // Exactly one end of the arc is an inflow.
        int need = (s & 1) ^ (t % 6 & 1) ^ 1 ^ eps[v];
        if (eps[w] < 0) {
          eps[w] = need;
          queue.push_back(w);
        } else if (eps[w] != need) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<char> is_in(6 * n);
  for (int d = 0; d < 6 * n; ++d) is_in[d] = ((d % 6 & 1) ^ eps[d / 6]) == 0;
  return is_in;
}

std::string ShadowProjection::canonical_key(bool up_to_reflection) const {
  if (size() == 0) return "";
  PlanarMap m = planar_map();
  std::string key = canonical_code(m, {}, false);
  if (up_to_reflection) key = std::min(key, canonical_code(m, {}, true));
  return key;
}

}  // namespace dk
